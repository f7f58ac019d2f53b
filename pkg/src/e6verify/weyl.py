"""W(E6) acting on the 27 lines of a cubic surface.

Elements are carried as permutations of the canonical line order from
:func:`e6verify.lattice.enumerate_lines`; the lattice matrix is recovered
on demand because the line classes span the lattice over Q.
"""

from __future__ import annotations

import enum
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import lattice as lat
from .perm import (
    GroupSpec,
    Permutation,
    center,
    centralizer,
    enumerate_subgroups,
    find_isomorphism,
    heisenberg_f3,
    is_subgroup_abelian,
    sylow_subgroup,
    wreath_c3_c3,
    exponent,
)

WEYL_E6_ORDER = 51840


class CarterType(str, enum.Enum):
    A2 = "A2"
    A2xA2 = "A2xA2"
    A2xA2xA2 = "A2xA2xA2"


# fixed-sublattice rank in Pic (rank 7) of each order-3 class
CARTER_BY_FIXED_RANK = {5: CarterType.A2, 3: CarterType.A2xA2, 1: CarterType.A2xA2xA2}


@lru_cache(maxsize=None)
def lines() -> tuple[lat.LatticeVector, ...]:
    return lat.enumerate_lines(lat.CUBIC_RANK)


@lru_cache(maxsize=None)
def _line_index() -> dict[lat.LatticeVector, int]:
    return {v: i for i, v in enumerate(lines())}


def simple_roots() -> list[lat.LatticeVector]:
    """E_1 - E_2, ..., E_5 - E_6 and L - E_1 - E_2 - E_3."""
    L = lat.hyperplane_class()
    E = [lat.exceptional_class(i) for i in range(1, 7)]
    return [E[i] - E[i + 1] for i in range(5)] + [L - E[0] - E[1] - E[2]]


def perm_from_matrix(m: np.ndarray) -> Permutation:
    """Permutation of the 27 lines induced by an isometry fixing K."""
    idx = _line_index()
    try:
        return Permutation([idx[lat.apply(m, v)] for v in lines()])
    except KeyError as exc:
        raise lat.LatticeError("matrix does not permute the lines") from exc


def matrix_from_perm(p: Permutation) -> np.ndarray:
    """Unique linear map sending each line class v_i to v_{p(i)}.

    Uses the basis E_1..E_6 (lines 0..5) and L = (L - E_1 - E_2) + E_1 + E_2;
    raises if the resulting matrix does not realize ``p`` on all 27 lines.
    """
    ls = lines()
    img = [np.array(ls[p(i)].coords, dtype=np.int64) for i in range(27)]
    # line 6 is L - E_1 - E_2 in the canonical order
    col_L = img[6] + img[0] + img[1]
    m = np.column_stack([col_L] + img[:6])
    for i, v in enumerate(ls):
        if lat.apply(m, v) != ls[p(i)]:
            raise lat.LatticeError(f"permutation is not induced by a lattice map (line {i})")
    return m


@dataclass(frozen=True)
class WeylElement:
    perm: Permutation

    @property
    def matrix(self) -> np.ndarray:
        return matrix_from_perm(self.perm)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> WeylElement:
        if not lat.is_isometry(m):
            raise lat.LatticeError("matrix is not an isometry fixing K")
        return cls(perm_from_matrix(m))

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(self.perm * other.perm)

    def order(self) -> int:
        return self.perm.order()

    def fixed_lines(self) -> int:
        return len(self.perm.fixed_points())

    def fixed_rank(self) -> int:
        return lat.fixed_rank([self.matrix])


def simple_reflections() -> list[WeylElement]:
    return [WeylElement.from_matrix(lat.reflection_matrix(r)) for r in simple_roots()]


_WEYL: GroupSpec | None = None


def build_weyl() -> GroupSpec:
    """W(E6) as a permutation group on the 27 lines (cached after first call)."""
    global _WEYL
    if _WEYL is None:
        gens = [w.perm for w in simple_reflections()]
        _WEYL = GroupSpec(27, gens, name="W(E6)")
        _WEYL.elements
    return _WEYL


def clear_cache() -> None:
    global _WEYL
    _WEYL = None


def check_faithful() -> bool:
    """No non-identity isometry fixes every line.

    An isometry acting trivially on the 27 line classes is the identity on
    their Q-span, so faithfulness is exactly the statement that the lines
    span the rank-7 lattice.
    """
    return lat.integer_rank([v.coords for v in lines()]) == lat.CUBIC_RANK


def carter_type(w: WeylElement | Permutation) -> CarterType:
    """Carter label of an order-3 element, decided by its fixed-sublattice rank.

    The fixed-line count is cross-checked: A2 fixes 9 lines, the other two
    types fix none.
    """
    if isinstance(w, Permutation):
        w = WeylElement(w)
    if w.order() != 3:
        raise ValueError(f"carter_type needs an element of order 3, got order {w.order()}")
    rank = w.fixed_rank()
    try:
        t = CARTER_BY_FIXED_RANK[rank]
    except KeyError:
        raise ValueError(f"order-3 element with unexpected fixed rank {rank}") from None
    expected_lines = 9 if t is CarterType.A2 else 0
    if w.fixed_lines() != expected_lines:
        raise ValueError(f"{t.value} element fixes {w.fixed_lines()} lines, expected {expected_lines}")
    return t


# order-3 census ---------------------------------------------------------------

def _census_chunk(images: list[tuple[int, ...]]) -> list[tuple[int, int]]:
    out = []
    for t in images:
        w = WeylElement(Permutation._raw(t))
        out.append((w.fixed_rank(), w.fixed_lines()))
    return out


def order3_census(workers: int = 1) -> dict[str, dict]:
    """Classify every order-3 element of W(E6).

    Returns ``{type: {"count", "fixed_lines", "fixed_rank"}}``.  Raises if a
    fixed-line count is inconsistent with the fixed rank.  With ``workers``
    > 1 the rank computations are spread over processes; the merge is in
    element order so the result does not depend on scheduling.
    """
    W = build_weyl()
    order3 = [x.images for x in W.elements if x.order() == 3]
    if workers > 1:
        chunks = [order3[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_census_chunk, chunks))
        results: list[tuple[int, int]] = [None] * len(order3)  # type: ignore[list-item]
        for k, part in enumerate(parts):
            results[k::workers] = part
    else:
        results = _census_chunk(order3)

    table: dict[str, dict] = {}
    for rank, nfix in results:
        t = CARTER_BY_FIXED_RANK.get(rank)
        if t is None:
            raise ValueError(f"order-3 element with fixed rank {rank}")
        row = table.setdefault(t.value, {"count": 0, "fixed_lines": nfix, "fixed_rank": rank})
        if row["fixed_lines"] != nfix:
            raise ValueError(f"{t.value}: fixed-line counts {row['fixed_lines']} and {nfix} both occur")
        row["count"] += 1
    return {t.value: table[t.value] for t in CarterType if t.value in table}


def conjugation_spot_check(samples: int = 500, seed: int = 0) -> list[tuple[Permutation, Permutation]]:
    """Random conjugates of order-3 elements whose Carter types disagree (should be empty)."""
    W = build_weyl()
    rng = random.Random(seed)
    order3 = [x for x in W.elements if x.order() == 3]
    bad = []
    for _ in range(samples):
        x = rng.choice(order3)
        g = rng.choice(W.elements)
        y = x.conjugate(g)
        if carter_type(x) != carter_type(y):
            bad.append((x, g))
    return bad


# 3-Sylow lemmas ---------------------------------------------------------------

def weyl_sylow3() -> GroupSpec:
    D = sylow_subgroup(build_weyl(), 3)
    D.name = "Delta"
    return D


def subgroups_avoiding_center_nonabelian(g: GroupSpec) -> list[GroupSpec]:
    """Subgroups of ``g`` not containing the center that fail to be abelian."""
    Z = center(g).element_set
    out = []
    for h in enumerate_subgroups(g, g.order):
        if Z <= h.element_set:
            continue
        if not is_subgroup_abelian(h.elements):
            out.append(h)
    return out


def verify_sylow_lemmas() -> dict:
    """All checks on the 3-Sylow subgroup of W(E6) and on the Heisenberg group.

    Returns a plain dict with per-check booleans, counts and, on failure,
    witnesses; :mod:`e6verify.report` turns it into certificates.
    """
    D = weyl_sylow3()
    Z = center(D)
    model = wreath_c3_c3()
    iso = find_isomorphism(D, model)

    bad_centralizers = []
    noncentral3 = [x for x in D.elements if x.order() == 3 and x not in Z]
    for x in noncentral3:
        C = centralizer(D, x)
        if not is_subgroup_abelian(C.generators):
            bad_centralizers.append(list(x.images))

    subs = enumerate_subgroups(D, D.order)
    bad_delta = [[list(p.images) for p in h.generators] for h in subgroups_avoiding_center_nonabelian(D)]

    H = heisenberg_f3()
    ZH = center(H)
    bad_h3 = [[list(p.images) for p in h.generators] for h in subgroups_avoiding_center_nonabelian(H)]
    h3_subs = enumerate_subgroups(H, H.order)

    return {
        "delta_order": D.order,
        "center_order": Z.order,
        "isomorphic_to_wreath": iso is not None,
        "noncentral_order3": len(noncentral3),
        "bad_centralizers": bad_centralizers,
        "delta_subgroups": len(subs),
        "delta_bad_subgroups": bad_delta,
        "h3_order": H.order,
        "h3_exponent": exponent(H),
        "h3_center_order": ZH.order,
        "h3_abelian": is_subgroup_abelian(H.generators),
        "h3_subgroups": len(h3_subs),
        "h3_bad_subgroups": bad_h3,
        "delta_generators": [list(p.images) for p in D.generators],
    }
