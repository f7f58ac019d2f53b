"""The affine plane over F_3, its 12 lines, and the affine group GA_2(F_3)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .perm import (
    GroupSpec,
    Permutation,
    enumerate_subgroups,
    orbits,
    sylow_subgroup,
)

GA23_ORDER = 432
GL23_ORDER = 48

POINTS = tuple(product(range(3), repeat=2))
_INDEX = {p: i for i, p in enumerate(POINTS)}


@dataclass(frozen=True)
class AffineMapF3:
    """x -> M x + t over F_3."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    translation: tuple[int, int]

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if (a * d - b * c) % 3 == 0:
            raise ValueError(f"singular matrix {self.matrix}")

    def __call__(self, p: tuple[int, int]) -> tuple[int, int]:
        (a, b), (c, d) = self.matrix
        u, v = p
        return ((a * u + b * v + self.translation[0]) % 3, (c * u + d * v + self.translation[1]) % 3)

    def __matmul__(self, other: AffineMapF3) -> AffineMapF3:
        """Composition: ``other`` first, then ``self``."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        m = (((a * e + b * g) % 3, (a * f + b * h) % 3), ((c * e + d * g) % 3, (c * f + d * h) % 3))
        return AffineMapF3(m, self(other.translation))

    def permutation(self) -> Permutation:
        return Permutation([_INDEX[self(p)] for p in POINTS])


def gl23() -> list[tuple[tuple[int, int], tuple[int, int]]]:
    mats = []
    for a, b, c, d in product(range(3), repeat=4):
        if (a * d - b * c) % 3:
            mats.append(((a, b), (c, d)))
    return mats


@lru_cache(maxsize=None)
def affine_maps() -> tuple[AffineMapF3, ...]:
    return tuple(AffineMapF3(m, t) for m in gl23() for t in POINTS)


_GA: GroupSpec | None = None


def enumerate_ga23() -> GroupSpec:
    """All 432 affine maps as permutations of the 9 points (checked faithful)."""
    global _GA
    if _GA is None:
        perms = [f.permutation() for f in affine_maps()]
        if len(set(perms)) != len(perms):
            raise ValueError("affine action on points is not faithful")
        _GA = GroupSpec.from_elements(9, perms, name="GA2(F3)")
    return _GA


def translations() -> GroupSpec:
    ident = ((1, 0), (0, 1))
    return GroupSpec.from_elements(9, [AffineMapF3(ident, t).permutation() for t in POINTS], name="T")


def point_stabilizer(g: GroupSpec, point: int = 0) -> GroupSpec:
    return GroupSpec.from_elements(g.degree, [x for x in g if x(point) == point])


@lru_cache(maxsize=None)
def configuration_lines() -> tuple[tuple[int, int, int], ...]:
    """The 12 affine lines as sorted point-index triples."""
    found = set()
    for p in POINTS:
        for d in ((0, 1), (1, 0), (1, 1), (1, 2)):
            pts = sorted(_INDEX[((p[0] + k * d[0]) % 3, (p[1] + k * d[1]) % 3)] for k in range(3))
            found.add(tuple(pts))
    return tuple(sorted(found))


def line_action(x: Permutation) -> Permutation:
    """Permutation induced on the 12 lines."""
    ls = configuration_lines()
    idx = {frozenset(l): i for i, l in enumerate(ls)}
    return Permutation([idx[frozenset(x(p) for p in l)] for l in ls])


def common_fixed_points(h: GroupSpec) -> list[int]:
    return [p for p in range(h.degree) if all(s(p) == p for s in h.generators)]


def sylow2_subgroups(g: GroupSpec | None = None) -> list[GroupSpec]:
    """All Sylow 2-subgroups, as the conjugation orbit of one of them."""
    g = g or enumerate_ga23()
    P = sylow_subgroup(g, 2)
    seen: dict[frozenset, GroupSpec] = {}
    for x in g:
        xi = x.inverse()
        conj = frozenset(x * y * xi for y in P)
        if conj not in seen:
            seen[conj] = GroupSpec.from_elements(g.degree, conj)
    return [seen[k] for k in sorted(seen, key=lambda s: sorted(p.images for p in s))]


def has_order3(h: GroupSpec) -> bool:
    return any(x.order() == 3 for x in h)


def verify_lemma_gaff(slow_cross_check: bool = False) -> dict:
    """A subgroup of GA_2(F_3) without a common fixed point contains an
    element of order 3.

    Without order-3 elements a subgroup is a 2-group, hence inside some
    Sylow 2-subgroup; so all subgroups of all Sylow 2-subgroups are checked
    for a fixed point, both directly and through orbit sizes.  The slow
    cross-check instead runs over every subgroup of order <= 128 of the
    whole group (larger ones have order divisible by 3).
    """
    g = enumerate_ga23()
    syl = sylow2_subgroups(g)
    counterexamples = []
    orbit_failures = []
    checked: set[frozenset] = set()
    for P in syl:
        for h in enumerate_subgroups(P, P.order):
            key = h.fingerprint()
            if key in checked:
                continue
            checked.add(key)
            fixed = common_fixed_points(h)
            sizes = [len(o) for o in orbits(h)]
            if not fixed:
                counterexamples.append([list(s.images) for s in h.generators])
            # orbits of a 2-group have 2-power sizes summing to 9, so one is a point
            if any(s & (s - 1) for s in sizes) or 1 not in sizes:
                orbit_failures.append(sizes)

    result = {
        "group_order": g.order,
        "sylow2_count": len(syl),
        "sylow2_orders": sorted({P.order for P in syl}),
        "two_subgroups_checked": len(checked),
        "counterexamples": counterexamples,
        "orbit_failures": orbit_failures,
    }
    if slow_cross_check:
        bad = []
        subs = enumerate_subgroups(g, 128)
        for h in subs:
            if not common_fixed_points(h) and not has_order3(h):
                bad.append([list(s.images) for s in h.generators])
        result["all_subgroups_checked"] = len(subs)
        result["all_subgroups_counterexamples"] = bad
    return result
