"""The hexagon of (-1)-curves on a del Pezzo surface of degree 6."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from . import lattice as lat
from .perm import (
    GroupSpec,
    Permutation,
    center,
    centralizer,
    enumerate_subgroups,
    isomorphic_small,
    symmetric_group,
)

RANK = lat.DP6_RANK


def curves() -> tuple[lat.LatticeVector, ...]:
    """E_1, E_2, E_3, L-E_1-E_2, L-E_1-E_3, L-E_2-E_3."""
    return lat.enumerate_lines(RANK)


def hexagon() -> tuple[tuple[lat.LatticeVector, ...], np.ndarray]:
    """The six curves and their adjacency matrix (adjacent = meeting)."""
    cs = curves()
    adj = np.array([[1 if i != j and lat.pairing(u, v) == 1 else 0 for j, v in enumerate(cs)]
                    for i, u in enumerate(cs)], dtype=np.int8)
    return cs, adj


def is_six_cycle(adj: np.ndarray) -> bool:
    n = adj.shape[0]
    if n != 6 or any(adj.sum(axis=1) != 2):
        return False
    # connected 2-regular graph on 6 vertices
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in np.flatnonzero(adj[v]):
            if int(w) not in seen:
                seen.add(int(w))
                stack.append(int(w))
    return len(seen) == n


def disjoint_triples() -> list[tuple[int, int, int]]:
    """Triples of pairwise disjoint curves (independent 3-sets of the hexagon)."""
    cs = curves()
    return [t for t in combinations(range(6), 3)
            if all(lat.pairing(cs[a], cs[b]) == 0 for a, b in combinations(t, 2))]


def matrix_for(p: Permutation) -> np.ndarray | None:
    """Lattice map realizing ``p`` on the curves, or None.

    Basis images: E_i -> curve p(i) and L = (L-E_1-E_2) + E_1 + E_2.
    The result must fix K, preserve the form and realize ``p`` everywhere.
    """
    cs = curves()
    img = [np.array(cs[p(i)].coords, dtype=np.int64) for i in range(6)]
    col_L = img[3] + img[0] + img[1]
    m = np.column_stack([col_L] + img[:3])
    if not lat.is_isometry(m):
        return None
    if any(lat.apply(m, v) != cs[p(i)] for i, v in enumerate(cs)):
        return None
    return m


@lru_cache(maxsize=None)
def symmetry_group() -> GroupSpec:
    """Curve permutations induced by isometries fixing K (brute force over 6!)."""
    perms = [Permutation(q) for q in permutations(range(6))]
    return GroupSpec.from_elements(6, [p for p in perms if matrix_for(p) is not None], name="Aut(hexagon)")


def central_involution(g: GroupSpec | None = None) -> Permutation:
    g = g or symmetry_group()
    z = [x for x in center(g) if not x.is_identity()]
    if len(z) != 1:
        raise ValueError(f"center has {len(z) + 1} elements")
    return z[0]


def triple_preserving_subgroup(g: GroupSpec | None = None) -> GroupSpec:
    g = g or symmetry_group()
    triples = [frozenset(t) for t in disjoint_triples()]
    keep = [x for x in g if all(frozenset(x(i) for i in t) == t for t in triples)]
    return GroupSpec.from_elements(6, keep)


def verify_dp6_lemmas() -> dict:
    cs, adj = hexagon()
    g = symmetry_group()
    z = central_involution(g)
    triples = disjoint_triples()
    s3 = triple_preserving_subgroup(g)

    order3 = [x for x in g if x.order() == 3]
    cent_orders = []
    bad_subgroups = []
    ranks = []
    for gamma in order3:
        c = centralizer(g, gamma)
        cent_orders.append(c.order)
        expected = GroupSpec(6, [gamma, z]).element_set
        if c.element_set != expected:
            bad_subgroups.append({"gamma": list(gamma.images), "reason": "centralizer is not <gamma, z>"})
        for h in enumerate_subgroups(c, c.order):
            if z not in h and h.order > 3:
                bad_subgroups.append({"gamma": list(gamma.images), "subgroup": [list(s.images) for s in h.generators]})
        ranks.append(lat.fixed_rank([matrix_for(gamma)]))

    swaps = frozenset(z(i) for i in triples[0]) == frozenset(triples[1]) if len(triples) == 2 else False
    isometry_ok = all(lat.is_isometry(matrix_for(x)) for x in g)
    return {
        "curves": len(cs),
        "six_cycle": is_six_cycle(adj),
        "triples": [list(t) for t in triples],
        "order": g.order,
        "center_order": center(g).order,
        "z": list(z.images),
        "z_order": z.order(),
        "z_swaps_triples": swaps,
        "s3_order": s3.order,
        "s3_isomorphic": isomorphic_small(s3, symmetric_group(3)),
        "product_decomposition": s3.order * 2 == g.order and z not in s3,
        "order3_elements": len(order3),
        "centralizer_orders": sorted(set(cent_orders)),
        "bad_subgroups": bad_subgroups,
        "fixed_ranks": sorted(set(ranks)),
        "isometries_ok": isometry_ok,
    }
