"""Integer Picard lattices of del Pezzo surfaces.

The lattice Z^{1,n} has basis (L, E_1, ..., E_n) and intersection form
diag(1, -1, ..., -1).  Rank 7 models a cubic surface, rank 4 a del Pezzo
surface of degree 6.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

import numpy as np

CUBIC_RANK = 7
DP6_RANK = 4

# all lines and roots of the cubic lattice have entries in [-3, 2]
SEARCH_BOX = 3


class LatticeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LatticeVector:
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: LatticeVector) -> LatticeVector:
        _check_rank(self, other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        _check_rank(self, other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> LatticeVector:
        return LatticeVector(tuple(k * a for a in self.coords))

    def __matmul__(self, other: LatticeVector) -> int:
        return pairing(self, other)

    def __repr__(self):
        return f"LatticeVector({self.coords})"


def _check_rank(u: LatticeVector, v: LatticeVector) -> None:
    if u.rank != v.rank:
        raise LatticeError(f"rank mismatch: {u.rank} vs {v.rank}")


def pairing(u: LatticeVector, v: LatticeVector) -> int:
    """Intersection number of ``u`` and ``v`` under diag(1, -1, ..., -1)."""
    _check_rank(u, v)
    a, b = u.coords, v.coords
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def basis_vector(rank: int, i: int) -> LatticeVector:
    c = [0] * rank
    c[i] = 1
    return LatticeVector(tuple(c))


def hyperplane_class(rank: int = CUBIC_RANK) -> LatticeVector:
    return basis_vector(rank, 0)


def exceptional_class(i: int, rank: int = CUBIC_RANK) -> LatticeVector:
    """E_i for 1 <= i < rank."""
    if not 1 <= i < rank:
        raise LatticeError(f"E_{i} does not exist in rank {rank}")
    return basis_vector(rank, i)


def canonical_class(rank: int = CUBIC_RANK) -> LatticeVector:
    """K = -3L + E_1 + ... + E_n."""
    return LatticeVector((-3,) + (1,) * (rank - 1))


def gram_matrix(rank: int = CUBIC_RANK) -> np.ndarray:
    return np.diag([1] + [-1] * (rank - 1)).astype(np.int64)


def is_line(v: LatticeVector) -> bool:
    K = canonical_class(v.rank)
    return pairing(v, v) == -1 and pairing(v, K) == -1


def is_root(v: LatticeVector) -> bool:
    K = canonical_class(v.rank)
    return pairing(v, v) == -2 and pairing(v, K) == 0


def _box_scan(rank: int, self_int: int, with_k: int, bound: int = SEARCH_BOX) -> list[tuple[int, ...]]:
    """All integer vectors in [-bound, bound]^rank with prescribed v.v and v.K."""
    axis = np.arange(-bound, bound + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([axis] * rank), indexing="ij"), axis=-1).reshape(-1, rank)
    g = np.diag(gram_matrix(rank))
    vv = (grid * grid * g).sum(axis=1)
    vk = grid @ (g * np.array(canonical_class(rank).coords))
    hits = grid[(vv == self_int) & (vk == with_k)]
    return [tuple(int(x) for x in row) for row in hits]


def canonical_lines(rank: int = CUBIC_RANK) -> tuple[LatticeVector, ...]:
    """The (-1)-classes in canonical order.

    Rank 7: E_1..E_6, then L - E_i - E_j for i < j (lexicographic), then
    C_i = 2L - sum(E) + E_i for i = 1..6.  Rank 4: E_1, E_2, E_3 followed by
    L - E_i - E_j.
    """
    n = rank - 1
    L = hyperplane_class(rank)
    E = [exceptional_class(i, rank) for i in range(1, rank)]
    out = list(E)
    out += [L - E[i] - E[j] for i, j in combinations(range(n), 2)]
    if rank == CUBIC_RANK:
        total = E[0]
        for e in E[1:]:
            total = total + e
        out += [2 * L - total + E[i] for i in range(n)]
    elif rank != DP6_RANK:
        raise LatticeError(f"unsupported rank {rank}")
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_lines(rank: int = CUBIC_RANK) -> tuple[LatticeVector, ...]:
    """The 27 lines (or 6 curves for rank 4), in canonical order.

    The canonical list is checked against an exhaustive scan of the
    coordinate box, so a missing or extra class raises.
    """
    lines = canonical_lines(rank)
    scanned = {LatticeVector(c) for c in _box_scan(rank, -1, -1)}
    if scanned != set(lines):
        raise LatticeError("box scan disagrees with the canonical line list")
    return lines


@lru_cache(maxsize=None)
def enumerate_roots(rank: int = CUBIC_RANK) -> tuple[LatticeVector, ...]:
    """All roots (r.r = -2, r.K = 0) in the search box, sorted."""
    return tuple(sorted(LatticeVector(c) for c in _box_scan(rank, -2, 0)))


def reflect(r: LatticeVector, v: LatticeVector) -> LatticeVector:
    """Reflection in the root ``r``: v + (v.r) r."""
    if not is_root(r):
        raise LatticeError(f"{r} is not a root")
    return v + pairing(v, r) * r


def reflection_matrix(r: LatticeVector) -> np.ndarray:
    """Integer matrix of ``reflect(r, .)`` acting on column vectors."""
    rank = r.rank
    cols = [reflect(r, basis_vector(rank, i)).coords for i in range(rank)]
    return np.array(cols, dtype=np.int64).T


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free row reduction.

    Each elimination step is ``row = p*row - f*pivot_row`` followed by
    division by the row content, so entries stay small integers.
    """
    m = [[int(x) for x in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        p = prow[col]
        for r in range(rank + 1, n_rows):
            f = m[r][col]
            if f == 0:
                continue
            row = [p * a - f * b for a, b in zip(m[r], prow)]
            g = gcd(*row)
            m[r] = [a // g for a in row] if g > 1 else row
        rank += 1
        if rank == n_rows:
            break
    return rank


def fixed_rank(isometries: Iterable[np.ndarray], rank: int | None = None) -> int:
    """Rank of the sublattice fixed by every matrix in ``isometries``.

    Computed as ``rank - rk(stack(m - id))``.  With no isometries the whole
    lattice is fixed, which needs ``rank`` to be given.
    """
    mats = [np.asarray(m, dtype=np.int64) for m in isometries]
    if not mats:
        if rank is None:
            raise LatticeError("rank required for an empty set of isometries")
        return rank
    n = mats[0].shape[0]
    eye = np.eye(n, dtype=np.int64)
    stacked = np.vstack([m - eye for m in mats])
    return n - integer_rank(stacked.tolist())


def is_isometry(m: np.ndarray) -> bool:
    """True if ``m`` preserves the intersection form and fixes K."""
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[0]
    g = gram_matrix(n)
    K = np.array(canonical_class(n).coords, dtype=np.int64)
    return bool(np.array_equal(m.T @ g @ m, g) and np.array_equal(m @ K, K))


def apply(m: np.ndarray, v: LatticeVector) -> LatticeVector:
    return LatticeVector(tuple(int(x) for x in np.asarray(m) @ np.array(v.coords)))
