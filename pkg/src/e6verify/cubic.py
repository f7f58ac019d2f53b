"""The diagonal cubic  l x^3 + l^2 y^3 + m z^3 + m^2 t^3 = 0  and its 27 lines.

Coefficients live in Z[w][a, b] where w is a primitive cube root of unity
and a, b are formal cube roots of l, m.  Because a and b are independent
transcendentals, a polynomial vanishes iff all of its coefficients do, so
every incidence and matching question below is decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import lattice as lat
from .perm import GroupSpec, Permutation
from .weyl import WeylElement, lines as abstract_lines, carter_type


class CubicError(ValueError):
    pass


@dataclass(frozen=True)
class CycloInt:
    """c0 + c1*w with w^2 + w + 1 = 0."""

    c0: int = 0
    c1: int = 0

    def __add__(self, o: CycloInt) -> CycloInt:
        return CycloInt(self.c0 + o.c0, self.c1 + o.c1)

    def __sub__(self, o: CycloInt) -> CycloInt:
        return CycloInt(self.c0 - o.c0, self.c1 - o.c1)

    def __neg__(self) -> CycloInt:
        return CycloInt(-self.c0, -self.c1)

    def __mul__(self, o: CycloInt) -> CycloInt:
        # w^2 = -1 - w
        a0, a1, b0, b1 = self.c0, self.c1, o.c0, o.c1
        return CycloInt(a0 * b0 - a1 * b1, a0 * b1 + a1 * b0 - a1 * b1)

    def __bool__(self) -> bool:
        return bool(self.c0 or self.c1)

    def conj(self) -> CycloInt:
        """Image under w -> w^2."""
        return CycloInt(self.c0 - self.c1, -self.c1)

    def to_complex(self) -> complex:
        return self.c0 + self.c1 * complex(-0.5, 3 ** 0.5 / 2)

    def __repr__(self):
        return f"({self.c0}{self.c1:+d}w)"


ONE = CycloInt(1, 0)
OMEGA = CycloInt(0, 1)


def omega_power(k: int) -> CycloInt:
    return (ONE, OMEGA, CycloInt(-1, -1))[k % 3]


class PolyZw:
    """Polynomial in a, b with Z[w] coefficients, as ``{(e, f): CycloInt}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], CycloInt] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, e: int, f: int, coeff: CycloInt = ONE) -> PolyZw:
        return cls({(e, f): coeff})

    @classmethod
    def const(cls, c: int | CycloInt) -> PolyZw:
        if isinstance(c, int):
            c = CycloInt(c, 0)
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, PolyZw) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, o: PolyZw) -> PolyZw:
        t = dict(self.terms)
        for m, c in o.terms.items():
            t[m] = t[m] + c if m in t else c
        return PolyZw(t)

    def __neg__(self) -> PolyZw:
        return PolyZw({m: -c for m, c in self.terms.items()})

    def __sub__(self, o: PolyZw) -> PolyZw:
        return self + (-o)

    def __mul__(self, o: PolyZw) -> PolyZw:
        t: dict[tuple[int, int], CycloInt] = {}
        for (e1, f1), c1 in self.terms.items():
            for (e2, f2), c2 in o.terms.items():
                m = (e1 + e2, f1 + f2)
                p = c1 * c2
                t[m] = t[m] + p if m in t else p
        return PolyZw(t)

    def twist(self, ka: int, kb: int) -> PolyZw:
        """Apply a -> w^ka a, b -> w^kb b."""
        return PolyZw({(e, f): c * omega_power(ka * e + kb * f) for (e, f), c in self.terms.items()})

    def evaluate(self, a: complex, b: complex) -> complex:
        return sum(c.to_complex() * a ** e * b ** f for (e, f), c in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}a^{e}b^{f}" for (e, f), c in sorted(self.terms.items()))


ZERO = PolyZw()

# a linear form in (x, y, z, t) is a 4-tuple of PolyZw coefficients
Form = tuple[PolyZw, PolyZw, PolyZw, PolyZw]


@dataclass(frozen=True)
class LineEq:
    label: tuple[int, int, int]  # (family, i, j)
    forms: tuple[Form, Form]

    def __repr__(self):
        return f"LineEq{self.label}"


def _form(*pairs: tuple[int, PolyZw]) -> Form:
    coeffs = [ZERO] * 4
    for var, c in pairs:
        coeffs[var] = c
    return tuple(coeffs)  # type: ignore[return-value]


X, Y, Z, T = range(4)


def _mono(e: int, f: int, k: int = 0) -> PolyZw:
    return PolyZw.monomial(e, f, omega_power(k))


@lru_cache(maxsize=None)
def build_lines() -> tuple[LineEq, ...]:
    """The 27 lines, ordered by (family, i, j).

    family 1:  a x + w^i a^2 y = 0,  b z + w^j b^2 t = 0
    family 2:  a x + w^i b z = 0,    a^2 y + w^j b^2 t = 0
    family 3:  a x + w^i b^2 t = 0,  a^2 y + w^j b z = 0
    """
    out = []
    for i in range(3):
        for j in range(3):
            out.append(LineEq((1, i, j), (
                _form((X, _mono(1, 0)), (Y, _mono(2, 0, i))),
                _form((Z, _mono(0, 1)), (T, _mono(0, 2, j))),
            )))
    for i in range(3):
        for j in range(3):
            out.append(LineEq((2, i, j), (
                _form((X, _mono(1, 0)), (Z, _mono(0, 1, i))),
                _form((Y, _mono(2, 0)), (T, _mono(0, 2, j))),
            )))
    for i in range(3):
        for j in range(3):
            out.append(LineEq((3, i, j), (
                _form((X, _mono(1, 0)), (T, _mono(0, 2, i))),
                _form((Y, _mono(2, 0)), (Z, _mono(0, 1, j))),
            )))
    return tuple(out)


def det(rows: list[list[PolyZw]]) -> PolyZw:
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = ZERO
    for c in range(n):
        a = rows[0][c]
        if not a:
            continue
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = a * det(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def lines_meet(p: LineEq, q: LineEq) -> bool:
    """Two lines meet iff their four forms are linearly dependent."""
    m = [list(f) for f in p.forms + q.forms]
    return det(m).is_zero()


def cubic_value(pt: tuple[PolyZw, ...]) -> PolyZw:
    """l x^3 + l^2 y^3 + m z^3 + m^2 t^3 with l = a^3, m = b^3."""
    x, y, z, t = pt
    coeffs = (_mono(3, 0), _mono(6, 0), _mono(0, 3), _mono(0, 6))
    total = ZERO
    for c, v in zip(coeffs, (x, y, z, t)):
        total = total + c * v * v * v
    return total


def line_points(line: LineEq) -> tuple[tuple[PolyZw, ...], tuple[PolyZw, ...]]:
    """Two distinct points spanning the line.

    Each form here involves two variables and the two supports are
    disjoint, so a form c_p v_p + c_q v_q is killed by (c_q at p, -c_p at q).
    """
    pts = []
    supports = []
    for f in line.forms:
        supp = [v for v in range(4) if f[v]]
        if len(supp) != 2:
            raise CubicError(f"{line}: form is not supported on two variables")
        supports.append(set(supp))
    if supports[0] & supports[1]:
        raise CubicError(f"{line}: forms share a variable")
    # a point on one form's support kills it; the other form vanishes there
    for k in range(2):
        other = line.forms[1 - k]
        p, q = sorted(supports[1 - k])
        pt = [ZERO] * 4
        pt[p] = other[q]
        pt[q] = -other[p]
        pts.append(tuple(pt))
    return pts[0], pts[1]


def lies_on_cubic(line: LineEq) -> bool:
    """The cubic restricted to the line is a binary cubic form; it vanishes
    identically iff it vanishes at four distinct points of P^1."""
    P, Q = line_points(line)
    for s, u in ((1, 0), (0, 1), (1, 1), (1, -1)):
        pt = tuple(PolyZw.const(s) * p + PolyZw.const(u) * q for p, q in zip(P, Q))
        if not cubic_value(pt).is_zero():
            return False
    return True


def incidence_matrix() -> np.ndarray:
    L = build_lines()
    n = len(L)
    m = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        for j in range(i + 1, n):
            if lines_meet(L[i], L[j]):
                m[i, j] = m[j, i] = 1
    return m


_INCIDENCE: np.ndarray | None = None


def incidence() -> np.ndarray:
    global _INCIDENCE
    if _INCIDENCE is None:
        _INCIDENCE = incidence_matrix()
    return _INCIDENCE


# substitutions ----------------------------------------------------------------

# coordinate scalings (exponent of w on x, y, z, t) and Galois twists (on a, b)
SUBSTITUTIONS = {
    "sigma1": ("coords", (1, 0, 0, 0)),
    "sigma2": ("coords", (0, 1, 0, 0)),
    "sigma3": ("coords", (0, 0, 1, 0)),
    "gamma_lambda": ("galois", (1, 0)),
    "gamma_mu": ("galois", (0, 1)),
}


def _same_span(f1: Form, f2: Form, g: Form) -> bool:
    """g lies in span(f1, f2): all 3x3 minors of [f1; f2; g] vanish."""
    for cols in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        rows = [[f[c] for c in cols] for f in (f1, f2, g)]
        if not det(rows).is_zero():
            return False
    return True


def transform_line(line: LineEq, name: str) -> tuple[Form, Form]:
    kind, data = SUBSTITUTIONS[name]
    if kind == "coords":
        # image of the line under the scaling: forms composed with its inverse
        return tuple(tuple(c * PolyZw.const(omega_power(-k)) for c, k in zip(f, data))
                     for f in line.forms)  # type: ignore[return-value]
    ka, kb = data
    return tuple(tuple(c.twist(ka, kb) for c in f) for f in line.forms)  # type: ignore[return-value]


def match_line(forms: tuple[Form, Form]) -> int:
    L = build_lines()
    hits = [k for k, q in enumerate(L)
            if all(_same_span(q.forms[0], q.forms[1], g) for g in forms)]
    if len(hits) != 1:
        raise CubicError(f"transformed forms match {len(hits)} lines")
    return hits[0]


@lru_cache(maxsize=None)
def substitution_perm(name: str) -> Permutation:
    """Permutation of the 27 line labels induced by a named substitution.

    ``sigma1..3`` scale one coordinate by w; ``gamma_lambda`` and
    ``gamma_mu`` are the Galois twists a -> w a and b -> w b.
    """
    if name not in SUBSTITUTIONS:
        raise CubicError(f"unknown substitution {name!r}")
    L = build_lines()
    images = []
    for line in L:
        try:
            images.append(match_line(transform_line(line, name)))
        except CubicError as exc:
            raise CubicError(f"{name}: no unique image for line {line.label}: {exc}") from None
    return Permutation(images)


# matching with the abstract line classes -------------------------------------

def first_sixer(meet: np.ndarray) -> tuple[int, ...]:
    """Lexicographically first 6 pairwise disjoint lines."""
    n = meet.shape[0]

    def extend(clique: list[int], start: int):
        if len(clique) == 6:
            return tuple(clique)
        for v in range(start, n):
            if all(meet[v, u] == 0 for u in clique):
                r = extend(clique + [v], v + 1)
                if r:
                    return r
        return None

    six = extend([], 0)
    if six is None:
        raise CubicError("no six pairwise disjoint lines")
    return six


def abstract_incidence() -> np.ndarray:
    ls = abstract_lines()
    return np.array([[1 if i != j and lat.pairing(u, v) == 1 else 0 for j, v in enumerate(ls)]
                     for i, u in enumerate(ls)], dtype=np.int8)


@lru_cache(maxsize=None)
def line_matching() -> tuple[int, ...]:
    """``match[k]`` = index in the canonical abstract order of concrete line k.

    The first sixer becomes E_1..E_6.  Every other line meets either two of
    them (L - E_i - E_j) or five (2L - sum E + E_i, i the missed one), which
    fixes it uniquely.  The result is checked to be a graph isomorphism.
    """
    meet = incidence()
    six = first_sixer(meet)
    ls = abstract_lines()
    index = {v: i for i, v in enumerate(ls)}
    L = lat.hyperplane_class()
    E = [lat.exceptional_class(i) for i in range(1, 7)]
    K = lat.canonical_class()
    match = [-1] * 27
    for k, v in enumerate(six):
        match[v] = k
    for v in range(27):
        if v in six:
            continue
        hit = [k for k, s in enumerate(six) if meet[v, s]]
        if len(hit) == 2:
            cls = L - E[hit[0]] - E[hit[1]]
        elif len(hit) == 5:
            (miss,) = set(range(6)) - set(hit)
            cls = -K - L + E[miss]  # 2L - sum(E) + E_miss
        else:
            raise CubicError(f"line {v} meets {len(hit)} lines of the sixer")
        match[v] = index[cls]
    if sorted(match) != list(range(27)):
        raise CubicError("matching with abstract lines is not a bijection")
    ab = abstract_incidence()
    for i in range(27):
        for j in range(27):
            if meet[i, j] != ab[match[i], match[j]]:
                raise CubicError(f"matching breaks incidence at lines {i}, {j}")
    return tuple(match)


def embed_in_weyl(p: Permutation) -> WeylElement:
    """Transport a permutation of concrete line labels to W(E6)."""
    meet = incidence()
    for i in range(27):
        for j in range(27):
            if meet[i, j] != meet[p(i), p(j)]:
                raise CubicError(f"{p} does not preserve incidence")
    match = line_matching()
    inv = [0] * 27
    for k, m in enumerate(match):
        inv[m] = k
    w = Permutation([match[p(inv[i])] for i in range(27)])
    return WeylElement(w)


def clear_caches() -> None:
    """Forget every memoized line, incidence and matching table."""
    global _INCIDENCE
    _INCIDENCE = None
    for f in (build_lines, substitution_perm, line_matching):
        f.cache_clear()


def named_group(names: list[str]) -> GroupSpec:
    return GroupSpec(27, [substitution_perm(n) for n in names])


def invariant_triples(p: Permutation) -> list[tuple[int, ...]]:
    return [c for c in p.cycles() if len(c) == 3]


def verify_main_example() -> dict:
    """Everything asserted about the diagonal cubic, as a plain result dict."""
    L = build_lines()
    meet = incidence()
    on_cubic = [ln.label for ln in L if not lies_on_cubic(ln)]
    degrees = sorted(set(int(d) for d in meet.sum(axis=1)))

    g_l = substitution_perm("gamma_lambda")
    g_m = substitution_perm("gamma_mu")
    g1 = g_l * g_m
    g2 = g_l * g_m.inverse()
    Gamma = named_group(["gamma_lambda", "gamma_mu"])
    G = named_group(["sigma1", "sigma2", "sigma3"])

    def triples_ok(p: Permutation) -> bool:
        tr = invariant_triples(p)
        return (len(p.fixed_points()) == 9 and len(tr) == 6 and p.order() == 3
                and all(meet[a, b] == 0 for t in tr for a in t for b in t if a != b))

    types = {
        "gamma1": carter_type(embed_in_weyl(g1)).value,
        "gamma2": carter_type(embed_in_weyl(g2)).value,
    }
    for s in ("sigma1", "sigma2", "sigma3"):
        types[s] = carter_type(embed_in_weyl(substitution_perm(s))).value

    mats_gamma = [embed_in_weyl(g).matrix for g in (g_l, g_m)]
    sigma3 = embed_in_weyl(substitution_perm("sigma3")).matrix
    commuting = all(x.commutes_with(y) for x in G.generators for y in Gamma.generators)

    return {
        "lines": len(L),
        "not_on_cubic": on_cubic,
        "meet_degrees": degrees,
        "incidence_isomorphic": len(line_matching()) == 27,
        "gamma_lambda_order": g_l.order(),
        "gamma_mu_order": g_m.order(),
        "gamma_commute": g_l.commutes_with(g_m),
        "Gamma_order": Gamma.order,
        "G_order": G.order,
        "gamma1_fixed_lines": len(g1.fixed_points()),
        "gamma1_triples_ok": triples_ok(g1),
        "gamma2_fixed_lines": len(g2.fixed_points()),
        "gamma2_triples_ok": triples_ok(g2),
        "carter_types": types,
        "rank_Gamma": lat.fixed_rank(mats_gamma),
        "rank_Gamma_sigma3": lat.fixed_rank(mats_gamma + [sigma3]),
        "rank_sigma3": lat.fixed_rank([sigma3]),
        "G_Gamma_commute": commuting,
    }


def brute_force_isomorphism(a: np.ndarray, b: np.ndarray) -> list[int] | None:
    """Plain backtracking graph isomorphism a -> b (for cross-checks on small graphs)."""
    n = a.shape[0]
    if b.shape[0] != n or sorted(a.sum(1)) != sorted(b.sum(1)):
        return None
    deg_b = b.sum(1)
    mapping = [-1] * n
    used = [False] * n

    def go(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or deg_b[w] != a[v].sum():
                continue
            if all(a[v, u] == b[w, mapping[u]] for u in range(v)):
                mapping[v] = w
                used[w] = True
                if go(v + 1):
                    return True
                used[w] = False
        mapping[v] = -1
        return False

    return list(mapping) if go(0) else None


__all__ = [
    "CycloInt", "PolyZw", "LineEq", "build_lines", "lines_meet", "lies_on_cubic",
    "substitution_perm", "embed_in_weyl", "verify_main_example", "line_matching",
    "incidence", "abstract_incidence", "brute_force_isomorphism",
]
