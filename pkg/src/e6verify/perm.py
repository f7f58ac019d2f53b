"""Small finite permutation groups.

Groups are given by generators and closed by breadth-first search; every
question (center, centralizer, Sylow subgroups, subgroup lattice,
isomorphism) is then answered by brute force over the element list.  This
is only meant for groups of order up to about 10^5.

Composition convention: ``(p * q)(i) == p(q(i))``, i.e. ``q`` acts first.
"""

from __future__ import annotations

from collections import Counter, deque
from functools import reduce
from math import lcm
from typing import Iterable, Iterator, Sequence

DEFAULT_CAP = 10**6
MAX_ENUM_GROUP = 10**4
MAX_ENUM_ORDER = 128
MAX_ISO_ORDER = 100


class GroupError(ValueError):
    pass


class Permutation:
    """A bijection of {0, ..., n-1}, stored as its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"not a bijection: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise GroupError("degree mismatch")
        s = self.images
        return Permutation._raw(tuple(s[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(id_{self.degree})"
        return "Permutation(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) + ")"

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def conjugate(self, by: Permutation) -> Permutation:
        """``by * self * by^-1``."""
        return by * self * by.inverse()

    def commutes_with(self, other: Permutation) -> bool:
        a, b = self.images, other.images
        return all(a[b[i]] == b[a[i]] for i in range(len(a)))


class GroupSpec:
    """A permutation group given by generators.

    The element list is computed on first access and cached; it is sorted
    lexicographically by image tuple so runs are reproducible.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), cap: int = DEFAULT_CAP,
                 name: str | None = None):
        self.degree = degree
        self.generators = [g for g in generators]
        for g in self.generators:
            if g.degree != degree:
                raise GroupError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.cap = cap
        self.name = name
        self._elements: list[Permutation] | None = None
        self._element_set: frozenset[Permutation] | None = None

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation], name: str | None = None) -> GroupSpec:
        """Wrap an element set already known to be closed (not re-checked)."""
        elems = sorted(set(elements))
        g = cls(degree, elems, name=name)
        g._elements = elems
        g._element_set = frozenset(elems)
        g.generators = small_generating_set(elems, degree)
        return g

    @property
    def elements(self) -> list[Permutation]:
        if self._elements is None:
            self._elements = generate(self)
            self._element_set = frozenset(self._elements)
        return self._elements

    @property
    def element_set(self) -> frozenset[Permutation]:
        self.elements
        return self._element_set

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, x: Permutation) -> bool:
        return x in self.element_set

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        size = f"order={len(self._elements)}" if self._elements is not None else "order=?"
        return f"<GroupSpec{label} degree={self.degree} {size}>"

    def subgroup(self, generators: Iterable[Permutation], name: str | None = None) -> GroupSpec:
        return GroupSpec(self.degree, generators, cap=self.cap, name=name)

    def fingerprint(self) -> frozenset[tuple[int, ...]]:
        return frozenset(p.images for p in self.elements)


def generate(spec: GroupSpec) -> list[Permutation]:
    """Closure of the generators under composition, sorted by image tuple."""
    n = spec.degree
    ident = tuple(range(n))
    gens = [g.images for g in spec.generators]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(x[j] for j in g)
            if y not in seen:
                seen.add(y)
                if len(seen) > spec.cap:
                    raise GroupError(f"closure exceeds the cap of {spec.cap} elements")
                queue.append(y)
    # finite group: closure under products alone already contains inverses
    return [Permutation._raw(t) for t in sorted(seen)]


def small_generating_set(elements: Sequence[Permutation], degree: int) -> list[Permutation]:
    """Greedy generating set: scan elements by decreasing order, keep those
    not already in the span."""
    target = len(elements)
    gens: list[Permutation] = []
    span = {Permutation.identity(degree)}
    for x in sorted(elements, key=lambda p: (-p.order(), p.images)):
        if len(span) == target:
            break
        if x in span:
            continue
        gens.append(x)
        span = set(GroupSpec(degree, gens).elements)
    return gens


def is_abelian(g: GroupSpec) -> bool:
    return all(a.commutes_with(b) for i, a in enumerate(g.generators) for b in g.generators[i + 1:])


def element_orders(g: GroupSpec) -> dict[int, int]:
    """Multiset of element orders as ``{order: count}``."""
    return dict(sorted(Counter(x.order() for x in g.elements).items()))


def exponent(g: GroupSpec) -> int:
    return reduce(lcm, element_orders(g), 1)


def center(g: GroupSpec) -> GroupSpec:
    gens = g.generators
    z = [x for x in g.elements if all(x.commutes_with(s) for s in gens)]
    return GroupSpec.from_elements(g.degree, z, name=f"Z({g.name})" if g.name else None)


def centralizer(g: GroupSpec, x: Permutation) -> GroupSpec:
    if x not in g:
        raise GroupError(f"{x} is not an element of the group")
    c = [y for y in g.elements if y.commutes_with(x)]
    return GroupSpec.from_elements(g.degree, c)


def normalizes(x: Permutation, h: GroupSpec) -> bool:
    return all(s.conjugate(x) in h for s in h.generators)


def _p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def _is_p_power(n: int, p: int) -> bool:
    return _p_part(n, p) == n


def sylow_subgroup(g: GroupSpec, p: int) -> GroupSpec:
    """A Sylow p-subgroup, grown greedily from the trivial group.

    At each step the first (in element order) p-element that normalizes the
    current p-subgroup P without lying in it is adjoined; Sylow's theorem
    guarantees one exists until |P| reaches the full p-part.
    """
    order = g.order
    if order % p:
        raise GroupError(f"{p} does not divide the group order {order}")
    target = _p_part(order, p)
    p_elements = [x for x in g.elements if _is_p_power(x.order(), p) and not x.is_identity()]
    P = GroupSpec(g.degree, [], name=None)
    while P.order < target:
        pset = P.element_set
        nxt = next((x for x in p_elements if x not in pset and normalizes(x, P)), None)
        if nxt is None:  # pragma: no cover - impossible by Sylow's theorem
            raise GroupError("greedy Sylow construction stalled")
        P = GroupSpec(g.degree, P.generators + [nxt])
    return GroupSpec.from_elements(g.degree, P.elements, name=f"Syl{p}({g.name})" if g.name else None)


def _closure_with(base: frozenset[tuple[int, ...]], gens: list[tuple[int, ...]],
                  limit: int) -> frozenset[tuple[int, ...]] | None:
    """Closure of ``base`` (a group) together with ``gens``; None once it exceeds ``limit``."""
    seen = set(base)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(x[j] for j in g)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    return None
                queue.append(y)
    return frozenset(seen)


def enumerate_subgroups(g: GroupSpec, max_order: int) -> list[GroupSpec]:
    """All subgroups of order <= ``max_order``.

    Grows subgroups one generator at a time; every subgroup is reached
    because it is the top of a chain <x1> < <x1,x2> < ... whose members are
    no larger than it.  Subgroups are de-duplicated by their element set.
    Result is sorted by (order, sorted element images).
    """
    if g.order > MAX_ENUM_GROUP:
        raise GroupError(f"group order {g.order} exceeds the enumeration bound {MAX_ENUM_GROUP}")
    if max_order > MAX_ENUM_ORDER:
        raise GroupError(f"max_order {max_order} exceeds the bound {MAX_ENUM_ORDER}")
    ident = tuple(range(g.degree))
    elems = [x.images for x in g.elements]
    trivial = frozenset([ident])
    # generators recorded per subgroup so closures stay cheap
    found: dict[frozenset, list[tuple[int, ...]]] = {trivial: []}
    frontier = [trivial]
    while frontier:
        new_frontier = []
        for h in frontier:
            gens = found[h]
            # <h, x> depends only on the double coset h x h
            done = set(h)
            for x in elems:
                if x in done:
                    continue
                for y in h:
                    done.add(tuple(y[j] for j in x))
                    done.add(tuple(x[j] for j in y))
                k = _closure_with(h, gens + [x], max_order)
                if k is None or k in found:
                    continue
                found[k] = gens + [x]
                new_frontier.append(k)
        frontier = new_frontier
    out = []
    for elset, gens in found.items():
        sub = GroupSpec(g.degree, [Permutation._raw(t) for t in gens])
        sub._elements = sorted(Permutation._raw(t) for t in elset)
        sub._element_set = frozenset(sub._elements)
        out.append(sub)
    out.sort(key=lambda s: (s.order, [p.images for p in s.elements]))
    return out


def is_subgroup_abelian(elements: Iterable[Permutation]) -> bool:
    elems = list(elements)
    return all(a.commutes_with(b) for i, a in enumerate(elems) for b in elems[i + 1:])


def orbits(g: GroupSpec) -> list[list[int]]:
    """Orbits of ``g`` on its points, each sorted, listed by smallest point."""
    seen: set[int] = set()
    out = []
    for start in range(g.degree):
        if start in seen:
            continue
        orb = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for s in g.generators:
                j = s(i)
                if j not in orb:
                    orb.add(j)
                    stack.append(j)
        seen |= orb
        out.append(sorted(orb))
    return out


def find_isomorphism(g: GroupSpec, h: GroupSpec) -> dict[Permutation, Permutation] | None:
    """An isomorphism g -> h as an element map, or None.

    Backtracking over images of a small generating set of ``g``; each partial
    assignment is extended along the Cayley graph of the subgroup generated
    so far and rejected at the first inconsistency.
    """
    if g.order != h.order:
        return None
    if g.order > MAX_ISO_ORDER:
        raise GroupError(f"order {g.order} exceeds the isomorphism search bound {MAX_ISO_ORDER}")
    if element_orders(g) != element_orders(h):
        return None
    gens = small_generating_set(g.elements, g.degree)
    by_order: dict[int, list[Permutation]] = {}
    for y in h.elements:
        by_order.setdefault(y.order(), []).append(y)

    def extend(images: list[Permutation]) -> dict[Permutation, Permutation] | None:
        # BFS over the subgroup generated by gens[:k]; all Cayley edges must agree
        k = len(images)
        phi = {g.identity(): h.identity()}
        queue = deque([g.identity()])
        while queue:
            x = queue.popleft()
            for s, t in zip(gens[:k], images):
                y = x * s
                img = phi[x] * t
                if y in phi:
                    if phi[y] != img:
                        return None
                else:
                    phi[y] = img
                    queue.append(y)
        if len(set(phi.values())) != len(phi):
            return None
        return phi

    def search(images: list[Permutation]) -> dict[Permutation, Permutation] | None:
        phi = extend(images)
        if phi is None:
            return None
        if len(images) == len(gens):
            return phi if len(phi) == g.order else None
        for cand in by_order.get(gens[len(images)].order(), []):
            result = search(images + [cand])
            if result is not None:
                return result
        return None

    return search([])


def isomorphic_small(g: GroupSpec, h: GroupSpec) -> bool:
    if g.order != h.order:
        return False
    return find_isomorphism(g, h) is not None


# standard models ------------------------------------------------------------

def cyclic_group(n: int) -> GroupSpec:
    return GroupSpec(n, [Permutation.from_cycles(n, range(n))] if n > 1 else [], name=f"C{n}")


def symmetric_group(n: int) -> GroupSpec:
    gens = []
    if n > 1:
        gens.append(Permutation.from_cycles(n, (0, 1)))
    if n > 2:
        gens.append(Permutation.from_cycles(n, range(n)))
    return GroupSpec(n, gens, name=f"S{n}")


def elementary_abelian_3(k: int) -> GroupSpec:
    """mu_3^k as k commuting 3-cycles on disjoint triples."""
    n = 3 * k
    gens = [Permutation.from_cycles(n, (3 * i, 3 * i + 1, 3 * i + 2)) for i in range(k)]
    return GroupSpec(n, gens, name=f"C3^{k}")


def wreath_c3_c3() -> GroupSpec:
    """mu_3^3 x| mu_3 on 9 points: three 3-cycles on disjoint triples plus the
    permutation cycling the triples."""
    base = elementary_abelian_3(3).generators
    shift = Permutation([3, 4, 5, 6, 7, 8, 0, 1, 2])
    return GroupSpec(9, base + [shift], name="C3 wr C3")


def heisenberg_f3() -> GroupSpec:
    """Upper unitriangular 3x3 matrices over F_3 in their right regular action.

    The matrix [[1,a,c],[0,1,b],[0,0,1]] is the point 9a + 3b + c.
    """
    def mul(x, y):
        a1, b1, c1 = x
        a2, b2, c2 = y
        return ((a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2 + a1 * b2) % 3)

    pts = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    index = {p: i for i, p in enumerate(pts)}

    def right_mult(g):
        return Permutation([index[mul(p, g)] for p in pts])

    return GroupSpec(27, [right_mult((1, 0, 0)), right_mult((0, 1, 0))], name="H3")


def direct_product(g: GroupSpec, h: GroupSpec) -> GroupSpec:
    """g x h acting on the disjoint union of the two point sets."""
    n, m = g.degree, h.degree

    def left(p):
        return Permutation(tuple(p.images) + tuple(range(n, n + m)))

    def right(q):
        return Permutation(tuple(range(n)) + tuple(i + n for i in q.images))

    return GroupSpec(n + m, [left(p) for p in g.generators] + [right(q) for q in h.generators])
