import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from e6verify import lattice as lat
from e6verify.lattice import LatticeVector as V

from oracles import rank_fraction


def e(i, rank=7):
    return lat.exceptional_class(i, rank)


L = lat.hyperplane_class()
K = lat.canonical_class()


def test_pairing_examples():
    assert lat.pairing(V((1, 0, 0, 0, 0, 0, 0)), V((1, 0, 0, 0, 0, 0, 0))) == 1
    assert lat.pairing(V((0, 1, 0, 0, 0, 0, 0)), V((0, 1, 0, 0, 0, 0, 0))) == -1
    assert lat.pairing(K, K) == 3
    assert lat.pairing(lat.canonical_class(4), lat.canonical_class(4)) == 6


def test_pairing_rank_mismatch():
    with pytest.raises(lat.LatticeError):
        lat.pairing(K, lat.canonical_class(4))


def test_lines():
    lines = lat.enumerate_lines()
    assert len(lines) == 27
    assert len(set(lines)) == 27
    assert e(1) in lines
    assert all(lat.is_line(v) for v in lines)


def test_lines_are_the_three_families():
    lines = set(lat.enumerate_lines())
    E = [e(i) for i in range(1, 7)]
    total = sum(E[1:], E[0])
    expected = set(E)
    expected |= {L - E[i] - E[j] for i in range(6) for j in range(i + 1, 6)}
    expected |= {2 * L - total + E[i] for i in range(6)}
    assert lines == expected


def test_line_pairings():
    lines = lat.enumerate_lines()
    for u in lines:
        vals = [lat.pairing(u, v) for v in lines]
        assert set(vals) <= {-1, 0, 1}
        assert vals.count(-1) == 1 and lat.pairing(u, u) == -1
        assert vals.count(0) == 16
        assert vals.count(1) == 10


def test_roots():
    roots = lat.enumerate_roots()
    assert len(roots) == 72
    s = set(roots)
    assert all(-r in s for r in roots)
    assert e(1) - e(2) in s
    assert L - e(1) - e(2) - e(3) in s


def test_box_rescan_by_plain_loops():
    # independent of the numpy scan: plain loops with the form written out
    found_l, found_r = set(), set()
    for c in product(range(-3, 4), repeat=7):
        a = c[0]
        vv = a * a - sum(x * x for x in c[1:])
        vk = -3 * a - sum(c[1:])
        if vv == -1 and vk == -1:
            found_l.add(V(c))
        elif vv == -2 and vk == 0:
            found_r.add(V(c))
    assert found_l == set(lat.enumerate_lines())
    assert found_r == set(lat.enumerate_roots())


def test_dp6_curves():
    cs = lat.enumerate_lines(4)
    assert len(cs) == 6
    # root system A2 x A1
    assert len(lat.enumerate_roots(4)) == 8


def test_reflect_examples():
    r = e(1) - e(2)
    assert lat.reflect(r, e(1)) == e(2)
    for root in lat.enumerate_roots():
        assert lat.reflect(root, K) == K
    v = V((2, -1, 0, 3, 1, 0, -2))
    assert lat.reflect(r, lat.reflect(r, v)) == v
    with pytest.raises(lat.LatticeError):
        lat.reflect(e(1), v)


vectors = st.lists(st.integers(-20, 20), min_size=7, max_size=7).map(lambda c: V(tuple(c)))


@settings(max_examples=200, deadline=None)
@given(u=vectors, v=vectors, k=st.integers(0, 71))
def test_reflect_preserves_pairing(u, v, k):
    r = lat.enumerate_roots()[k]
    assert lat.pairing(lat.reflect(r, u), lat.reflect(r, v)) == lat.pairing(u, v)


def test_reflection_matrix_is_isometry():
    for r in lat.enumerate_roots():
        assert lat.is_isometry(lat.reflection_matrix(r))


def test_fixed_rank_examples():
    assert lat.fixed_rank([np.eye(7, dtype=int)]) == 7
    assert lat.fixed_rank([], rank=7) == 7
    assert lat.fixed_rank([lat.reflection_matrix(e(1) - e(2))]) == 6


def test_fixed_rank_monotone():
    rng = random.Random(3)
    roots = lat.enumerate_roots()
    for _ in range(20):
        mats = [lat.reflection_matrix(rng.choice(roots)) for _ in range(4)]
        ranks = [lat.fixed_rank(mats[:k + 1]) for k in range(4)]
        assert ranks == sorted(ranks, reverse=True)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=5, max_size=5), min_size=1, max_size=8))
def test_integer_rank_matches_fraction_oracle(rows):
    assert lat.integer_rank(rows) == rank_fraction(rows)
