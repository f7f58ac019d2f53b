import random
from itertools import combinations

import pytest

from e6verify import ag23
from e6verify.perm import GroupSpec, enumerate_subgroups, orbits

from oracles import cayley_table, closure_bits

# frozen from the oracle below: distinct 2-subgroups of GA_2(F_3), trivial included
TWO_SUBGROUPS = 217
SYLOW2_COUNT = 27


@pytest.fixture(scope="module")
def ga():
    return ag23.enumerate_ga23()


def test_order(ga):
    assert ga.order == 432 == 16 * 27
    assert len(ag23.gl23()) == 48 == (9 - 1) * (9 - 3)


def test_affine_map_composition():
    rng = random.Random(2)
    maps = ag23.affine_maps()
    for _ in range(50):
        f, g = rng.choice(maps), rng.choice(maps)
        assert (f @ g).permutation() == f.permutation() * g.permutation()
    with pytest.raises(ValueError):
        ag23.AffineMapF3(((1, 1), (1, 1)), (0, 0))


def test_translations_free(ga):
    T = ag23.translations()
    assert T.order == 9
    assert all(not x.fixed_points() for x in T if not x.is_identity())
    assert all(x in ga for x in T)


def test_configuration():
    ls = ag23.configuration_lines()
    assert len(ls) == 12
    assert all(len(set(l)) == 3 for l in ls)
    assert all(sum(p in l for l in ls) == 4 for p in range(9))
    through_origin = [l for l in ls if 0 in l]
    assert len(through_origin) == 4
    # any two points lie on exactly one line
    for p, q in combinations(range(9), 2):
        assert sum(p in l and q in l for l in ls) == 1


def test_every_map_permutes_lines(ga):
    for x in ga:
        ag23.line_action(x)


def test_line_action_homomorphism(ga):
    rng = random.Random(0)
    for _ in range(100):
        a, b = rng.choice(ga.elements), rng.choice(ga.elements)
        assert ag23.line_action(a * b) == ag23.line_action(a) * ag23.line_action(b)


def test_point_stabilizer(ga):
    assert ag23.point_stabilizer(ga).order == 48


def test_sylow2(ga):
    syl = ag23.sylow2_subgroups(ga)
    assert len(syl) == SYLOW2_COUNT
    assert SYLOW2_COUNT % 2 == 1 and 27 % SYLOW2_COUNT == 0
    assert all(P.order == 16 and ag23.common_fixed_points(P) for P in syl)


def test_two_subgroup_count_oracle(ga):
    # 2-subgroups of GA_2(F_3) sit in SD16 and need at most 2 generators
    elems = [x.images for x in ga.elements]
    table = cayley_table(elems)
    ident = elems.index(tuple(range(9)))
    two = [i for i, x in enumerate(ga.elements) if x.order() in (1, 2, 4, 8, 16)]
    found = set()
    for a in two:
        for b in two:
            if a <= b:
                s = closure_bits(table, (a, b), ident)
                if len(s) & (len(s) - 1) == 0:
                    found.add(s)
    assert len(found) == TWO_SUBGROUPS
    assert ag23.verify_lemma_gaff()["two_subgroups_checked"] == TWO_SUBGROUPS


def test_lemma():
    r = ag23.verify_lemma_gaff()
    assert r["counterexamples"] == [] and r["orbit_failures"] == []
    assert r["sylow2_count"] == SYLOW2_COUNT


def test_trivial_subgroup_fixes_everything():
    assert ag23.common_fixed_points(GroupSpec(9, [])) == list(range(9))


def test_fixed_point_free_subgroups_have_order3(ga):
    T = ag23.translations()
    assert not ag23.common_fixed_points(T) and ag23.has_order3(T)


def test_two_group_orbits_are_powers_of_two(ga):
    P = ag23.sylow2_subgroups(ga)[0]
    for h in enumerate_subgroups(P, 16):
        sizes = [len(o) for o in orbits(h)]
        assert sum(sizes) == 9
        assert all(s & (s - 1) == 0 for s in sizes)
        assert 1 in sizes


@pytest.mark.slow
def test_lemma_slow_cross_check():
    r = ag23.verify_lemma_gaff(slow_cross_check=True)
    assert r["all_subgroups_counterexamples"] == []
