import numpy as np
import pytest

from e6verify import lattice as lat
from e6verify import weyl
from e6verify.perm import center, centralizer, is_subgroup_abelian, isomorphic_small, wreath_c3_c3

# frozen from the first full census run; these are the sizes of the three
# order-3 classes of W(E6) (80 + 240 + 480 = 800 elements of order 3)
CENSUS = {
    "A2": {"count": 240, "fixed_lines": 9, "fixed_rank": 5},
    "A2xA2": {"count": 480, "fixed_lines": 0, "fixed_rank": 3},
    "A2xA2xA2": {"count": 80, "fixed_lines": 0, "fixed_rank": 1},
}


def test_order(W):
    assert W.order == 51840 == 2**7 * 3**4 * 5


def test_faithful():
    assert weyl.check_faithful()


def test_generators_preserve_incidence():
    ls = weyl.lines()
    for s in weyl.simple_reflections():
        for i, u in enumerate(ls):
            for j, v in enumerate(ls):
                assert lat.pairing(u, v) == lat.pairing(ls[s.perm(i)], ls[s.perm(j)])


def test_matrix_roundtrip(W):
    for x in W.elements[::997]:
        m = weyl.matrix_from_perm(x)
        assert lat.is_isometry(m)
        assert weyl.perm_from_matrix(m) == x


def test_matrix_homomorphism(W):
    rng = np.random.default_rng(5)
    els = W.elements
    for _ in range(30):
        a, b = (els[int(k)] for k in rng.integers(0, len(els), 2))
        assert np.array_equal(weyl.matrix_from_perm(a * b), weyl.matrix_from_perm(a) @ weyl.matrix_from_perm(b))


def test_carter_type_errors(W):
    with pytest.raises(ValueError):
        weyl.carter_type(W.identity())


def test_census():
    assert weyl.order3_census() == CENSUS


def test_census_parallel_matches():
    assert weyl.order3_census(workers=2) == CENSUS


def test_carter_is_class_function():
    assert weyl.conjugation_spot_check(500) == []


def test_sylow3(delta):
    assert delta.order == 81
    Z = center(delta)
    assert Z.order == 3
    assert isomorphic_small(delta, wreath_c3_c3())
    for x in delta:
        if x.order() == 3 and x not in Z:
            assert is_subgroup_abelian(centralizer(delta, x).elements)


def test_sylow3_center_type(delta):
    # the central mu_3 of Delta fixes no line
    z = next(x for x in center(delta) if not x.is_identity())
    assert weyl.carter_type(z) is weyl.CarterType.A2xA2xA2


def test_verify_sylow_lemmas():
    r = weyl.verify_sylow_lemmas()
    assert r["delta_order"] == 81
    assert r["center_order"] == 3
    assert r["isomorphic_to_wreath"]
    assert r["bad_centralizers"] == []
    assert r["delta_subgroups"] == 50
    assert r["delta_bad_subgroups"] == []
    assert (r["h3_order"], r["h3_exponent"], r["h3_center_order"]) == (27, 3, 3)
    assert r["h3_bad_subgroups"] == []
