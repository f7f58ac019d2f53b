"""Exit criteria: each test checks one criterion at its stated time limit
and records a PASS/FAIL line shown in the pytest terminal summary."""

import json
import subprocess
import sys
import time

import pytest

from e6verify import ag23, cubic, dp6, lattice as lat, report, weyl
from e6verify.perm import GroupSpec, center, centralizer, isomorphic_small, wreath_c3_c3

from conftest import ACCEPTANCE_LINES


@pytest.fixture
def record(request):
    name = request.node.name
    state = {"detail": ""}
    t0 = time.perf_counter()
    yield state
    dt = time.perf_counter() - t0
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    line = f"{'PASS' if ok else 'FAIL'}  {name:<40} {dt:7.2f} s  {state['detail']}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_c1_weyl_order(record):
    weyl.clear_cache()
    t0 = time.perf_counter()
    W = weyl.build_weyl()
    dt = time.perf_counter() - t0
    record["detail"] = f"|W(E6)|={W.order}, built in {dt:.2f} s"
    assert W.order == 51840
    assert dt < 10


def test_c2_lines_and_roots(record):
    ls = lat.enumerate_lines()
    rs = lat.enumerate_roots()
    meets = {sum(lat.pairing(u, v) == 1 for v in ls) for u in ls}
    record["detail"] = f"lines={len(ls)} roots={len(rs)} meets={sorted(meets)}"
    assert len(ls) == 27 and len(rs) == 72 and meets == {10}


def test_c3_main_example(record):
    cubic.clear_caches()
    t0 = time.perf_counter()
    r = cubic.verify_main_example()
    dt = time.perf_counter() - t0
    record["detail"] = (f"rk Gamma={r['rank_Gamma']} rk Gamma+sigma3={r['rank_Gamma_sigma3']} "
                        f"|Gamma|={r['Gamma_order']} in {dt:.2f} s")
    assert r["not_on_cubic"] == []
    assert r["incidence_isomorphic"] and r["meet_degrees"] == [10]
    assert r["Gamma_order"] == 9
    assert r["gamma1_fixed_lines"] == 9 and r["gamma1_triples_ok"]
    assert r["gamma2_fixed_lines"] == 9 and r["gamma2_triples_ok"]
    assert r["carter_types"] == {"gamma1": "A2", "gamma2": "A2", "sigma1": "A2xA2xA2",
                                 "sigma2": "A2xA2xA2", "sigma3": "A2xA2xA2"}
    assert r["rank_Gamma"] == 3
    assert r["rank_Gamma_sigma3"] == 1
    assert dt < 30


def test_c4_plane_cubics(record):
    t0 = time.perf_counter()
    g = ag23.enumerate_ga23()
    ls = ag23.configuration_lines()
    r = ag23.verify_lemma_gaff()
    dt = time.perf_counter() - t0
    record["detail"] = (f"|GA2(F3)|={g.order}, {r['sylow2_count']} Sylow-2, "
                        f"{r['two_subgroups_checked']} 2-subgroups, {len(r['counterexamples'])} counterexamples")
    assert g.order == 432
    assert len(ls) == 12 and all(len(l) == 3 for l in ls)
    assert all(sum(p in l for l in ls) == 4 for p in range(9))
    assert r["counterexamples"] == [] and r["orbit_failures"] == []
    assert dt < 10


def test_c5_sylow_and_heisenberg(record):
    t0 = time.perf_counter()
    r = weyl.verify_sylow_lemmas()
    dt = time.perf_counter() - t0
    record["detail"] = (f"|Delta|={r['delta_order']} |Z|={r['center_order']} wreath={r['isomorphic_to_wreath']} "
                        f"H3 order/exp={r['h3_order']}/{r['h3_exponent']} in {dt:.2f} s")
    assert r["delta_order"] == 81
    assert r["center_order"] == 3
    assert r["isomorphic_to_wreath"]
    assert r["bad_centralizers"] == []
    assert r["delta_bad_subgroups"] == []
    assert r["h3_order"] == 27 and r["h3_exponent"] == 3
    assert r["h3_bad_subgroups"] == []
    assert dt < 60


def test_c6_dp6(record):
    t0 = time.perf_counter()
    r = dp6.verify_dp6_lemmas()
    dt = time.perf_counter() - t0
    record["detail"] = f"order={r['order']} centralizers={r['centralizer_orders']} rank={r['fixed_ranks']}"
    assert r["order"] == 12 and r["center_order"] == 2 and r["z_swaps_triples"]
    assert r["s3_order"] == 6 and r["s3_isomorphic"] and r["product_decomposition"]
    assert r["centralizer_orders"] == [6]
    assert r["bad_subgroups"] == []
    assert r["fixed_ranks"] == [2]
    assert dt < 1


CENSUS = {
    "A2": {"count": 240, "fixed_lines": 9, "fixed_rank": 5},
    "A2xA2": {"count": 480, "fixed_lines": 0, "fixed_rank": 3},
    "A2xA2xA2": {"count": 80, "fixed_lines": 0, "fixed_rank": 1},
}


def test_c7_order3_census(record):
    weyl.build_weyl()
    t0 = time.perf_counter()
    table = weyl.order3_census(workers=1)
    dt = time.perf_counter() - t0
    record["detail"] = ", ".join(f"{t}:{v['count']}" for t, v in table.items()) + f" in {dt:.2f} s"
    assert table == CENSUS
    assert dt < 60


def test_c8_determinism(record, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        out = subprocess.run([sys.executable, "-m", "e6verify", "verify", "all", "--json", str(p)],
                             capture_output=True, text=True)
        assert out.returncode == 0, out.stdout + out.stderr
    a, b = (report.mask_stats(json.loads(p.read_text())) for p in paths)
    record["detail"] = f"{len(a['claims'])} certificates, identical modulo stats: {a == b}"
    assert a == b
    assert len(a["claims"]) >= 10
    assert all(c["verdict"] == "verified" for c in a["claims"])
