"""Certificates: one verdict record per checked claim, plus DOT exports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable

from . import __version__
from . import ag23, cubic, dp6, weyl
from . import lattice as lat

VERIFIED = "verified"
REFUTED = "refuted"
ERROR = "error"


@dataclass
class Certificate:
    claim_id: str
    paper_anchor: str
    verdict: str
    witness: Any = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (VERIFIED, REFUTED, ERROR):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == REFUTED and not self.witness:
            raise ValueError(f"{self.claim_id}: a refuted claim needs a witness")

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "paper_anchor": self.paper_anchor,
            "verdict": self.verdict,
            "witness": self.witness,
            "stats": self.stats,
        }


# cached module results shared between claims in one process
main_example = lru_cache(maxsize=None)(cubic.verify_main_example)
sylow_lemmas = lru_cache(maxsize=None)(weyl.verify_sylow_lemmas)
dp6_lemmas = lru_cache(maxsize=None)(dp6.verify_dp6_lemmas)


@lru_cache(maxsize=None)
def gaff_lemma(slow: bool = False) -> dict:
    return ag23.verify_lemma_gaff(slow_cross_check=slow)


def _expect(checks: dict[str, tuple[Any, Any]]) -> tuple[bool, dict]:
    """Compare ``{name: (got, expected)}``; the witness lists every mismatch."""
    bad = {k: {"got": g, "expected": e} for k, (g, e) in checks.items() if g != e}
    return not bad, bad


def _weyl_order(opts):
    W = weyl.build_weyl()
    ok, bad = _expect({
        "order": (W.order, weyl.WEYL_E6_ORDER),
        "faithful": (weyl.check_faithful(), True),
    })
    return ok, bad, {"order": W.order}


def _lines_roots(opts):
    ls = lat.enumerate_lines()
    rs = lat.enumerate_roots()
    meets = sorted({sum(1 for v in ls if lat.pairing(u, v) == 1) for u in ls})
    disjoint = sorted({sum(1 for v in ls if v != u and lat.pairing(u, v) == 0) for u in ls})
    ok, bad = _expect({
        "lines": (len(ls), 27),
        "roots": (len(rs), 72),
        "meets_per_line": (meets, [10]),
        "disjoint_per_line": (disjoint, [16]),
    })
    return ok, bad, {"lines": len(ls), "roots": len(rs)}


def _weyl_census(opts):
    table = weyl.order3_census(workers=opts.get("workers", 1))
    got = {t: (row["fixed_rank"], row["fixed_lines"]) for t, row in table.items()}
    ok, bad = _expect({"types": (got, {"A2": (5, 9), "A2xA2": (3, 0), "A2xA2xA2": (1, 0)})})
    return ok, bad, {t: row["count"] for t, row in table.items()}


def _lines_on_cubic(opts):
    r = main_example()
    ok, bad = _expect({"lines": (r["lines"], 27), "not_on_cubic": (r["not_on_cubic"], [])})
    return ok, bad, {"lines": r["lines"]}


def _incidence(opts):
    r = main_example()
    ok, bad = _expect({
        "meet_degrees": (r["meet_degrees"], [10]),
        "isomorphic_to_abstract": (r["incidence_isomorphic"], True),
    })
    return ok, bad, {"edges": int(cubic.incidence().sum()) // 2}


def _galois(opts):
    r = main_example()
    ok, bad = _expect({
        "gamma_lambda_order": (r["gamma_lambda_order"], 3),
        "gamma_mu_order": (r["gamma_mu_order"], 3),
        "commute": (r["gamma_commute"], True),
        "Gamma_order": (r["Gamma_order"], 9),
    })
    return ok, bad, {"Gamma_order": r["Gamma_order"], "G_order": r["G_order"]}


def _carter(opts):
    r = main_example()
    ok, bad = _expect({
        "types": (r["carter_types"], {"gamma1": "A2", "gamma2": "A2", "sigma1": "A2xA2xA2",
                                      "sigma2": "A2xA2xA2", "sigma3": "A2xA2xA2"}),
        "gamma1_fixed_lines": (r["gamma1_fixed_lines"], 9),
        "gamma2_fixed_lines": (r["gamma2_fixed_lines"], 9),
        "gamma1_triples": (r["gamma1_triples_ok"], True),
        "gamma2_triples": (r["gamma2_triples_ok"], True),
    })
    return ok, bad, {}


def _rank3(opts):
    r = main_example()
    ok, bad = _expect({"rank_Gamma": (r["rank_Gamma"], 3)})
    return ok, bad, {"rank": r["rank_Gamma"]}


def _rank1(opts):
    r = main_example()
    ok, bad = _expect({
        "rank_sigma3": (r["rank_sigma3"], 1),
        "rank_Gamma_sigma3": (r["rank_Gamma_sigma3"], 1),
    })
    return ok, bad, {"rank": r["rank_sigma3"]}


def _commute(opts):
    r = main_example()
    ok, bad = _expect({"commute": (r["G_Gamma_commute"], True)})
    return ok, bad, {"G_order": r["G_order"]}


def _ga23(opts):
    g = ag23.enumerate_ga23()
    ls = ag23.configuration_lines()
    per_point = sorted({sum(1 for l in ls if p in l) for p in range(9)})
    permutes = all(ag23.line_action(x) is not None for x in g)
    ok, bad = _expect({
        "order": (g.order, ag23.GA23_ORDER),
        "lines": (len(ls), 12),
        "points_per_line": (sorted({len(l) for l in ls}), [3]),
        "lines_per_point": (per_point, [4]),
        "maps_permute_lines": (permutes, True),
        "point_stabilizer": (ag23.point_stabilizer(g).order, ag23.GL23_ORDER),
    })
    return ok, bad, {"order": g.order}


def _lemma41(opts):
    r = gaff_lemma(bool(opts.get("slow", False)))
    checks = {
        "counterexamples": (r["counterexamples"], []),
        "orbit_failures": (r["orbit_failures"], []),
        "sylow2_orders": (r["sylow2_orders"], [16]),
    }
    stats = {"sylow2_count": r["sylow2_count"], "two_subgroups_checked": r["two_subgroups_checked"]}
    if "all_subgroups_checked" in r:
        checks["all_subgroups_counterexamples"] = (r["all_subgroups_counterexamples"], [])
        stats["all_subgroups_checked"] = r["all_subgroups_checked"]
    ok, bad = _expect(checks)
    return ok, bad, stats


def _sylow(opts):
    r = sylow_lemmas()
    ok, bad = _expect({
        "order": (r["delta_order"], 81),
        "center_order": (r["center_order"], 3),
        "isomorphic_to_wreath": (r["isomorphic_to_wreath"], True),
        "nonabelian_centralizers": (r["bad_centralizers"], []),
        "nonabelian_subgroups_avoiding_center": (r["delta_bad_subgroups"], []),
    })
    return ok, bad, {"subgroups": r["delta_subgroups"], "noncentral_order3": r["noncentral_order3"]}


def _heisenberg(opts):
    r = sylow_lemmas()
    ok, bad = _expect({
        "order": (r["h3_order"], 27),
        "exponent": (r["h3_exponent"], 3),
        "abelian": (r["h3_abelian"], False),
        "center_order": (r["h3_center_order"], 3),
        "nonabelian_subgroups_avoiding_center": (r["h3_bad_subgroups"], []),
    })
    return ok, bad, {"subgroups": r["h3_subgroups"]}


def _hexagon(opts):
    r = dp6_lemmas()
    ok, bad = _expect({
        "curves": (r["curves"], 6),
        "six_cycle": (r["six_cycle"], True),
        "order": (r["order"], 12),
        "center_order": (r["center_order"], 2),
        "z_order": (r["z_order"], 2),
        "z_swaps_triples": (r["z_swaps_triples"], True),
        "s3_isomorphic": (r["s3_isomorphic"], True),
        "product_decomposition": (r["product_decomposition"], True),
        "isometries": (r["isometries_ok"], True),
    })
    return ok, bad, {"order": r["order"]}


def _lemma63(opts):
    r = dp6_lemmas()
    ok, bad = _expect({
        "centralizer_orders": (r["centralizer_orders"], [6]),
        "subgroups_avoiding_z": (r["bad_subgroups"], []),
        "fixed_ranks": (r["fixed_ranks"], [2]),
    })
    return ok, bad, {"order3_elements": r["order3_elements"]}


CLAIMS: dict[str, tuple[str, Callable[[dict], tuple[bool, Any, dict]]]] = {
    "lattice.lines_roots": ("Z^{1,6}: 27 classes with v.v=v.K=-1, 72 with r.r=-2, r.K=0; each line meets 10", _lines_roots),
    "lemma4.1": ("H < GA_2(F_3) without fixed points on A^2(F_3) contains an element of order 3", _lemma41),
    "lemma6.3": ("centralizer of order-3 gamma in S_3 x mu_2 is <gamma, z> of order 6; subgroups avoiding z have order <= 3", _lemma63),
    "sec3.carter_types": ("gamma_1, gamma_2 have type A_2 (9 fixed lines, six disjoint triples); sigma_i have type A_2^3", _carter),
    "sec3.commute": ("images of <sigma_1, sigma_2, sigma_3> and Gamma commute in W(E_6)", _commute),
    "sec3.galois": ("gamma_lambda, gamma_mu commute, have order 3 and generate Gamma = mu_3^2", _galois),
    "sec3.incidence": ("the 27 transcribed lines form the 27-line incidence graph", _incidence),
    "sec3.lines_on_cubic": ("27 lines lie on lambda x^3 + lambda^2 y^3 + mu z^3 + mu^2 t^3 = 0", _lines_on_cubic),
    "sec3.rank1": ("rk Pic^{<sigma_3>} = 1", _rank1),
    "sec3.rank3": ("rk Pic^Gamma = 3 (lower bound 7-2-2)", _rank3),
    "sec4.ga23": ("configuration (9_4, 12_3) with automorphism group GA_2(F_3) of order 432", _ga23),
    "sec5.heisenberg": ("H_3: order 27, exponent 3, subgroups avoiding the center are abelian", _heisenberg),
    "sec5.sylow": ("3-Sylow Delta of W(E_6) = mu_3^3 x| mu_3, center mu_3, commuting subgroups abelian", _sylow),
    "sec6.hexagon": ("hexagon symmetry group S_3 x mu_2 with central z swapping the disjoint triples", _hexagon),
    "weyl.census": ("order-3 elements of W(E_6) are A_2 / A_2^2 / A_2^3 by fixed rank 5 / 3 / 1", _weyl_census),
    "weyl.order": ("W(E_6) generated by 6 simple reflections acts faithfully on 27 lines, order 51840", _weyl_order),
}


def run_claim(claim_id: str, opts: dict | None = None) -> Certificate:
    if claim_id not in CLAIMS:
        raise KeyError(claim_id)
    anchor, fn = CLAIMS[claim_id]
    t0 = time.perf_counter()
    try:
        ok, witness, stats = fn(opts or {})
    except Exception as exc:  # reported, not raised: one broken check must not hide the rest
        stats = {"elapsed_ms": round(1000 * (time.perf_counter() - t0), 1)}
        return Certificate(claim_id, anchor, ERROR, {"exception": f"{type(exc).__name__}: {exc}"}, stats)
    stats = dict(stats)
    stats["elapsed_ms"] = round(1000 * (time.perf_counter() - t0), 1)
    if ok:
        return Certificate(claim_id, anchor, VERIFIED, None, stats)
    return Certificate(claim_id, anchor, REFUTED, witness, stats)


def run(claim: str = "all", opts: dict | None = None) -> list[Certificate]:
    ids = sorted(CLAIMS) if claim == "all" else [claim]
    return [run_claim(c, opts) for c in ids]


def report_dict(certs: list[Certificate]) -> dict:
    return {"version": __version__, "claims": [c.to_dict() for c in sorted(certs, key=lambda c: c.claim_id)]}


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def mask_stats(report: dict) -> dict:
    """Copy of a report with every ``stats`` field blanked, for determinism checks."""
    out = json.loads(json.dumps(report))
    for c in out.get("claims", []):
        c["stats"] = None
    return out


def summary(certs: list[Certificate]) -> str:
    width = max(len(c.claim_id) for c in certs)
    lines = []
    for c in certs:
        ms = c.stats.get("elapsed_ms", 0)
        lines.append(f"{c.claim_id:<{width}}  {c.verdict:<8}  {ms:>9.1f} ms  {c.paper_anchor}")
    n_ok = sum(c.verdict == VERIFIED for c in certs)
    lines.append(f"{n_ok}/{len(certs)} claims verified")
    return "\n".join(lines)


def census_report(workers: int = 1) -> dict:
    return {"version": __version__, "target": "w_e6_order3", "types": weyl.order3_census(workers=workers)}


def census_table(rep: dict) -> str:
    rows = [f"{'type':<10} {'count':>6} {'fixed_lines':>12} {'fixed_rank':>11}"]
    for t, r in rep["types"].items():
        rows.append(f"{t:<10} {r['count']:>6} {r['fixed_lines']:>12} {r['fixed_rank']:>11}")
    return "\n".join(rows)


# DOT export --------------------------------------------------------------------

def _dot(name: str, nodes: list[str], edges: list[tuple[str, str]], extra: dict[str, str] | None = None) -> str:
    out = [f"graph {name} {{"]
    for n in nodes:
        attr = f" [{extra[n]}]" if extra and n in extra else ""
        out.append(f'  "{n}"{attr};')
    for a, b in edges:
        out.append(f'  "{a}" -- "{b}";')
    out.append("}")
    return "\n".join(out) + "\n"


def graph_dot(which: str) -> str:
    if which == "lines27":
        ls = cubic.build_lines()
        names = [f"l{f}_{i}{j}" for f, i, j in (ln.label for ln in ls)]
        meet = cubic.incidence()
        edges = [(names[i], names[j]) for i in range(27) for j in range(i + 1, 27) if meet[i, j]]
        return _dot("lines27", names, edges)
    if which == "hexagon":
        cs, adj = dp6.hexagon()
        names = ["E1", "E2", "E3", "L-E1-E2", "L-E1-E3", "L-E2-E3"]
        edges = [(names[i], names[j]) for i in range(6) for j in range(i + 1, 6) if adj[i, j]]
        return _dot("hexagon", names, edges)
    if which == "ag23":
        pts = [f"p{u}{v}" for u, v in ag23.POINTS]
        ls = ag23.configuration_lines()
        lnames = [f"line{k}" for k in range(len(ls))]
        edges = [(pts[p], lnames[k]) for k, l in enumerate(ls) for p in l]
        shapes = {n: "shape=box" for n in lnames}
        return _dot("ag23", pts + lnames, edges, shapes)
    raise ValueError(f"unknown graph {which!r}")


GRAPHS = ("lines27", "hexagon", "ag23")


def export_graph(which: str, path: str | Path) -> Path:
    text = graph_dot(which)
    path = Path(path)
    path.write_text(text, encoding="utf-8")
    return path
