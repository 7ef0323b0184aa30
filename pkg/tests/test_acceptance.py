"""Acceptance criteria, one test each.

Every test records a line ``criterion N: PASS|FAIL  <detail>`` in RESULTS;
conftest prints them in the terminal summary.  Time limits are asserted
alongside the exact values.
"""

import time

import pytest

from corpus import CYCLIC_FIXTURES
from oracles import naive_cyclic_connectivity, pcdc_multisets
from permsnark.cli import main
from permsnark.connectivity import cyclic_edge_connectivity, essential_edge_connectivity
from permsnark.construction import PermutationGraph, build_family, contract_spokes, family_blocks, petersen
from permsnark.cover import (
    UNSAT,
    ccd_search,
    find_any_cdc,
    find_cdc_containing,
    four_member_cdc,
    pcdc_enumerate,
    pendant_bracket_conditions,
    three_edge_coloring,
    two_regular_subgraphs,
)
from permsnark.factor import TwoFactor, verify_permutation_structure
from permsnark.graph import Graph, Subgraph, parse_graph6
from permsnark.named import k33, k4, k5, prism

RESULTS: dict[int, str] = {}


def record(number: int, ok: bool, detail: str, elapsed: float, limit: float | None) -> None:
    timing = f"{elapsed:.2f}s" + (f" (limit {limit:g}s)" if limit else "")
    passed = ok and (limit is None or elapsed < limit)
    RESULTS[number] = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}  [{timing}]"
    print(RESULTS[number])
    assert ok, detail
    if limit is not None:
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


def factor_subgraph(pg):
    return Subgraph(pg.graph, frozenset(pg.factor.edge_ids))


def test_criterion_1_family_orders(tmp_path):
    orders, worst = [], 0.0
    for n in (0, 1, 2):
        out = tmp_path / f"h{n}.g6"
        t0 = time.perf_counter()
        rc = main(["build", "--n", str(n), "--out", str(out)])
        worst = max(worst, time.perf_counter() - t0)
        g = parse_graph6(out.read_text(encoding="utf-8").strip())
        orders.append((rc, g.order, 10 + 24 * n))
    ok = all(rc == 0 and got == want for rc, got, want in orders)
    record(1, ok, f"orders {[o[1] for o in orders]} vs 10+24n {[o[2] for o in orders]}", worst, 1.0)


def test_criterion_2_h1_certification():
    t0 = time.perf_counter()
    h = build_family(1)
    g, f = h.graph, h.factor
    rep = verify_permutation_structure(g, f)
    shape = (len(f.circuit1), len(f.circuit2), len(f.spokes)) == (17, 17, 17)
    col = three_edge_coloring(g)
    lam = cyclic_edge_connectivity(g, cap=6)
    ok = g.is_cubic() and rep.ok and shape and col.status == UNSAT and lam.value == 5 and lam.cap == 6
    detail = f"cubic={g.is_cubic()} perm2f={rep.ok} circuits=17/17 colouring={col.status} lambda_c={lam}"
    record(2, ok, detail, time.perf_counter() - t0, 60.0)


def test_criterion_3_h1_no_cdc_with_factor():
    h = build_family(1)
    t0 = time.perf_counter()
    v = find_cdc_containing(h.graph, factor_subgraph(h), method="reduction")
    elapsed = time.perf_counter() - t0
    ok = v.status == UNSAT and v.extra["contracted_order"] == 17
    record(3, ok, f"{v.status} via reduction, 2^{v.extra['contracted_order']} pairings, nodes={v.nodes_expanded}",
           elapsed, 10.0)


def test_criterion_4_petersen_premises():
    t0 = time.perf_counter()
    p = petersen()
    col = three_edge_coloring(p.graph).status
    lam = cyclic_edge_connectivity(p.graph).value
    with_f = find_cdc_containing(p.graph, factor_subgraph(p)).status
    anyc = find_any_cdc(p.graph).status
    ok = (col, lam, with_f, anyc) == (UNSAT, 5, UNSAT, "SAT")
    record(4, ok, f"colouring={col} lambda_c={lam} cdc_with_F={with_f} any_cdc={anyc}", time.perf_counter() - t0, 5.0)


def test_criterion_5_bad_k5():
    t0 = time.perf_counter()
    t5 = contract_spokes(petersen())
    k5_edges = sorted(k5().edge_pairs())
    is_k5 = (t5.order, len(t5.edges)) == (5, 10) and sorted(tuple(sorted(e)) for e in t5.edges) == k5_edges
    v5 = ccd_search(t5).status
    t17 = contract_spokes(build_family(1))
    ess = essential_edge_connectivity(t17.as_graph(), cap=7)
    v17 = ccd_search(t17).status
    ok = is_k5 and v5 == UNSAT and t17.order == 17 and ess.at_least >= 6 and v17 == UNSAT
    detail = f"K5={is_k5} ccd={v5}; contracted H1 order={t17.order} essential={ess} ccd={v17}"
    record(5, ok, detail, time.perf_counter() - t0, 120.0)


def test_criterion_6_pcdc_blocks():
    t0 = time.perf_counter()
    total, good, complete = 0, 0, True
    for b in family_blocks(petersen()):
        sols = pcdc_enumerate(b)
        g, _vmap, emap = b.fragment.reindex()
        pend = [v for v in g.vertices() if g.is_pendant(v)]
        want = pcdc_multisets(g.order, g.edge_pairs(), pend, {emap[e] for e in b.a_edges})
        got = [tuple(sorted(tuple(sorted(emap[e] for e in m)) for m in s.members[1:])) for s in sols]
        complete &= set(got) == want and len(got) == len(want)
        total += len(sols)
        good += sum(pendant_bracket_conditions(b, s) == (True, True) for s in sols)
    ok = complete and total > 0 and good == total
    record(6, ok, f"complete={complete}, {good}/{total} PCDCs satisfy both bracket conditions",
           time.perf_counter() - t0, 60.0)


def test_criterion_7_four_member_covers():
    t0 = time.perf_counter()
    checked, bad = 0, []
    for name, graph in (("K4", k4), ("K33", k33), ("prism", prism)):
        g = graph()
        for d in two_regular_subgraphs(g):
            v = four_member_cdc(g, d)
            checked += 1
            if v.status != "SAT" or len(v.solution.members) > 4:
                bad.append(name)
    record(7, not bad and checked > 0, f"{checked - len(bad)}/{checked} subgraphs SAT with <= 4 members",
           time.perf_counter() - t0, 60.0)


def test_criterion_8_reduction_equivalence():
    t0 = time.perf_counter()
    g = prism().freeze()
    cases = [("prism", PermutationGraph(g, TwoFactor(g, (0, 1, 2), (3, 4, 5)))),
             ("petersen", petersen()), ("H1", build_family(1))]
    rows = []
    for name, pg in cases:
        direct = find_cdc_containing(pg.graph, factor_subgraph(pg), method="direct").status
        reduced = ccd_search(contract_spokes(pg, strict=False)).status
        rows.append((name, direct, reduced))
    ok = all(a == b for _n, a, b in rows)
    record(8, ok, ", ".join(f"{n}: {a}/{b}" for n, a, b in rows), time.perf_counter() - t0, None)


def test_criterion_9_naive_oracle():
    t0 = time.perf_counter()
    rows = []
    for name, (n, pairs) in sorted(CYCLIC_FIXTURES.items()):
        ours = cyclic_edge_connectivity(Graph.from_edges(n, pairs), cap=6).value
        rows.append((name, ours, naive_cyclic_connectivity(n, pairs, 6)))
    bad = [r for r in rows if r[1] != r[2]]
    record(9, not bad, f"{len(rows) - len(bad)}/{len(rows)} fixtures agree" + (f"; mismatches {bad}" if bad else ""),
           time.perf_counter() - t0, None)


@pytest.mark.longtest
def test_criterion_10_h2_long_tier():
    h = build_family(2)
    t0 = time.perf_counter()
    lam = cyclic_edge_connectivity(h.graph, cap=6)
    t_lam = time.perf_counter() - t0
    t1 = time.perf_counter()
    v = find_cdc_containing(h.graph, factor_subgraph(h))
    t_cdc = time.perf_counter() - t1
    ok = lam.value == 5 and v.status == UNSAT and t_lam < 600 and t_cdc < 1800
    record(10, ok, f"H2 lambda_c={lam} ({t_lam:.1f}s), cdc_with_F={v.status} ({t_cdc:.1f}s)", t_lam + t_cdc, 2400.0)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
