import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from conftest import fixture_graph
from corpus import CYCLIC_FIXTURES, k5_pairs, octahedron_pairs
from oracles import brute_essential_connectivity, cyclic_cuts_of_size, naive_cyclic_connectivity
from permsnark.connectivity import (
    ConnectivityError,
    CutStructureError,
    cyclic_edge_connectivity,
    enumerate_small_cuts,
    essential_edge_connectivity,
    even_cut_parity_check,
    has_two_disjoint_circuits,
    is_cyclic_cut,
    verify_cut_structure,
)
from permsnark.construction import (
    RETAINED,
    PermutationGraph,
    all_skeleton_tables,
    assemble_H,
    build_block,
    canonical_anchor,
    contract_spokes,
    family_blocks,
    load_canonical_table,
    petersen,
)
from permsnark.factor import TwoFactor
from permsnark.named import aligned_spoke_graph, cycle_permutation_graph, k33, k4, k5, octahedron, petersen_graph

NEGATIVE_SEEDS = range(4)


def perm_graph(g, name=""):
    n = g.order // 2
    g.freeze()
    return PermutationGraph(g, TwoFactor(g, tuple(range(n)), tuple(range(n, 2 * n))), None, {"name": name})


def aligned_assembly(seed):
    sources = [perm_graph(aligned_spoke_graph(12, 4, seed), "aligned12"), petersen(), petersen(), petersen()]
    blocks = [build_block(canonical_anchor(q), RETAINED[i]) for i, q in enumerate(sources, start=1)]
    return assemble_H(blocks, load_canonical_table())


def boundary(g, side):
    side = set(side)
    return sorted(e for e in g.edges() if (g.endpoints(e)[0] in side) != (g.endpoints(e)[1] in side))


# -- cyclic edge connectivity ---------------------------------------------

@pytest.mark.parametrize("name", sorted(CYCLIC_FIXTURES))
def test_cyclic_connectivity_matches_frozen_oracle(name, expected):
    r = cyclic_edge_connectivity(fixture_graph(name), cap=6)
    assert r.value == expected["fixtures"][name]["cyclic_connectivity_cap6"]


@pytest.mark.parametrize("name", sorted(CYCLIC_FIXTURES))
def test_witness_is_a_genuine_cyclic_cut(name):
    g = fixture_graph(name)
    r = cyclic_edge_connectivity(g, cap=6)
    if r.value is None:
        assert r.witness is None and r.at_least == 6
        return
    w = r.witness
    assert len(w.edges) == r.value
    assert sorted(w.side_a + w.side_b) == g.vertices()
    assert boundary(g, w.side_a) == w.edges
    assert w.cyclic_a and w.cyclic_b
    assert is_cyclic_cut(g, w.edges)


@pytest.mark.parametrize("base", ["prism", "petersen"])
def test_subdivision_keeps_the_value(base):
    a = cyclic_edge_connectivity(fixture_graph(base)).value
    b = cyclic_edge_connectivity(fixture_graph(base + "_subdivided")).value
    assert a == b


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=3, max_value=7).flatmap(lambda n: st.permutations(list(range(n)))))
def test_cycle_permutation_graphs_against_naive_oracle(perm):
    g = cycle_permutation_graph(perm)
    r = cyclic_edge_connectivity(g, cap=6)
    assert r.value == naive_cyclic_connectivity(g.order, g.edge_pairs(), 6)
    # a side without a whole circuit must cut both circuits twice
    assert r.at_least >= min(4, len(perm))


def test_petersen_family_values(p10, h1):
    assert cyclic_edge_connectivity(p10.graph).value == 5
    assert cyclic_edge_connectivity(h1.graph).value == 5


def test_cap_reports_lower_bound(p10):
    r = cyclic_edge_connectivity(p10.graph, cap=4)
    assert r.value is None and r.at_least == 4 and str(r) == ">= 4"


def test_every_gluing_candidate_is_cyclically_four_connected(p10):
    blocks = family_blocks(p10)
    for t in all_skeleton_tables():
        h = assemble_H(blocks, t)
        assert cyclic_edge_connectivity(h.graph, cap=4).value is None


@pytest.mark.parametrize("graph", [k4, k33], ids=["k4", "k33"])
def test_undefined_without_two_disjoint_circuits(graph):
    g = graph()
    assert not has_two_disjoint_circuits(g)
    with pytest.raises(ConnectivityError):
        cyclic_edge_connectivity(g)


def test_prism_has_two_disjoint_circuits():
    assert has_two_disjoint_circuits(fixture_graph("prism"))


def test_connectivity_json():
    d = cyclic_edge_connectivity(petersen_graph()).to_json_dict()
    assert d["value"] == 5 and d["at_least"] == 5 and len(d["witness"]["edges"]) == 5


def test_deterministic_witness(h1):
    a = cyclic_edge_connectivity(h1.graph)
    b = cyclic_edge_connectivity(h1.graph)
    assert a.witness == b.witness and a.nodes == b.nodes


# -- essential connectivity of 4-regular graphs ---------------------------

def test_k5_essential(expected):
    r = essential_edge_connectivity(k5())
    assert r.value == expected["k5_essential"] == brute_essential_connectivity(*k5_pairs())
    assert r.value >= 6


def test_octahedron_essential(expected):
    assert essential_edge_connectivity(octahedron()).value == expected["octahedron_essential"]
    assert expected["octahedron_essential"] == brute_essential_connectivity(*octahedron_pairs())


def test_h1_contraction_is_essentially_six_connected(h1):
    t = contract_spokes(h1)
    assert essential_edge_connectivity(t.as_graph()).at_least >= 6


# small contractions are often multigraphs; those are skipped
@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(st.integers(min_value=7, max_value=10).flatmap(lambda n: st.permutations(list(range(n)))))
def test_essential_connectivity_against_brute_force(perm):
    n = len(perm)
    g = cycle_permutation_graph(perm).freeze()
    t = contract_spokes(PermutationGraph(g, TwoFactor(g, tuple(range(n)), tuple(range(n, 2 * n)))), strict=False)
    assume(t.is_simple)
    h = t.as_graph()
    r = essential_edge_connectivity(h, cap=8)
    want = brute_essential_connectivity(h.order, h.edge_pairs())
    assert r.value == (want if want < 8 else None)


def test_essential_cap_limit():
    with pytest.raises(ConnectivityError):
        essential_edge_connectivity(k5(), cap=9)


def test_essential_needs_four_regular(p10):
    with pytest.raises(ConnectivityError):
        essential_edge_connectivity(p10.graph)


def test_even_cut_parity(p10, h1):
    for pg in (p10, h1):
        rep = even_cut_parity_check(contract_spokes(pg))
        assert rep["all_even"] and rep["hamiltonian_circuits"]
        assert rep["cuts_checked"] > 0
        assert all(s % 2 == 0 for s in rep["sizes"])


def test_small_cut_enumeration_on_k5():
    cuts = enumerate_small_cuts(k5(), 7)
    # sides containing vertex 0 with one or two vertices: 1 + 4 + 6 (two-vertex sides as complements)
    assert sorted(len(c.edges) for c in cuts) == [4] * 5 + [6] * 10


# -- cut structure of cyclic 4-cuts ---------------------------------------

@pytest.mark.parametrize("seed", NEGATIVE_SEEDS)
def test_aligned_graph_cuts_match_oracle_and_structure(seed):
    pg = perm_graph(aligned_spoke_graph(12, 4, seed))
    g = pg.graph
    r = cyclic_edge_connectivity(g, cap=5, keep_all=True)
    assert r.value == 4
    found = {frozenset(w.edges) for w in r.all_cuts}
    assert found == cyclic_cuts_of_size(g.order, g.edge_pairs(), 4)
    for cut in found:
        rep = verify_cut_structure(pg, cut)
        assert rep.ok, rep
        assert not set(cut) & set(pg.spokes)


@pytest.mark.parametrize("seed", NEGATIVE_SEEDS)
def test_aligned_assemblies_cut_structure(seed):
    h = aligned_assembly(seed)
    assert h.order == 12 * 2 + 3 * 10 - 6
    r = cyclic_edge_connectivity(h.graph, cap=5, keep_all=True)
    assert r.value == 4 and r.all_cuts
    for w in r.all_cuts:
        rep = verify_cut_structure(h, w.edges)
        assert rep.ok and rep.to_json_dict()["ok"]


def test_non_cyclic_cut_rejected():
    pg = perm_graph(aligned_spoke_graph(12, 4, 0))
    g = pg.graph
    with pytest.raises(CutStructureError):
        verify_cut_structure(pg, g.incident(0) + [g.edge_between(5, 6)])


def test_small_graphs_rejected():
    pg = perm_graph(cycle_permutation_graph([0, 1, 2, 3]))
    with pytest.raises(CutStructureError):
        verify_cut_structure(pg, [0, 2, 4, 6])


def test_cut_through_a_spoke_rejected():
    # pentagonal ladder with a 2-factor of a 4-circuit and a 6-circuit; the
    # 6-circuit has a chord, so the "spokes" include circuit edges of a cyclic 4-cut
    g = cycle_permutation_graph([0, 1, 2, 3, 4]).freeze()
    f = TwoFactor(g, (0, 1, 6, 5), (2, 3, 4, 9, 8, 7))
    pg = PermutationGraph(g, f)
    cut = [g.edge_between(1, 2), g.edge_between(6, 7), g.edge_between(4, 0), g.edge_between(9, 5)]
    assert is_cyclic_cut(g, cut)
    with pytest.raises(CutStructureError, match="spoke"):
        verify_cut_structure(pg, cut)

