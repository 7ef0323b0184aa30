import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fixture_graph
from corpus import ALL_FIXTURES
from permsnark.factor import (
    FactorError,
    TwoFactor,
    canonical_cycle,
    find_permutation_2factors,
    perfect_matchings,
    trace_cycles,
    verify_permutation_structure,
)
from permsnark.graph import Graph, GraphError
from permsnark.named import cycle_permutation_graph, k33, k4, petersen_graph, prism

CUBIC = [n for n in sorted(ALL_FIXTURES) if "subdivided" not in n]


def test_petersen_standard_factor_passes():
    g = petersen_graph()
    rep = verify_permutation_structure(g, TwoFactor(g, (0, 1, 2, 3, 4), (5, 7, 9, 6, 8)))
    assert rep.ok
    assert rep.to_json_dict() == {
        "is_cubic": True, "is_2factor": True, "two_circuits": True,
        "chordless1": True, "chordless2": True, "spokes_matching": True, "ok": True,
    }


def test_k4_single_circuit_is_not_two_circuits():
    g = k4()
    rep = verify_permutation_structure(g, TwoFactor(g, (0, 1, 2, 3), ()))
    assert rep.is_2factor and not rep.two_circuits and not rep.ok


def test_prism_triangles_pass():
    g = prism()
    assert verify_permutation_structure(g, TwoFactor(g, (0, 1, 2), (3, 4, 5))).ok


def test_chord_is_detected():
    # the 6-circuit 0-1-2-5-4-3 of the prism has chords 0-2, 3-5
    g = prism()
    f = TwoFactor(g, (0, 1, 2, 5, 4, 3), ())
    rep = verify_permutation_structure(g, f)
    assert not rep.chordless1


def test_unknown_vertex_is_structural_error():
    with pytest.raises(FactorError):
        TwoFactor(prism(), (0, 1, 9), (3, 4, 5))


def test_other_host_is_rejected():
    f = TwoFactor(prism(), (0, 1, 2), (3, 4, 5))
    with pytest.raises(FactorError):
        verify_permutation_structure(prism(), f)


def test_canonical_rotation():
    assert canonical_cycle([3, 4, 0, 1, 2]) == (0, 1, 2, 3, 4)
    assert canonical_cycle([0, 4, 3, 2, 1]) == (0, 1, 2, 3, 4)
    g = petersen_graph()
    assert TwoFactor(g, (7, 9, 6, 8, 5), (4, 3, 2, 1, 0)).key() == TwoFactor(g, (0, 1, 2, 3, 4), (5, 7, 9, 6, 8)).key()


@pytest.mark.parametrize("name", CUBIC)
def test_perfect_matching_counts(name, expected):
    want = expected["fixtures"][name].get("perfect_matchings")
    if want is None:
        pytest.skip("oracle too slow at this size")
    assert len(perfect_matchings(fixture_graph(name))) == want


@pytest.mark.parametrize("name", CUBIC)
def test_permutation_2factor_counts(name, expected):
    want = expected["fixtures"][name].get("permutation_2factors")
    if want is None:
        pytest.skip("oracle too slow at this size")
    assert len(find_permutation_2factors(fixture_graph(name))) == want


def test_petersen_has_six(expected):
    assert len(find_permutation_2factors(petersen_graph())) == 6
    assert find_permutation_2factors(k4()) == []
    assert find_permutation_2factors(k33()) == []


def test_limit_is_respected():
    assert len(find_permutation_2factors(petersen_graph(), limit=2)) == 2


def test_non_cubic_is_rejected():
    with pytest.raises(GraphError):
        find_permutation_2factors(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


@pytest.mark.parametrize("name", CUBIC)
def test_complement_duality(name):
    g = fixture_graph(name)
    found = {f.key() for f in find_permutation_2factors(g)}
    from_matchings = set()
    for m in perfect_matchings(g):
        cycles = trace_cycles(g, [e for e in g.edges() if e not in m])
        if len(cycles) == 2 and verify_permutation_structure(g, TwoFactor(g, *cycles)).ok:
            from_matchings.add(TwoFactor(g, *cycles).key())
    assert found == from_matchings


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=3, max_value=12).flatmap(lambda n: st.permutations(list(range(n)))))
def test_cycle_permutation_graphs_balance(perm):
    n = len(perm)
    g = cycle_permutation_graph(perm)
    f = TwoFactor(g, tuple(range(n)), tuple(range(n, 2 * n)))
    rep = verify_permutation_structure(g, f)
    assert rep.ok
    assert len(f.spokes) == g.order // 2
    assert len(f.circuit1) == len(f.circuit2) == g.order // 2
