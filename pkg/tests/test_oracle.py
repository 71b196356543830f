"""Brute-force reference procedures: induced paths, minimum CDS structure,
the subgraph characterization, and hypergraph 2-coloring by enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathbound import (
    CapExceededError,
    Graph,
    Hypergraph,
    brute_2color,
    check_cds_characterization,
    check_minimum_cds_structure,
    enumerate_minimum_cds,
    gen_gnp,
    gen_path,
    has_induced_cycle,
    has_induced_path,
    iso_to_path_or_cycle,
    longest_induced_path,
    min_k_pfree,
)
from pathbound.oracle import Shape


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def assert_induced_path(g, vertices):
    vs = list(vertices)
    assert len(set(vs)) == len(vs)
    for i, u in enumerate(vs):
        for j in range(i + 1, len(vs)):
            expected = j == i + 1
            assert g.has_edge(u, vs[j]) == expected, (vs, u, vs[j])


def test_longest_path_on_cycle5():
    w = longest_induced_path(cycle(5))
    assert w.length == 4
    assert_induced_path(cycle(5), w.vertices)


def test_longest_path_on_path7():
    w = longest_induced_path(gen_path(7))
    assert w.length == 7
    assert w.vertices == (0, 1, 2, 3, 4, 5, 6)


def test_longest_path_on_k4():
    assert longest_induced_path(complete(4)).length == 2


def test_longest_path_cap():
    with pytest.raises(CapExceededError) as exc:
        longest_induced_path(gen_path(25))
    assert "cap=" in str(exc.value)
    assert longest_induced_path(gen_path(25), cap=25).length == 25


def test_has_induced_path_exact_size():
    w = has_induced_path(cycle(6), 5)
    assert w is not None and w.length == 5
    assert_induced_path(cycle(6), w.vertices)
    assert has_induced_path(cycle(6), 6) is None


def test_min_k_values():
    assert min_k_pfree(complete(3)) == 3
    assert min_k_pfree(cycle(6)) == 6
    assert min_k_pfree(Graph(1, [])) == 3
    assert min_k_pfree(gen_path(7)) == 8


def test_iso_shapes():
    p4 = gen_path(4)
    assert iso_to_path_or_cycle(p4, {0, 1, 2, 3}) == Shape("path", 4)
    assert iso_to_path_or_cycle(p4, {0}) == Shape("path", 1)
    assert iso_to_path_or_cycle(p4, {0, 2}) == Shape("neither", 2)
    assert iso_to_path_or_cycle(cycle(5), {0, 1, 2, 3, 4}) == Shape("cycle", 5)
    assert iso_to_path_or_cycle(complete(4), {0, 1, 2, 3}) == Shape("neither", 4)


def test_induced_cycle_search():
    assert has_induced_cycle(cycle(6), 6) == frozenset(range(6))
    assert has_induced_cycle(cycle(6), 4) is None
    assert has_induced_cycle(gen_path(6), 4) is None
    assert has_induced_cycle(complete(4), 3) == frozenset({0, 1, 2})


def test_minimum_cds_enumeration():
    arcs = enumerate_minimum_cds(cycle(6))
    assert len(arcs) == 6 and all(len(x) == 4 for x in arcs)
    assert frozenset({0, 1, 2, 3}) in arcs
    assert enumerate_minimum_cds(gen_path(6)) == [frozenset({1, 2, 3, 4})]
    assert enumerate_minimum_cds(complete(4)) == [
        frozenset({v}) for v in range(4)
    ]


def test_minimum_cds_cap():
    with pytest.raises(CapExceededError):
        enumerate_minimum_cds(gen_path(17))


def test_minimum_structure_check():
    assert check_minimum_cds_structure(cycle(6)).passed
    assert check_minimum_cds_structure(gen_path(6)).passed
    assert check_minimum_cds_structure(complete(4)).passed


def test_characterization_directions():
    # no induced 6-vertex path in C_6, so the subgraph property must hold
    assert check_cds_characterization(cycle(6), 6).passed
    # P_6 contains one, and the full vertex set is the offending subgraph
    report = check_cds_characterization(gen_path(6), 6)
    assert not report.passed
    assert report.counterexample.vertices == frozenset(range(6))
    assert not check_cds_characterization(cycle(6), 5).passed


def test_characterization_rejects_small_k():
    with pytest.raises(ValueError):
        check_cds_characterization(cycle(6), 3)


def test_brute_2color():
    assert brute_2color(Hypergraph(2, (frozenset({0, 1}),))) == (
        frozenset({0}),
        frozenset({1}),
    )
    triangle = Hypergraph(
        3, (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 0}))
    )
    assert brute_2color(triangle) is None
    assert brute_2color(Hypergraph(1, ())) is None
    assert brute_2color(Hypergraph(2, ())) == (frozenset({0}), frozenset({1}))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**6))
def test_longest_path_witness_is_tight(n, seed):
    g = gen_gnp(n, 0.4, seed)
    w = longest_induced_path(g)
    assert_induced_path(g, w.vertices)
    assert has_induced_path(g, w.length) is not None
    assert has_induced_path(g, w.length + 1) is None
