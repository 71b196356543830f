"""The hypergraph 2-coloring solver and its structural helpers."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathbound import (
    Colorable,
    Hypergraph,
    HypergraphError,
    Infeasible,
    PreconditionViolated,
    brute_2color,
    build_hypergraph,
    clutter_reduce,
    dominating_proper_subset,
    find_universal_edge,
    has_induced_path,
    incidence_graph,
    iso_to_path_or_cycle,
    two_color_p7,
    verify_coloring,
)
from pathbound.corpus import (
    COMMON_VERTEX_GADGET,
    TRIANGLE_HYPERGRAPH,
    TRIPLE_OVERLAP_GADGET,
)


def hg(nv, *edges):
    return build_hypergraph(nv, edges)


def sides(outcome):
    assert isinstance(outcome, Colorable)
    return {outcome.a, outcome.b}


def test_build_validates_range():
    with pytest.raises(HypergraphError):
        build_hypergraph(3, [{0, 3}])
    with pytest.raises(HypergraphError):
        build_hypergraph(-1, [])


def test_incidence_shapes():
    one = incidence_graph(hg(2, {0, 1}))
    assert iso_to_path_or_cycle(one.graph, range(one.graph.n)).kind == "path"
    assert one.graph.n == 3

    tri = incidence_graph(TRIANGLE_HYPERGRAPH)
    shape = iso_to_path_or_cycle(tri.graph, range(tri.graph.n))
    assert (shape.kind, shape.size) == ("cycle", 6)

    chain = incidence_graph(hg(4, {0, 1}, {1, 2}, {2, 3}))
    shape = iso_to_path_or_cycle(chain.graph, range(chain.graph.n))
    assert (shape.kind, shape.size) == ("path", 7)


def test_incidence_roles():
    view = incidence_graph(hg(3, {0, 1}, {1, 2}))
    assert view.nv == 3 and view.ne == 2
    assert view.edge_node(1) == 4
    assert view.role(2) == ("vertex", 2)
    assert view.role(3) == ("edge", 0)
    assert view.graph.has_edge(1, view.edge_node(0))
    assert not view.graph.has_edge(2, view.edge_node(0))


def test_clutter_reduce_drops_supersets():
    h = hg(4, {0, 1, 2}, {0, 1}, {2, 3}, {0, 1, 3})
    assert clutter_reduce(h).edges == (frozenset({0, 1}), frozenset({2, 3}))


def test_clutter_reduce_keeps_first_duplicate():
    h = hg(3, {0, 1}, {0, 1}, {1, 2})
    assert clutter_reduce(h).edges == (frozenset({0, 1}), frozenset({1, 2}))


def test_clutter_reduce_incomparable_untouched():
    h = hg(4, {0, 1}, {1, 2}, {2, 3})
    assert clutter_reduce(h).edges == h.edges


def test_universal_edge():
    assert find_universal_edge(hg(4, {0, 1}, {1, 2}, {2, 3})) == 1
    assert find_universal_edge(TRIANGLE_HYPERGRAPH) == 0
    assert find_universal_edge(hg(4, {0, 1}, {2, 3})) is None


def test_dominating_proper_subset():
    h = hg(4, {0, 1, 2}, {0, 3}, {1, 3})
    assert dominating_proper_subset(h, 0) == frozenset({0, 1})
    assert dominating_proper_subset(TRIANGLE_HYPERGRAPH, 0) is None


def test_verify_coloring_defects():
    h = hg(4, {0, 1}, {2, 3})
    assert verify_coloring(h, {0, 2}, {1, 3}).ok
    assert verify_coloring(h, {0, 9}, {1}).defect == "unknown-vertex"
    assert verify_coloring(h, {0, 1}, {1, 2, 3}).defect == "overlapping-sides"
    assert verify_coloring(h, {0}, {1, 2}).defect == "uncovered-vertices"
    assert verify_coloring(h, {0, 1, 2, 3}, set()).defect == "empty-side"
    check = verify_coloring(h, {0, 1}, {2, 3})
    assert check.defect == "monochromatic-edge" and check.edge == 0
    assert not check


def test_single_pair_edge():
    outcome = two_color_p7(hg(2, {0, 1}))
    assert sides(outcome) == {frozenset({0}), frozenset({1})}


def test_edgeless_instances():
    assert sides(two_color_p7(hg(2))) == {frozenset({0}), frozenset({1})}
    outcome = two_color_p7(hg(1))
    assert isinstance(outcome, Infeasible)
    assert outcome.certificate.kind == "no-bipartition"
    assert isinstance(two_color_p7(hg(0)), Infeasible)


def test_empty_and_singleton_certificates():
    outcome = two_color_p7(hg(2, {0, 1}, set()))
    assert isinstance(outcome, Infeasible)
    assert outcome.certificate.kind == "empty-edge"
    assert outcome.certificate.edge == 1

    outcome = two_color_p7(hg(3, {0, 1}, {2}))
    assert isinstance(outcome, Infeasible)
    assert outcome.certificate.kind == "singleton-edge"
    assert outcome.certificate.edge == 1


def test_triangle_gadget():
    outcome = two_color_p7(TRIANGLE_HYPERGRAPH)
    assert isinstance(outcome, Infeasible)
    cert = outcome.certificate
    assert cert.kind == "pair-exhausted"
    assert cert.edge == 2 and cert.vertex == 1
    assert brute_2color(TRIANGLE_HYPERGRAPH) is None


def test_common_vertex_gadget():
    outcome = two_color_p7(COMMON_VERTEX_GADGET)
    assert isinstance(outcome, Infeasible)
    cert = outcome.certificate
    assert (cert.kind, cert.edge, cert.vertex) == ("common-vertex", 0, 3)
    # the premise: every vertex of edge 0 is pinned to vertex 3 by a pair
    for x in COMMON_VERTEX_GADGET.edges[0]:
        assert frozenset({x, 3}) in COMMON_VERTEX_GADGET.edges
    assert brute_2color(COMMON_VERTEX_GADGET) is None


def test_triple_overlap_gadget():
    outcome = two_color_p7(TRIPLE_OVERLAP_GADGET)
    assert isinstance(outcome, Colorable)
    assert verify_coloring(TRIPLE_OVERLAP_GADGET, outcome.a, outcome.b).ok
    assert brute_2color(TRIPLE_OVERLAP_GADGET) is not None


def test_three_link_chain_colorable():
    h = hg(4, {0, 1}, {1, 2}, {2, 3})
    outcome = two_color_p7(h)
    assert sides(outcome) == {frozenset({0, 2}), frozenset({1, 3})}


def test_reduction_can_split_components():
    # After dropping the supersets, {0,1} and {2,3} sit in separate
    # incidence components and each is colored on its own.
    h = hg(4, {0, 1, 2}, {2, 3}, {0, 1, 3}, {0, 1}, {2, 3})
    outcome = two_color_p7(h)
    assert isinstance(outcome, Colorable)
    assert verify_coloring(h, outcome.a, outcome.b).ok


def test_four_link_chain_breaks_precondition():
    h = hg(5, {0, 1}, {1, 2}, {2, 3}, {3, 4})
    outcome = two_color_p7(h)
    assert isinstance(outcome, PreconditionViolated)
    witness = outcome.p7_witness
    assert witness is not None and len(witness) == 7
    view = incidence_graph(h)
    for i, u in enumerate(witness):
        for j in range(i + 1, len(witness)):
            assert view.graph.has_edge(u, witness[j]) == (j == i + 1)


def test_precondition_cap_suppresses_witness():
    h = hg(5, {0, 1}, {1, 2}, {2, 3}, {3, 4})
    outcome = two_color_p7(h, p7_cap=3)
    assert isinstance(outcome, PreconditionViolated)
    assert outcome.p7_witness is None


def test_incidence_p7_freeness_is_not_required_for_success():
    # the solver may still succeed off-class; it must never be wrong
    h = hg(4, {0, 1}, {1, 2}, {2, 3})
    assert has_induced_path(incidence_graph(h).graph, 7) is not None
    assert isinstance(two_color_p7(h), Colorable)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 8), st.integers(1, 6), st.integers(0, 10**6))
def test_solver_agrees_with_brute_force_everywhere(nv, k, seed):
    rng = random.Random(seed)
    edges = tuple(
        frozenset(rng.sample(range(nv), rng.randint(2, min(4, nv))))
        for _ in range(k)
    )
    h = Hypergraph(nv, edges)
    outcome = two_color_p7(h)
    if isinstance(outcome, PreconditionViolated):
        # permitted only when the incidence graph truly has an induced
        # 7-vertex path
        assert has_induced_path(incidence_graph(h).graph, 7) is not None
        return
    reference = brute_2color(h)
    if isinstance(outcome, Colorable):
        assert reference is not None
        assert verify_coloring(h, outcome.a, outcome.b).ok
    else:
        assert isinstance(outcome, Infeasible)
        assert reference is None
