"""Graph construction, domination/connectivity predicates, induced subgraphs."""

import pytest

from pathbound import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    build_graph,
    cds_status,
    induced_subgraph,
)
from pathbound.graphs import _components, _require_connected


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.n == 2 and g.m == 1
    assert g.neighbors(0) == (1,)
    assert g.has_edge(0, 1) and g.has_edge(1, 0)


def test_path_degree_sequence():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert [g.degree(v) for v in g.vertices()] == [1, 2, 2, 1]
    assert g.edges() == ((0, 1), (1, 2), (2, 3))


def test_duplicate_edges_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.m == 2
    assert g.edges() == ((0, 1), (1, 2))


def test_rejects_self_loop():
    with pytest.raises(GraphError) as exc:
        build_graph(3, [(1, 1)])
    assert "(1, 1)" in str(exc.value)


def test_rejects_out_of_range():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(2, [(-1, 0)])


def test_equality_and_hash():
    a = build_graph(3, [(0, 1), (1, 2)])
    b = build_graph(3, [(1, 2), (0, 1)])
    c = build_graph(3, [(0, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != c


def test_cds_status_on_path():
    g = path(4)
    assert cds_status(g, {1, 2}).is_cds
    st = cds_status(g, {0})
    assert not st.dominating and st.first_undominated == 2
    st = cds_status(g, {0, 3})
    assert st.dominating and not st.connected and not st.is_cds


def test_cds_status_empty_set():
    g = path(3)
    st = cds_status(g, set())
    assert not st.dominating and st.first_undominated == 0


def test_cds_status_rejects_bad_vertex():
    with pytest.raises(GraphError):
        cds_status(path(3), {5})


def test_induced_cycle_arc_is_path():
    sub, mapping = induced_subgraph(cycle(6), {0, 1, 2, 3})
    assert mapping == (0, 1, 2, 3)
    assert sub == path(4)


def test_induced_empty():
    sub, mapping = induced_subgraph(path(4), set())
    assert sub.n == 0 and sub.m == 0 and mapping == ()


def test_induced_relabels():
    sub, mapping = induced_subgraph(path(5), {1, 3, 4})
    assert mapping == (1, 3, 4)
    # only the 3-4 edge survives, relabeled to 1-2
    assert sub.edges() == ((1, 2),)


def test_components_ordering():
    g = Graph(5, [(1, 3), (0, 4)])
    comps = _components(g)
    assert comps == [0b10001, 0b01010, 0b00100]


def test_require_connected_names_two_sides():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError) as exc:
        _require_connected(g)
    assert exc.value.witness == (0, 2)
    _require_connected(path(4))
