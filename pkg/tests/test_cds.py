"""The CDS engine: minimal pass, weights, substitution, and the full loop."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathbound import (
    DisconnectedGraphError,
    Graph,
    NotCdsError,
    Substitution,
    bounded_cds,
    cds_state,
    cds_status,
    gen_gnp,
    gen_path,
    gen_star,
    is_induced_path,
    min_k_pfree,
    minimal_cds,
    non_cutting,
    poset_less,
    private_neighbor,
    set_weight,
    substitute,
    vertex_weight,
)
from pathbound.corpus import (
    EXAMPLE13_IMPROVED,
    EXAMPLE13_START,
    example13,
)
from pathbound.graphs import _first_undominated, _mask_of
from pathbound.oracle import _search_induced_path


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_minimal_cds_star_center():
    assert minimal_cds(gen_star(5), range(5)) == frozenset({0})


def test_minimal_cds_cycle4():
    assert minimal_cds(cycle(4), range(4)) == frozenset({2, 3})


def test_minimal_cds_path5():
    assert minimal_cds(gen_path(5), range(5)) == frozenset({1, 2, 3})


def test_minimal_cds_respects_order():
    assert minimal_cds(cycle(4), range(4), order=[3, 2, 1, 0]) == frozenset(
        {0, 1}
    )


def test_minimal_cds_result_is_minimal():
    for g in (cycle(6), gen_path(7), complete(5), example13()):
        x = minimal_cds(g, range(g.n))
        assert cds_status(g, x).is_cds
        for v in x:
            assert not cds_status(g, x - {v}).is_cds


def test_minimal_cds_rejects_non_cds():
    with pytest.raises(NotCdsError) as exc:
        minimal_cds(gen_path(5), {0, 1})
    assert "undominated" in str(exc.value)
    with pytest.raises(NotCdsError) as exc:
        minimal_cds(gen_path(5), {0, 1, 3, 4})
    assert "connected" in str(exc.value)


def test_non_cutting():
    assert non_cutting(gen_path(4), {0, 1, 2, 3}) == frozenset({0, 3})
    assert non_cutting(cycle(4), {0, 1, 2, 3}) == frozenset({0, 1, 2, 3})
    assert non_cutting(gen_path(3), {1}) == frozenset({1})


def test_weights_on_path_interior():
    g = gen_path(5)
    x = {1, 2, 3}
    assert vertex_weight(g, x, 1) == 2
    assert vertex_weight(g, x, 2) == 0
    assert vertex_weight(g, x, 3) == 2
    assert set_weight(g, x) == 8


def test_weights_on_example():
    g = example13()
    weights = {v: vertex_weight(g, EXAMPLE13_START, v) for v in EXAMPLE13_START}
    assert weights == {1: 2, 3: 0, 4: 0, 5: 0, 6: 0, 7: 0, 8: 0, 10: 1}
    assert set_weight(g, EXAMPLE13_START) == 5
    assert set_weight(g, EXAMPLE13_IMPROVED) == 17


def test_vertex_weight_validates_membership():
    with pytest.raises(ValueError):
        vertex_weight(gen_path(5), {1, 2, 3}, 0)


def test_poset_order():
    # a smaller set always ranks higher; among equal sizes, lighter wins
    assert poset_less((5, 9), (4, 100))
    assert poset_less((5, 9), (5, 10))
    assert not poset_less((5, 9), (5, 9))
    assert not poset_less((4, 100), (5, 9))


def test_private_neighbor():
    assert private_neighbor(cycle(4), {0, 1}, 0) == 3
    assert private_neighbor(cycle(4), {0, 1}, 1) == 2
    assert private_neighbor(gen_path(4), {1, 2}, 1) == 0
    assert private_neighbor(complete(4), {0, 1}, 0) is None


def test_substitute_on_cycle():
    got = substitute(cycle(6), {2, 3, 4, 5}, y=1, v=5)
    assert got == frozenset({1, 2, 3, 4})
    # removing an interior vertex instead leaves the set disconnected
    assert substitute(cycle(6), {2, 3, 4, 5}, y=1, v=4) is None


def test_substitute_validates_arguments():
    with pytest.raises(ValueError):
        substitute(cycle(6), {2, 3, 4, 5}, y=3, v=5)
    with pytest.raises(ValueError):
        substitute(cycle(6), {2, 3, 4, 5}, y=1, v=0)


def test_is_induced_path():
    g = gen_path(5)
    assert is_induced_path(g, {1, 2, 3})
    assert is_induced_path(g, {0})
    assert is_induced_path(g, {0, 1})
    assert not is_induced_path(g, set())
    assert not is_induced_path(g, {0, 2})
    assert not is_induced_path(cycle(6), set(range(6)))


def test_cds_state_consistency():
    g = example13()
    state = cds_state(g, EXAMPLE13_START)
    assert state.vertices == EXAMPLE13_START
    assert state.total_weight == 5
    assert state.total_weight == sum(w * w for w in state.weights.values())
    assert state.non_cutting == non_cutting(g, EXAMPLE13_START)


def test_bounded_cds_path():
    x, trace = bounded_cds(gen_path(5))
    assert x == frozenset({1, 2, 3})
    assert trace.iterations == 1
    assert trace.records[0].swap is None


def test_bounded_cds_cycle():
    x, trace = bounded_cds(cycle(6))
    assert x == frozenset({2, 3, 4, 5})
    assert is_induced_path(cycle(6), x)


def test_bounded_cds_star():
    x, trace = bounded_cds(gen_star(6))
    assert x == frozenset({0})
    assert trace.records[0].weight == 0


def test_bounded_cds_from_start_set():
    g = example13()
    x, trace = bounded_cds(g, start=EXAMPLE13_START)
    assert x == EXAMPLE13_IMPROVED
    assert [(r.size, r.weight) for r in trace.records] == [(8, 5), (8, 17)]
    assert trace.records[0].swap == Substitution(anchor=1, added=0, removed=4)
    assert trace.records[1].swap is None


def test_bounded_cds_rejects_bad_inputs():
    with pytest.raises(ValueError):
        bounded_cds(Graph(0, []))
    with pytest.raises(DisconnectedGraphError):
        bounded_cds(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(NotCdsError):
        bounded_cds(gen_path(5), start={0, 1})


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10**6))
def test_bounded_cds_contract(n, seed):
    g = gen_gnp(n, 0.45, seed) if n > 1 else Graph(1, [])
    x, trace = bounded_cds(g)

    assert cds_status(g, x).is_cds
    xmask = _mask_of(x)
    for v in x:
        assert not cds_status(g, x - {v}).is_cds

    sizes_weights = [(r.size, r.weight) for r in trace.records]
    for before, after in zip(sizes_weights, sizes_weights[1:]):
        assert poset_less(before, after)
    assert trace.iterations <= g.n * (4 * g.n * g.n + 1) + 1
    for r in trace.records:
        assert r.weight <= 4 * r.size * r.size

    k = min_k_pfree(g)
    t = k - 2
    witness = _search_induced_path(g, xmask, t)
    if len(witness) >= t:
        assert is_induced_path(g, x) and len(x) == t
