"""Connected dominating sets whose induced structure stays path-bounded.

The centerpiece is :func:`bounded_cds`.  Starting from any connected
dominating set it alternates two moves:

* strip vertices one at a time until the set is minimal, and
* if the remainder does not induce a path, swap a private neighbor of some
  removable vertex in and a later removable vertex out, whenever the swap
  leaves a connected dominating set.

Progress is measured by a strict order on (size, weight) pairs: smaller sets
first, then larger weight.  A vertex's weight is the length of the pendant
chain hanging off it inside the induced subgraph, so weight rewards sets
that look more and more like long paths.  The order's height is quadratic in
the set size, which bounds the number of iterations by a cubic polynomial
and makes the loop's hard cap a genuine internal-error check rather than a
tunable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import (
    DisconnectedGraphError,
    Graph,
    InternalInvariantError,
    _bits,
    _connected_in,
    _is_cds,
    _require_connected,
    _to_mask,
    cds_status,
)


class NotCdsError(ValueError):
    """The given set is not a connected dominating set.  Carries the check."""

    def __init__(self, status):
        missing = (
            f"vertex {status.first_undominated} undominated"
            if not status.dominating
            else "induced subgraph disconnected"
        )
        super().__init__(f"not a connected dominating set: {missing}")
        self.status = status


@dataclass(frozen=True)
class Substitution:
    """One accepted swap: ``added`` (a private neighbor of ``anchor``) joins
    the set, ``removed`` leaves it."""

    anchor: int
    added: int
    removed: int


@dataclass(frozen=True)
class TraceRecord:
    """Snapshot of one outer iteration: the minimal set's size and weight,
    plus the swap it accepted (None in the final iteration)."""

    size: int
    weight: int
    swap: Substitution | None


@dataclass(frozen=True)
class RunTrace:
    records: tuple[TraceRecord, ...]

    @property
    def iterations(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class CdsState:
    """A connected dominating set with its derived quantities."""

    vertices: frozenset[int]
    weights: Mapping[int, int]
    total_weight: int
    non_cutting: frozenset[int]


def minimal_cds(
    g: Graph, y: Iterable[int], order: Sequence[int] | None = None
) -> frozenset[int]:
    """Shrink the CDS ``y`` to a minimal one by single-vertex removals.

    One pass over ``order`` (default: ascending ids; ids outside ``y`` are
    skipped); a vertex is dropped iff the remainder is still a CDS.  One pass
    suffices: a set that stops dominating, or splits, cannot recover by
    removing more vertices, so every skipped vertex stays unremovable.
    """
    ymask = _to_mask(g, y)
    status = cds_status(g, _bits(ymask))
    if not status.is_cds:
        raise NotCdsError(status)
    return frozenset(_bits(_minimal_pass(g, ymask, order)))


def _minimal_pass(g: Graph, ymask: int, order: Sequence[int] | None = None) -> int:
    # One pass suffices: once removing v fails on the current set, it fails
    # on every subset of it (an undominated vertex stays undominated, and a
    # connectivity split forces any dominating subset to straddle it).
    for v in range(g.n) if order is None else order:
        bit = 1 << v
        if ymask & bit:
            cand = ymask ^ bit
            if _is_cds(g, cand):
                ymask = cand
    return ymask


def non_cutting(g: Graph, x: Iterable[int]) -> frozenset[int]:
    """Vertices whose removal keeps the subgraph induced on ``x`` connected.

    A singleton's vertex counts as non-cutting (removal leaves nothing to
    disconnect).
    """
    xmask = _to_mask(g, x)
    return frozenset(_bits(_non_cutting_mask(g, xmask)))


def _non_cutting_mask(g: Graph, xmask: int) -> int:
    out = 0
    for v in _bits(xmask):
        rest = xmask ^ (1 << v)
        if rest == 0 or _connected_in(g, rest):
            out |= 1 << v
    return out


def vertex_weight(g: Graph, x: Iterable[int], v: int) -> int:
    """Length of the pendant chain starting at ``v`` in the subgraph on ``x``.

    From a degree-1 vertex, walk through degree-2 vertices and count the
    steps taken, including the final step onto the first vertex of other
    degree.  Vertices of degree 0 or >= 2 weigh 0; so does every vertex of a
    cycle, which is what lets cycles act as weight sinks.
    """
    xmask = _to_mask(g, x)
    if not xmask >> v & 1:
        raise ValueError(f"vertex {v} is not in the given set")
    if xmask != 0 and not _connected_in(g, xmask):
        raise ValueError("the given set must induce a connected subgraph")
    return _vertex_weight_mask(g, xmask, v)


def _vertex_weight_mask(g: Graph, xmask: int, v: int) -> int:
    adj = g.adj_mask
    nbrs = adj[v] & xmask
    if nbrs.bit_count() != 1:
        return 0
    prev, cur = v, nbrs.bit_length() - 1
    steps = 1
    while True:
        around = adj[cur] & xmask
        if around.bit_count() != 2:
            return steps
        nxt = (around ^ (1 << prev)).bit_length() - 1
        prev, cur = cur, nxt
        steps += 1
        if steps > g.n:
            raise InternalInvariantError("pendant-chain walk failed to terminate")


def set_weight(g: Graph, x: Iterable[int]) -> int:
    """Sum of squared vertex weights over ``x``."""
    xmask = _to_mask(g, x)
    if xmask != 0 and not _connected_in(g, xmask):
        raise ValueError("the given set must induce a connected subgraph")
    return _set_weight_mask(g, xmask)


def _set_weight_mask(g: Graph, xmask: int) -> int:
    total = 0
    for v in _bits(xmask):
        w = _vertex_weight_mask(g, xmask, v)
        total += w * w
    return total


def poset_less(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Strict progress order on (size, weight): smaller size wins, then
    larger weight.  Each substitution round strictly ascends this order."""
    return a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


def private_neighbor(g: Graph, x: Iterable[int], v: int) -> int | None:
    """Smallest vertex outside ``x`` adjacent to ``v`` and nothing else in
    ``x``; None when no such vertex exists."""
    xmask = _to_mask(g, x)
    if not xmask >> v & 1:
        raise ValueError(f"vertex {v} is not in the given set")
    return _private_neighbor_mask(g, xmask, v)


def _private_neighbor_mask(g: Graph, xmask: int, v: int) -> int | None:
    want = 1 << v
    outside = ~xmask & ((1 << g.n) - 1)
    for y in _bits(outside):
        if g.adj_mask[y] & xmask == want:
            return y
    return None


def substitute(
    g: Graph, x: Iterable[int], y: int, v: int
) -> frozenset[int] | None:
    """The set with ``y`` swapped in and ``v`` out, if it is still a CDS."""
    xmask = _to_mask(g, x)
    if xmask >> y & 1:
        raise ValueError(f"vertex {y} is already in the set")
    if not xmask >> v & 1:
        raise ValueError(f"vertex {v} is not in the set")
    cand = (xmask | 1 << y) & ~(1 << v)
    return frozenset(_bits(cand)) if _is_cds(g, cand) else None


def is_induced_path(g: Graph, x: Iterable[int]) -> bool:
    """Does ``x`` induce a path?  Singletons and connected pairs count;
    the empty set does not."""
    xmask = _to_mask(g, x)
    return _is_induced_path_mask(g, xmask)


def _is_induced_path_mask(g: Graph, xmask: int) -> bool:
    t = xmask.bit_count()
    if t == 0:
        return False
    if not _connected_in(g, xmask):
        return False
    if t <= 2:
        return True
    ones = twos = 0
    for v in _bits(xmask):
        d = (g.adj_mask[v] & xmask).bit_count()
        if d == 1:
            ones += 1
        elif d == 2:
            twos += 1
    return ones == 2 and ones + twos == t


def cds_state(g: Graph, x: Iterable[int]) -> CdsState:
    """Bundle a CDS with its weights, total weight, and non-cutting set."""
    xmask = _to_mask(g, x)
    status = cds_status(g, _bits(xmask))
    if not status.is_cds:
        raise NotCdsError(status)
    weights = {v: _vertex_weight_mask(g, xmask, v) for v in _bits(xmask)}
    return CdsState(
        vertices=frozenset(weights),
        weights=weights,
        total_weight=sum(w * w for w in weights.values()),
        non_cutting=frozenset(_bits(_non_cutting_mask(g, xmask))),
    )


def bounded_cds(
    g: Graph, start: Iterable[int] | None = None
) -> tuple[frozenset[int], RunTrace]:
    """Compute a minimal CDS that induces a path or a path-free subgraph.

    Repeatedly: shrink the working set to a minimal CDS; stop if it induces
    a path; otherwise rank its non-cutting vertices by weight (heaviest
    first, ties to smaller id) and scan ordered pairs for an accepted swap
    of a private neighbor in and a lighter non-cutting vertex out.  No swap
    accepted means the set is returned as-is.

    ``start`` (default: all vertices) must be a CDS; the run is fully
    deterministic, so equal inputs give equal traces.
    """
    if g.n < 1:
        raise ValueError("the graph must have at least one vertex")
    _require_connected(g)
    if start is None:
        ymask = (1 << g.n) - 1
    else:
        ymask = _to_mask(g, start)
        status = cds_status(g, _bits(ymask))
        if not status.is_cds:
            raise NotCdsError(status)

    # Strict progress in the (size, weight) order caps the iteration count;
    # hitting the cap is impossible unless the swap acceptance test is wrong.
    max_iterations = g.n * (4 * g.n * g.n + 1) + 1
    records: list[TraceRecord] = []

    while True:
        xmask = _minimal_pass(g, ymask)
        size = xmask.bit_count()
        weight = _set_weight_mask(g, xmask)

        if _is_induced_path_mask(g, xmask):
            records.append(TraceRecord(size, weight, None))
            return frozenset(_bits(xmask)), RunTrace(tuple(records))

        nc = _non_cutting_mask(g, xmask)
        ranked = sorted(
            _bits(nc), key=lambda v: (-_vertex_weight_mask(g, xmask, v), v)
        )

        swap = None
        for i, anchor in enumerate(ranked):
            added = _private_neighbor_mask(g, xmask, anchor)
            if added is None:
                raise InternalInvariantError(
                    f"non-cutting vertex {anchor} of a minimal CDS "
                    f"has no private neighbor"
                )
            grown = xmask | 1 << added
            for removed in ranked[i + 1:]:
                cand = grown & ~(1 << removed)
                if _is_cds(g, cand):
                    swap = Substitution(anchor, added, removed)
                    ymask = cand
                    break
            if swap is not None:
                break

        records.append(TraceRecord(size, weight, swap))
        if swap is None:
            return frozenset(_bits(xmask)), RunTrace(tuple(records))
        if len(records) > max_iterations:
            raise InternalInvariantError(
                f"substitution loop exceeded {max_iterations} iterations"
            )
