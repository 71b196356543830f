"""Small immutable undirected graphs with fast vertex-subset queries.

Vertices are the integers 0..n-1.  Every subset-level operation (domination,
connectivity, induced degrees) runs on Python-int bitmasks, which keeps the
exhaustive drivers in :mod:`pathbound.corpus` affordable without any
third-party dependency.  Public functions accept and return ordinary
``frozenset`` objects; masks stay internal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed graph construction input."""


class InternalInvariantError(RuntimeError):
    """A state the algorithms' own guarantees rule out was reached.

    Seeing this means a bug in this package, not bad input.
    """


class DisconnectedGraphError(ValueError):
    """Raised when an operation requires a connected graph.

    Carries two vertices from different components as evidence.
    """

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path joins {u} and {v}")
        self.witness = (u, v)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "m", "adj", "adj_mask", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        masks = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v})")
            if not masks[u] >> v & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
                m += 1
        self.n = n
        self.m = m
        self.adj_mask = tuple(masks)
        self.adj = tuple(tuple(_bits(a)) for a in masks)
        self._hash = hash((n, self.adj_mask))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Each edge once as (u, v) with u < v, in ascending order."""
        return tuple(
            (u, v) for u in range(self.n) for v in self.adj[u] if v > u
        )

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj_mask[u] >> v & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj_mask == other.adj_mask

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, collapsing duplicate edge pairs.

    Rejects out-of-range endpoints and self-loops with :class:`GraphError`.
    """
    return Graph(n, edges)


@dataclass(frozen=True)
class CdsStatus:
    """Verdict of a connected-dominating-set check.

    ``first_undominated`` is the smallest vertex with no neighbor in the
    candidate set (and not itself in it), or None when the set dominates.
    """

    dominating: bool
    connected: bool
    first_undominated: int | None

    @property
    def is_cds(self) -> bool:
        return self.dominating and self.connected


def cds_status(g: Graph, s: Iterable[int]) -> CdsStatus:
    """Check whether ``s`` is a connected dominating set of ``g``.

    The empty set neither dominates nor is connected when the graph has
    vertices.  Connectivity refers to the subgraph induced on ``s``.
    """
    mask = _to_mask(g, s)
    first = _first_undominated(g, mask)
    return CdsStatus(
        dominating=first is None,
        connected=_connected_in(g, mask),
        first_undominated=first,
    )


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return the subgraph induced on ``s`` plus the new-id -> old-id map.

    New vertex i corresponds to original vertex ``mapping[i]``; the mapping
    is ascending, so relabeling is order-preserving.
    """
    keep = sorted(set(_check_vertices(g, s)))
    index = {old: new for new, old in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u in keep
        for v in g.adj[u]
        if v > u and v in index
    ]
    return Graph(len(keep), edges), tuple(keep)


# ---------------------------------------------------------------------------
# mask plumbing shared by the other modules (internal)

def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _to_mask(g: Graph, s: Iterable[int]) -> int:
    return _mask_of(_check_vertices(g, s))


def _check_vertices(g: Graph, s: Iterable[int]) -> list[int]:
    out = list(s)
    for v in out:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return out


def _first_undominated(g: Graph, mask: int) -> int | None:
    """Smallest vertex outside ``mask`` with no neighbor inside it."""
    adj = g.adj_mask
    rest = ~mask & ((1 << g.n) - 1)
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        if not adj[v] & mask:
            return v
        rest ^= low
    return None


def _connected_in(g: Graph, mask: int) -> bool:
    """Is the subgraph induced on ``mask`` connected?  Empty -> False."""
    if mask == 0:
        return g.n == 0
    adj = g.adj_mask
    seen = mask & -mask
    frontier = seen
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= adj[low.bit_length() - 1]
            m ^= low
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def _is_cds(g: Graph, mask: int) -> bool:
    return _first_undominated(g, mask) is None and _connected_in(g, mask)


def _components(g: Graph) -> list[int]:
    """Connected components of the whole graph, as masks, ascending minima."""
    full = (1 << g.n) - 1
    out = []
    left = full
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            reach = 0
            m = frontier
            while m:
                low = m & -m
                reach |= g.adj_mask[low.bit_length() - 1]
                m ^= low
            frontier = reach & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def _require_connected(g: Graph) -> None:
    comps = _components(g)
    if len(comps) > 1:
        u = (comps[0] & -comps[0]).bit_length() - 1
        v = (comps[1] & -comps[1]).bit_length() - 1
        raise DisconnectedGraphError(u, v)
