"""Brute-force reference checks for the structural guarantees in this package.

Everything here favors transparency over speed: exhaustive subset scans and
depth-first path enumeration, capped so a typo cannot turn into an overnight
run.  The fast algorithms in :mod:`pathbound.cds` and
:mod:`pathbound.hypercolor` are tested against these oracles; nothing here
calls into those modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .graphs import (
    Graph,
    _bits,
    _connected_in,
    _first_undominated,
    _mask_of,
    _require_connected,
    _to_mask,
)


class CapExceededError(ValueError):
    """Input too large for an exhaustive check; raise the cap to override."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(
            f"{what}: size {size} exceeds exhaustive-search cap {cap}; "
            f"pass a larger cap= explicitly to override"
        )


@dataclass(frozen=True)
class PathWitness:
    """An induced path, listed end to end.  Length counts vertices."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


class Shape(NamedTuple):
    """Classification of an induced subgraph as a path, a cycle, or neither."""

    kind: str  # "path" | "cycle" | "neither"
    size: int  # vertex count for path/cycle, 0 for neither


@dataclass(frozen=True)
class Counterexample:
    """A failing instance: the subgraph's vertices and, when the failure is a
    specific dominating set, that set (None means no set satisfies the
    property)."""

    vertices: frozenset[int]
    cds: frozenset[int] | None


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    counterexample: Counterexample | None = None


# ---------------------------------------------------------------------------
# induced paths

def _search_induced_path(g: Graph, allowed: int, stop_at: int | None) -> tuple[int, ...]:
    """Longest induced path inside ``allowed``, by depth-first extension.

    Starts and extensions are tried in ascending vertex order, so the witness
    is deterministic.  With ``stop_at`` set, returns as soon as any induced
    path reaches that many vertices.
    """
    adj = g.adj_mask
    limit = allowed.bit_count()
    if stop_at is not None:
        limit = min(limit, stop_at)
    best: tuple[int, ...] = ()

    def extend(path: list[int], pmask: int, closed: int) -> bool:
        nonlocal best
        if len(path) > len(best):
            best = tuple(path)
            if len(best) >= limit:
                return True
        last = path[-1]
        grown = closed | adj[last]
        for v in _bits(adj[last] & allowed & ~pmask & ~closed):
            path.append(v)
            if extend(path, pmask | (1 << v), grown):
                return True
            path.pop()
        return False

    for s in _bits(allowed):
        if extend([s], 1 << s, 0):
            break
    return best


def longest_induced_path(g: Graph, cap: int = 20) -> PathWitness:
    """A longest induced path of ``g`` with a deterministic witness."""
    if g.n > cap:
        raise CapExceededError("longest_induced_path", g.n, cap)
    return PathWitness(_search_induced_path(g, (1 << g.n) - 1, None))


def has_induced_path(g: Graph, t: int) -> PathWitness | None:
    """First induced path on exactly ``t`` vertices, or None.

    Bounded depth keeps this affordable even on graphs too large for
    :func:`longest_induced_path`.
    """
    if t < 1:
        raise ValueError(f"path order must be positive, got {t}")
    found = _search_induced_path(g, (1 << g.n) - 1, t)
    return PathWitness(found) if len(found) == t else None


def min_k_pfree(g: Graph, cap: int = 20) -> int:
    """Smallest k with ``g`` free of induced paths on k vertices (min 3)."""
    if g.n > cap:
        raise CapExceededError("min_k_pfree", g.n, cap)
    longest = len(_search_induced_path(g, (1 << g.n) - 1, None))
    return max(longest + 1, 3)


def iso_to_path_or_cycle(g: Graph, s: Iterable[int]) -> Shape:
    """Classify the subgraph induced on ``s`` by degree sequence.

    A single vertex counts as a path; a cycle needs at least 3 vertices.
    """
    mask = _to_mask(g, s)
    t = mask.bit_count()
    if t == 0 or not _connected_in(g, mask):
        return Shape("neither", t)
    if t == 1:
        return Shape("path", 1)
    degs = [(g.adj_mask[v] & mask).bit_count() for v in _bits(mask)]
    ones = degs.count(1)
    twos = degs.count(2)
    if ones == 2 and ones + twos == t:
        return Shape("path", t)
    if twos == t and t >= 3:
        return Shape("cycle", t)
    return Shape("neither", t)


def has_induced_cycle(g: Graph, size: int) -> frozenset[int] | None:
    """First vertex set (ascending combination order) inducing a cycle on
    exactly ``size`` vertices, or None."""
    if size < 3 or size > g.n:
        return None
    for combo in combinations(range(g.n), size):
        if iso_to_path_or_cycle(g, combo).kind == "cycle":
            return frozenset(combo)
    return None


# ---------------------------------------------------------------------------
# connected dominating sets, exhaustively

def enumerate_minimum_cds(g: Graph, cap: int = 16) -> list[frozenset[int]]:
    """All minimum-size connected dominating sets, ascending subset order.

    Empty only when no CDS exists at all (disconnected input).
    """
    if g.n > cap:
        raise CapExceededError("enumerate_minimum_cds", g.n, cap)
    for size in range(1, g.n + 1):
        found = [
            frozenset(combo)
            for combo in combinations(range(g.n), size)
            if _is_cds_mask(g, _mask_of(combo))
        ]
        if found:
            return found
    return []


def _is_cds_mask(g: Graph, mask: int) -> bool:
    return _first_undominated(g, mask) is None and _connected_in(g, mask)


def check_minimum_cds_structure(g: Graph, cap: int = 16) -> CheckReport:
    """Verify the core guarantee on every minimum CDS of a connected graph.

    With k the smallest order such that ``g`` has no induced path on k
    vertices, every minimum CDS must induce a subgraph that either has no
    induced path on k-2 vertices or is itself such a path.
    """
    _require_connected(g)
    if g.n > cap:
        raise CapExceededError("check_minimum_cds_structure", g.n, cap)
    k = min_k_pfree(g, cap=cap)
    t = k - 2
    full = frozenset(range(g.n))
    for x in enumerate_minimum_cds(g, cap=cap):
        mask = _mask_of(x)
        witness = _search_induced_path(g, mask, t)
        if len(witness) < t:
            continue
        if iso_to_path_or_cycle(g, x) == Shape("path", t):
            continue
        return CheckReport(False, Counterexample(full, frozenset(x)))
    return CheckReport(True, None)


def check_cds_characterization(g: Graph, k: int, cap: int = 12) -> CheckReport:
    """Check the subgraph characterization at order ``k``.

    Passes iff every nonempty connected induced subgraph H admits a CDS X of
    H whose induced subgraph has no induced path on k-2 vertices or is a
    cycle on exactly k vertices.  Counterexample: the first H (ascending
    subset-mask order) where every CDS fails.
    """
    if g.n > cap:
        raise CapExceededError("check_cds_characterization", g.n, cap)
    return _characterization_scan(g, (k,))[k]


def _characterization_scan(g: Graph, ks: tuple[int, ...]) -> dict[int, CheckReport]:
    """One subset sweep evaluating the characterization at several orders.

    For each connected vertex subset S, every sub-subset X is tried as a CDS
    of the subgraph on S; the smallest longest-induced-path length over the
    CDSs, plus the sizes of cycle-shaped CDSs, decide all orders at once.
    """
    for k in ks:
        if k < 4:
            raise ValueError(f"characterization order must be >= 4, got {k}")
    full = (1 << g.n) - 1
    adj = g.adj_mask

    nbr = [0] * (full + 1)
    conn = bytearray(full + 1)
    lp = [0] * (full + 1)  # longest induced path length, connected masks only
    cyc = bytearray(full + 1)
    for mask in range(1, full + 1):
        low = mask & -mask
        nbr[mask] = nbr[mask ^ low] | adj[low.bit_length() - 1]
        if not _connected_in(g, mask):
            continue
        conn[mask] = 1
        lp[mask] = len(_search_induced_path(g, mask, None))
        cyc[mask] = (
            mask.bit_count() >= 3
            and all((adj[v] & mask).bit_count() == 2 for v in _bits(mask))
        )

    failures: dict[int, Counterexample] = {}
    settle_lp = min(ks) - 3  # a CDS this path-short satisfies every order
    for s in range(1, full + 1):
        if not conn[s] or len(failures) == len(ks):
            continue
        best_lp = g.n + 1
        cyc_sizes = 0  # bitmask of cycle-CDS sizes
        x = s
        while True:
            if x and conn[x] and not (s & ~x & ~nbr[x]):
                if lp[x] < best_lp:
                    best_lp = lp[x]
                    if best_lp <= settle_lp:
                        break
                if cyc[x]:
                    cyc_sizes |= 1 << x.bit_count()
            if x == 0:
                break
            x = (x - 1) & s
        for k in ks:
            if k not in failures and best_lp > k - 3 and not cyc_sizes >> k & 1:
                failures[k] = Counterexample(frozenset(_bits(s)), None)
    return {
        k: CheckReport(k not in failures, failures.get(k)) for k in ks
    }


# ---------------------------------------------------------------------------
# hypergraph 2-coloring, exhaustively

def brute_2color(h, cap: int = 20):
    """Least feasible bipartition of a hypergraph's vertices, or None.

    Feasible: both sides nonempty and every hyperedge meets both.  Among
    feasible pairs (A, B) the one whose sorted A-tuple is lexicographically
    least is returned, making the output deterministic.
    """
    nv = h.nv
    if nv > cap:
        raise CapExceededError("brute_2color", nv, cap)
    edge_masks = [_mask_of(e) for e in h.edges]
    full = (1 << nv) - 1
    if full == 0:
        return None
    best = None
    best_key = None
    for a in range(1, full):
        b = full ^ a
        if all(e & a and e & b for e in edge_masks):
            key = tuple(_bits(a))
            if best_key is None or key < best_key:
                best, best_key = a, key
    if best is None:
        return None
    return frozenset(_bits(best)), frozenset(_bits(full ^ best))
