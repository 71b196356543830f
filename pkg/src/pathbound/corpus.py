"""Acceptance corpus drivers.

Each suite exercises one package-level guarantee over a pinned corpus
(exhaustive small-graph enumeration, seeded random instances, or the worked
example) and returns a :class:`SuiteReport`.  The CLI's ``corpus`` command
and the acceptance tests both run these; all seeds and schedules are module
constants so every run sees the same instances.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import cds as _cds
from . import hypercolor as _hc
from .cds import Substitution, bounded_cds, poset_less, substitute
from .generate import gen_gnp
from .graphs import Graph, _bits, _connected_in, _first_undominated, _mask_of
from .hypercolor import Colorable, Hypergraph, Infeasible
from .oracle import (
    Shape,
    _characterization_scan,
    _search_induced_path,
    brute_2color,
    check_minimum_cds_structure,
    has_induced_cycle,
    has_induced_path,
    iso_to_path_or_cycle,
    min_k_pfree,
)

_MAX_REPORTED_FAILURES = 25


@dataclass
class SuiteReport:
    name: str
    passed: bool
    instances: int
    elapsed_s: float
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def lines(self) -> list[str]:
        verdict = "PASS" if self.passed else "FAIL"
        out = [
            f"suite {self.name}: {verdict} "
            f"({self.instances} instances, {self.elapsed_s:.1f}s)"
        ]
        for key in sorted(self.details):
            out.append(f"  {key} = {self.details[key]}")
        out.extend(f"  failure: {msg}" for msg in self.failures)
        return out


class _Failures:
    """Collect failure messages, keeping only the first few verbatim."""

    def __init__(self):
        self.count = 0
        self.messages: list[str] = []

    def add(self, message: str) -> None:
        self.count += 1
        if len(self.messages) < _MAX_REPORTED_FAILURES:
            self.messages.append(message)

    def report(self) -> list[str]:
        extra = self.count - len(self.messages)
        if extra > 0:
            return self.messages + [f"... and {extra} more"]
        return list(self.messages)


# ---------------------------------------------------------------------------
# the worked example: 13 vertices, 17 edges, and one weight-guided swap

EXAMPLE13_N = 13
EXAMPLE13_EDGES = (
    (0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5), (4, 6), (5, 6),
    (6, 7), (6, 8), (7, 8), (7, 10), (7, 11), (8, 9), (8, 11),
    (10, 12), (11, 12),
)
# A minimal CDS of the example that is not a path: two pendant chains of
# weight 2 and 1 hang off its center, total weight 2^2 + 1^2 = 5.
EXAMPLE13_START = frozenset({1, 3, 4, 5, 6, 7, 8, 10})
# Swapping vertex 0 in (private neighbor of 1) and vertex 4 out stretches
# the long chain: weights become 4 and 1, total 17.
EXAMPLE13_IMPROVED = frozenset({0, 1, 3, 5, 6, 7, 8, 10})
# What the full run from all 13 vertices settles on under ascending ids:
# the stripped-down set {2,3,4,5,6,8,11,12} (weight 11) improves twice and
# ends as the induced path 1-0-2-4-6-8-11-12 (weight 7^2 + 7^2 = 98).
EXAMPLE13_FROM_ALL = frozenset({0, 1, 2, 4, 6, 8, 11, 12})


def example13() -> Graph:
    return Graph(EXAMPLE13_N, EXAMPLE13_EDGES)


# ---------------------------------------------------------------------------
# exhaustive enumeration of small connected graphs

# Connected labeled graphs on 1..6 vertices (standard counts).
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


def connected_graphs(n: int):
    """Yield every connected labeled graph on vertices 0..n-1."""
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        b = bits
        while b:
            low = b & -b
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            b ^= low
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            m = frontier
            while m:
                low = m & -m
                reach |= adj[low.bit_length() - 1]
                m ^= low
            frontier = reach & ~seen
            seen |= frontier
        if seen == full:
            edges = [pairs[i] for i in _bits(bits)]
            yield Graph(n, edges)


def _timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


# ---------------------------------------------------------------------------
# suite: example fidelity (criterion 1)

def suite_example_fidelity(workers: int = 1) -> SuiteReport:
    del workers
    start = time.perf_counter()
    fails = _Failures()
    g = example13()

    weight = _cds.set_weight(g, EXAMPLE13_START)
    if weight != 5:
        fails.add(f"starting set weight {weight}, expected 5")

    nc = _cds.non_cutting(g, EXAMPLE13_START)
    if nc != frozenset({1, 4, 8, 10}):
        fails.add(f"non-cutting set {sorted(nc)}, expected [1, 4, 8, 10]")

    swapped = substitute(g, EXAMPLE13_START, y=0, v=4)
    if swapped != EXAMPLE13_IMPROVED:
        fails.add(f"substitute(y=0, v=4) gave {swapped}")
    else:
        w2 = _cds.set_weight(g, swapped)
        if w2 != 17:
            fails.add(f"improved set weight {w2}, expected 17 (= 4^2 + 1^2)")

    # Removing the weight-1 chain end instead cannot work: vertex 12 would
    # lose its only dominators.
    if substitute(g, EXAMPLE13_START, y=0, v=10) is not None:
        fails.add("substitute(y=0, v=10) unexpectedly produced a CDS")

    final, trace = bounded_cds(g, start=EXAMPLE13_START)
    if final != EXAMPLE13_IMPROVED:
        fails.add(f"bounded_cds from the starting set gave {sorted(final)}")
    expected_trace = (
        (8, 5, Substitution(1, 0, 4)),
        (8, 17, None),
    )
    got_trace = tuple((r.size, r.weight, r.swap) for r in trace.records)
    if got_trace != expected_trace:
        fails.add(f"trace {got_trace}, expected {expected_trace}")

    from_all, trace_all = bounded_cds(g)
    if from_all != EXAMPLE13_FROM_ALL:
        fails.add(f"bounded_cds from all vertices gave {sorted(from_all)}")
    got_all = tuple((r.size, r.weight, r.swap) for r in trace_all.records)
    expected_all = (
        (8, 11, Substitution(2, 0, 3)),
        (8, 13, Substitution(0, 1, 5)),
        (8, 98, None),
    )
    if got_all != expected_all:
        fails.add(f"full-run trace {got_all}, expected {expected_all}")
    if not _cds.is_induced_path(g, from_all):
        fails.add("full run should end on an induced path")

    return SuiteReport(
        "example-fidelity",
        fails.count == 0,
        instances=7,
        elapsed_s=time.perf_counter() - start,
        failures=fails.report(),
    )


# ---------------------------------------------------------------------------
# shared checker for the bounded-structure guarantee (criteria 2, 3, 9)

def _check_bounded_run(g: Graph, label: str, fails: _Failures) -> tuple[int, int]:
    """Run bounded_cds and check the guarantee plus trace invariants.

    Returns (weight_violations, trace_length) for the weight-bound ledger.
    """
    x, trace = bounded_cds(g)
    k = min_k_pfree(g)
    t = k - 2
    xmask = _mask_of(x)

    witness = _search_induced_path(g, xmask, t)
    if len(witness) >= t and iso_to_path_or_cycle(g, x) != Shape("path", t):
        fails.add(
            f"{label}: returned set {sorted(x)} has an induced path on "
            f"{t} vertices and is not that path (k={k})"
        )

    weight_violations = 0
    for rec in trace.records:
        if rec.weight > 4 * rec.size * rec.size:
            weight_violations += 1
            fails.add(
                f"{label}: iteration weight {rec.weight} exceeds "
                f"4*{rec.size}^2"
            )
    for before, after in zip(trace.records, trace.records[1:]):
        if not poset_less((before.size, before.weight), (after.size, after.weight)):
            fails.add(f"{label}: trace not strictly increasing")
            break
    bound = g.n * (4 * g.n * g.n + 1) + 1
    if trace.iterations > bound:
        fails.add(f"{label}: trace length {trace.iterations} exceeds {bound}")
    return weight_violations, trace.iterations


def suite_bounded_exhaustive(workers: int = 1, max_n: int = 6) -> SuiteReport:
    del workers
    start = time.perf_counter()
    fails = _Failures()
    instances = 0
    weight_violations = 0
    longest_trace = 0
    for n in range(1, max_n + 1):
        seen = 0
        for g in connected_graphs(n):
            seen += 1
            wv, length = _check_bounded_run(g, f"n={n} #{seen}", fails)
            weight_violations += wv
            longest_trace = max(longest_trace, length)
        instances += seen
        if n in CONNECTED_COUNTS and seen != CONNECTED_COUNTS[n]:
            fails.add(
                f"enumerated {seen} connected graphs on {n} vertices, "
                f"expected {CONNECTED_COUNTS[n]}"
            )
    return SuiteReport(
        "bounded-exhaustive",
        fails.count == 0,
        instances=instances,
        elapsed_s=time.perf_counter() - start,
        failures=fails.report(),
        details={
            "weight_violations": weight_violations,
            "longest_trace": longest_trace,
        },
    )


SAMPLED_NS = (7, 8, 9, 10, 11, 12)
SAMPLED_PER_N = 1000
SAMPLED_PS = (0.3, 0.4, 0.5, 0.65, 0.8)
SAMPLED_SEED_BASE = 52_000_000


def _sampled_instance(n: int, i: int) -> Graph:
    return gen_gnp(n, SAMPLED_PS[i % len(SAMPLED_PS)], SAMPLED_SEED_BASE + (n << 12) + i)


def _sampled_chunk(args: tuple[int, int, int]) -> tuple[int, list[str], int, int]:
    n, lo, hi = args
    fails = _Failures()
    weight_violations = 0
    longest = 0
    for i in range(lo, hi):
        g = _sampled_instance(n, i)
        wv, length = _check_bounded_run(g, f"gnp n={n} i={i}", fails)
        weight_violations += wv
        longest = max(longest, length)
    return hi - lo, fails.report(), weight_violations, longest


def suite_bounded_sampled(workers: int = 1) -> SuiteReport:
    start = time.perf_counter()
    chunks = [
        (n, lo, min(lo + 125, SAMPLED_PER_N))
        for n in SAMPLED_NS
        for lo in range(0, SAMPLED_PER_N, 125)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sampled_chunk, chunks))
    else:
        results = [_sampled_chunk(chunk) for chunk in chunks]
    instances = sum(r[0] for r in results)
    failures = [msg for r in results for msg in r[1]]
    weight_violations = sum(r[2] for r in results)
    longest = max(r[3] for r in results)
    return SuiteReport(
        "bounded-sampled",
        not failures,
        instances=instances,
        elapsed_s=time.perf_counter() - start,
        failures=failures[:_MAX_REPORTED_FAILURES],
        details={
            "weight_violations": weight_violations,
            "longest_trace": longest,
        },
    )


# ---------------------------------------------------------------------------
# suite: minimum-CDS structure, exhaustive (criterion 4)

def suite_minimum_structure(workers: int = 1, max_n: int = 6) -> SuiteReport:
    del workers
    start = time.perf_counter()
    fails = _Failures()
    instances = 0
    for n in range(1, max_n + 1):
        for idx, g in enumerate(connected_graphs(n)):
            instances += 1
            report = check_minimum_cds_structure(g)
            if not report.passed:
                ce = report.counterexample
                fails.add(
                    f"n={n} #{idx}: minimum CDS "
                    f"{sorted(ce.cds) if ce and ce.cds else '?'} violates "
                    f"the structure guarantee"
                )
    return SuiteReport(
        "minimum-structure",
        fails.count == 0,
        instances=instances,
        elapsed_s=time.perf_counter() - start,
        failures=fails.report(),
    )


# ---------------------------------------------------------------------------
# suite: characterization equivalence (criterion 5)

CHARACTERIZATION_KS = (4, 5, 6, 7, 8)


def suite_characterization(workers: int = 1, max_n: int = 6) -> SuiteReport:
    del workers
    start = time.perf_counter()
    fails = _Failures()
    instances = 0
    for n in range(1, max_n + 1):
        for idx, g in enumerate(connected_graphs(n)):
            reports = _characterization_scan(g, CHARACTERIZATION_KS)
            longest = len(_search_induced_path(g, (1 << g.n) - 1, None))
            for k in CHARACTERIZATION_KS:
                instances += 1
                expect_pass = longest < k
                if reports[k].passed != expect_pass:
                    fails.add(
                        f"n={n} #{idx} k={k}: characterization "
                        f"{'passed' if reports[k].passed else 'failed'} but "
                        f"longest induced path is {longest}"
                    )
    return SuiteReport(
        "characterization",
        fails.count == 0,
        instances=instances,
        elapsed_s=time.perf_counter() - start,
        failures=fails.report(),
    )


# ---------------------------------------------------------------------------
# suite: minimal CDS under random removal orders (criterion 6)

ORDER_COUNT = 200
ORDER_SEED_BASE = 96_000_000
MINIMAL_ORDER_KS = (4, 5, 6, 7)


def suite_minimal_random_orders(workers: int = 1, max_n: int = 6) -> SuiteReport:
    del workers
    start = time.perf_counter()
    fails = _Failures()
    instances = 0
    graph_index = 0
    for n in range(1, max_n + 1):
        full = (1 << n) - 1
        ids = list(range(n))
        for g in connected_graphs(n):
            graph_index += 1
            longest = len(_search_induced_path(g, full, None))
            eligible = [
                k
                for k in MINIMAL_ORDER_KS
                if longest < k and has_induced_cycle(g, k) is None
            ]
            if not eligible:
                continue
            limit = min(eligible) - 3  # longest allowed induced path in G[X]

            # All single-removal CDS checks, precomputed per subset.
            cds_tab = 0
            for mask in range(1, full + 1):
                if _first_undominated(g, mask) is None and _connected_in(g, mask):
                    cds_tab |= 1 << mask

            rng = random.Random(ORDER_SEED_BASE + graph_index)
            orders = {
                tuple(rng.sample(ids, n)) for _ in range(ORDER_COUNT)
            }
            result_masks = set()
            for order in orders:
                y = full
                for v in order:
                    cand = y ^ (1 << v)
                    if cds_tab >> cand & 1:
                        y = cand
                result_masks.add(y)
            instances += len(orders)
            for xmask in result_masks:
                if len(_search_induced_path(g, xmask, limit + 1)) > limit:
                    bad = sorted(_bits(xmask))
                    fails.add(
                        f"n={n} graph #{graph_index}: minimal CDS {bad} has "
                        f"an induced path on {limit + 1} vertices "
                        f"(eligible orders {eligible})"
                    )
    return SuiteReport(
        "minimal-random-orders",
        fails.count == 0,
        instances=instances,
        elapsed_s=time.perf_counter() - start,
        failures=fails.report(),
        details={"graphs": graph_index},
    )


# ---------------------------------------------------------------------------
# suites: hypergraph solver (criteria 7, 8)

HYPER_TARGET = 5000
HYPER_SEED_BASE = 77_000_000
HYPER_MAX_SEEDS = 200_000


def _hyper_instance(seed: int) -> Hypergraph:
    rng = random.Random(seed)
    nv = rng.randint(2, 8)
    k = rng.randint(1, 6)
    maxsize = rng.randint(2, min(4, nv))
    edges = tuple(
        frozenset(rng.sample(range(nv), rng.randint(2, maxsize)))
        for _ in range(k)
    )
    return Hypergraph(nv, edges)


def _p7_free(h: Hypergraph) -> bool:
    view = _hc.incidence_graph(h)
    return has_induced_path(view.graph, 7) is None


def _check_hyper_instance(h: Hypergraph, label: str, fails: _Failures) -> None:
    verdict = _hc.two_color_p7(h)
    reference = brute_2color(h)

    if isinstance(verdict, _hc.PreconditionViolated):
        fails.add(f"{label}: solver refused a P_7-free instance")
        return
    solver_feasible = isinstance(verdict, Colorable)
    if solver_feasible != (reference is not None):
        fails.add(
            f"{label}: solver says "
            f"{'colorable' if solver_feasible else 'infeasible'}, "
            f"brute force disagrees (edges={[sorted(e) for e in h.edges]})"
        )
        return
    if solver_feasible:
        check = _hc.verify_coloring(h, verdict.a, verdict.b)
        if not check.ok:
            fails.add(f"{label}: returned coloring fails verification: {check}")

    reduced = _hc.clutter_reduce(h)
    if (brute_2color(reduced) is not None) != (reference is not None):
        fails.add(f"{label}: clutter reduction changed feasibility")
    if not _p7_free(reduced):
        fails.add(f"{label}: clutter reduction lost incidence path-freeness")


def _hyper_chunk(args: tuple[int, int]) -> list[tuple[int, list[str]]]:
    lo, hi = args
    out = []
    for seed in range(lo, hi):
        h = _hyper_instance(HYPER_SEED_BASE + seed)
        if not _p7_free(h):
            continue
        fails = _Failures()
        _check_hyper_instance(h, f"seed {seed}", fails)
        out.append((seed, fails.report()))
    return out


def suite_hypercolor_random(workers: int = 1) -> SuiteReport:
    start = time.perf_counter()
    accepted: list[tuple[int, list[str]]] = []
    block = 2000
    blocks = [(lo, min(lo + block, HYPER_MAX_SEEDS)) for lo in range(0, HYPER_MAX_SEEDS, block)]
    if workers > 1:
        # Blocks are consumed strictly in seed order, so the accepted prefix
        # is identical to a sequential run; keeping only a small window in
        # flight avoids scanning far past the target.
        from collections import deque

        block_iter = iter(blocks)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pending = deque(
                pool.submit(_hyper_chunk, b)
                for _, b in zip(range(2 * workers), block_iter)
            )
            while pending:
                accepted.extend(pending.popleft().result())
                if len(accepted) >= HYPER_TARGET:
                    for fut in pending:
                        fut.cancel()
                    break
                nxt = next(block_iter, None)
                if nxt is not None:
                    pending.append(pool.submit(_hyper_chunk, nxt))
    else:
        for chunk in blocks:
            accepted.extend(_hyper_chunk(chunk))
            if len(accepted) >= HYPER_TARGET:
                break
    accepted = accepted[:HYPER_TARGET]
    failures = [msg for _, msgs in accepted for msg in msgs]
    scanned = accepted[-1][0] + 1 if accepted else 0
    return SuiteReport(
        "hypercolor-random",
        len(accepted) >= HYPER_TARGET and not failures,
        instances=len(accepted),
        elapsed_s=time.perf_counter() - start,
        failures=failures[:_MAX_REPORTED_FAILURES],
        details={"seeds_scanned": scanned},
    )


TRIANGLE_HYPERGRAPH = Hypergraph(3, (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 0})))
COMMON_VERTEX_GADGET = Hypergraph(
    4, (frozenset({0, 1, 2}), frozenset({0, 3}), frozenset({1, 3}), frozenset({2, 3}))
)
TRIPLE_OVERLAP_GADGET = Hypergraph(
    5,
    (
        frozenset({0, 1, 2}),
        frozenset({0, 3, 4}),
        frozenset({1, 3, 4}),
        frozenset({2, 3, 4}),
    ),
)


def suite_hypercolor_gadgets(workers: int = 1) -> SuiteReport:
    del workers
    start = time.perf_counter()
    fails = _Failures()

    verdict = _hc.two_color_p7(TRIANGLE_HYPERGRAPH)
    if not isinstance(verdict, Infeasible):
        fails.add(f"triangle: expected Infeasible, got {verdict}")
    elif verdict.certificate.kind != "pair-exhausted":
        fails.add(f"triangle: certificate {verdict.certificate}")
    if brute_2color(TRIANGLE_HYPERGRAPH) is not None:
        fails.add("triangle: brute force found a coloring")

    verdict = _hc.two_color_p7(COMMON_VERTEX_GADGET)
    if not isinstance(verdict, Infeasible):
        fails.add(f"common-vertex gadget: expected Infeasible, got {verdict}")
    else:
        cert = verdict.certificate
        if cert.kind != "common-vertex" or cert.vertex != 3 or cert.edge != 0:
            fails.add(f"common-vertex gadget: certificate {cert}")
        else:
            e = COMMON_VERTEX_GADGET.edges[cert.edge]
            pinned = [
                frozenset({x, cert.vertex}) in COMMON_VERTEX_GADGET.edges
                for x in e
            ]
            if not all(pinned):
                fails.add("common-vertex gadget: certificate premise broken")
    if brute_2color(COMMON_VERTEX_GADGET) is not None:
        fails.add("common-vertex gadget: brute force found a coloring")

    verdict = _hc.two_color_p7(TRIPLE_OVERLAP_GADGET)
    if not isinstance(verdict, Colorable):
        fails.add(f"triple-overlap gadget: expected Colorable, got {verdict}")
    else:
        if verdict.a != frozenset({0, 1, 3}) or verdict.b != frozenset({2, 4}):
            fails.add(
                f"triple-overlap gadget: coloring {sorted(verdict.a)} / "
                f"{sorted(verdict.b)}"
            )
        if not _hc.verify_coloring(TRIPLE_OVERLAP_GADGET, verdict.a, verdict.b).ok:
            fails.add("triple-overlap gadget: coloring fails verification")
    if brute_2color(TRIPLE_OVERLAP_GADGET) is None:
        fails.add("triple-overlap gadget: brute force found no coloring")
    if not _p7_free(TRIPLE_OVERLAP_GADGET):
        fails.add("triple-overlap gadget: incidence graph is not P_7-free")

    return SuiteReport(
        "hypercolor-gadgets",
        fails.count == 0,
        instances=3,
        elapsed_s=time.perf_counter() - start,
        failures=fails.report(),
    )


# ---------------------------------------------------------------------------
# suite: large-instance smoke benchmark

SMOKE_N = 500
SMOKE_P = 0.03
SMOKE_SEED = 424_242
SMOKE_BUDGET_S = 60.0


def suite_smoke(workers: int = 1) -> SuiteReport:
    del workers
    start = time.perf_counter()
    fails = _Failures()
    g = gen_gnp(SMOKE_N, SMOKE_P, SMOKE_SEED)
    run_start = time.perf_counter()
    x, trace = bounded_cds(g)
    run_elapsed = time.perf_counter() - run_start
    if run_elapsed >= SMOKE_BUDGET_S:
        fails.add(f"bounded_cds took {run_elapsed:.1f}s, budget {SMOKE_BUDGET_S}s")

    from .graphs import cds_status

    status = cds_status(g, x)
    if not status.is_cds:
        fails.add("smoke result is not a CDS")
    xmask = _mask_of(x)
    for v in x:
        if _first_undominated(g, xmask ^ (1 << v)) is None and _connected_in(
            g, xmask ^ (1 << v)
        ):
            fails.add(f"smoke result is not minimal (vertex {v} removable)")
            break
    for before, after in zip(trace.records, trace.records[1:]):
        if not poset_less((before.size, before.weight), (after.size, after.weight)):
            fails.add("smoke trace not strictly increasing")
            break
    return SuiteReport(
        "smoke-large",
        fails.count == 0,
        instances=1,
        elapsed_s=time.perf_counter() - start,
        failures=fails.report(),
        details={"cds_size": len(x), "run_seconds": round(run_elapsed, 2)},
    )


SUITES = {
    "example-fidelity": suite_example_fidelity,
    "bounded-exhaustive": suite_bounded_exhaustive,
    "bounded-sampled": suite_bounded_sampled,
    "minimum-structure": suite_minimum_structure,
    "characterization": suite_characterization,
    "minimal-random-orders": suite_minimal_random_orders,
    "hypercolor-random": suite_hypercolor_random,
    "hypercolor-gadgets": suite_hypercolor_gadgets,
    "smoke-large": suite_smoke,
}


def run_suite(name: str, workers: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](workers=workers)
