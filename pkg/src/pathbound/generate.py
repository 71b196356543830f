"""Seeded instance generators.

All randomness flows through one ``random.Random(seed)`` per call, so equal
arguments always produce equal objects, across platforms and Python runs.
"""

from __future__ import annotations

import random
from typing import Mapping

from .graphs import Graph, _connected_in
from .hypercolor import Hypergraph


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_star(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"star needs at least 1 vertex, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def gen_gnp(n: int, p: float, seed: int, max_tries: int = 256) -> Graph:
    """Connected G(n, p): resample until connected, bounded retries.

    The retry loop preserves determinism because every attempt draws from
    the same seeded generator.
    """
    if n < 1:
        raise ValueError(f"gnp needs at least 1 vertex, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = Graph(n, edges)
        if _connected_in(g, (1 << n) - 1):
            return g
    raise ValueError(
        f"no connected graph after {max_tries} draws of gnp(n={n}, p={p}); "
        f"raise p or max_tries"
    )


def gen_hyper(nv: int, k: int, maxsize: int, seed: int) -> Hypergraph:
    """k random hyperedges of size 2..maxsize, vertices drawn without
    replacement within each edge."""
    if nv < 2:
        raise ValueError(f"hypergraph generation needs nv >= 2, got {nv}")
    if not 2 <= maxsize <= nv:
        raise ValueError(f"maxsize must be in [2, nv={nv}], got {maxsize}")
    if k < 0:
        raise ValueError(f"edge count must be nonnegative, got {k}")
    rng = random.Random(seed)
    edges = []
    for _ in range(k):
        size = rng.randint(2, maxsize)
        edges.append(frozenset(rng.sample(range(nv), size)))
    return Hypergraph(nv, tuple(edges))


_REQUIRED = {
    "path": ("n",),
    "cycle": ("n",),
    "star": ("n",),
    "gnp": ("n", "p"),
    "hyper": ("nv", "k", "maxsize"),
}


def generate(kind: str, params: Mapping[str, float], seed: int):
    """Dispatching front end: kind in {path, cycle, star, gnp, hyper}."""
    if kind not in _REQUIRED:
        raise ValueError(
            f"unknown kind {kind!r}; expected one of {sorted(_REQUIRED)}"
        )
    missing = [name for name in _REQUIRED[kind] if name not in params]
    if missing:
        raise ValueError(f"kind {kind!r} needs parameters {missing}")
    stray = sorted(name for name in params if name not in _REQUIRED[kind])
    if stray:
        raise ValueError(f"kind {kind!r} does not take parameters {stray}")
    if kind == "path":
        return gen_path(int(params["n"]))
    if kind == "cycle":
        return gen_cycle(int(params["n"]))
    if kind == "star":
        return gen_star(int(params["n"]))
    if kind == "gnp":
        return gen_gnp(int(params["n"]), float(params["p"]), seed)
    return gen_hyper(
        int(params["nv"]), int(params["k"]), int(params["maxsize"]), seed
    )
