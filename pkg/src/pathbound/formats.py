"""Plain-text graph and hypergraph files.

Graph files: a header line ``n m`` followed by m lines ``u v`` of 0-based
endpoints.  Hypergraph files: a header ``nv k`` followed by k lines, each the
space-separated vertex ids of one hyperedge.  Lines starting with ``#`` are
comments.  Parsers report 1-based line and column on failure and are strict:
duplicate graph edges are an error, as are blank hyperedge lines unless the
permissive flag turns them into (trivially infeasible) empty hyperedges.
"""

from __future__ import annotations

import re
from pathlib import Path

from .graphs import Graph
from .hypercolor import Hypergraph

_TOKEN = re.compile(r"\S+")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokenize(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _int_token(token: str, lineno: int, column: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno, column)


def _is_comment(line: str) -> bool:
    stripped = line.lstrip()
    return stripped.startswith("#")


def _header(lines: list[str], what: str) -> tuple[int, int, int]:
    """Parse the two-integer header; returns (first, second, header lineno)."""
    for lineno, raw in enumerate(lines, start=1):
        if _is_comment(raw) or not raw.strip():
            continue
        tokens = _tokenize(raw)
        if len(tokens) != 2:
            raise ParseError(
                f"header must be exactly two integers ({what})", lineno,
                tokens[0][1] if tokens else 1,
            )
        a = _int_token(tokens[0][0], lineno, tokens[0][1], what.split()[0])
        b = _int_token(tokens[1][0], lineno, tokens[1][1], what.split()[1])
        if a < 0 or b < 0:
            raise ParseError("header values must be nonnegative", lineno, tokens[0][1])
        return a, b, lineno
    raise ParseError(f"missing header ({what})", max(len(lines), 1))


def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    n, m, at = _header(lines, "vertex-count edge-count")
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    lineno = at
    for lineno, raw in enumerate(lines[at:], start=at + 1):
        if _is_comment(raw) or not raw.strip():
            continue
        tokens = _tokenize(raw)
        if len(edges) == m:
            raise ParseError("unexpected data after the declared edges", lineno, tokens[0][1])
        if len(tokens) != 2:
            raise ParseError("edge line must be exactly two ids", lineno, tokens[0][1])
        u = _int_token(tokens[0][0], lineno, tokens[0][1], "endpoint")
        v = _int_token(tokens[1][0], lineno, tokens[1][1], "endpoint")
        for value, (_, col) in ((u, tokens[0]), (v, tokens[1])):
            if not 0 <= value < n:
                raise ParseError(f"vertex {value} out of range for n={n}", lineno, col)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno, tokens[0][1])
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno, tokens[0][1])
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(
            f"expected {m} edge lines, found {len(edges)}", lineno or 1
        )
    return Graph(n, edges)


def parse_hypergraph(text: str, permissive: bool = False) -> Hypergraph:
    lines = text.splitlines()
    nv, k, at = _header(lines, "vertex-count edge-count")
    edges: list[frozenset[int]] = []
    lineno = at
    for lineno, raw in enumerate(lines[at:], start=at + 1):
        if _is_comment(raw):
            continue
        if not raw.strip():
            if len(edges) >= k:
                continue  # trailing blank lines are not "between edges"
            if not permissive:
                raise ParseError(
                    "empty hyperedge line (pass permissive mode to accept "
                    "it as a trivially infeasible edge)", lineno,
                )
            edges.append(frozenset())
            continue
        tokens = _tokenize(raw)
        if len(edges) == k:
            raise ParseError("unexpected data after the declared hyperedges", lineno, tokens[0][1])
        members = set()
        for token, col in tokens:
            v = _int_token(token, lineno, col, "vertex id")
            if not 0 <= v < nv:
                raise ParseError(f"vertex {v} out of range for nv={nv}", lineno, col)
            members.add(v)
        edges.append(frozenset(members))
    if len(edges) != k:
        raise ParseError(
            f"expected {k} hyperedge lines, found {len(edges)}", lineno or 1
        )
    return Hypergraph(nv, tuple(edges))


def render_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def render_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.nv} {len(h.edges)}"]
    lines.extend(" ".join(str(v) for v in sorted(e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def load_hypergraph(path: str | Path, permissive: bool = False) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text(), permissive=permissive)
