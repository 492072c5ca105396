"""Undirected graphs, vertex colorings, and the rvcg text format.

Vertices are integers 1..n.  Edges are unordered pairs stored in canonical
form: each pair as (min, max), the whole edge tuple sorted.  A coloring maps
every vertex to a color in 1..palette_size; palette_size 0 means no colors
are assigned at all.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import FormatError, SizeLimitError, ValidationError

MAX_PALETTE = 64  # color sets are tracked in 64-bit masks


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Coloring:
    palette_size: int
    assignment: Mapping[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class ColoredGraph:
    graph: Graph
    coloring: Coloring


@dataclass(frozen=True)
class GraphMetrics:
    connected: bool
    diameter: int | None
    min_degree: int
    is_complete: bool


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and canonicalize a vertex count and edge list.

    Endpoints must lie in 1..n, self-loops are rejected, duplicate edges
    (in either orientation) collapse to one.
    """
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
    seen = set()
    for e in edges:
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int)):
            raise ValidationError(f"edge endpoints must be integers, got {e!r}")
        if u == v:
            raise ValidationError(f"self-loop at vertex {u} is not allowed")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValidationError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        seen.add((min(u, v), max(u, v)))
    return Graph(n=n, edges=tuple(sorted(seen)))


def build_coloring(palette_size: int, assignment: Mapping[int, int]) -> Coloring:
    """Validate a palette size and color assignment (totality is checked
    against a graph by ``colored_graph``)."""
    if not isinstance(palette_size, int) or palette_size < 0:
        raise ValidationError(f"palette size must be a non-negative integer, got {palette_size!r}")
    if palette_size == 0:
        if assignment:
            raise ValidationError("palette size 0 admits no color assignments")
        return Coloring(0, {})
    for v, c in assignment.items():
        if not isinstance(c, int) or not (1 <= c <= palette_size):
            raise ValidationError(f"vertex {v} has color {c!r} outside 1..{palette_size}")
    return Coloring(palette_size, dict(assignment))


def colored_graph(g: Graph, coloring: Coloring) -> ColoredGraph:
    """Pair a graph with a coloring, checking totality.

    With a nonzero palette every vertex of g must be colored; with palette
    size 0 the assignment must be empty.
    """
    if coloring.palette_size > 0:
        missing = [v for v in range(1, g.n + 1) if v not in coloring.assignment]
        if missing:
            raise ValidationError(f"vertices {missing} have no color")
        extra = [v for v in coloring.assignment if not (1 <= v <= g.n)]
        if extra:
            raise ValidationError(f"colored vertices {extra} are outside 1..{g.n}")
    return ColoredGraph(g, coloring)


def adjacency(g: Graph) -> list[set[int]]:
    """Adjacency sets indexed by vertex; slot 0 is unused."""
    nbrs: list[set[int]] = [set() for _ in range(g.n + 1)]
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def adjacency_bits(g: Graph) -> np.ndarray:
    """Adjacency rows as uint64 bitmasks (bit j = vertex j+1); needs n <= 64."""
    if g.n > 64:
        raise SizeLimitError(f"bitmask adjacency supports at most 64 vertices, got {g.n}")
    rows = np.zeros(g.n, dtype=np.uint64)
    for u, v in g.edges:
        rows[u - 1] |= np.uint64(1) << np.uint64(v - 1)
        rows[v - 1] |= np.uint64(1) << np.uint64(u - 1)
    return rows


def all_pairs_distances(g: Graph) -> np.ndarray:
    """BFS distance matrix, shape (n+1, n+1), -1 for unreachable; row and
    column 0 are unused."""
    nbrs = adjacency(g)
    dist = np.full((g.n + 1, g.n + 1), -1, dtype=np.int32)
    for s in range(1, g.n + 1):
        dist[s, s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = dist[s, u]
            for w in nbrs[u]:
                if dist[s, w] < 0:
                    dist[s, w] = du + 1
                    q.append(w)
    return dist


def graph_metrics(g: Graph) -> GraphMetrics:
    """Connectivity, diameter (None when disconnected), minimum degree,
    and completeness."""
    deg = [0] * (g.n + 1)
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    min_degree = min(deg[1:])
    is_complete = len(g.edges) == g.n * (g.n - 1) // 2
    dist = all_pairs_distances(g)
    sub = dist[1:, 1:]
    if (sub < 0).any():
        return GraphMetrics(False, None, min_degree, is_complete)
    return GraphMetrics(True, int(sub.max()), min_degree, is_complete)


def is_connected(g: Graph) -> bool:
    nbrs = adjacency(g)
    seen = {1}
    q = deque([1])
    while q:
        u = q.popleft()
        for w in nbrs[u]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == g.n


def _parse_int_token(tok: str, what: str, line_no: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}", line_no) from None
    return val


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank, non-comment lines with their 1-based line numbers."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((i, line))
    return out


def _parse_rvcg_lines(lines: list[tuple[int, str]]) -> tuple[ColoredGraph, list[tuple[int, str]]]:
    """Parse the rvcg block off the front of content lines; return the
    colored graph and the remaining lines."""
    if not lines:
        raise FormatError("empty input, expected a 'p rvcg' header")
    line_no, header = lines[0]
    toks = header.split()
    if len(toks) != 5 or toks[0] != "p" or toks[1] != "rvcg":
        raise FormatError(f"expected header 'p rvcg <n> <m> <k>', got {header!r}", line_no)
    n = _parse_int_token(toks[2], "vertex count", line_no)
    m = _parse_int_token(toks[3], "edge count", line_no)
    k = _parse_int_token(toks[4], "palette size", line_no)
    if n < 1:
        raise FormatError(f"vertex count must be at least 1, got {n}", line_no)
    if m < 0 or k < 0:
        raise FormatError("edge count and palette size must be non-negative", line_no)

    idx = 1
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    for _ in range(m):
        if idx >= len(lines):
            raise FormatError(f"expected {m} edge lines, found {len(edges)}")
        line_no, line = lines[idx]
        toks = line.split()
        if len(toks) != 3 or toks[0] != "e":
            raise FormatError(f"expected edge line 'e <u> <v>', got {line!r}", line_no)
        u = _parse_int_token(toks[1], "edge endpoint", line_no)
        v = _parse_int_token(toks[2], "edge endpoint", line_no)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", line_no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"edge ({u}, {v}) has an endpoint outside 1..{n}", line_no)
        key = (min(u, v), max(u, v))
        if key in seen_edges:
            raise FormatError(f"duplicate edge ({u}, {v})", line_no)
        seen_edges.add(key)
        edges.append(key)
        idx += 1

    assignment: dict[int, int] = {}
    if k > 0:
        for _ in range(n):
            if idx >= len(lines):
                raise FormatError(f"expected {n} vertex color lines, found {len(assignment)}")
            line_no, line = lines[idx]
            toks = line.split()
            if len(toks) != 3 or toks[0] != "v":
                raise FormatError(f"expected color line 'v <vertex> <color>', got {line!r}", line_no)
            v = _parse_int_token(toks[1], "vertex", line_no)
            c = _parse_int_token(toks[2], "color", line_no)
            if not (1 <= v <= n):
                raise FormatError(f"vertex {v} outside 1..{n}", line_no)
            if v in assignment:
                raise FormatError(f"vertex {v} colored twice", line_no)
            if not (1 <= c <= k):
                raise FormatError(f"color {c} outside 1..{k}", line_no)
            assignment[v] = c
            idx += 1

    g = Graph(n=n, edges=tuple(sorted(seen_edges)))
    cg = ColoredGraph(g, Coloring(k, assignment))
    return cg, lines[idx:]


def parse_colored_graph(text: str) -> ColoredGraph:
    """Parse the rvcg text format.

    Layout: optional '#' comment or blank lines anywhere, one header
    'p rvcg <n> <m> <k>', then exactly m lines 'e <u> <v>', then (k > 0)
    exactly n lines 'v <vertex> <color>'.  Anything after that is an error.
    """
    cg, rest = _parse_rvcg_lines(_content_lines(text))
    if rest:
        line_no, line = rest[0]
        raise FormatError(f"unexpected trailing line {line!r}", line_no)
    return cg


def serialize_colored_graph(cg: ColoredGraph) -> str:
    """Canonical rvcg text: header, sorted edge lines, ascending color lines."""
    g, col = cg.graph, cg.coloring
    out = [f"p rvcg {g.n} {len(g.edges)} {col.palette_size}"]
    for u, v in g.edges:
        out.append(f"e {u} {v}")
    if col.palette_size > 0:
        for v in range(1, g.n + 1):
            out.append(f"v {v} {col.assignment[v]}")
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> tuple[ColoredGraph, tuple[tuple[int, int], ...]]:
    """Parse an rvcg block optionally followed by 'p <u> <v>' pair lines.

    The pair section carries a query pair, a pair set, or an ordered
    pairing, depending on the consuming command.  Pairs are returned in
    file order, unnormalized beyond an endpoint range check.
    """
    cg, rest = _parse_rvcg_lines(_content_lines(text))
    n = cg.graph.n
    pairs: list[tuple[int, int]] = []
    for line_no, line in rest:
        toks = line.split()
        if len(toks) != 3 or toks[0] != "p":
            raise FormatError(f"expected pair line 'p <u> <v>', got {line!r}", line_no)
        u = _parse_int_token(toks[1], "pair endpoint", line_no)
        v = _parse_int_token(toks[2], "pair endpoint", line_no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"pair ({u}, {v}) has an endpoint outside 1..{n}", line_no)
        pairs.append((u, v))
    return cg, tuple(pairs)


def serialize_instance(cg: ColoredGraph, pairs: Iterable[tuple[int, int]]) -> str:
    out = serialize_colored_graph(cg)
    lines = [f"p {u} {v}" for u, v in pairs]
    if lines:
        out += "\n".join(lines) + "\n"
    return out
