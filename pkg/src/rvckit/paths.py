"""Exact rainbow-path checking.

A path is rainbow when its internal vertices (endpoints excluded) carry
pairwise distinct colors. The existence search runs over (vertex,
used-color-set) states, which is exact: any minimal rainbow walk is a
simple path, because cutting a repeated vertex out of a walk keeps it
rainbow and makes it shorter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import SizeLimitError, ValidationError
from .graphs import MAX_PALETTE, ColoredGraph, adjacency, adjacency_bits, all_pairs_distances, is_connected

# bitmask kernels index vertices into int64 words
_KERNEL_MAX_N = 62
_KERNEL_MAX_K = 16


@dataclass(frozen=True)
class PathVerdict:
    holds: bool
    path: tuple[int, ...] | None = None


@dataclass(frozen=True)
class CheckVerdict:
    holds: bool
    failing_pair: tuple[int, int] | None = None


def _check_vertex(g, v, what: str) -> None:
    if not isinstance(v, int) or not (1 <= v <= g.n):
        raise ValidationError(f"{what} {v!r} is not a vertex in 1..{g.n}")


def _color_list(cg: ColoredGraph) -> list[int]:
    # 0-based colors indexed by vertex; slot 0 unused
    out = [0] * (cg.graph.n + 1)
    for v, c in cg.coloring.assignment.items():
        out[v] = c - 1
    return out


def is_rainbow_path(cg: ColoredGraph, path) -> bool:
    q = tuple(path)
    if not q:
        raise ValidationError("a path must contain at least one vertex")
    for v in q:
        _check_vertex(cg.graph, v, "path vertex")
    if len(set(q)) != len(q):
        raise ValidationError("path repeats a vertex")
    nbr = adjacency(cg.graph)
    for a, b in zip(q, q[1:]):
        if b not in nbr[a]:
            raise ValidationError(f"path step {a}-{b} is not an edge")
    internal = q[1:-1]
    if not internal:
        return True
    if cg.coloring.palette_size == 0:
        return False
    colors = [cg.coloring.assignment[v] for v in internal]
    return len(set(colors)) == len(colors)


def _require_query(cg: ColoredGraph, s: int, t: int) -> None:
    _check_vertex(cg.graph, s, "source")
    _check_vertex(cg.graph, t, "target")
    if s == t:
        raise ValidationError("source and target must differ")
    if not is_connected(cg.graph):
        raise ValidationError("graph must be connected")
    if cg.coloring.palette_size > MAX_PALETTE:
        raise SizeLimitError(f"palette size {cg.coloring.palette_size} exceeds the {MAX_PALETTE}-color limit")


def find_rainbow_path(cg: ColoredGraph, s: int, t: int) -> PathVerdict:
    """Exact shortest rainbow s-t path, lexicographically least among the
    shortest; PathVerdict(False, None) when no coloring-respecting path
    exists."""
    _require_query(cg, s, t)
    g = cg.graph
    nbr = adjacency(g)
    if t in nbr[s]:
        return PathVerdict(True, (s, t))
    k = cg.coloring.palette_size
    if k == 0:
        # no colors: only adjacent pairs have rainbow paths
        return PathVerdict(False, None)
    color = _color_list(cg)
    sorted_nbr = [sorted(ns) for ns in nbr]

    # forward BFS over states (v, mask of colors consumed before v)
    dist = {}
    frontier = []
    for w in sorted_nbr[s]:
        if w != t:
            dist[(w, 0)] = 1
            frontier.append((w, 0))
    while frontier:
        nxt = []
        for v, m in frontier:
            cb = 1 << color[v]
            if m & cb:
                continue
            nm = m | cb
            for w in sorted_nbr[v]:
                if w == t:
                    continue
                st = (w, nm)
                if st not in dist:
                    dist[st] = dist[(v, m)] + 1
                    nxt.append(st)
        frontier = nxt

    # remaining-steps DP over the reachable states; masks strictly grow
    # along transitions, so decreasing popcount is a valid order
    inf = float("inf")
    rem = {}
    for v, m in sorted(dist, key=lambda st: -bin(st[1]).count("1")):
        cb = 1 << color[v]
        if m & cb:
            continue
        nm = m | cb
        best = inf
        for w in sorted_nbr[v]:
            if w == t:
                best = 1
                break
            r = rem.get((w, nm), inf)
            if r + 1 < best:
                best = r + 1
        if best < inf:
            rem[(v, m)] = best

    total = inf
    for w in sorted_nbr[s]:
        if w != t and (w, 0) in rem:
            total = min(total, 1 + rem[(w, 0)])
    if total == inf:
        return PathVerdict(False, None)

    # greedy reconstruction: smallest feasible vertex at every position
    path = [s]
    state = None
    for w in sorted_nbr[s]:
        if w != t and rem.get((w, 0), inf) == total - 1:
            state = (w, 0)
            break
    path.append(state[0])
    while True:
        v, m = state
        left = rem[(v, m)]
        if left == 1:
            path.append(t)
            return PathVerdict(True, tuple(path))
        nm = m | (1 << color[v])
        for w in sorted_nbr[v]:
            if w != t and rem.get((w, nm), inf) == left - 1:
                state = (w, nm)
                break
        path.append(state[0])


def _pair_has_rainbow_path(sorted_nbr, color, k: int, s: int, t: int) -> bool:
    # existence-only variant of the state search
    if t in sorted_nbr[s]:
        return True
    if k == 0:
        return False
    seen = set()
    frontier = []
    for w in sorted_nbr[s]:
        if w != t:
            seen.add((w, 0))
            frontier.append((w, 0))
    while frontier:
        nxt = []
        for v, m in frontier:
            cb = 1 << color[v]
            if m & cb:
                continue
            nm = m | cb
            for w in sorted_nbr[v]:
                if w == t:
                    return True
                st = (w, nm)
                if st not in seen:
                    seen.add(st)
                    nxt.append(st)
        frontier = nxt
    return False


def _kernel_inputs(cg: ColoredGraph):
    g = cg.graph
    k = cg.coloring.palette_size
    if not (g.n <= _KERNEL_MAX_N and 1 <= k <= _KERNEL_MAX_K):
        return None
    adj = adjacency_bits(g).astype(np.int64)
    colors = np.zeros(g.n, dtype=np.int64)
    for v, c in cg.coloring.assignment.items():
        colors[v - 1] = c - 1
    return adj, colors, k


def _check_pair_list(cg: ColoredGraph, pairs) -> CheckVerdict:
    # pairs are normalized, deduplicated, and sorted by the caller
    if not pairs:
        return CheckVerdict(True, None)
    kin = _kernel_inputs(cg)
    if kin is not None:
        adj, colors, k = kin
        arr = np.array([(u - 1, v - 1) for u, v in pairs], dtype=np.int64).reshape(-1, 2)
        idx = int(_backend.kernels.rainbow_pairs_ok(adj, colors, k, arr))
        if idx < 0:
            return CheckVerdict(True, None)
        return CheckVerdict(False, pairs[idx])
    nbr = adjacency(cg.graph)
    sorted_nbr = [sorted(ns) for ns in nbr]
    color = _color_list(cg)
    k = cg.coloring.palette_size
    dmat = all_pairs_distances(cg.graph)
    for u, v in pairs:
        if k > 0 and dmat[u, v] <= 2:
            # one internal vertex at most: rainbow under any coloring
            continue
        if not _pair_has_rainbow_path(sorted_nbr, color, k, u, v):
            return CheckVerdict(False, (u, v))
    return CheckVerdict(True, None)


def check_rainbow_vertex_connected(cg: ColoredGraph) -> CheckVerdict:
    """Whole-graph check; on failure reports the lexicographically least
    pair with no rainbow path."""
    if not is_connected(cg.graph):
        raise ValidationError("graph must be connected")
    if cg.coloring.palette_size > MAX_PALETTE:
        raise SizeLimitError(f"palette size {cg.coloring.palette_size} exceeds the {MAX_PALETTE}-color limit")
    n = cg.graph.n
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return _check_pair_list(cg, pairs)


def check_pairs(cg: ColoredGraph, pairs) -> CheckVerdict:
    """check_rainbow_vertex_connected restricted to a pair set."""
    if not is_connected(cg.graph):
        raise ValidationError("graph must be connected")
    if cg.coloring.palette_size > MAX_PALETTE:
        raise SizeLimitError(f"palette size {cg.coloring.palette_size} exceeds the {MAX_PALETTE}-color limit")
    norm = set()
    for u, v in pairs:
        _check_vertex(cg.graph, u, "pair endpoint")
        _check_vertex(cg.graph, v, "pair endpoint")
        if u == v:
            raise ValidationError(f"pair ({u},{v}) is reflexive")
        norm.add((min(u, v), max(u, v)))
    return _check_pair_list(cg, sorted(norm))


def naive_all_paths_check(cg: ColoredGraph, s: int, t: int) -> PathVerdict:
    """Independent oracle: enumerate every simple s-t path by DFS and test
    each with is_rainbow_path; returns the shortest, lexicographically
    least rainbow path."""
    if cg.graph.n > 10:
        raise SizeLimitError(f"naive oracle is limited to 10 vertices, got {cg.graph.n}")
    _require_query(cg, s, t)
    sorted_nbr = [sorted(ns) for ns in adjacency(cg.graph)]
    best = None
    path = [s]
    on_path = {s}

    def extend(v):
        nonlocal best
        for w in sorted_nbr[v]:
            if w == t:
                q = tuple(path) + (t,)
                if is_rainbow_path(cg, q):
                    key = (len(q), q)
                    if best is None or key < best:
                        best = key
                continue
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            extend(w)
            path.pop()
            on_path.remove(w)

    extend(s)
    if best is None:
        return PathVerdict(False, None)
    return PathVerdict(True, best[1])
