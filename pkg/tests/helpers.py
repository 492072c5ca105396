"""Named graphs and slow reference implementations shared by the tests.

The reference code here is deliberately independent of the package
internals: connectivity by recursive DFS, distances by Floyd-Warshall,
rainbow checks by enumerating simple paths, optimal palette sizes by
trying every coloring.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

import rvckit as rk


def path_graph(n):
    return rk.build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    return rk.build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n):
    return rk.build_graph(n, [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)])


def star_graph(n):
    return rk.build_graph(n, [(1, v) for v in range(2, n + 1)])


def petersen_graph():
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    return rk.build_graph(10, outer + inner + spokes)


def color_all(g, colors, k=None):
    """Build a colored graph from a color sequence over vertices 1..n."""
    palette = max(colors) if k is None else k
    assignment = {v: c for v, c in enumerate(colors, start=1)}
    return rk.colored_graph(g, rk.build_coloring(palette, assignment))


def neighbor_sets(g):
    nbrs = {v: set() for v in range(1, g.n + 1)}
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def dfs_connected(g):
    nbrs = neighbor_sets(g)
    seen = set()

    def walk(v):
        seen.add(v)
        for w in nbrs[v]:
            if w not in seen:
                walk(w)

    walk(1)
    return len(seen) == g.n


def floyd_warshall(g):
    """Distance dict keyed by ordered vertex pairs, None when unreachable."""
    inf = float("inf")
    verts = range(1, g.n + 1)
    dist = {(u, v): (0 if u == v else inf) for u in verts for v in verts}
    for u, v in g.edges:
        dist[(u, v)] = 1
        dist[(v, u)] = 1
    for w in verts:
        for u in verts:
            for v in verts:
                alt = dist[(u, w)] + dist[(w, v)]
                if alt < dist[(u, v)]:
                    dist[(u, v)] = alt
    return {p: (None if d == inf else d) for p, d in dist.items()}


def simple_paths(g, s, t):
    """Every simple s-t path, in no particular order."""
    nbrs = {v: sorted(ws) for v, ws in neighbor_sets(g).items()}
    out = []

    def walk(v, trail, used):
        if v == t:
            out.append(tuple(trail))
            return
        for w in nbrs[v]:
            if w not in used:
                trail.append(w)
                used.add(w)
                walk(w, trail, used)
                trail.pop()
                used.remove(w)

    walk(s, [s], {s})
    return out


def rainbow_by_definition(cg, path):
    """The distinct-internal-colors condition, straight off the wording."""
    inner = path[1:-1]
    if not inner:
        return True
    if cg.coloring.palette_size == 0:
        return False
    cols = [cg.coloring.assignment[v] for v in inner]
    return len(set(cols)) == len(cols)


def pair_ok_reference(cg, s, t):
    return any(rainbow_by_definition(cg, p) for p in simple_paths(cg.graph, s, t))


def graph_ok_reference(cg):
    n = cg.graph.n
    return all(
        pair_ok_reference(cg, u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
    )


def best_pair_path_reference(cg, s, t):
    """Shortest rainbow s-t path, ties broken lexicographically."""
    cands = [p for p in simple_paths(cg.graph, s, t) if rainbow_by_definition(cg, p)]
    if not cands:
        return None
    return min(cands, key=lambda p: (len(p), p))


def rvc_reference(g):
    """Optimal palette size by trying every coloring; keep n small."""
    assert g.n <= 5, "reference search is exponential"
    if graph_ok_reference(rk.colored_graph(g, rk.build_coloring(0, {}))):
        return 0
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(1, k + 1), repeat=g.n):
            if graph_ok_reference(color_all(g, colors, k)):
                return k
    raise AssertionError("every graph admits all-distinct colors")


def count_connected_graphs(n):
    """Labeled connected graph count by the inclusion-exclusion recurrence
    on the component containing vertex 1."""
    if n == 0:
        return 1
    total = 1 << (n * (n - 1) // 2)
    for k in range(1, n):
        total -= (
            _choose(n - 1, k - 1)
            * count_connected_graphs(k)
            * (1 << ((n - k) * (n - k - 1) // 2))
        )
    return total


def _choose(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


@st.composite
def connected_graph_st(draw, max_n=7, min_n=1):
    """Random connected graph: a random tree plus random extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = []
    for v in range(2, n + 1):
        edges.append((draw(st.integers(min_value=1, max_value=v - 1)), v))
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if draw(st.booleans()):
                edges.append((u, v))
    return rk.build_graph(n, edges)


@st.composite
def any_graph_st(draw, max_n=7):
    """Random graph, connected or not."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if draw(st.booleans()):
                edges.append((u, v))
    return rk.build_graph(n, edges)


@st.composite
def colored_graph_st(draw, max_n=7, max_k=4, min_n=1):
    g = draw(connected_graph_st(max_n=max_n, min_n=min_n))
    k = draw(st.integers(min_value=1, max_value=max_k))
    colors = [draw(st.integers(min_value=1, max_value=k)) for _ in range(g.n)]
    return color_all(g, colors, k)
