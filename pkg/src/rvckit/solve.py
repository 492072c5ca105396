"""Exact optimization and decision for rainbow vertex-connection.

Palette-size decisions enumerate candidate colorings in canonical order
(restricted-growth strings in vertex order) so the first witness found is
deterministic. The two-color case instead runs a small constraint search
whose first model is the lexicographically least valid coloring, which is
exactly the first canonical candidate: any valid two-coloring stays valid
under swapping the two colors, so the lex-least valid string starts with
color 1, and degree-1 vertices are never internal to a simple path, so the
lex-least valid string colors them 1 as well.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import InconsistencyError, SizeLimitError, ValidationError
from .graphs import Coloring, Graph, adjacency, adjacency_bits, all_pairs_distances, build_coloring, graph_metrics, is_connected

# exhaustive searches are desk-scale by contract
MAX_N_TWO_COLOR = 24
MAX_N_TWO_COLOR_ENGINE = 512
MAX_N_MANY_COLOR = 12
_ENGINE_BUDGET = 1 << 22
_FULL_ODOMETER_CAP = 1 << 24


@dataclass(frozen=True)
class Bounds:
    lower: int
    upper: int
    ky_bound: float | None
    exact: int | None


@dataclass(frozen=True)
class Pairing:
    v1: tuple[int, ...]
    v2: tuple[int, ...]


@dataclass(frozen=True)
class ColoringVerdict:
    holds: bool
    witness: Coloring | None = None


def build_pairing(g: Graph, v1, v2) -> Pairing:
    a = tuple(v1)
    b = tuple(v2)
    if len(a) != len(b):
        raise ValidationError(f"pairing sides have different lengths ({len(a)} vs {len(b)})")
    for v in a + b:
        if not isinstance(v, int) or not (1 <= v <= g.n):
            raise ValidationError(f"pairing vertex {v!r} is not a vertex in 1..{g.n}")
    if len(set(a)) != len(a) or len(set(b)) != len(b):
        raise ValidationError("pairing sides must not repeat vertices")
    if set(a) & set(b):
        raise ValidationError("pairing sides must be disjoint")
    return Pairing(a, b)


def rvc_bounds(g: Graph) -> Bounds:
    met = graph_metrics(g)
    if not met.connected:
        raise ValidationError("graph must be connected")
    lower = max(0, met.diameter - 1)
    upper = 0 if met.is_complete else g.n - 2
    ky = 11.0 * g.n / met.min_degree if met.min_degree > 0 else None
    if met.is_complete:
        exact = 0
    elif met.diameter <= 2:
        exact = met.diameter - 1
    elif lower == upper:
        exact = lower
    else:
        exact = None
    return Bounds(lower, upper, ky, exact)


def _witness_coloring(k: int, colors01) -> Coloring:
    # colors01 is 0-based per vertex index; palette stays at the decision size
    return build_coloring(k, {v + 1: int(c) + 1 for v, c in enumerate(colors01)})


def _two_color_engine(n: int, clauses, budget: int = _ENGINE_BUDGET):
    """Search for the lexicographically least 0/1 assignment over vertices
    0..n-1 satisfying every clause, where a clause is a tuple of vertex
    pairs and is satisfied when at least one pair gets two different
    values. Returns the assignment list or None."""
    for edges in clauses:
        if not edges:
            raise InconsistencyError("constraint with no satisfiable option was built")
    occ = [[] for _ in range(n)]
    for ci, edges in enumerate(clauses):
        touched = set()
        for a, b in edges:
            touched.add(a)
            touched.add(b)
        for v in touched:
            occ[v].append(ci)
    assign = [-1] * n
    trail = []
    pending = []
    ops = 0

    def set_value(v: int, val: int) -> bool:
        nonlocal ops
        ops += 1
        if ops > budget:
            raise SizeLimitError("two-color constraint search exceeded its node budget")
        if assign[v] != -1:
            return assign[v] == val
        assign[v] = val
        trail.append(v)
        pending.append(v)
        return True

    def propagate() -> bool:
        while pending:
            v = pending.pop()
            for ci in occ[v]:
                sat = False
                live = []
                for a, b in clauses[ci]:
                    xa = assign[a]
                    xb = assign[b]
                    if xa != -1 and xb != -1:
                        if xa != xb:
                            sat = True
                            break
                    else:
                        live.append((a, b))
                if sat:
                    continue
                if not live:
                    return False
                if len(live) == 1:
                    a, b = live[0]
                    xa = assign[a]
                    xb = assign[b]
                    if xa != -1:
                        if not set_value(b, 1 - xa):
                            return False
                    elif xb != -1:
                        if not set_value(a, 1 - xb):
                            return False
        return True

    decisions = []
    while True:
        if propagate():
            branch = -1
            for i in range(n):
                if assign[i] == -1:
                    branch = i
                    break
            if branch < 0:
                for edges in clauses:
                    if not any(assign[a] != assign[b] for a, b in edges):
                        raise InconsistencyError("search returned a model violating a constraint")
                return assign
            decisions.append((branch, 0, len(trail)))
            set_value(branch, 0)
        else:
            while True:
                if not decisions:
                    return None
                v, val, mark = decisions.pop()
                while len(trail) > mark:
                    assign[trail.pop()] = -1
                pending.clear()
                if val == 0:
                    decisions.append((v, 1, mark))
                    set_value(v, 1)
                    break


def _two_color_clauses(g: Graph, required_pairs, diffs):
    """Translate a two-color instance into engine clauses, or conclude it
    unsatisfiable outright. Returns (clauses, feasible)."""
    nbr = adjacency(g)
    dmat = all_pairs_distances(g)
    clauses = [(pair,) for pair in diffs]
    for u, v in required_pairs:
        d = int(dmat[u, v])
        if d <= 2:
            # at most one internal vertex: rainbow under every coloring
            continue
        if d >= 4:
            # needs at least three distinct internal colors
            return None, False
        # distance 3: the path must be u-a-b-v, so some edge between a
        # neighbor of u and a neighbor of v must be bichromatic
        mids = set()
        for a in nbr[u]:
            for b in nbr[a]:
                if b in nbr[v] and b != u and a != v:
                    mids.add((min(a, b) - 1, max(a, b) - 1))
        if not mids:
            raise InconsistencyError(f"distance-3 pair ({u},{v}) produced no mid edges")
        clauses.append(tuple(sorted(mids)))
    return clauses, True


def _decide_two_colors(g: Graph, required_pairs, diffs) -> ColoringVerdict:
    clauses, feasible = _two_color_clauses(g, required_pairs, diffs)
    if not feasible:
        return ColoringVerdict(False, None)
    model = _two_color_engine(g.n, clauses)
    if model is None:
        return ColoringVerdict(False, None)
    return ColoringVerdict(True, _witness_coloring(2, model))


def _decide_by_enumeration(g: Graph, k: int, use_symmetry: bool, pin_leaves: bool) -> ColoringVerdict:
    n = g.n
    dmat = all_pairs_distances(g)
    required = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            d = int(dmat[u, v])
            if d - 1 > k:
                return ColoringVerdict(False, None)
            if d >= 3:
                required.append((u - 1, v - 1))
    nbr = adjacency(g)
    pinned = [pin_leaves and len(nbr[v]) == 1 for v in range(1, n + 1)]
    free = [v for v in range(n) if not pinned[v]]
    if not use_symmetry and k ** len(free) > _FULL_ODOMETER_CAP:
        raise SizeLimitError("plain odometer search space is too large; enable symmetry pruning")
    adj = adjacency_bits(g).astype(np.int64)
    pairs = np.array(required, dtype=np.int64).reshape(-1, 2)
    diffs = np.empty((0, 2), dtype=np.int64)
    free_arr = np.array(free, dtype=np.int64)
    colors = np.zeros(n, dtype=np.int64)
    found = int(_backend.kernels.decide_first_witness(adj, k, pairs, diffs, free_arr, colors, use_symmetry))
    if not found:
        return ColoringVerdict(False, None)
    return ColoringVerdict(True, _witness_coloring(k, colors.tolist()))


def decide_rvc_le_k(g: Graph, k: int, *, use_symmetry: bool = True, pin_leaves: bool = True) -> ColoringVerdict:
    """Exact decision of rvc(g) <= k with a witness coloring; the witness
    is the first valid coloring in canonical enumeration order."""
    if not is_connected(g):
        raise ValidationError("graph must be connected")
    if not isinstance(k, int) or k < 0 or k > g.n:
        raise ValidationError(f"palette size must be an integer in 0..{g.n}, got {k!r}")
    met = graph_metrics(g)
    if k == 0:
        if met.is_complete:
            return ColoringVerdict(True, build_coloring(0, {}))
        return ColoringVerdict(False, None)
    if k == 1:
        # two equal-colored internal vertices never occur on paths of
        # length <= 2, and diameter >= 3 forces two internal vertices
        if met.diameter <= 2:
            return ColoringVerdict(True, _witness_coloring(1, [0] * g.n))
        return ColoringVerdict(False, None)
    if use_symmetry and pin_leaves:
        if k == 2:
            if g.n > MAX_N_TWO_COLOR_ENGINE:
                raise SizeLimitError(f"two-color decision is limited to {MAX_N_TWO_COLOR_ENGINE} vertices, got {g.n}")
            all_pairs = [(u, v) for u in range(1, g.n + 1) for v in range(u + 1, g.n + 1)]
            return _decide_two_colors(g, all_pairs, [])
        if g.n > MAX_N_MANY_COLOR:
            raise SizeLimitError(f"search with {k} colors is limited to {MAX_N_MANY_COLOR} vertices, got {g.n}")
        return _decide_by_enumeration(g, k, True, True)
    limit = MAX_N_TWO_COLOR if k == 2 else MAX_N_MANY_COLOR
    if g.n > limit:
        raise SizeLimitError(f"unpruned search with {k} colors is limited to {limit} vertices, got {g.n}")
    return _decide_by_enumeration(g, k, use_symmetry, pin_leaves)


def rvc_exact(g: Graph) -> tuple[int, Coloring]:
    bounds = rvc_bounds(g)
    for k in range(bounds.lower, bounds.upper + 1):
        verdict = decide_rvc_le_k(g, k)
        if verdict.holds:
            return k, verdict.witness
    raise InconsistencyError("no palette size up to the upper bound worked")


def _check_pairset_arg(g: Graph, pairs):
    norm = set()
    for u, v in pairs:
        if not isinstance(u, int) or not (1 <= u <= g.n) or not isinstance(v, int) or not (1 <= v <= g.n):
            raise ValidationError(f"pair ({u!r},{v!r}) is out of range")
        if u == v:
            raise ValidationError(f"pair ({u},{v}) is reflexive")
        norm.add((min(u, v), max(u, v)))
    return sorted(norm)


def decide_subset_rvc2(g: Graph, pairs) -> ColoringVerdict:
    """Is there a 2-coloring making every requested pair rainbow
    vertex-connected?"""
    if not is_connected(g):
        raise ValidationError("graph must be connected")
    if g.n > MAX_N_TWO_COLOR:
        raise SizeLimitError(f"subset decision is limited to {MAX_N_TWO_COLOR} vertices, got {g.n}")
    required = _check_pairset_arg(g, pairs)
    return _decide_two_colors(g, required, [])


def decide_diffpairs_rvc2(g: Graph, pairing: Pairing) -> ColoringVerdict:
    """Is there a 2-coloring making the whole graph rainbow
    vertex-connected while coloring pairing.v1[i] and pairing.v2[i]
    differently for every i?"""
    if not is_connected(g):
        raise ValidationError("graph must be connected")
    if g.n > MAX_N_TWO_COLOR:
        raise SizeLimitError(f"pairing decision is limited to {MAX_N_TWO_COLOR} vertices, got {g.n}")
    pairing = build_pairing(g, pairing.v1, pairing.v2)
    all_pairs = [(u, v) for u in range(1, g.n + 1) for v in range(u + 1, g.n + 1)]
    diffs = [(a - 1, b - 1) for a, b in zip(pairing.v1, pairing.v2)]
    return _decide_two_colors(g, all_pairs, diffs)
