"""Exhaustive small-instance generators and reduction verification suites.

Everything here is deterministic: generators stream instances in a fixed
documented order, and the suites compare exact deciders on both sides of
each reduction, collecting mismatches for diagnosis.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from . import _backend
from .errors import SizeLimitError, ValidationError
from .graphs import build_coloring, build_graph, colored_graph, serialize_instance
from .paths import check_rainbow_vertex_connected, find_rainbow_path
from .reductions import (
    decode_diffpairs_witness,
    decode_st_witness,
    decoded_satisfies,
    diffpairs_to_subset,
    sat_to_diffpairs,
    sat_to_st,
    st_to_global,
    subset_to_rvc2,
)
from .sat import brute_force_sat, build_formula, to_dimacs
from .solve import Pairing, decide_diffpairs_rvc2, decide_rvc_le_k, decide_subset_rvc2

MAX_ENUM_GRAPH_ORDER = 7
MAX_ENUM_CNF_VARS = 3
MAX_ENUM_CNF_CLAUSES = 4

REDUCTION_NAMES = (
    "st-to-global",
    "sat-to-st",
    "subset-to-rvc2",
    "diffpairs-to-subset",
    "sat-to-diffpairs",
)


@dataclass(frozen=True)
class SuiteReport:
    reduction: str
    instances: int
    mismatches: tuple[tuple[str, bool, bool], ...]
    elapsed: float


def enumerate_connected_graphs(n: int):
    """All labeled connected simple graphs on vertices 1..n, each once, in
    lexicographic edge-set order.  Limits are checked before the first
    graph is produced."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"order must be a positive integer, got {n!r}")
    if n > MAX_ENUM_GRAPH_ORDER:
        raise SizeLimitError(f"graph enumeration is limited to {MAX_ENUM_GRAPH_ORDER} vertices, got {n}")
    return _graph_stream(n)


def _graph_stream(n: int):
    slots = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    masks = _backend.kernels.connected_masks(n)
    edge_sets = []
    for mask in masks:
        m = int(mask)
        edge_sets.append(tuple(slots[i] for i in range(len(slots)) if (m >> i) & 1))
    edge_sets.sort()
    for edges in edge_sets:
        yield build_graph(n, edges)


def _clause_pool(num_vars: int, clause_sizes):
    pool = []
    for size in clause_sizes:
        for combo in itertools.combinations(range(1, num_vars + 1), size):
            for signs in range(1 << size):
                pool.append(tuple(v if not (signs >> i) & 1 else -v for i, v in enumerate(combo)))
    return pool


def enumerate_small_cnf(max_vars: int, max_clauses: int, normalized_only: bool = False, clause_sizes=(3,)):
    """All CNF formulas with 1..max_clauses distinct clauses over variables
    1..max_vars, deduplicated up to clause order. Clauses use distinct
    variables and the given sizes (3-literal by default); normalized_only
    keeps only formulas where every variable occurs in both polarities."""
    if not isinstance(max_vars, int) or max_vars < 1:
        raise ValidationError(f"variable limit must be a positive integer, got {max_vars!r}")
    if not isinstance(max_clauses, int) or max_clauses < 1:
        raise ValidationError(f"clause limit must be a positive integer, got {max_clauses!r}")
    if max_vars > MAX_ENUM_CNF_VARS:
        raise SizeLimitError(f"formula enumeration is limited to {MAX_ENUM_CNF_VARS} variables, got {max_vars}")
    if max_clauses > MAX_ENUM_CNF_CLAUSES:
        raise SizeLimitError(f"formula enumeration is limited to {MAX_ENUM_CNF_CLAUSES} clauses, got {max_clauses}")
    for size in clause_sizes:
        if size not in (1, 2, 3):
            raise ValidationError(f"clause sizes must be within 1..3, got {size!r}")
    pool = _clause_pool(max_vars, clause_sizes)
    return _cnf_stream(max_vars, max_clauses, normalized_only, pool)


def _cnf_stream(max_vars, max_clauses, normalized_only, pool):
    for m in range(1, max_clauses + 1):
        for clauses in itertools.combinations(pool, m):
            f = build_formula(max_vars, clauses)
            if normalized_only and not _fully_normalized(f):
                continue
            yield f


def _fully_normalized(f) -> bool:
    # strict: every variable 1..num_vars occurs in both polarities
    pos = set()
    neg = set()
    for clause in f.clauses:
        for lit in clause:
            (pos if lit > 0 else neg).add(abs(lit))
    return pos == neg == set(range(1, f.num_vars + 1))


def unsat_full_sign_formula():
    """The 8-clause formula over x1..x3 containing every sign pattern;
    unsatisfiable by exhaustion of all assignments."""
    clauses = []
    for signs in range(8):
        clauses.append(tuple((j + 1) if not (signs >> j) & 1 else -(j + 1) for j in range(3)))
    return build_formula(3, clauses)


def _all_colorings(n: int, k: int):
    for combo in itertools.product(range(1, k + 1), repeat=n):
        yield {v: combo[v - 1] for v in range(1, n + 1)}


class _Suite:
    def __init__(self, name: str, fail_fast: bool):
        self.name = name
        self.fail_fast = fail_fast
        self.instances = 0
        self.mismatches = []

    def record(self, instance: str, source: bool, target: bool) -> bool:
        """Count one comparison; returns False when the suite should stop."""
        self.instances += 1
        if source != target:
            self.mismatches.append((instance, source, target))
            if self.fail_fast:
                return False
        return True


def _verify_st_to_global(suite: _Suite, max_n: int, max_k: int):
    for n in range(2, max_n + 1):
        for g in enumerate_connected_graphs(n):
            for k in range(1, max_k + 1):
                for assignment in _all_colorings(n, k):
                    cg = colored_graph(g, build_coloring(k, assignment))
                    for s in range(1, n + 1):
                        for t in range(1, n + 1):
                            if s == t:
                                continue
                            source = find_rainbow_path(cg, s, t).holds
                            gadget, _ = st_to_global(cg, s, t)
                            target = check_rainbow_vertex_connected(gadget).holds
                            if not suite.record(serialize_instance(cg, ((s, t),)), source, target):
                                return


def _verify_sat_to_st(suite: _Suite, max_vars: int, max_m: int):
    for f in enumerate_small_cnf(max_vars, max_m, normalized_only=True):
        source = brute_force_sat(f).sat
        gadget, s, t, cert = sat_to_st(f)
        verdict = find_rainbow_path(gadget, s, t)
        if not suite.record(to_dimacs(f), source, verdict.holds):
            return
        if verdict.holds:
            decoded = decode_st_witness(cert, verdict.path, gadget)
            if not suite.record("decode:" + to_dimacs(f), True, decoded_satisfies(f, decoded)):
                return


def _verify_subset_to_rvc2(suite: _Suite, max_n: int):
    for n in range(1, max_n + 1):
        for g in enumerate_connected_graphs(n):
            all_pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
            for r in range(len(all_pairs) + 1):
                for pset in itertools.combinations(all_pairs, r):
                    source = decide_subset_rvc2(g, pset).holds
                    gadget, _ = subset_to_rvc2(g, pset)
                    target = decide_rvc_le_k(gadget, 2).holds
                    instance = serialize_instance(colored_graph(g, build_coloring(0, {})), pset)
                    if not suite.record(instance, source, target):
                        return


def _verify_diffpairs_to_subset(suite: _Suite, max_n: int):
    for n in range(2, max_n + 1):
        for g in enumerate_connected_graphs(n):
            for v1 in range(1, n + 1):
                for v2 in range(1, n + 1):
                    if v1 == v2:
                        continue
                    pairing = Pairing((v1,), (v2,))
                    source = decide_diffpairs_rvc2(g, pairing).holds
                    gadget, pset, _ = diffpairs_to_subset(g, pairing)
                    target = decide_subset_rvc2(gadget, pset).holds
                    instance = serialize_instance(colored_graph(g, build_coloring(0, {})), ((v1, v2),))
                    if not suite.record(instance, source, target):
                        return


def _verify_sat_to_diffpairs(suite: _Suite, max_vars: int, max_m: int):
    def run_one(f) -> bool:
        source = brute_force_sat(f).sat
        gadget, pairing, cert = sat_to_diffpairs(f)
        verdict = decide_diffpairs_rvc2(gadget, pairing)
        if not suite.record(to_dimacs(f), source, verdict.holds):
            return False
        if verdict.holds:
            decoded = decode_diffpairs_witness(cert, verdict.witness, gadget)
            if not suite.record("decode:" + to_dimacs(f), True, decoded_satisfies(f, decoded)):
                return False
        return True

    for f in enumerate_small_cnf(max_vars, max_m, normalized_only=True):
        if not run_one(f):
            return
    run_one(unsat_full_sign_formula())


def verify_reduction(name: str, *, max_n: int | None = None, max_m: int | None = None,
                     max_k: int | None = None, fail_fast: bool = False) -> SuiteReport:
    """Run the exhaustive equivalence family for one reduction, comparing
    the exact deciders on both sides (plus decoder soundness for the
    formula reductions)."""
    if name not in REDUCTION_NAMES:
        raise ValidationError(f"unknown reduction {name!r}; expected one of {', '.join(REDUCTION_NAMES)}")
    suite = _Suite(name, fail_fast)
    start = time.perf_counter()
    if name == "st-to-global":
        _verify_st_to_global(suite, max_n or 4, max_k or 3)
    elif name == "sat-to-st":
        _verify_sat_to_st(suite, max_n or 3, max_m or 4)
    elif name == "subset-to-rvc2":
        _verify_subset_to_rvc2(suite, max_n or 4)
    elif name == "diffpairs-to-subset":
        _verify_diffpairs_to_subset(suite, max_n or 4)
    else:
        _verify_sat_to_diffpairs(suite, max_n or 3, max_m or 4)
    elapsed = time.perf_counter() - start
    return SuiteReport(name, suite.instances, tuple(suite.mismatches), elapsed)
