"""Acceptance battery.

One test per exit criterion, each printing a single pass/fail line with
the load-bearing numbers. Run with -s to watch the lines land:

    python3 -m pytest -s tests/test_acceptance.py
"""

from __future__ import annotations

import contextlib
import io
import itertools
import json
import random
import time

import numpy as np

import rvckit as rk
from rvckit import _backend, cli

import helpers


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_path_finder_agrees_with_exhaustive_search():
    # dual route in compiled code over every connected graph on 2..6
    # vertices, 200 random colorings per palette size, one pair each;
    # then a slower spot check through the two public functions
    t0 = time.perf_counter()
    graphs = 0
    disagreement = None
    rng = random.Random(20260818)
    spot_checks = 0
    for n in range(2, 7):
        for idx, g in enumerate(rk.enumerate_connected_graphs(n)):
            graphs += 1
            adj = rk.adjacency_bits(g).astype(np.int64)
            for k in (1, 2, 3):
                seed = (n * 1000003 + idx * 7 + k) & 0x7FFFFFFF
                bad = int(_backend.kernels.oracle_compare_batch(adj, k, 200, seed))
                if bad >= 0:
                    disagreement = (n, idx, k, bad)
            if idx % 997 == 0:
                for k in (1, 2, 3):
                    cg = helpers.color_all(g, [rng.randint(1, k) for _ in range(n)], k)
                    s = rng.randint(1, n)
                    t = rng.randint(1, n - 1)
                    if t >= s:
                        t += 1
                    found = rk.find_rainbow_path(cg, s, t)
                    naive = rk.naive_all_paths_check(cg, s, t)
                    assert found.holds == naive.holds
                    if found.holds:
                        assert found.path[0] == s and found.path[-1] == t
                        assert helpers.rainbow_by_definition(cg, found.path)
                    spot_checks += 1
    elapsed = time.perf_counter() - t0
    ok = disagreement is None and elapsed < 120.0
    _report(1, ok, f"{graphs} graphs x 3 palettes x 200 samples, {spot_checks} spot checks, {elapsed:.1f}s")


def test_criterion_2_bounds_hold_on_every_small_graph():
    t0 = time.perf_counter()
    graphs = 0
    for n in range(1, 7):
        for g in rk.enumerate_connected_graphs(n):
            graphs += 1
            met = rk.graph_metrics(g)
            value, witness = rk.rvc_exact(g)
            assert value >= max(0, met.diameter - 1)
            if met.is_complete:
                assert value == 0
            else:
                assert 0 < value <= n - 2
            if 1 <= met.diameter <= 2:
                assert value == met.diameter - 1
            if met.min_degree > 0:
                assert value < 11.0 * n / met.min_degree
            assert witness.palette_size == value
            assert rk.check_rainbow_vertex_connected(rk.colored_graph(g, witness)).holds
    elapsed = time.perf_counter() - t0
    ok = elapsed < 300.0
    _report(2, ok, f"{graphs} graphs, lower/upper/zero-iff-complete/small-diameter/degree bounds, {elapsed:.1f}s")


def test_criterion_3_single_pair_reduction_suite():
    report = rk.verify_reduction("st-to-global", max_k=2)
    ok = report.instances == 7978 and not report.mismatches
    _report(3, ok, f"{report.instances} instances, {len(report.mismatches)} mismatches, {report.elapsed:.1f}s")


def test_criterion_4_formula_to_pair_reduction_suite():
    report = rk.verify_reduction("sat-to-st", max_m=3)
    ok = report.instances == 72 and not report.mismatches and report.elapsed < 300.0
    _report(4, ok, f"{report.instances} instances incl. witness decodes, {len(report.mismatches)} mismatches, {report.elapsed:.1f}s")


def test_criterion_5_chained_reduction_suites():
    reports = [
        rk.verify_reduction("subset-to-rvc2"),
        rk.verify_reduction("diffpairs-to-subset"),
        rk.verify_reduction("sat-to-diffpairs"),
    ]
    counts = [r.instances for r in reports]
    clean = all(not r.mismatches for r in reports)
    blocker = rk.unsat_full_sign_formula()
    gadget, pairing, _ = rk.sat_to_diffpairs(blocker)
    special = not rk.brute_force_sat(blocker).sat
    special = special and gadget.n == 16
    special = special and not rk.decide_diffpairs_rvc2(gadget, pairing).holds
    ok = counts == [2467, 482, 201] and clean and special
    _report(5, ok, f"suite sizes {counts}, all clean, 8-clause blocker stays unsolvable on {gadget.n} vertices")


def test_criterion_6_full_pipeline_matches_brute_force():
    fams = []
    for nv in (1, 2):
        fams.extend(rk.enumerate_small_cnf(nv, 2, normalized_only=True, clause_sizes=(1, 2)))
    assert len(fams) == 3
    checked = []
    for f in fams:
        g1, pairing, _ = rk.sat_to_diffpairs(f)
        g2, pset, _ = rk.diffpairs_to_subset(g1, pairing)
        g3, _ = rk.subset_to_rvc2(g2, pset)
        got = rk.decide_rvc_le_k(g3, 2).holds
        want = rk.brute_force_sat(f).sat
        assert got == want, f"pipeline disagrees on {f.clauses}"
        checked.append((g3.n, got))
    sizes = [n for n, _ in checked]
    _report(6, True, f"3 formulas through all three reductions, gadgets of {sizes} vertices, verdicts match")


def _run_cli(argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue()


def test_criterion_7_every_command_is_deterministic(tmp_path):
    c6 = "p rvcg 6 6 0\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n"
    mono = "p rvcg 6 6 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n" + "".join(
        f"v {v} 1\n" for v in range(1, 7)
    )
    query = "p rvcg 4 3 2\ne 1 2\ne 2 3\ne 3 4\nv 1 1\nv 2 1\nv 3 2\nv 4 1\np 1 4\n"
    dimacs = "p cnf 2 2\n1 2 0\n-1 -2 0\n"

    def wfile(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    graph_f = wfile("c6.rvcg", c6)
    mono_f = wfile("mono.rvcg", mono)
    query_f = wfile("query.rvcg", query)
    dimacs_f = wfile("f.cnf", dimacs)
    pairs_f = wfile("pairs.txt", "p 1 4\n")
    subset_in = wfile("subset.rvcg", c6 + "p 1 4\n")

    # prepared decode inputs: run the reductions once, solve the gadgets
    st_gadget = str(tmp_path / "st_gadget.rvcg")
    st_cert = str(tmp_path / "st_cert.txt")
    _run_cli(["reduce", "sat-to-st", "--in", dimacs_f, "--out", st_gadget, "--cert", st_cert])
    code, out = _run_cli(["st-check", st_gadget])
    path_f = wfile("path.txt", " ".join(map(str, json.loads(out)["path"])) + "\n")
    dp_gadget = str(tmp_path / "dp_gadget.rvcg")
    dp_cert = str(tmp_path / "dp_cert.txt")
    _run_cli(["reduce", "sat-to-diffpairs", "--in", dimacs_f, "--out", dp_gadget, "--cert", dp_cert])
    cg, embedded = rk.parse_instance(open(dp_gadget).read())
    pairing = rk.Pairing(tuple(p[0] for p in embedded), tuple(p[1] for p in embedded))
    witness = rk.decide_diffpairs_rvc2(cg.graph, pairing).witness
    dp_witness = wfile("dp_witness.rvcg", rk.serialize_colored_graph(rk.colored_graph(cg.graph, witness)))

    battery = [
        ["check", mono_f],
        ["st-check", query_f],
        ["solve", graph_f],
        ["decide-k", graph_f, "--k", "2"],
        ["decide-subset", graph_f, "--pairs", pairs_f],
        ["decide-diffpairs", graph_f, "--pairing", pairs_f],
        ["reduce", "st-to-global", "--in", query_f],
        ["reduce", "sat-to-st", "--in", dimacs_f],
        ["reduce", "subset-to-rvc2", "--in", subset_in],
        ["reduce", "diffpairs-to-subset", "--in", subset_in],
        ["reduce", "sat-to-diffpairs", "--in", dimacs_f],
        ["decode", "sat-to-st", "--cert", st_cert, "--witness", path_f],
        ["decode", "sat-to-diffpairs", "--cert", dp_cert, "--witness", dp_witness],
        ["verify", "st-to-global", "--max-n", "2"],
        ["verify", "sat-to-st", "--max-m", "2"],
        ["verify", "subset-to-rvc2", "--max-n", "2"],
        ["verify", "diffpairs-to-subset", "--max-n", "2"],
        ["verify", "sat-to-diffpairs", "--max-m", "2"],
        ["gen", "graphs", "--n", "4"],
        ["gen", "cnf", "--vars", "3", "--clauses", "2", "--normalized"],
    ]
    unstable = []
    for argv in battery:
        first = _run_cli(argv)
        second = _run_cli(argv)
        if first != second:
            unstable.append(argv[0])
    _report(7, not unstable, f"{len(battery)} commands run twice each, stdout byte-identical")


def test_criterion_8_named_values():
    cases = [
        ("petersen", helpers.petersen_graph(), 1),
        ("path4", helpers.path_graph(4), 2),
        ("path5", helpers.path_graph(5), 3),
        ("path6", helpers.path_graph(6), 4),
        ("cycle6", helpers.cycle_graph(6), 2),
    ]
    for n in range(2, 7):
        cases.append((f"complete{n}", helpers.complete_graph(n), 0))
    worst = 0.0
    for name, g, want in cases:
        t0 = time.perf_counter()
        value, witness = rk.rvc_exact(g)
        elapsed = time.perf_counter() - t0
        worst = max(worst, elapsed)
        assert value == want, f"{name}: got {value}, want {want}"
        assert rk.check_rainbow_vertex_connected(rk.colored_graph(g, witness)).holds
        assert elapsed < 10.0, f"{name} took {elapsed:.1f}s"
    _report(8, True, f"{len(cases)} named instances, slowest {worst:.2f}s")
