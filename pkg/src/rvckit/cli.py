"""Command-line surface.

All commands print newline-terminated JSON (or text formats for gadgets
and certificates) on stdout; timing and error messages go to stderr so
stdout stays byte-stable across runs.

Exit codes: deciders use 0 = holds, 1 = fails, 2 = error; verify uses
0 = clean, 1 = mismatches, 2 = error; everything else uses 0/2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import FormatError, RvckitError
from .graphs import (
    _content_lines,
    build_coloring,
    colored_graph,
    parse_colored_graph,
    parse_instance,
    serialize_colored_graph,
    serialize_instance,
)
from .harness import enumerate_connected_graphs, enumerate_small_cnf, verify_reduction
from .paths import check_rainbow_vertex_connected, find_rainbow_path
from .reductions import (
    decode_diffpairs_witness,
    decode_st_witness,
    diffpairs_to_subset,
    parse_certificate,
    sat_to_diffpairs,
    sat_to_st,
    serialize_certificate,
    st_to_global,
    subset_to_rvc2,
)
from .sat import parse_dimacs
from .solve import (
    Pairing,
    decide_diffpairs_rvc2,
    decide_rvc_le_k,
    decide_subset_rvc2,
    rvc_bounds,
    rvc_exact,
)

REDUCE_NAMES = ("st-to-global", "sat-to-st", "subset-to-rvc2", "diffpairs-to-subset", "sat-to-diffpairs")
DECODE_NAMES = ("sat-to-st", "sat-to-diffpairs")
VERIFY_NAMES = REDUCE_NAMES


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _witness_json(verdict):
    if verdict.witness is None:
        return None
    return {str(v): c for v, c in sorted(verdict.witness.assignment.items())}


def _parse_pair_file(text: str):
    pairs = []
    for line_no, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 3 or parts[0] != "p":
            raise FormatError("expected 'p <u> <v>'", line=line_no)
        try:
            pairs.append((int(parts[1]), int(parts[2])))
        except ValueError:
            raise FormatError("pair endpoints must be integers", line=line_no) from None
    return tuple(pairs)


def _parse_path_file(text: str):
    tokens = text.replace(",", " ").split()
    try:
        return tuple(int(tok) for tok in tokens)
    except ValueError:
        raise FormatError("witness path must be a list of vertex ids") from None


def _k0(graph):
    return colored_graph(graph, build_coloring(0, {}))


def _cmd_check(args) -> int:
    cg = parse_colored_graph(_read(args.file))
    verdict = check_rainbow_vertex_connected(cg)
    out = {"verdict": verdict.holds}
    if verdict.failing_pair is not None:
        out["failing_pair"] = list(verdict.failing_pair)
    _emit(out)
    return 0 if verdict.holds else 1


def _cmd_st_check(args) -> int:
    cg, embedded = parse_instance(_read(args.file))
    if (args.s is None) != (args.t is None):
        raise FormatError("--s and --t must be given together")
    if args.s is None:
        if len(embedded) != 1:
            raise FormatError("file must embed exactly one 'p <s> <t>' query when --s/--t are omitted")
        s, t = embedded[0]
    else:
        s, t = args.s, args.t
        if embedded and (len(embedded) != 1 or embedded[0] != (s, t)):
            raise FormatError("query embedded in the file disagrees with --s/--t")
    verdict = find_rainbow_path(cg, s, t)
    out = {"verdict": verdict.holds}
    if verdict.path is not None:
        out["path"] = list(verdict.path)
    _emit(out)
    return 0 if verdict.holds else 1


def _cmd_solve(args) -> int:
    cg, _ = parse_instance(_read(args.file))
    g = cg.graph
    bounds = rvc_bounds(g)
    value, witness = rvc_exact(g)
    _emit({
        "rvc": value,
        "witness": {str(v): c for v, c in sorted(witness.assignment.items())},
        "bounds": {"lower": bounds.lower, "upper": bounds.upper, "ky": bounds.ky_bound},
    })
    return 0


def _cmd_decide_k(args) -> int:
    cg, _ = parse_instance(_read(args.file))
    verdict = decide_rvc_le_k(cg.graph, args.k)
    _emit({"verdict": verdict.holds, "witness": _witness_json(verdict)})
    return 0 if verdict.holds else 1


def _cmd_decide_subset(args) -> int:
    cg, _ = parse_instance(_read(args.file))
    pairs = _parse_pair_file(_read(args.pairs))
    verdict = decide_subset_rvc2(cg.graph, pairs)
    _emit({"verdict": verdict.holds, "witness": _witness_json(verdict)})
    return 0 if verdict.holds else 1


def _cmd_decide_diffpairs(args) -> int:
    cg, _ = parse_instance(_read(args.file))
    pairs = _parse_pair_file(_read(args.pairing))
    pairing = Pairing(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
    verdict = decide_diffpairs_rvc2(cg.graph, pairing)
    _emit({"verdict": verdict.holds, "witness": _witness_json(verdict)})
    return 0 if verdict.holds else 1


def _cmd_reduce(args) -> int:
    name = args.name
    text = _read(args.infile)
    if name == "st-to-global":
        cg, embedded = parse_instance(text)
        if len(embedded) != 1:
            raise FormatError("st-to-global input must embed exactly one 'p <s> <t>' query")
        gadget, cert = st_to_global(cg, *embedded[0])
        out_text = serialize_colored_graph(gadget)
    elif name == "sat-to-st":
        gadget, s, t, cert = sat_to_st(parse_dimacs(text))
        out_text = serialize_instance(gadget, ((s, t),))
    elif name == "subset-to-rvc2":
        cg, embedded = parse_instance(text)
        gadget, cert = subset_to_rvc2(cg.graph, embedded)
        out_text = serialize_colored_graph(_k0(gadget))
    elif name == "diffpairs-to-subset":
        cg, embedded = parse_instance(text)
        pairing = Pairing(tuple(p[0] for p in embedded), tuple(p[1] for p in embedded))
        gadget, pset, cert = diffpairs_to_subset(cg.graph, pairing)
        out_text = serialize_instance(_k0(gadget), pset)
    else:
        gadget, pairing, cert = sat_to_diffpairs(parse_dimacs(text))
        out_text = serialize_instance(_k0(gadget), tuple(zip(pairing.v1, pairing.v2)))
    _write(args.out, out_text)
    _write(args.cert, serialize_certificate(cert))
    return 0


def _assignment_line(assignment: dict[int, int]) -> str:
    lits = [str(j) if assignment[j] else str(-j) for j in sorted(assignment)]
    return "v " + " ".join(lits + ["0"]) + "\n"


def _cmd_decode(args) -> int:
    cert = parse_certificate(_read(args.cert))
    if cert.reduction != args.name:
        raise FormatError(f"certificate is for reduction {cert.reduction!r}, not {args.name!r}")
    if args.name == "sat-to-st":
        path = _parse_path_file(_read(args.witness))
        assignment = decode_st_witness(cert, path)
    else:
        cg = parse_colored_graph(_read(args.witness))
        assignment = decode_diffpairs_witness(cert, cg.coloring, gadget=cg.graph)
    sys.stdout.write(_assignment_line(assignment))
    return 0


def _cmd_verify(args) -> int:
    report = verify_reduction(args.name, max_n=args.max_n, max_m=args.max_m, fail_fast=args.fail_fast)
    _emit({
        "reduction": report.reduction,
        "instances": report.instances,
        "mismatches": [[i, s, t] for i, s, t in report.mismatches],
        "passed": not report.mismatches,
    })
    sys.stderr.write(f"elapsed {report.elapsed:.2f}s\n")
    return 0 if not report.mismatches else 1


def _cmd_gen(args) -> int:
    if args.kind == "graphs":
        if args.n is None:
            raise FormatError("gen graphs requires --n")
        for g in enumerate_connected_graphs(args.n):
            _emit({"n": g.n, "edges": [list(e) for e in g.edges]})
    else:
        if args.vars is None or args.clauses is None:
            raise FormatError("gen cnf requires --vars and --clauses")
        for f in enumerate_small_cnf(args.vars, args.clauses, normalized_only=args.normalized):
            _emit({"vars": f.num_vars, "clauses": [list(c) for c in f.clauses]})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rvckit", description="Exact rainbow vertex-connection toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="whole-graph rainbow vertex-connection check")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("st-check", help="single-pair rainbow path check")
    p.add_argument("file")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.set_defaults(func=_cmd_st_check)

    p = sub.add_parser("solve", help="exact rvc value with witness and bounds")
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("decide-k", help="decide rvc <= k")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_decide_k)

    p = sub.add_parser("decide-subset", help="decide 2-colorability for a pair subset")
    p.add_argument("file")
    p.add_argument("--pairs", required=True)
    p.set_defaults(func=_cmd_decide_subset)

    p = sub.add_parser("decide-diffpairs", help="decide 2-colorability with differing pairs")
    p.add_argument("file")
    p.add_argument("--pairing", required=True)
    p.set_defaults(func=_cmd_decide_diffpairs)

    p = sub.add_parser("reduce", help="run a reduction, emitting gadget and certificate")
    p.add_argument("name", choices=REDUCE_NAMES)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.add_argument("--cert")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("decode", help="decode a witness through a reduction certificate")
    p.add_argument("name", choices=DECODE_NAMES)
    p.add_argument("--cert", required=True)
    p.add_argument("--witness", required=True)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("verify", help="run a reduction equivalence suite")
    p.add_argument("name", choices=VERIFY_NAMES)
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--max-m", type=int, dest="max_m")
    p.add_argument("--fail-fast", action="store_true", dest="fail_fast")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="stream exhaustive small instances")
    p.add_argument("kind", choices=("graphs", "cnf"))
    p.add_argument("--n", type=int)
    p.add_argument("--vars", type=int)
    p.add_argument("--clauses", type=int)
    p.add_argument("--normalized", action="store_true")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RvckitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
