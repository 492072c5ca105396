"""3-SAT formulas: DIMACS parsing, normalization, brute-force oracle.

Literals are nonzero ints (sign = polarity), variables 1..num_vars.
Clauses carry 1 to 3 literals over distinct variables and are stored with
literals in ascending numeric order; clause order is preserved as given.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import _backend
from .errors import FormatError, SizeLimitError, ValidationError

BRUTE_FORCE_MAX_VARS = 24


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OccurrenceProfile:
    """Per-variable counts: pos[j] clauses contain x_j, neg[j] contain its
    negation.  Only occurring variables have entries."""
    pos: Mapping[int, int]
    neg: Mapping[int, int]


@dataclass(frozen=True)
class SatVerdict:
    sat: bool
    assignment: dict[int, int] | None = None


@dataclass(frozen=True)
class NormalizeResult:
    """status is "reduced" (residual formula returned), "sat" (formula
    emptied; forced plus anything on the untouched variables satisfies the
    input), or "unsat" (a clause emptied)."""
    formula: CnfFormula
    forced: dict[int, int] = field(default_factory=dict)
    status: str = "reduced"


def build_formula(num_vars: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
    if not isinstance(num_vars, int) or num_vars < 0:
        raise ValidationError(f"variable count must be a non-negative integer, got {num_vars!r}")
    out = []
    for clause in clauses:
        lits = set()
        for lit in clause:
            if not isinstance(lit, int) or lit == 0:
                raise ValidationError(f"literal must be a nonzero integer, got {lit!r}")
            if abs(lit) > num_vars:
                raise ValidationError(f"literal {lit} references a variable beyond 1..{num_vars}")
            lits.add(lit)
        for lit in lits:
            if -lit in lits:
                raise ValidationError(f"tautological clause: contains both {abs(lit)} and its negation")
        if not 1 <= len(lits) <= 3:
            raise ValidationError(f"clause must have 1 to 3 distinct literals, got {sorted(lits)}")
        out.append(tuple(sorted(lits)))
    return CnfFormula(num_vars, tuple(out))


def occurrence_profile(f: CnfFormula) -> OccurrenceProfile:
    pos: dict[int, int] = {}
    neg: dict[int, int] = {}
    for clause in f.clauses:
        for lit in clause:
            d = pos if lit > 0 else neg
            d[abs(lit)] = d.get(abs(lit), 0) + 1
    return OccurrenceProfile(pos, neg)


def is_normalized(f: CnfFormula) -> bool:
    """Every occurring variable appears with both polarities."""
    prof = occurrence_profile(f)
    occurring = set(prof.pos) | set(prof.neg)
    return all(prof.pos.get(j, 0) >= 1 and prof.neg.get(j, 0) >= 1 for j in occurring)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF ('c' comment lines, 'p cnf <n> <m>' header,
    0-terminated clauses).  Clause order is preserved; literals are
    deduplicated and sorted ascending within each clause."""
    header: tuple[int, int] | None = None
    tokens: list[tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise FormatError("duplicate header", line_no)
            toks = line.split()
            if len(toks) != 4 or toks[0] != "p" or toks[1] != "cnf":
                raise FormatError(f"expected header 'p cnf <vars> <clauses>', got {line!r}", line_no)
            try:
                header = (int(toks[2]), int(toks[3]))
            except ValueError:
                raise FormatError("header counts must be integers", line_no) from None
            continue
        if header is None:
            raise FormatError(f"clause data before 'p cnf' header: {line!r}", line_no)
        tokens.extend((line_no, t) for t in line.split())
    if header is None:
        raise FormatError("missing 'p cnf' header")
    num_vars, num_clauses = header
    if num_vars < 0 or num_clauses < 0:
        raise FormatError("header counts must be non-negative")

    clauses: list[list[int]] = []
    current: list[int] = []
    last_line = 0
    for line_no, tok in tokens:
        last_line = line_no
        try:
            lit = int(tok)
        except ValueError:
            raise FormatError(f"expected a literal or 0, got {tok!r}", line_no) from None
        if lit == 0:
            if not current:
                raise FormatError("empty clause", line_no)
            clauses.append(current)
            current = []
        else:
            if abs(lit) > num_vars:
                raise FormatError(f"literal {lit} references a variable beyond 1..{num_vars}", line_no)
            current.append(lit)
    if current:
        raise FormatError("last clause is not 0-terminated", last_line)
    if len(clauses) != num_clauses:
        raise FormatError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return build_formula(num_vars, clauses)


def to_dimacs(f: CnfFormula) -> str:
    out = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for clause in f.clauses:
        out.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(out) + "\n"


def normalize(f: CnfFormula) -> NormalizeResult:
    """Simplify to a fixpoint where every surviving variable occurs with
    both polarities.

    Repeats three steps until none applies: drop tautological clauses,
    propagate unit clauses (the forced value deletes satisfied clauses and
    strips the falsified literal from the rest), and eliminate pure
    literals (one-polarity variables get the satisfying value and their
    clauses are dropped).  An emptied clause means the input is
    unsatisfiable; an emptied formula means the forced assignment already
    satisfies it.  Satisfiability is preserved throughout.
    """
    clauses: list[frozenset[int]] = [frozenset(c) for c in f.clauses]
    forced: dict[int, int] = {}
    empty = CnfFormula(f.num_vars, ())
    while True:
        kept = [c for c in clauses if not any(-lit in c for lit in c)]
        changed = len(kept) != len(clauses)
        clauses = kept
        if any(len(c) == 0 for c in clauses):
            return NormalizeResult(empty, forced, "unsat")
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is not None:
            lit = next(iter(unit))
            forced[abs(lit)] = 1 if lit > 0 else 0
            clauses = [c - {-lit} for c in clauses if lit not in c]
            continue
        pos = {abs(l) for c in clauses for l in c if l > 0}
        neg = {abs(l) for c in clauses for l in c if l < 0}
        pures = sorted((pos - neg) | (neg - pos))
        if pures:
            var = pures[0]
            val = 1 if var in pos else 0
            forced[var] = val
            lit = var if val == 1 else -var
            clauses = [c for c in clauses if lit not in c]
            continue
        if not changed:
            break
    if not clauses:
        return NormalizeResult(empty, forced, "sat")
    residual = CnfFormula(f.num_vars, tuple(tuple(sorted(c)) for c in clauses))
    return NormalizeResult(residual, forced, "reduced")


def evaluate(f: CnfFormula, a: Mapping[int, int]) -> bool:
    """True iff every clause has a satisfied literal; a must be total
    (exactly the variables 1..num_vars, values 0/1)."""
    for j in range(1, f.num_vars + 1):
        if j not in a:
            raise ValidationError(f"assignment is missing variable {j}")
    for j, val in a.items():
        if not (1 <= j <= f.num_vars):
            raise ValidationError(f"assignment names variable {j} outside 1..{f.num_vars}")
        if val not in (0, 1):
            raise ValidationError(f"variable {j} has value {val!r}, expected 0 or 1")
    for clause in f.clauses:
        if not any((a[abs(lit)] == 1) == (lit > 0) for lit in clause):
            return False
    return True


def brute_force_sat(f: CnfFormula) -> SatVerdict:
    """Exhaustive satisfiability check over all 2^n assignments.

    Returns the lexicographically least satisfying assignment on
    (x_1, ..., x_n) with 0 < 1, so results are deterministic.
    """
    n = f.num_vars
    if n > BRUTE_FORCE_MAX_VARS:
        raise SizeLimitError(f"brute-force search supports at most {BRUTE_FORCE_MAX_VARS} variables, got {n}")
    m = len(f.clauses)
    pos = np.zeros(m, dtype=np.int64)
    neg = np.zeros(m, dtype=np.int64)
    for ci, clause in enumerate(f.clauses):
        for lit in clause:
            bit = 1 << (n - abs(lit))  # x_1 is the most significant bit
            if lit > 0:
                pos[ci] |= bit
            else:
                neg[ci] |= bit
    model = int(_backend.kernels.sat_first_model(pos, neg, n))
    if model < 0:
        return SatVerdict(False, None)
    assignment = {j: (model >> (n - j)) & 1 for j in range(1, n + 1)}
    return SatVerdict(True, assignment)
