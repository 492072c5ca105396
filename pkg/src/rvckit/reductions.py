"""Gadget constructors linking satisfiability and rainbow connection.

Five polynomial-time reductions, each returning the constructed instance
plus a certificate that names every fresh vertex (and color) so external
tools and the decoders can interpret witnesses. Vertex ids are assigned in
a fixed documented order: original vertices first, then fresh vertices
grouped by role, so outputs are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FormatError, InconsistencyError, ValidationError
from .graphs import ColoredGraph, Graph, build_coloring, build_graph, colored_graph, is_connected
from .paths import check_rainbow_vertex_connected, is_rainbow_path
from .sat import CnfFormula, evaluate
from .solve import Pairing, build_pairing, _check_pairset_arg


@dataclass(frozen=True)
class ReductionCertificate:
    reduction: str
    role_map: dict[str, int] = field(default_factory=dict)
    color_map: dict[str, int] = field(default_factory=dict)
    occurrence_profile: dict[int, tuple[int, int]] | None = None


def serialize_certificate(cert: ReductionCertificate) -> str:
    lines = [f"reduction {cert.reduction}"]
    for label, vid in cert.role_map.items():
        lines.append(f"role {label} {vid}")
    for label, cid in cert.color_map.items():
        lines.append(f"color {label} {cid}")
    if cert.occurrence_profile is not None:
        for j in sorted(cert.occurrence_profile):
            kj, lj = cert.occurrence_profile[j]
            lines.append(f"profile {j} {kj} {lj}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> ReductionCertificate:
    reduction = None
    roles: dict[str, int] = {}
    colors: dict[str, int] = {}
    profile: dict[int, tuple[int, int]] = {}
    saw_profile = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "reduction":
            if reduction is not None:
                raise FormatError("duplicate reduction line", line=line_no)
            if len(parts) != 2:
                raise FormatError("reduction line needs exactly one name", line=line_no)
            reduction = parts[1]
            continue
        if reduction is None:
            raise FormatError("certificate must start with a reduction line", line=line_no)
        if kind == "role":
            if len(parts) != 3:
                raise FormatError("role line needs a label and a vertex id", line=line_no)
            label = parts[1]
            if label in roles:
                raise FormatError(f"duplicate role label {label}", line=line_no)
            try:
                roles[label] = int(parts[2])
            except ValueError:
                raise FormatError(f"bad vertex id {parts[2]!r}", line=line_no) from None
        elif kind == "color":
            if len(parts) != 3:
                raise FormatError("color line needs a label and a color id", line=line_no)
            label = parts[1]
            if label in colors:
                raise FormatError(f"duplicate color label {label}", line=line_no)
            try:
                colors[label] = int(parts[2])
            except ValueError:
                raise FormatError(f"bad color id {parts[2]!r}", line=line_no) from None
        elif kind == "profile":
            if len(parts) != 4:
                raise FormatError("profile line needs variable, positive and negative counts", line=line_no)
            try:
                j, kj, lj = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError("profile counts must be integers", line=line_no) from None
            if j in profile:
                raise FormatError(f"duplicate profile for variable {j}", line=line_no)
            profile[j] = (kj, lj)
            saw_profile = True
        else:
            raise FormatError(f"unknown certificate directive {kind!r}", line=line_no)
    if reduction is None:
        raise FormatError("certificate has no reduction line")
    return ReductionCertificate(reduction, roles, colors, profile if saw_profile else None)


def st_to_global(cg: ColoredGraph, s: int, t: int) -> tuple[ColoredGraph, ReductionCertificate]:
    """Turn one s-t query into a whole-graph check: two fresh pendants
    force the s-t pair, two fresh hubs make every other pair easy."""
    g = cg.graph
    if not isinstance(s, int) or not (1 <= s <= g.n) or not isinstance(t, int) or not (1 <= t <= g.n):
        raise ValidationError("query endpoints must be vertices of the graph")
    if s == t:
        raise ValidationError("source and target must differ")
    if not is_connected(g):
        raise ValidationError("graph must be connected")
    k = cg.coloring.palette_size
    if k == 0:
        raise ValidationError("the query graph must carry a coloring (palette size >= 1)")
    n = g.n
    s_pend, t_pend, hub_a, hub_b = n + 1, n + 2, n + 3, n + 4
    c1, c2 = k + 1, k + 2
    edges = list(g.edges)
    edges.append((s, s_pend))
    edges.append((t, t_pend))
    for v in range(1, n + 1):
        edges.append((v, hub_a))
        edges.append((v, hub_b))
    out_graph = build_graph(n + 4, edges)
    assignment = dict(cg.coloring.assignment)
    assignment[s] = c1
    assignment[hub_a] = c1
    assignment[t] = c2
    assignment[hub_b] = c2
    # pendant colors are immaterial (endpoints are excluded from the
    # rainbow condition); they reuse the fresh pair for definiteness
    assignment[s_pend] = c1
    assignment[t_pend] = c2
    out = colored_graph(out_graph, build_coloring(k + 2, assignment))
    roles = {}
    for v in range(1, n + 1):
        if v == s:
            roles["s"] = v
        elif v == t:
            roles["t"] = v
        else:
            roles[f"v_{v}"] = v
    roles["s'"] = s_pend
    roles["t'"] = t_pend
    roles["a"] = hub_a
    roles["b"] = hub_b
    cert = ReductionCertificate("st-to-global", roles, {"c_1": c1, "c_2": c2})
    return out, cert


def _occurrences(f: CnfFormula):
    """Per variable, the clause indices (1-based) of its positive and
    negative occurrences, in clause order with ties by position."""
    pos: dict[int, list[int]] = {j: [] for j in range(1, f.num_vars + 1)}
    neg: dict[int, list[int]] = {j: [] for j in range(1, f.num_vars + 1)}
    for ci, clause in enumerate(f.clauses, start=1):
        for lit in clause:
            if lit > 0:
                pos[lit].append(ci)
            else:
                neg[-lit].append(ci)
    return pos, neg


def sat_to_st(f: CnfFormula) -> tuple[ColoredGraph, int, int, ReductionCertificate]:
    """Build the occurrence-path gadget: a rainbow s-t path exists iff the
    formula is satisfiable. Requires every variable to occur in both
    polarities (positive and negative occurrence paths of one variable
    share colors, which is the conflict mechanism)."""
    pos, neg = _occurrences(f)
    for j in range(1, f.num_vars + 1):
        if not pos[j] or not neg[j]:
            raise ValidationError(
                f"variable {j} lacks a positive or negative occurrence; normalize the formula first"
            )
    m = len(f.clauses)
    s = 1
    roles = {"s": s}
    colors = {"alpha_0": 1}
    assignment = {}
    next_vertex = 2
    next_color = 2
    # per variable: k_j paths of length l_j for positive occurrences, l_j
    # paths of length k_j for negative ones; vertex (a,b) of a positive
    # path and vertex (a,b) of a negative path share color alpha^j_{a,b}
    color_id: dict[tuple[int, int, int], int] = {}
    paths = []  # (clause index, vertex ids, variable, positive?)
    profile: dict[int, tuple[int, int]] = {}
    for j in range(1, f.num_vars + 1):
        kj = len(pos[j])
        lj = len(neg[j])
        profile[j] = (kj, lj)
        for a in range(1, kj + 1):
            for b in range(1, lj + 1):
                color_id[(j, a, b)] = next_color
                colors[f"alpha^{j}_{{{a},{b}}}"] = next_color
                next_color += 1
        for a in range(1, kj + 1):
            ids = []
            for b in range(1, lj + 1):
                roles[f"v^{j}_{{{a},{b}}}"] = next_vertex
                assignment[next_vertex] = color_id[(j, a, b)]
                ids.append(next_vertex)
                next_vertex += 1
            paths.append((pos[j][a - 1], ids, j, True))
        for b in range(1, lj + 1):
            ids = []
            for a in range(1, kj + 1):
                roles[f"vbar^{j}_{{{a},{b}}}"] = next_vertex
                assignment[next_vertex] = color_id[(j, a, b)]
                ids.append(next_vertex)
                next_vertex += 1
            paths.append((neg[j][b - 1], ids, j, False))
    t = next_vertex
    roles["t"] = t
    assignment[s] = 1
    assignment[t] = 1
    edges = []
    for _, ids, _, _ in paths:
        for x, y in zip(ids, ids[1:]):
            edges.append((x, y))
    # chain bundles clause by clause: first vertex of every clause-i path
    # joins the last vertex of every clause-(i-1) path; clause 0 is {s}
    bundles = [[] for _ in range(m + 1)]
    for ci, ids, _, _ in paths:
        bundles[ci].append(ids)
    prev_lasts = [s]
    for ci in range(1, m + 1):
        for ids in bundles[ci]:
            for last in prev_lasts:
                edges.append((ids[0], last))
        prev_lasts = [ids[-1] for ids in bundles[ci]]
    for last in prev_lasts:
        edges.append((last, t))
    out_graph = build_graph(t, edges)
    out = colored_graph(out_graph, build_coloring(next_color - 1, assignment))
    cert = ReductionCertificate("sat-to-st", roles, colors, profile)
    return out, s, t, cert


def _st_layout(profile: dict[int, tuple[int, int]]):
    """Recompute the sat_to_st vertex layout from an occurrence profile:
    per variable, the positive and negative path vertex-id tuples."""
    next_vertex = 2
    pos_paths: dict[int, list[tuple[int, ...]]] = {}
    neg_paths: dict[int, list[tuple[int, ...]]] = {}
    for j in sorted(profile):
        kj, lj = profile[j]
        pos_paths[j] = []
        neg_paths[j] = []
        for _ in range(kj):
            pos_paths[j].append(tuple(range(next_vertex, next_vertex + lj)))
            next_vertex += lj
        for _ in range(lj):
            neg_paths[j].append(tuple(range(next_vertex, next_vertex + kj)))
            next_vertex += kj
    return pos_paths, neg_paths, next_vertex


def decode_st_witness(cert: ReductionCertificate, q, gadget: ColoredGraph | None = None) -> dict[int, int]:
    """Read a satisfying assignment off a rainbow s-t path, mirroring the
    forward argument: traversing a positive path of a variable sets it to
    1, a negative path to 0, untouched variables default to 0."""
    if cert.occurrence_profile is None:
        raise ValidationError("certificate carries no occurrence profile; not a sat-to-st certificate")
    pos_paths, neg_paths, t = _st_layout(cert.occurrence_profile)
    path = tuple(q)
    if len(path) < 2 or path[0] != 1 or path[-1] != t:
        raise ValidationError(f"witness path must run from vertex 1 to vertex {t}")
    if len(set(path)) != len(path):
        raise ValidationError("witness path repeats a vertex")
    for v in path:
        if not isinstance(v, int) or not (1 <= v <= t):
            raise ValidationError(f"witness path vertex {v!r} out of range")
    if gadget is not None and not is_rainbow_path(gadget, path):
        raise ValidationError("witness path is not rainbow in the gadget")
    on_path = set(path)
    assignment = {}
    for j in sorted(cert.occurrence_profile):
        hit_pos = any(v in on_path for ids in pos_paths[j] for v in ids)
        hit_neg = any(v in on_path for ids in neg_paths[j] for v in ids)
        if hit_pos and hit_neg:
            raise InconsistencyError(
                f"path traverses both polarities of variable {j}; shared colors forbid this on rainbow paths"
            )
        assignment[j] = 1 if hit_pos else 0
    return assignment


def subset_to_rvc2(g: Graph, pairs) -> tuple[Graph, ReductionCertificate]:
    """Reduce pair-subset 2-colorability to plain rvc <= 2: fresh paths of
    length 3 take care of every pair outside the requested set."""
    if not is_connected(g):
        raise ValidationError("graph must be connected")
    required = _check_pairset_arg(g, pairs)
    n = g.n
    complement = []
    req = set(required)
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if (u, v) not in req:
                complement.append((u, v))
    edges = list(g.edges)
    roles = {f"v_{v}": v for v in range(1, n + 1)}
    for v in range(1, n + 1):
        roles[f"x_{v}"] = n + v
        edges.append((v, n + v))
    next_vertex = 2 * n + 1
    s = 2 * n + 2 * len(complement) + 1
    t = s + 1
    for u, v in complement:
        x1 = next_vertex
        x2 = next_vertex + 1
        next_vertex += 2
        roles[f"x1_{{({u},{v})}}"] = x1
        roles[f"x2_{{({u},{v})}}"] = x2
        edges.append((u, x1))
        edges.append((x1, x2))
        edges.append((x2, v))
        edges.append((s, x1))
        edges.append((t, x2))
    roles["s"] = s
    roles["t"] = t
    for v in range(1, n + 1):
        edges.append((s, n + v))
        edges.append((t, n + v))
    out = build_graph(t, edges)
    cert = ReductionCertificate("subset-to-rvc2", roles)
    return out, cert


def diffpairs_to_subset(g: Graph, pairing: Pairing) -> tuple[Graph, tuple[tuple[int, int], ...], ReductionCertificate]:
    """Reduce the differing-pairs problem to the pair-subset problem: a
    9-edge cycle gadget per pair forces its two vertices apart."""
    if not is_connected(g):
        raise ValidationError("graph must be connected")
    pairing = build_pairing(g, pairing.v1, pairing.v2)
    if not pairing.v1:
        raise ValidationError("pairing must contain at least one pair")
    n = g.n
    kp = len(pairing.v1)
    s = n + 6 * kp + 1
    edges = list(g.edges)
    roles = {f"v_{v}": v for v in range(1, n + 1)}
    pair_list = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            pair_list.append((u, v))
    for i in range(kp):
        vi = pairing.v1[i]
        wi = pairing.v2[i]
        x = [n + 6 * i + d for d in range(1, 7)]  # x[0]..x[5] = x1..x6
        for d in range(6):
            roles[f"x{d + 1}_{{({vi},{wi})}}"] = x[d]
        edges.append((s, x[4]))
        edges.append((x[4], vi))
        edges.append((vi, x[0]))
        edges.append((x[0], x[1]))
        edges.append((x[1], x[2]))
        edges.append((x[2], x[3]))
        edges.append((x[3], wi))
        edges.append((wi, x[5]))
        edges.append((x[5], s))
        pair_list.append((x[4], x[1]))
        pair_list.append((vi, x[2]))
        pair_list.append((x[0], x[3]))
        pair_list.append((x[1], wi))
        pair_list.append((x[2], x[5]))
    roles["s"] = s
    out = build_graph(s, edges)
    cert = ReductionCertificate("diffpairs-to-subset", roles)
    return out, tuple(pair_list), cert


def sat_to_diffpairs(f: CnfFormula) -> tuple[Graph, Pairing, ReductionCertificate]:
    """Build the clause-clique gadget whose differing-pairs instance (each
    variable vertex paired with its negation vertex) is solvable iff the
    formula is satisfiable."""
    m = len(f.clauses)
    if m == 0:
        raise ValidationError("a formula with no clauses has nothing to reduce; it is trivially satisfiable")
    n = f.num_vars
    roles = {}
    for ci in range(1, m + 1):
        roles[f"c_{ci}"] = ci
    x_ids = []
    xbar_ids = []
    for j in range(1, n + 1):
        xj = m + 2 * (j - 1) + 1
        xbj = xj + 1
        roles[f"x_{j}"] = xj
        roles[f"xbar_{j}"] = xbj
        x_ids.append(xj)
        xbar_ids.append(xbj)
    s = m + 2 * n + 1
    t = s + 1
    roles["s"] = s
    roles["t"] = t
    edges = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            edges.append((i, j))
    for j in range(1, n + 1):
        edges.append((t, x_ids[j - 1]))
        edges.append((t, xbar_ids[j - 1]))
    for ci, clause in enumerate(f.clauses, start=1):
        for lit in clause:
            lv = x_ids[lit - 1] if lit > 0 else xbar_ids[-lit - 1]
            edges.append((lv, ci))
    edges.append((s, t))
    out = build_graph(t, edges)
    pairing = build_pairing(out, x_ids, xbar_ids)
    cert = ReductionCertificate("sat-to-diffpairs", roles)
    return out, pairing, cert


def decode_diffpairs_witness(cert: ReductionCertificate, c, gadget: Graph | None = None) -> dict[int, int]:
    """Read a satisfying assignment off a witness coloring of the
    sat_to_diffpairs gadget: a variable is true iff its vertex disagrees
    with t's color."""
    num_vars = 0
    while f"x_{num_vars + 1}" in cert.role_map:
        num_vars += 1
    if "t" not in cert.role_map:
        raise ValidationError("certificate does not name t; not a sat-to-diffpairs certificate")
    t = cert.role_map["t"]
    named = [t] + [cert.role_map[f"x_{j}"] for j in range(1, num_vars + 1)]
    named += [cert.role_map[f"xbar_{j}"] for j in range(1, num_vars + 1)]
    for v in named:
        if v not in c.assignment:
            raise ValidationError(f"witness coloring leaves vertex {v} uncolored")
    for j in range(1, num_vars + 1):
        if c.assignment[cert.role_map[f"x_{j}"]] == c.assignment[cert.role_map[f"xbar_{j}"]]:
            raise ValidationError(f"witness colors x_{j} and its negation alike; not a valid witness")
    if gadget is not None:
        verdict = check_rainbow_vertex_connected(colored_graph(gadget, c))
        if not verdict.holds:
            raise ValidationError(f"witness coloring fails on pair {verdict.failing_pair}; not a valid witness")
    ct = c.assignment[t]
    return {j: 1 if c.assignment[cert.role_map[f"x_{j}"]] != ct else 0 for j in range(1, num_vars + 1)}


def decoded_satisfies(f: CnfFormula, assignment: dict[int, int]) -> bool:
    """Convenience wrapper: evaluate a decoded assignment on the source
    formula (missing variables default to 0)."""
    full = {j: assignment.get(j, 0) for j in range(1, f.num_vars + 1)}
    return evaluate(f, full)
