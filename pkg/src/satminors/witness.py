"""Construct unsatisfiable sentences supported exactly on a given graph.

Each of the four minimal obstruction patterns carries a fixed base
sentence.  A witness for an arbitrary qualifying graph is built by mapping
the base sentence onto an embedded subdivision (introducing one fresh
variable per subdivision point) and covering the remaining edges with
all-positive filler clauses.  Every constructed witness is solver-verified
before being returned.  The same machinery transports witnesses across the
three support-preserving graph operations: subdivision, smoothing of a
degree-2 variable, and contraction at an edge not contained in a triangle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Clause, Cnf2, Literal, cnf_to_dimacs, rename_variables
from .graph import (
    Edge,
    EdgeInTriangle,
    SimpleGraph,
    edge,
    is_subgraph,
    support_graph,
)
from .minors import Pattern, decide_support
from .sat import solve


class WitnessError(ValueError):
    """Base class for witness-construction errors."""


class EdgeAbsentInSupport(WitnessError):
    """The named edge is not an edge of the sentence's support graph."""


class VariableCollision(WitnessError):
    """The fresh variable already occurs in the sentence."""


class DegreeNotTwo(WitnessError):
    """The variable being smoothed away does not have exactly the two named neighbours."""


class NotASubgraph(WitnessError):
    """The sentence's support is not a labelled subgraph of the target."""


class InternalVerificationFailed(RuntimeError):
    """A constructed witness failed its solver check; this is a defect, not an input error."""


@dataclass(frozen=True)
class BaseFormula:
    pattern: Pattern
    cnf: Cnf2


_BASE_CLAUSES: dict[Pattern, tuple[tuple[int, int], ...]] = {
    Pattern.BUTTERFLY: ((1, 2), (-1, 3), (-2, 3), (-3, 4), (-3, 5), (-4, -5)),
    Pattern.BOWTIE: ((1, 2), (-1, 3), (-2, 3), (-3, 4), (-4, 5), (-4, 6), (-5, -6)),
    Pattern.K4: ((1, 2), (1, 3), (-1, 4), (-2, -3), (2, -4), (3, -4)),
    Pattern.BOOK: ((1, 2), (-1, 4), (2, 3), (-2, 4), (-2, 5), (-3, -4), (-4, -5)),
}


def base_formula(p: Pattern) -> BaseFormula:
    """The fixed unsatisfiable sentence supported on the canonical pattern copy."""
    return BaseFormula(p, Cnf2.from_ints(_BASE_CLAUSES[p]))


def _pair_clauses(s: Cnf2, u: int, v: int) -> list[Clause]:
    pair = frozenset((u, v))
    return [c for c in s.clauses if c.support == pair]


def lift_subdivision(s: Cnf2, e: Edge, w: int) -> Cnf2:
    """Transport a sentence across subdivision of one support edge.

    The single clause on (u, v) is split into two through the fresh
    variable w, keeping each endpoint's original polarity, so the result
    is supported on the subdivided graph and keeps the solver verdict in
    both directions.
    """
    u, v = edge(*e)
    if s.is_nontrivial and w in s.variables():
        raise VariableCollision(f"variable {w} already occurs")
    matches = _pair_clauses(s, u, v)
    if not matches:
        raise EdgeAbsentInSupport(f"no clause over ({u}, {v})")
    if len(matches) > 1:
        raise ValueError(f"sentence is not simple at ({u}, {v})")
    (old,) = matches
    lit_u = old.literal_for(u)
    lit_v = old.literal_for(v)
    rest = [c for c in s.clauses if c is not old]
    rest.append(Clause((lit_u, Literal(w, True))))
    rest.append(Clause((Literal(w, False), lit_v)))
    return Cnf2.of(rest)


def unsubdivide_witness(s: Cnf2, w: int, u: int, v: int) -> Cnf2:
    """Inverse transport: smooth away a degree-2 variable w between u and v.

    The two clauses through w are replaced by one clause joining u and v
    with the polarities they carried, preserving unsatisfiability.
    """
    if u == v:
        raise DegreeNotTwo("the two neighbours must be distinct")
    w_clauses = [c for c in s.clauses if w in c.support]
    if len(w_clauses) != 2 or {frozenset(c.support - {w}) for c in w_clauses} != {
        frozenset({u}),
        frozenset({v}),
    }:
        raise DegreeNotTwo(f"variable {w} is not joined to exactly {{{u}, {v}}}")
    u_clause = next(c for c in w_clauses if u in c.support)
    v_clause = next(c for c in w_clauses if v in c.support)
    lit_u = u_clause.literal_for(u)
    lit_v = v_clause.literal_for(v)
    rest = [c for c in s.clauses if w not in c.support]
    rest.append(Clause((lit_u, lit_v)))
    return Cnf2.of(rest)


def extend_to_supergraph(s: Cnf2, h: SimpleGraph) -> Cnf2:
    """Conjoin an all-positive clause for every edge of h missing from the support.

    Extra clauses cannot make an unsatisfiable sentence satisfiable, so the
    result is supported exactly on h and stays unsatisfiable.
    """
    if s.is_false:
        return s
    if s.is_true:
        covered: frozenset[Edge] = frozenset()
        clauses: list[Clause] = []
    else:
        g = support_graph(s)
        if not is_subgraph(g, h):
            raise NotASubgraph("the sentence's support is not contained in the target graph")
        covered = g.edges
        clauses = list(s.clauses)
    uncovered_vertices = h.vertices - {x for e in h.edges for x in e}
    if uncovered_vertices:
        raise NotASubgraph(
            f"isolated vertices {sorted(uncovered_vertices)} cannot support any clause"
        )
    for x, y in sorted(h.edges - covered):
        clauses.append(Clause((Literal(x, True), Literal(y, True))))
    return Cnf2.of(clauses)


def contract_witness(s: Cnf2, e: Edge, w: int) -> Cnf2:
    """Transport a sentence across contraction of a non-triangle support edge.

    Writing the clause on (u, v) with endpoint literals lu and lv, every
    other clause incident on u or v pairs some literal either with lu/lv or
    with their negations.  The contracted sentence keeps the untouched
    clauses and joins w positively to the literals seen against lu or
    against the negation of lv, and negatively to the rest.  Because the
    edge lies in no triangle the four literal groups are disjoint, so the
    result is simple, supported on the contracted graph, and unsatisfiable
    whenever the input is.
    """
    u, v = edge(*e)
    g = support_graph(s)
    if (u, v) not in g.edges:
        raise EdgeAbsentInSupport(f"({u}, {v}) is not a support edge")
    if set(g.neighbors(u)) & set(g.neighbors(v)):
        raise EdgeInTriangle(f"support edge ({u}, {v}) lies in a triangle")
    if w in s.variables():
        raise VariableCollision(f"variable {w} already occurs")
    (uv_clause,) = _pair_clauses(s, u, v)
    lit_u = uv_clause.literal_for(u)
    lit_v = uv_clause.literal_for(v)
    with_w_pos: list[Literal] = []
    with_w_neg: list[Literal] = []
    untouched: list[Clause] = []
    for c in s.clauses:
        if c is uv_clause:
            continue
        touches_u = u in c.support
        touches_v = v in c.support
        if not touches_u and not touches_v:
            untouched.append(c)
            continue
        anchor = c.literal_for(u) if touches_u else c.literal_for(v)
        (other,) = [l for l in c.literals if l.var not in (u, v)]
        if touches_u:
            # same sign as the (u, v)-clause pairs with w, opposite with not-w
            (with_w_pos if anchor == lit_u else with_w_neg).append(other)
        else:
            (with_w_neg if anchor == lit_v else with_w_pos).append(other)
    out = list(untouched)
    for x in with_w_pos:
        out.append(Clause((x, Literal(w, True))))
    for y in with_w_neg:
        out.append(Clause((y, Literal(w, False))))
    return Cnf2.of(out)


def synthesize_witness(g: SimpleGraph, cap: int = 64) -> Cnf2 | None:
    """Build a solver-verified unsatisfiable sentence supported exactly on g.

    Returns None when no such sentence exists.  Otherwise starts from the
    base sentence of the embedded pattern, renames its variables to the
    branch vertices, subdivides along each embedding path (fresh variables
    named by the path's interior vertices, walking from the lower-numbered
    endpoint), and fills the remaining edges of g with positive clauses.
    """
    verdict = decide_support(g, cap=cap)
    if not verdict.supports_unsat:
        return None
    assert verdict.pattern is not None and verdict.embedding is not None
    emb = verdict.embedding
    s = rename_variables(base_formula(verdict.pattern).cnf, dict(emb.branch_map))
    for pattern_edge in sorted(emb.paths):
        path = list(emb.paths[pattern_edge])
        if path[0] > path[-1]:
            path.reverse()
        far = path[-1]
        anchor = path[0]
        for inner in path[1:-1]:
            s = lift_subdivision(s, edge(anchor, far), inner)
            anchor = inner
    s = extend_to_supergraph(s, g)
    result = solve(s)
    if result.satisfiable:
        raise InternalVerificationFailed("synthesized sentence is satisfiable")
    if support_graph(s) != g:
        raise InternalVerificationFailed("synthesized sentence is not supported exactly on g")
    return s


def witness_to_dimacs(s: Cnf2) -> str:
    """DIMACS text with a comment block mapping DIMACS indices to vertex ids."""
    if not s.is_nontrivial:
        return cnf_to_dimacs(s)
    vertices = sorted(s.variables())
    dense = {v: i + 1 for i, v in enumerate(vertices)}
    comments = [f"var {dense[v]} = vertex {v}" for v in vertices]
    return cnf_to_dimacs(rename_variables(s, dense), comments=comments)
