"""Satisfiability oracle for sentences with clauses of length one or two.

Uses the implication-graph method: each clause contributes the two
implications equivalent to it, and the sentence is unsatisfiable exactly
when some variable shares a strongly connected component with its own
negation.  Models are read off the reverse topological order of the
components.  Output is deterministic for a fixed input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Assignment, Cnf2, apply_assignment


@dataclass(frozen=True)
class SolveResult:
    satisfiable: bool
    # Total assignment over the sentence's variables when satisfiable.
    model: Assignment | None = None
    # A variable whose two polarities share a component when unsatisfiable;
    # absent for the constant-false sentence, which has no variable to blame.
    conflict_var: int | None = None


def solve(s: Cnf2) -> SolveResult:
    """Decide satisfiability, producing a model or a conflict variable."""
    if s.is_true:
        return SolveResult(True, model={})
    if s.is_false:
        return SolveResult(False, conflict_var=None)

    variables = sorted(s.variables())
    index_of = {v: i for i, v in enumerate(variables)}
    n = 2 * len(variables)
    # literal node: 2*i for the positive literal of variables[i], 2*i+1 negated
    adj: list[list[int]] = [[] for _ in range(n)]

    def node(var: int, positive: bool) -> int:
        return 2 * index_of[var] + (0 if positive else 1)

    for clause in s.clauses:
        lits = clause.literals
        if len(lits) == 1:
            (a,) = lits
            adj[node(a.var, not a.positive)].append(node(a.var, a.positive))
        else:
            a, b = lits
            adj[node(a.var, not a.positive)].append(node(b.var, b.positive))
            adj[node(b.var, not b.positive)].append(node(a.var, a.positive))
    for row in adj:
        row.sort()

    comp = _tarjan_components(adj)

    conflicts = [v for v in variables if comp[node(v, True)] == comp[node(v, False)]]
    if conflicts:
        return SolveResult(False, conflict_var=conflicts[0])
    # components are numbered in pop order (reverse topological order), so a
    # literal is true when its component closes before its negation's
    model = {v: comp[node(v, True)] < comp[node(v, False)] for v in variables}
    return SolveResult(True, model=model)


def check_model(s: Cnf2, m: Assignment) -> bool:
    """True iff applying the assignment reduces the sentence to true."""
    return apply_assignment(s, m).is_true


def _tarjan_components(adj: list[list[int]]) -> list[int]:
    """Strongly connected components, iterative, numbered in pop order."""
    n = len(adj)
    UNVISITED = -1
    index = [UNVISITED] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [UNVISITED] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != UNVISITED:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, edge_pos = work[-1]
            if edge_pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            for i in range(edge_pos, len(adj[v])):
                w = adj[v][i]
                if index[w] == UNVISITED:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp
