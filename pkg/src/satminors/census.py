"""Exhaustive ground truth: enumerate every simple sentence a graph supports.

Each edge of the graph carries one clause in one of four polarities, so a
graph with E edges supports exactly 4**E sentences.  The census classifies
all of them and reports counts plus the lexicographically first
unsatisfiable example, which is independently solver-checked.  Two engines
produce identical reports: a per-sentence solver loop, and a vectorized
sweep that marks, for every truth assignment, the polarity vectors it
satisfies.  Both enumerate polarity vectors with the smallest edge as the
most significant digit and codes ordered PP, PN, NP, NN.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .formula import Clause, Cnf2, Literal
from .graph import SimpleGraph, smooth_vertex
from .sat import solve

_VECTOR_ENGINE_MIN_EDGES = 5


class TooManyEdges(ValueError):
    def __init__(self, cap: int, count: int):
        super().__init__(f"graph has {count} edges, census cap is {cap}")
        self.cap = cap
        self.count = count


class EdgePolarity(enum.Enum):
    """Clause shape on a canonical edge (u, v), u < v."""

    PP = 0  # (u or v)
    PN = 1  # (u or not v)
    NP = 2  # (not u or v)
    NN = 3  # (not u or not v)

    def clause(self, u: int, v: int) -> Clause:
        if u > v:
            u, v = v, u
        pos_u = self in (EdgePolarity.PP, EdgePolarity.PN)
        pos_v = self in (EdgePolarity.PP, EdgePolarity.NP)
        return Clause((Literal(u, pos_u), Literal(v, pos_v)))


@dataclass(frozen=True)
class CensusReport:
    graph: SimpleGraph
    total: int
    sat_count: int
    unsat_count: int
    example_unsat: Cnf2 | None

    def __post_init__(self) -> None:
        assert self.sat_count + self.unsat_count == self.total
        assert (self.example_unsat is not None) == (self.unsat_count > 0)


def formula_at(edges: list[tuple[int, int]], index: int) -> Cnf2:
    """Decode one polarity vector into its sentence."""
    codes = []
    for _ in edges:
        codes.append(index & 3)
        index >>= 2
    codes.reverse()
    clauses = [EdgePolarity(c).clause(u, v) for (u, v), c in zip(edges, codes)]
    return Cnf2.of(clauses)


def _count_solver(edges: list[tuple[int, int]], lo: int, hi: int) -> tuple[int, int | None]:
    sat = 0
    first_unsat: int | None = None
    for index in range(lo, hi):
        if solve(formula_at(edges, index)).satisfiable:
            sat += 1
        elif first_unsat is None:
            first_unsat = index
    return sat, first_unsat


def _count_vectorized(edges: list[tuple[int, int]], lo: int, hi: int) -> tuple[int, int | None]:
    """Mark, per truth assignment, every polarity vector in [lo, hi) it satisfies.

    For a fixed assignment each edge rules out exactly one of its four
    polarities (the clause with both literals false), so the satisfied
    vectors form a per-digit product set.  The union over all assignments
    is the satisfiable region.
    """
    n_edges = len(edges)
    span = hi - lo
    indices = np.arange(lo, hi, dtype=np.int64)
    digits = [
        ((indices >> (2 * (n_edges - 1 - i))) & 3).astype(np.uint8)
        for i in range(n_edges)
    ]
    vertices = sorted({x for e in edges for x in e})
    satisfied = np.zeros(span, dtype=bool)
    for bits in range(1 << len(vertices)):
        truth = {v: bool((bits >> k) & 1) for k, v in enumerate(vertices)}
        hits = np.ones(span, dtype=bool)
        for i, (u, v) in enumerate(edges):
            ruled_out = 2 * int(truth[u]) + int(truth[v])
            hits &= digits[i] != ruled_out
        satisfied |= hits
        if satisfied.all():
            break
    sat = int(satisfied.sum())
    if sat == span:
        return sat, None
    return sat, lo + int(np.argmin(satisfied))


def _census_chunk(args: tuple[list[tuple[int, int]], int, int, str]) -> tuple[int, int | None]:
    edges, lo, hi, engine = args
    if engine == "solver":
        return _count_solver(edges, lo, hi)
    return _count_vectorized(edges, lo, hi)


def census(
    g: SimpleGraph, cap: int = 10, engine: str = "auto", threads: int = 1
) -> CensusReport:
    """Classify all 4**E sentences supported on g.

    engine: "auto" picks the vectorized sweep for 5+ edges, the plain
    solver loop below that; "solver" and "vector" force one engine.  With
    threads > 1 the polarity space is split into ranges processed in
    worker processes; counts and the reported example are identical to the
    sequential run.
    """
    edges = g.sorted_edges()
    n_edges = len(edges)
    if n_edges > cap:
        raise TooManyEdges(cap, n_edges)
    total = 4**n_edges
    if engine == "auto":
        engine = "vector" if n_edges >= _VECTOR_ENGINE_MIN_EDGES else "solver"
    if engine not in ("solver", "vector"):
        raise ValueError(f"unknown census engine {engine!r}")

    if threads > 1 and total >= threads:
        bounds = [(total * k) // threads for k in range(threads + 1)]
        jobs = [
            (edges, bounds[k], bounds[k + 1], engine)
            for k in range(threads)
            if bounds[k] < bounds[k + 1]
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_census_chunk, jobs))
        sat = sum(p[0] for p in parts)
        unsat_indices = [p[1] for p in parts if p[1] is not None]
        first_unsat = min(unsat_indices) if unsat_indices else None
    else:
        sat, first_unsat = _census_chunk((edges, 0, total, engine))

    example: Cnf2 | None = None
    if first_unsat is not None:
        example = formula_at(edges, first_unsat)
        if solve(example).satisfiable:
            raise AssertionError("census found an example the solver calls satisfiable")
    return CensusReport(g, total, sat, total - sat, example)


def supports_unsat_bruteforce(g: SimpleGraph, cap: int = 10) -> bool:
    """True iff the exhaustive census finds at least one unsatisfiable sentence."""
    return census(g, cap=cap).unsat_count > 0


def is_minimal_unsat_support(g: SimpleGraph, cap: int = 10) -> bool:
    """Check by brute force that g supports unsatisfiability minimally.

    Requires g itself to qualify.  Minimality holds when no single-edge
    deletion, single-vertex deletion, or degree-2 smoothing (where it keeps
    the graph simple) leaves a graph that still supports an unsatisfiable
    sentence.
    """
    if not supports_unsat_bruteforce(g, cap=cap):
        raise ValueError("graph does not support an unsatisfiable sentence")
    for e in g.sorted_edges():
        smaller = SimpleGraph(g.vertices, g.edges - {e})
        if supports_unsat_bruteforce(smaller, cap=cap):
            return False
    for v in sorted(g.vertices):
        remaining = frozenset(e for e in g.edges if v not in e)
        smaller = SimpleGraph(g.vertices - {v}, remaining)
        if supports_unsat_bruteforce(smaller, cap=cap):
            return False
    for v in sorted(g.vertices):
        if g.degree(v) != 2:
            continue
        x, y = g.neighbors(v)
        if g.has_edge(x, y):
            continue
        if supports_unsat_bruteforce(smooth_vertex(g, v), cap=cap):
            return False
    return True
