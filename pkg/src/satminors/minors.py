"""Decide whether a graph can support an unsatisfiable sentence.

Exactly four minimal obstruction graphs exist: the butterfly (two triangles
sharing a vertex), the bowtie (two triangles joined by an edge), K4, and
the 3-page book K_{1,1,3}.  A graph supports an unsatisfiable sentence iff
one of these is a topological minor.  The fast decider never searches: a
connected component qualifies when its cycle rank is at least three, or
when it is exactly two and the 2-core has a cut vertex (a figure-eight or
dumbbell core); a 2-connected rank-two core is a theta graph and supports
only satisfiable sentences.  A generic subdivision-embedding search backs
the decider and produces checkable evidence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from .graph import (
    Edge,
    SimpleGraph,
    connected_components,
    cut_vertices,
    cycle_rank,
    edge,
    two_core,
)


class HostTooLarge(ValueError):
    def __init__(self, cap: int, size: int):
        super().__init__(f"host has {size} vertices, search cap is {cap}")
        self.cap = cap
        self.size = size


class Pattern(enum.Enum):
    """The four minimal graphs that force an unsatisfiable sentence to exist."""

    K4 = "k4"
    BOOK = "book"
    BUTTERFLY = "butterfly"
    BOWTIE = "bowtie"


# Search order: smallest hosts first among the rank-3 patterns, then the
# two rank-2 patterns.
PATTERN_ORDER = (Pattern.K4, Pattern.BOOK, Pattern.BUTTERFLY, Pattern.BOWTIE)

_PATTERN_EDGES: dict[Pattern, tuple[tuple[int, int], ...]] = {
    Pattern.BUTTERFLY: ((1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)),
    Pattern.BOWTIE: ((1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)),
    Pattern.K4: ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)),
    Pattern.BOOK: ((1, 2), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (4, 5)),
}


def pattern_graph(p: Pattern) -> SimpleGraph:
    """Canonical labelled copy of a pattern, vertices 1..n."""
    return SimpleGraph.of(_PATTERN_EDGES[p])


class Reason(enum.Enum):
    """Structural certificate for graphs that support only satisfiable sentences."""

    FOREST = "forest"
    UNICYCLIC = "unicyclic-components"
    THETA_CORE = "theta-core"


@dataclass(frozen=True, eq=True)
class Embedding:
    """A subdivision of a pattern placed inside a host graph.

    branch_map sends pattern vertices to distinct host vertices; paths sends
    each pattern edge (u, v), u < v, to a host path from branch_map[u] to
    branch_map[v].  Paths are internally disjoint from each other and from
    every branch image.
    """

    branch_map: Mapping[int, int]
    paths: Mapping[Edge, tuple[int, ...]]

    def used_edges(self) -> set[Edge]:
        out: set[Edge] = set()
        for path in self.paths.values():
            out.update(edge(a, b) for a, b in zip(path, path[1:]))
        return out


@dataclass(frozen=True, eq=True)
class Verdict:
    """Answer to "can this graph support an unsatisfiable sentence?".

    A positive answer carries a pattern and a verified embedding; a negative
    one carries the structural reason.
    """

    supports_unsat: bool
    pattern: Pattern | None = None
    embedding: Embedding | None = None
    reason: Reason | None = None


def find_topological_minor(
    host: SimpleGraph, pattern: Pattern, cap: int = 64
) -> Embedding | None:
    """Search for a subdivision of the pattern inside the host.

    Enumerates injective branch maps over degree-compatible host vertices,
    then routes internally disjoint paths for the pattern edges, most
    constrained edge first.  Deterministic; returns the first embedding in
    the fixed iteration order, or None when no subdivision embeds.
    """
    if len(host.vertices) > cap:
        raise HostTooLarge(cap, len(host.vertices))
    pg = pattern_graph(pattern)
    if len(host.vertices) < len(pg.vertices) or len(host.edges) < len(pg.edges):
        return None

    comp_of: dict[int, int] = {}
    for i, comp in enumerate(connected_components(host)):
        for v in comp.vertices:
            comp_of[v] = i

    pattern_vertices = sorted(pg.vertices, key=lambda v: (-pg.degree(v), v))
    candidates = {
        pv: [hv for hv in sorted(host.vertices) if host.degree(hv) >= pg.degree(pv)]
        for pv in pattern_vertices
    }
    if any(not c for c in candidates.values()):
        return None

    branch: dict[int, int] = {}
    taken: set[int] = set()

    found: Embedding | None = None

    def assign(i: int) -> bool:
        nonlocal found
        if i == len(pattern_vertices):
            placed = _route_paths(host, pg, branch)
            if placed is not None:
                found = Embedding(dict(branch), placed)
                return True
            return False
        pv = pattern_vertices[i]
        home = comp_of[branch[pattern_vertices[0]]] if i else None
        for hv in candidates[pv]:
            if hv in taken:
                continue
            if home is not None and comp_of[hv] != home:
                continue
            branch[pv] = hv
            taken.add(hv)
            if assign(i + 1):
                return True
            del branch[pv]
            taken.remove(hv)
        return False

    assign(0)
    return found


def _route_paths(
    host: SimpleGraph, pg: SimpleGraph, branch: Mapping[int, int]
) -> dict[Edge, tuple[int, ...]] | None:
    """Find internally disjoint host paths realizing every pattern edge."""
    branch_images = set(branch.values())
    internals: set[int] = set()
    placed: dict[Edge, tuple[int, ...]] = {}

    def free_degree(hv: int) -> int:
        return sum(1 for w in host.neighbors(hv) if w not in internals)

    def constraint(e: Edge) -> tuple[int, Edge]:
        u, v = e
        return (min(free_degree(branch[u]), free_degree(branch[v])), e)

    def route(remaining: list[Edge]) -> bool:
        if not remaining:
            return True
        e = min(remaining, key=constraint)
        rest = [x for x in remaining if x != e]
        start, goal = branch[e[0]], branch[e[1]]
        blocked = (branch_images - {start, goal}) | internals
        for path in _simple_paths(host, start, goal, blocked):
            inner = set(path[1:-1])
            internals.update(inner)
            placed[e] = tuple(path)
            if route(rest):
                return True
            internals.difference_update(inner)
            del placed[e]
        return False

    if route(sorted(pg.edges)):
        return placed
    return None


def _simple_paths(host: SimpleGraph, start: int, goal: int, blocked: set[int]):
    """Yield simple start-goal paths avoiding blocked vertices, in DFS order."""
    path = [start]
    on_path = {start}

    def walk(v: int):
        for w in host.neighbors(v):
            if w == goal:
                yield path + [goal]
            elif w not in blocked and w not in on_path:
                path.append(w)
                on_path.add(w)
                yield from walk(w)
                path.pop()
                on_path.remove(w)

    yield from walk(start)


def verify_embedding(host: SimpleGraph, pattern: Pattern, emb: Embedding) -> bool:
    """Check every embedding invariant against the host and pattern."""
    pg = pattern_graph(pattern)
    bm = dict(emb.branch_map)
    if set(bm) != pg.vertices:
        return False
    if len(set(bm.values())) != len(bm):
        return False
    if not set(bm.values()) <= host.vertices:
        return False
    if set(emb.paths) != pg.edges:
        return False
    branch_images = set(bm.values())
    seen_internal: set[int] = set()
    for (u, v), path in emb.paths.items():
        if len(path) < 2 or path[0] != bm[u] or path[-1] != bm[v]:
            return False
        if len(set(path)) != len(path):
            return False
        for a, b in zip(path, path[1:]):
            if not host.has_edge(a, b):
                return False
        inner = set(path[1:-1])
        if inner & branch_images or inner & seen_internal:
            return False
        seen_internal.update(inner)
    return True


def decide_support(g: SimpleGraph, cap: int = 64) -> Verdict:
    """Classify a graph by the sentences it can support.

    Decided per connected component from cycle rank and 2-core shape alone;
    when the answer is positive, a concrete pattern embedding is produced as
    evidence (first qualifying component, patterns in fixed order).
    """
    components = connected_components(g)
    ranks = [cycle_rank(c) for c in components]
    for comp, rank in zip(components, ranks):
        if rank >= 3 or (rank == 2 and cut_vertices(two_core(comp))):
            for pattern in PATTERN_ORDER:
                emb = find_topological_minor(comp, pattern, cap=cap)
                if emb is not None:
                    return Verdict(True, pattern=pattern, embedding=emb)
            raise AssertionError(
                f"structural decider found support but no pattern embeds in {comp!r}"
            )
    if any(r >= 2 for r in ranks):
        reason = Reason.THETA_CORE
    elif any(r == 1 for r in ranks):
        reason = Reason.UNICYCLIC
    else:
        reason = Reason.FOREST
    return Verdict(False, reason=reason)
