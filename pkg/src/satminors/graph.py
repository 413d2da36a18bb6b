"""Undirected graphs over positive integer vertex ids, plus the operations
tying sentences to graphs: support extraction, subdivision, restricted edge
contraction, cycle rank, 2-core, cut vertices, and components.

Graphs are immutable values.  Edges are canonical (u, v) tuples with u < v.
Edge contraction is only allowed at edges not contained in any triangle, so
it never creates a parallel edge and simple graphs stay simple.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .formula import Cnf2, ParseError

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for graph-operation errors."""


class NotNontrivial(GraphError):
    """The sentence is constant true or false and has no support graph."""


class UnitClausePresent(GraphError):
    """A unit clause has a one-vertex support, not an edge."""


class MultiEdgePresent(GraphError):
    def __init__(self, pair: Edge, multiplicity: int):
        super().__init__(f"edge {pair} has multiplicity {multiplicity}")
        self.pair = pair
        self.multiplicity = multiplicity


class EdgeAbsent(GraphError):
    """The named edge is not in the graph."""


class EdgeInTriangle(GraphError):
    """Contracting this edge would merge two adjacent neighbourhoods."""


def edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    if u == v:
        raise ValueError(f"self-loop at {u}")
    if u < 1 or v < 1:
        raise ValueError("vertex ids are positive integers")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(edge(*e) for e in self.edges))
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int]], isolated: Iterable[int] = ()) -> SimpleGraph:
        es = frozenset(edge(u, v) for u, v in edges)
        vs = {v for e in es for v in e} | set(isolated)
        return cls(frozenset(vs), es)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        vs = ",".join(map(str, sorted(self.vertices)))
        es = " ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"SimpleGraph<{vs}|{es}>"


@dataclass(frozen=True)
class Multigraph:
    """Vertex set plus an edge multiset; no self-loops."""

    vertices: frozenset[int]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", tuple(sorted(edge(*e) for e in self.edges)))
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")

    def multiplicities(self) -> Counter[Edge]:
        return Counter(self.edges)

    @property
    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)


def associated_multigraph(s: Cnf2) -> Multigraph:
    """The support multigraph: one vertex per variable, one edge per clause."""
    if not s.is_nontrivial:
        raise NotNontrivial("constant sentences have no support graph")
    edges = []
    for clause in s.clauses:
        support = sorted(clause.support)
        if len(support) == 1:
            raise UnitClausePresent(f"unit clause {clause!r} has no edge support")
        edges.append((support[0], support[1]))
    return Multigraph(frozenset(s.variables()), tuple(edges))


def as_simple(g: Multigraph) -> SimpleGraph:
    """Reinterpret a multiplicity-free multigraph as a simple graph."""
    for pair, mult in sorted(g.multiplicities().items()):
        if mult > 1:
            raise MultiEdgePresent(pair, mult)
    return SimpleGraph(g.vertices, frozenset(g.edges))


def support_graph(s: Cnf2) -> SimpleGraph:
    """The simple support graph of a simple sentence."""
    return as_simple(associated_multigraph(s))


def connected_components(g: SimpleGraph) -> list[SimpleGraph]:
    """Maximal connected subgraphs, ordered by smallest vertex id."""
    seen: set[int] = set()
    components = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        queue = deque([start])
        comp = {start}
        seen.add(start)
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    seen.add(w)
                    queue.append(w)
        comp_edges = frozenset(e for e in g.edges if e[0] in comp)
        components.append(SimpleGraph(frozenset(comp), comp_edges))
    return components


def cycle_rank(g: SimpleGraph) -> int:
    """Dimension of the cycle space: |E| - |V| + number of components."""
    return len(g.edges) - len(g.vertices) + len(connected_components(g))


def component_cycle_ranks(g: SimpleGraph) -> list[int]:
    return [cycle_rank(c) for c in connected_components(g)]


def two_core(g: SimpleGraph) -> SimpleGraph:
    """Maximal subgraph of minimum degree two: delete degree <= 1 vertices to a fixpoint."""
    alive = set(g.vertices)
    degrees = {v: g.degree(v) for v in alive}
    queue = deque(v for v in alive if degrees[v] <= 1)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                degrees[w] -= 1
                if degrees[w] <= 1:
                    queue.append(w)
    edges = frozenset(e for e in g.edges if e[0] in alive and e[1] in alive)
    return SimpleGraph(frozenset(alive), edges)


def cut_vertices(g: SimpleGraph) -> set[int]:
    """Vertices whose removal increases the component count (articulation points)."""
    visited: set[int] = set()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    result: set[int] = set()
    counter = 0
    for root in sorted(g.vertices):
        if root in visited:
            continue
        # iterative lowlink DFS; the root is a cut vertex iff it has 2+ DFS children
        root_children = 0
        stack: list[tuple[int, int | None, int]] = [(root, None, 0)]
        while stack:
            v, parent, pos = stack[-1]
            if pos == 0:
                visited.add(v)
                disc[v] = low[v] = counter
                counter += 1
            children = [w for w in g.neighbors(v) if w != parent]
            descended = False
            while pos < len(children):
                w = children[pos]
                pos += 1
                if w not in visited:
                    stack[-1] = (v, parent, pos)
                    stack.append((w, v, 0))
                    descended = True
                    break
                low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if parent == root:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    result.add(parent)
        if root_children >= 2:
            result.add(root)
    return result


def is_subgraph(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Labelled containment: both the vertex and edge sets are subsets."""
    return g.vertices <= h.vertices and g.edges <= h.edges


def subdivide_edge(g: SimpleGraph, e: Edge) -> SimpleGraph:
    """Replace the edge by a two-edge path through a fresh vertex (max id + 1)."""
    e = edge(*e)
    if e not in g.edges:
        raise EdgeAbsent(f"edge {e} not in graph")
    w = max(g.vertices) + 1
    u, v = e
    edges = (g.edges - {e}) | {edge(u, w), edge(w, v)}
    return SimpleGraph(g.vertices | {w}, frozenset(edges))


def contract_edge(g: SimpleGraph, e: Edge) -> SimpleGraph:
    """Merge the endpoints of an edge into a fresh vertex (max id + 1).

    Only edges not contained in a triangle may be contracted; anything else
    would create a parallel edge and leave the simple-graph world.
    """
    e = edge(*e)
    if e not in g.edges:
        raise EdgeAbsent(f"edge {e} not in graph")
    u, v = e
    common = set(g.neighbors(u)) & set(g.neighbors(v))
    if common:
        raise EdgeInTriangle(f"edge {e} lies in a triangle with {sorted(common)}")
    w = max(g.vertices) + 1
    edges = set()
    for x, y in g.edges - {e}:
        x2 = w if x in (u, v) else x
        y2 = w if y in (u, v) else y
        edges.add(edge(x2, y2))
    vertices = (g.vertices - {u, v}) | {w}
    return SimpleGraph(frozenset(vertices), frozenset(edges))


def smooth_vertex(g: SimpleGraph, v: int) -> SimpleGraph:
    """Undo a subdivision: replace a degree-2 vertex by an edge joining its neighbours."""
    nbrs = g.neighbors(v)
    if len(nbrs) != 2:
        raise GraphError(f"vertex {v} has degree {len(nbrs)}, not 2")
    x, y = nbrs
    if g.has_edge(x, y):
        raise GraphError(f"smoothing {v} would duplicate edge {edge(x, y)}")
    edges = {e for e in g.edges if v not in e} | {edge(x, y)}
    return SimpleGraph(g.vertices - {v}, frozenset(edges))


# ---------------------------------------------------------------------------
# text formats


def parse_edgelist(text: str) -> SimpleGraph:
    """Parse the edge-list format.

    `#` starts a comment, `n <count>` declares vertices 1..count,
    `v <id>` declares an isolated vertex, and `u v` lines declare edges.
    """
    vertices: set[int] = set()
    edges: set[Edge] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        try:
            if parts[0] == "n" and len(parts) == 2:
                count = int(parts[1])
                if count < 0:
                    raise ValueError
                vertices.update(range(1, count + 1))
            elif parts[0] == "v" and len(parts) == 2:
                vertices.add(_positive(parts[1]))
            elif len(parts) == 2:
                u, v = _positive(parts[0]), _positive(parts[1])
                edges.add(edge(u, v))
                vertices.update((u, v))
            else:
                raise ValueError
        except ValueError:
            raise ParseError(lineno, f"bad edge-list line: {stripped!r}") from None
    return SimpleGraph(frozenset(vertices), frozenset(edges))


def _positive(token: str) -> int:
    n = int(token)
    if n < 1:
        raise ValueError(token)
    return n


def edgelist_to_text(g: SimpleGraph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    covered = {v for e in g.edges for v in e}
    for v in sorted(g.vertices - covered):
        lines.append(f"v {v}")
    for u, v in g.sorted_edges():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def to_dot(g: SimpleGraph, highlight_edges: Iterable[Edge] = (),
           highlight_vertices: Iterable[int] = ()) -> str:
    """Graphviz text: an undirected graph with numeric vertex names."""
    marked_e = {edge(u, v) for u, v in highlight_edges}
    marked_v = set(highlight_vertices)
    lines = ["graph {"]
    for v in sorted(g.vertices):
        attr = " [color=red]" if v in marked_v else ""
        lines.append(f"  {v}{attr};")
    for u, v in g.sorted_edges():
        attr = " [color=red]" if (u, v) in marked_e else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
