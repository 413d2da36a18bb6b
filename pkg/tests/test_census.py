import pytest

from corpus_util import tree_corpus
from satminors import (
    Clause,
    CensusReport,
    EdgePolarity,
    SimpleGraph,
    census,
    fixture_graph,
    is_minimal_unsat_support,
    solve,
    supports_unsat_bruteforce,
)
from satminors.census import TooManyEdges, formula_at


class TestEdgePolarity:
    def test_four_codes_bijective(self):
        clauses = {p.clause(1, 2) for p in EdgePolarity}
        assert clauses == {
            Clause.of(1, 2),
            Clause.of(1, -2),
            Clause.of(-1, 2),
            Clause.of(-1, -2),
        }

    def test_orientation_canonical(self):
        assert EdgePolarity.PN.clause(2, 1) == Clause.of(1, -2)


class TestFormulaAt:
    def test_lexicographic_decoding(self):
        edges = [(1, 2), (1, 3)]
        assert formula_at(edges, 0).clauses == (Clause.of(1, 2), Clause.of(1, 3))
        # first edge is the most significant digit
        assert formula_at(edges, 4).clauses == (Clause.of(1, -2), Clause.of(1, 3))
        assert formula_at(edges, 3).clauses == (Clause.of(1, 2), Clause.of(-1, -3))


class TestCensus:
    def test_triangle_all_satisfiable(self):
        report = census(fixture_graph("c3"))
        assert (report.total, report.sat_count, report.unsat_count) == (64, 64, 0)
        assert report.example_unsat is None

    def test_k4_minus_e_all_satisfiable(self):
        report = census(fixture_graph("k4-e"))
        assert (report.total, report.sat_count, report.unsat_count) == (1024, 1024, 0)

    def test_butterfly_finds_unsatisfiable(self):
        report = census(fixture_graph("butterfly"))
        assert report.total == 4096
        assert report.unsat_count >= 1
        assert not solve(report.example_unsat).satisfiable

    def test_engines_and_threads_agree(self):
        for name in ["butterfly", "bowtie", "c3", "square-butterfly"]:
            g = fixture_graph(name)
            results = [
                census(g, engine="solver"),
                census(g, engine="vector"),
                census(g, engine="vector", threads=3),
            ]
            head = results[0]
            for other in results[1:]:
                assert (other.sat_count, other.unsat_count) == (
                    head.sat_count,
                    head.unsat_count,
                )
                assert other.example_unsat == head.example_unsat

    def test_example_is_lexicographically_first(self):
        g = fixture_graph("butterfly")
        report = census(g)
        edges = g.sorted_edges()
        first = next(
            i for i in range(report.total) if not solve(formula_at(edges, i)).satisfiable
        )
        assert report.example_unsat == formula_at(edges, first)

    def test_edge_cap(self):
        with pytest.raises(TooManyEdges):
            census(fixture_graph("butterfly"), cap=5)

    def test_edgeless_graph(self):
        report = census(SimpleGraph.of([], isolated=[1, 2]))
        assert (report.total, report.sat_count, report.unsat_count) == (1, 1, 0)

    def test_single_edge(self):
        report = census(SimpleGraph.of([(1, 2)]))
        assert (report.total, report.unsat_count) == (4, 0)

    def test_isolated_vertices_do_not_change_counts(self):
        g = fixture_graph("c3")
        padded = SimpleGraph(g.vertices | {9}, g.edges)
        assert census(padded).sat_count == 64

    def test_report_invariants_enforced(self):
        g = fixture_graph("c3")
        with pytest.raises(AssertionError):
            CensusReport(g, 64, 63, 0, None)


class TestSupportsUnsatBruteforce:
    def test_examples(self):
        assert supports_unsat_bruteforce(fixture_graph("k4"))
        assert supports_unsat_bruteforce(fixture_graph("book"))
        assert not supports_unsat_bruteforce(fixture_graph("c3"))

    def test_trees_never_support(self):
        for tree in tree_corpus(max_edges=6)[:10]:
            assert not supports_unsat_bruteforce(tree)

    def test_edge_deletion_monotone(self):
        # deleting an edge can never create support for an unsatisfiable sentence
        for name in ["c3", "k4-e", "square-butterfly"]:
            g = fixture_graph(name)
            assert not supports_unsat_bruteforce(g)
            for e in g.sorted_edges():
                smaller = SimpleGraph(g.vertices, g.edges - {e})
                assert not supports_unsat_bruteforce(smaller)


class TestMinimality:
    def test_butterfly_minimal(self):
        assert is_minimal_unsat_support(fixture_graph("butterfly"))

    def test_bowtie_minimal(self):
        assert is_minimal_unsat_support(fixture_graph("bowtie"))

    def test_pendant_breaks_minimality(self):
        g = fixture_graph("butterfly")
        bigger = SimpleGraph.of(sorted(g.edges) + [(5, 6)])
        assert supports_unsat_bruteforce(bigger)
        assert not is_minimal_unsat_support(bigger)

    def test_subdivision_breaks_minimality(self):
        from satminors import subdivide_edge

        g = subdivide_edge(fixture_graph("k4"), (1, 2))
        assert supports_unsat_bruteforce(g)
        assert not is_minimal_unsat_support(g)

    def test_requires_supporting_graph(self):
        with pytest.raises(ValueError):
            is_minimal_unsat_support(fixture_graph("c3"))
