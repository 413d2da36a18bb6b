import pytest

from satminors.formula import (
    BOTTOM,
    TOP,
    Clause,
    ClauseTooLong,
    Cnf2,
    Literal,
    ParseError,
    SubstitutionStep,
    VariableOutOfRange,
    apply_assignment,
    clause_support,
    cnf_to_dimacs,
    is_reduced,
    parse_dimacs,
    reduce,
    rename_variables,
    substitute,
)

S1_INTS = [[1, 2], [-1, 3], [-2, 3], [-3, 4], [-3, 5], [-4, -5]]


class TestLiteral:
    def test_negate_is_involution(self):
        lit = Literal(3, False)
        assert lit.negate().negate() == lit
        assert lit.negate() == Literal(3, True)

    def test_int_round_trip(self):
        assert Literal.from_int(-7) == Literal(7, False)
        assert Literal.from_int(7).to_int() == 7
        with pytest.raises(ValueError):
            Literal.from_int(0)

    def test_requires_positive_index(self):
        with pytest.raises(ValueError):
            Literal(0)


class TestClause:
    def test_canonical_order(self):
        assert Clause.of(2, -1) == Clause.of(-1, 2)
        assert Clause.of(-1, 1 * 2).literals == (Literal(1, False), Literal(2))

    def test_positive_sorts_before_negative(self):
        assert [l.to_int() for l in Clause.of(-2, 1).literals] == [1, -2]
        assert [l.to_int() for l in Clause.of(-3, 2).literals] == [2, -3]

    def test_rejects_duplicates_and_tautologies(self):
        with pytest.raises(ValueError):
            Clause.of(1, 1)
        with pytest.raises(ValueError):
            Clause.of(1, -1)
        with pytest.raises(ValueError):
            Clause(tuple())

    def test_support(self):
        assert clause_support(Clause.of(1, -2)) == frozenset({1, 2})
        assert clause_support(Clause.of(1)) == frozenset({1})
        assert clause_support(Clause.of(-1, -2)) == frozenset({1, 2})


class TestReduce:
    def test_or_with_top_is_true(self):
        assert reduce([[Literal(1), TOP]]).is_true

    def test_or_with_bottom_drops_constant(self):
        assert reduce([[Literal(1), BOTTOM]]) == Cnf2.from_ints([[1]])

    def test_empty_clause_is_false(self):
        assert reduce([[1], [BOTTOM]]).is_false

    def test_duplicate_literal_collapses(self):
        assert reduce([[1, 1]]) == Cnf2.from_ints([[1]])

    def test_duplicate_clause_collapses(self):
        assert reduce([[1], [1]]) == Cnf2.from_ints([[1]])

    def test_complementary_pair_is_tautology(self):
        assert reduce([[1, -1]]).is_true
        assert reduce([[1, 1], [1, -1]]) == Cnf2.from_ints([[1]])

    def test_no_clauses_is_true(self):
        assert reduce([]).is_true

    def test_idempotent(self):
        s = reduce([[1, 2], [1, 2], [3, TOP], [-2, BOTTOM]])
        again = reduce([[l for l in c.literals] for c in s.clauses])
        assert again == s

    def test_three_distinct_literals_rejected(self):
        with pytest.raises(ClauseTooLong):
            reduce([[1, 2, 3]])


class TestSubstitute:
    def test_const_true(self):
        s = Cnf2.from_ints([[1, 2], [-1, 3]])
        assert substitute(s, SubstitutionStep(1, True)) == Cnf2.from_ints([[3]])

    def test_by_literal_tautologizes(self):
        s = Cnf2.from_ints([[1, 2], [-1, -2]])
        out = substitute(s, SubstitutionStep(2, Literal(1, False)))
        assert out.is_true

    def test_const_false(self):
        s = Cnf2.from_ints([[1, 2]])
        assert substitute(s, SubstitutionStep(1, False)) == Cnf2.from_ints([[2]])

    def test_constants_are_fixed_points(self):
        step = SubstitutionStep(1, True)
        assert substitute(Cnf2.true(), step).is_true
        assert substitute(Cnf2.false(), step).is_false

    def test_commutes_on_distinct_targets(self):
        s = Cnf2.from_ints([[1, 2], [-2, 3], [1, -3]])
        p, q = SubstitutionStep(1, True), SubstitutionStep(3, False)
        assert substitute(substitute(s, p), q) == substitute(substitute(s, q), p)

    def test_replacement_variable_must_differ(self):
        with pytest.raises(ValueError):
            SubstitutionStep(1, Literal(1, False))


class TestApplyAssignment:
    def test_unsatisfiable_sentence_always_false(self):
        s = Cnf2.from_ints(S1_INTS)
        n = 5
        for bits in range(1 << n):
            asg = {v: bool((bits >> (v - 1)) & 1) for v in range(1, n + 1)}
            assert apply_assignment(s, asg).is_false

    def test_true_fixed_point(self):
        assert apply_assignment(Cnf2.true(), {1: False}).is_true

    def test_partial_assignment_can_satisfy(self):
        assert apply_assignment(Cnf2.from_ints([[1, 2]]), {1: True}).is_true

    def test_total_assignment_yields_constant(self):
        s = Cnf2.from_ints([[1, 2], [-2, 3]])
        out = apply_assignment(s, {1: True, 2: False, 3: False})
        assert out.is_true or out.is_false

    def test_equals_folded_substitution(self):
        s = Cnf2.from_ints([[1, 2], [-2, 3], [3, -4]])
        asg = {1: False, 3: True, 4: False}
        folded = s
        for var, value in asg.items():
            folded = substitute(folded, SubstitutionStep(var, value))
        assert apply_assignment(s, asg) == folded


class TestIsReduced:
    def test_cnf_values_are_reduced(self):
        assert is_reduced(Cnf2.from_ints([[1, 2]]))
        assert is_reduced(Cnf2.true())

    def test_raw_duplicate_literal(self):
        assert not is_reduced([[1, 1]])

    def test_raw_constant(self):
        assert not is_reduced([[1, TOP]])

    def test_raw_duplicate_clause(self):
        assert not is_reduced([[1, 2], [2, 1]])

    def test_raw_reduced(self):
        assert is_reduced([[1, 2], [-1, 2]])


class TestCanonicalEquality:
    def test_clause_order_is_immaterial(self):
        a = Cnf2.from_ints([[1, 2], [-1, -2], [2, 3]])
        b = Cnf2.from_ints([[2, 3], [-2, -1], [2, 1]])
        assert a == b
        assert hash(a) == hash(b)


class TestParseDimacs:
    def test_direct_transcription(self):
        s = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n")
        assert s == Cnf2.from_ints([[1, 2], [-1, -2]])

    def test_tautological_clause_reduces_to_true(self):
        assert parse_dimacs("p cnf 1 1\n1 -1 0\n").is_true

    def test_duplicate_clause_collapses(self):
        s = parse_dimacs("p cnf 1 2\n1 0\n1 0\n")
        assert s == Cnf2.from_ints([[1]])

    def test_comments_blanks_and_multiline_clauses(self):
        text = "c a comment\n\np cnf 3 2\nc mid comment\n1\n2 0\n-3 0\n"
        assert parse_dimacs(text) == Cnf2.from_ints([[1, 2], [-3]])

    def test_bytes_accepted(self):
        assert parse_dimacs(b"p cnf 1 1\n1 0\n") == Cnf2.from_ints([[1]])

    def test_empty_clause_is_false(self):
        assert parse_dimacs("p cnf 0 1\n0\n").is_false

    def test_unused_declared_variables_permitted(self):
        assert parse_dimacs("p cnf 9 1\n1 0\n") == Cnf2.from_ints([[1]])
        assert parse_dimacs("p cnf 4 0\n").is_true

    def test_clause_too_long(self):
        with pytest.raises(ClauseTooLong):
            parse_dimacs("p cnf 3 1\n1 2 3 0\n")
        with pytest.raises(ClauseTooLong):
            parse_dimacs("p cnf 2 1\n1 -1 2 0\n")

    def test_duplicated_literal_is_fine(self):
        assert parse_dimacs("p cnf 2 1\n1 1 2 0\n") == Cnf2.from_ints([[1, 2]])

    def test_variable_out_of_range(self):
        with pytest.raises(VariableOutOfRange):
            parse_dimacs("p cnf 1 1\n2 0\n")

    @pytest.mark.parametrize(
        "text",
        [
            "garbage\n",
            "1 2 0\n",
            "p cnf 2\n1 2 0\n",
            "p cnf 2 1\np cnf 2 1\n1 0\n",
            "p cnf 2 1\n1 2\n",
            "p cnf 2 1\nx y 0\n",
        ],
    )
    def test_malformed_inputs(self, text):
        with pytest.raises(ParseError):
            parse_dimacs(text)

    def test_error_carries_line_number(self):
        with pytest.raises(ParseError) as err:
            parse_dimacs("p cnf 2 1\nnope 0\n")
        assert err.value.line == 2


class TestDimacsEmission:
    def test_round_trip(self):
        s = Cnf2.from_ints([[2, 3], [-1, -2], [1]])
        assert parse_dimacs(cnf_to_dimacs(s)) == s

    def test_true_and_false_round_trip(self):
        assert parse_dimacs(cnf_to_dimacs(Cnf2.true())).is_true
        assert parse_dimacs(cnf_to_dimacs(Cnf2.false())).is_false

    def test_canonical_clause_order(self):
        s = Cnf2.from_ints([[-1, -2], [1, 2]])
        body = [l for l in cnf_to_dimacs(s).splitlines() if not l.startswith(("c", "p"))]
        assert body == ["1 2 0", "-1 -2 0"]

    def test_comments_prefixed(self):
        text = cnf_to_dimacs(Cnf2.from_ints([[1]]), comments=["hello"])
        assert text.startswith("c hello\n")


class TestRenameVariables:
    def test_basic(self):
        s = Cnf2.from_ints([[1, 2], [-2, 3]])
        assert rename_variables(s, {1: 10, 2: 20, 3: 30}) == Cnf2.from_ints(
            [[10, 20], [-20, 30]]
        )

    def test_collision_rejected(self):
        s = Cnf2.from_ints([[1, 2]])
        with pytest.raises(ValueError):
            rename_variables(s, {1: 2})
