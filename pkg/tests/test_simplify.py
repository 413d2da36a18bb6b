import random

import pytest

from corpus_util import random_cnf
from satminors import (
    Cnf2,
    Literal,
    SimplifyResult,
    SubstitutionStep,
    apply_assignment,
    associated_multigraph,
    collapse_pair,
    count_pair_clauses,
    eliminate_units,
    lift_model,
    solve,
    to_simple,
)
from satminors.simplify import ModelInvalid, PreconditionViolated, replay_trace

S1 = Cnf2.from_ints([[1, 2], [-1, 3], [-2, 3], [-3, 4], [-3, 5], [-4, -5]])


class TestCountPairClauses:
    def test_examples(self):
        s = Cnf2.from_ints([[1, 2], [-1, -2]])
        assert count_pair_clauses(s, 1, 2) == 2
        assert count_pair_clauses(S1, 1, 2) == 1
        assert count_pair_clauses(Cnf2.from_ints([[1, 3]]), 1, 2) == 0

    def test_symmetric_and_strict(self):
        s = Cnf2.from_ints([[1, 2], [1, -2], [-1, 2]])
        assert count_pair_clauses(s, 2, 1) == 3
        with pytest.raises(ValueError):
            count_pair_clauses(s, 1, 1)


class TestEliminateUnits:
    def test_complementary_units_unsatisfiable(self):
        s = Cnf2.from_ints([[3, 4], [1], [-1]])
        out, trace = eliminate_units(s)
        assert out.is_false
        assert replay_trace(s, trace) == out

    def test_unit_propagation_chain(self):
        s = Cnf2.from_ints([[1], [-1, 2]])
        out, trace = eliminate_units(s)
        assert out.is_true
        assert trace == (SubstitutionStep(1, True), SubstitutionStep(2, True))

    def test_no_units_untouched(self):
        s = Cnf2.from_ints([[1, 2]])
        assert eliminate_units(s) == (s, ())

    def test_negative_unit_binds_false(self):
        s = Cnf2.from_ints([[-1], [1, 2]])
        out, trace = eliminate_units(s)
        assert out.is_true
        assert trace == (SubstitutionStep(1, False), SubstitutionStep(2, True))


class TestCollapsePair:
    def test_all_four_clauses_is_false(self):
        s = Cnf2.from_ints([[1, 2], [1, -2], [-1, 2], [-1, -2]])
        out, trace = collapse_pair(s, 1, 2)
        assert out.is_false
        assert replay_trace(s, trace).is_false

    def test_three_clauses_bind_both_true(self):
        s = Cnf2.from_ints([[1, 2], [1, -2], [-1, 2], [-1, 3]])
        out, trace = collapse_pair(s, 1, 2)
        assert trace == (SubstitutionStep(1, True), SubstitutionStep(2, True))
        assert out == Cnf2.from_ints([[3]])

    def test_three_clauses_other_polarities(self):
        # surviving assignment is 1 false, 2 true
        s = Cnf2.from_ints([[1, 2], [-1, 2], [-1, -2], [1, 3]])
        out, trace = collapse_pair(s, 1, 2)
        assert trace == (SubstitutionStep(1, False), SubstitutionStep(2, True))
        assert out == Cnf2.from_ints([[3]])

    def test_opposite_pair_ties_negated(self):
        s = Cnf2.from_ints([[1, 2], [-1, -2], [2, 3]])
        out, trace = collapse_pair(s, 1, 2)
        assert trace == (SubstitutionStep(2, Literal(1, False)),)
        assert out == Cnf2.from_ints([[-1, 3]])

    def test_equal_pair_ties_positively(self):
        s = Cnf2.from_ints([[1, -2], [-1, 2], [2, 3]])
        out, trace = collapse_pair(s, 1, 2)
        assert trace == (SubstitutionStep(2, Literal(1, True)),)
        assert out == Cnf2.from_ints([[1, 3]])

    def test_implied_unit_binds(self):
        s = Cnf2.from_ints([[1, 2], [1, -2], [-1, 3]])
        out, trace = collapse_pair(s, 1, 2)
        assert trace == (SubstitutionStep(1, True),)
        assert out == Cnf2.from_ints([[3]])

    def test_multiplicity_below_two_rejected(self):
        with pytest.raises(PreconditionViolated):
            collapse_pair(Cnf2.from_ints([[1, 2]]), 1, 2)


class TestToSimple:
    def test_tie_then_rewrite(self):
        s = Cnf2.from_ints([[1, 2], [-1, -2], [2, 3]])
        out = to_simple(s)
        assert out.result is SimplifyResult.SIMPLE
        assert out.cnf == Cnf2.from_ints([[-1, 3]])
        assert out.trace == (SubstitutionStep(2, Literal(1, False)),)

    def test_contradictory_units(self):
        out = to_simple(Cnf2.from_ints([[1], [-1]]))
        assert out.result is SimplifyResult.UNSATISFIABLE

    def test_already_simple_is_fixpoint(self):
        s = Cnf2.from_ints([[1, 2], [-2, 3]])
        out = to_simple(s)
        assert out.result is SimplifyResult.SIMPLE
        assert out.cnf == s
        assert out.trace == ()

    def test_trivially_true(self):
        out = to_simple(Cnf2.from_ints([[1], [-1, 2]]))
        assert out.result is SimplifyResult.TRIVIALLY_TRUE
        assert out.trace == (SubstitutionStep(1, True), SubstitutionStep(2, True))

    def test_constant_inputs(self):
        assert to_simple(Cnf2.true()).result is SimplifyResult.TRIVIALLY_TRUE
        assert to_simple(Cnf2.false()).result is SimplifyResult.UNSATISFIABLE

    def test_smallest_pair_processed_first(self):
        s = Cnf2.from_ints([[2, 3], [-2, -3], [1, 4], [-1, 4], [1, 5]])
        out = to_simple(s)
        first = out.trace[0]
        assert first.target in (1, 4)  # pair (1, 4) precedes (2, 3)

    def test_cascade_creates_new_units_and_pairs(self):
        # tying 2 := not 1 creates a second (1, 3) clause, which then collapses
        s = Cnf2.from_ints([[1, 2], [-1, -2], [2, 3], [1, 3]])
        out = to_simple(s)
        assert out.result in (SimplifyResult.SIMPLE, SimplifyResult.TRIVIALLY_TRUE)
        assert replay_trace(s, out.trace) == out.cnf

    def test_step_count_bounded_by_variables(self):
        rng = random.Random(11)
        for _ in range(300):
            s = random_cnf(rng)
            out = to_simple(s)
            if s.is_nontrivial:
                assert len(out.trace) <= len(s.variables())


class TestSimpleOutcomeInvariants:
    def test_randomized_equisatisfiability(self):
        rng = random.Random(1234)
        for _ in range(1500):
            s = random_cnf(rng)
            out = to_simple(s)
            assert replay_trace(s, out.trace) == out.cnf
            before = solve(s).satisfiable
            if out.result is SimplifyResult.UNSATISFIABLE:
                assert not before
                continue
            if out.result is SimplifyResult.TRIVIALLY_TRUE:
                assert before
                continue
            res = solve(out.cnf)
            assert res.satisfiable == before
            assert all(len(c.support) == 2 for c in out.cnf.clauses)
            assert associated_multigraph(out.cnf).is_simple
            if res.satisfiable:
                lifted = lift_model(out, res.model)
                assert apply_assignment(s, lifted).is_true


class TestLiftModel:
    def test_identity_on_empty_trace(self):
        out = to_simple(Cnf2.from_ints([[1, 2]]))
        assert lift_model(out, {1: True, 2: False}) == {1: True, 2: False}

    def test_replays_unit_bindings(self):
        s = Cnf2.from_ints([[1], [1, 2], [-1, 3]])
        out = to_simple(s)
        lifted = lift_model(out, {})
        assert apply_assignment(s, lifted).is_true
        assert lifted[1] is True

    def test_tie_resolved_from_source(self):
        s = Cnf2.from_ints([[1, 2], [-1, -2], [2, 3]])
        out = to_simple(s)  # trace: 2 := not 1
        lifted = lift_model(out, {1: True, 3: True})
        assert lifted == {1: True, 3: True, 2: False}

    def test_unbound_source_defaults_true(self):
        s = Cnf2.from_ints([[1, 2], [-1, -2]])
        out = to_simple(s)
        lifted = lift_model(out, {})
        assert apply_assignment(s, lifted).is_true
        assert lifted[1] is True and lifted[2] is False

    def test_invalid_model_rejected(self):
        out = to_simple(Cnf2.from_ints([[1, 2], [-2, 3]]))
        with pytest.raises(ModelInvalid):
            lift_model(out, {1: False, 2: False, 3: True})

    def test_unsatisfiable_outcome_rejected(self):
        out = to_simple(Cnf2.from_ints([[1], [-1]]))
        with pytest.raises(ValueError):
            lift_model(out, {})
