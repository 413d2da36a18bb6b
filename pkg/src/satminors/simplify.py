"""Rewrite any reduced sentence of 1- and 2-literal clauses into an
equisatisfiable simple one.

"Simple" means the clause set mentions each variable pair at most once and
has no unit clauses, so its support is a simple graph.  The rewrite binds
variables forced by units or by repeated pairs, records every binding in a
replayable trace, and either reaches a simple sentence, the constant true
sentence, or detects unsatisfiability outright.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .formula import (
    Assignment,
    Cnf2,
    Literal,
    SubstitutionStep,
    apply_assignment,
    substitute,
)

Trace = tuple[SubstitutionStep, ...]


class PreconditionViolated(ValueError):
    """An operation was called outside its stated precondition."""


class ModelInvalid(ValueError):
    """The supplied model does not satisfy the simplified sentence."""


class SimplifyResult(enum.Enum):
    UNSATISFIABLE = "unsatisfiable"
    TRIVIALLY_TRUE = "trivially-true"
    SIMPLE = "simple"


@dataclass(frozen=True)
class SimplifyOutcome:
    result: SimplifyResult
    cnf: Cnf2
    trace: Trace

    @property
    def is_simple(self) -> bool:
        return self.result is SimplifyResult.SIMPLE


def count_pair_clauses(s: Cnf2, a: int, b: int) -> int:
    """Number of clauses over exactly the variables a and b (0 to 4)."""
    if a == b:
        raise ValueError("pair requires two distinct variables")
    if not s.is_nontrivial:
        return 0
    pair = frozenset((a, b))
    return sum(1 for c in s.clauses if c.support == pair)


def eliminate_units(s: Cnf2) -> tuple[Cnf2, Trace]:
    """Bind unit-clause variables until none remain or falsity is reached.

    Each forced binding is recorded; binding a variable whose complementary
    unit is also present reduces the sentence to false.
    """
    trace: list[SubstitutionStep] = []
    current = s
    while current.is_nontrivial:
        units = [c.literals[0] for c in current.clauses if c.is_unit]
        if not units:
            break
        lit = min(units, key=lambda l: l.key)
        step = SubstitutionStep(lit.var, lit.positive)
        trace.append(step)
        current = substitute(current, step)
    return current, tuple(trace)


# For a pair (a, b) with a < b, a clause's polarity is the pair of signs
# (a positive?, b positive?).  A clause (pa, pb) rules out exactly the
# assignment (not pa, not pb), so three clauses leave one assignment
# alive: the one only the missing fourth clause would rule out.
_TRIPLE_BINDINGS: dict[frozenset[tuple[bool, bool]], tuple[bool, bool]] = {
    frozenset({(True, True), (True, False), (False, True)}): (True, True),
    frozenset({(True, True), (True, False), (False, False)}): (True, False),
    frozenset({(True, True), (False, True), (False, False)}): (False, True),
    frozenset({(True, False), (False, True), (False, False)}): (False, False),
}

# Two clauses either force one variable or tie the two together.
_DOUBLE_ACTIONS: dict[frozenset[tuple[bool, bool]], tuple[str, object]] = {
    frozenset({(True, True), (True, False)}): ("bind_a", True),
    frozenset({(False, True), (False, False)}): ("bind_a", False),
    frozenset({(True, True), (False, True)}): ("bind_b", True),
    frozenset({(True, False), (False, False)}): ("bind_b", False),
    frozenset({(True, True), (False, False)}): ("tie", False),
    frozenset({(True, False), (False, True)}): ("tie", True),
}


def collapse_pair(s: Cnf2, a: int, b: int) -> tuple[Cnf2, Trace]:
    """Remove a variable pair mentioned by two or more clauses.

    Four clauses over the pair are jointly contradictory; three force both
    variables; two either force one variable or make one variable a literal
    of the other.  The recorded steps replay to the returned sentence.
    """
    if a > b:
        a, b = b, a
    mult = count_pair_clauses(s, a, b)
    if mult < 2:
        raise PreconditionViolated(f"pair ({a}, {b}) has multiplicity {mult} < 2")
    pair = frozenset((a, b))
    polarities = frozenset(
        (c.literal_for(a).positive, c.literal_for(b).positive)
        for c in s.clauses
        if c.support == pair
    )
    steps: list[SubstitutionStep]
    if mult == 4:
        # substituting both in sequence grinds the four clauses down to falsity
        steps = [SubstitutionStep(a, True), SubstitutionStep(b, True)]
    elif mult == 3:
        va, vb = _TRIPLE_BINDINGS[polarities]
        steps = [SubstitutionStep(a, va), SubstitutionStep(b, vb)]
    else:
        action, arg = _DOUBLE_ACTIONS[polarities]
        if action == "bind_a":
            steps = [SubstitutionStep(a, arg)]
        elif action == "bind_b":
            steps = [SubstitutionStep(b, arg)]
        else:
            # opposite-polarity pair: b must mirror (or copy) a
            steps = [SubstitutionStep(b, Literal(a, bool(arg)))]
    current = s
    for step in steps:
        current = substitute(current, step)
    return current, tuple(steps)


def _smallest_heavy_pair(s: Cnf2) -> tuple[int, int] | None:
    counts: Counter[frozenset[int]] = Counter(
        c.support for c in s.clauses if len(c.support) == 2
    )
    heavy = [tuple(sorted(p)) for p, n in counts.items() if n >= 2]
    return min(heavy) if heavy else None  # type: ignore[return-value]


def to_simple(s: Cnf2) -> SimplifyOutcome:
    """Fixpoint loop: clear units, collapse the smallest repeated pair, repeat.

    Every binding removes a variable, so the loop terminates in at most
    |variables| steps.  The outcome is equisatisfiable to the input.
    """
    trace: list[SubstitutionStep] = []
    current = s
    while True:
        current, t = eliminate_units(current)
        trace.extend(t)
        if current.is_true:
            return SimplifyOutcome(SimplifyResult.TRIVIALLY_TRUE, current, tuple(trace))
        if current.is_false:
            return SimplifyOutcome(SimplifyResult.UNSATISFIABLE, current, tuple(trace))
        pair = _smallest_heavy_pair(current)
        if pair is None:
            return SimplifyOutcome(SimplifyResult.SIMPLE, current, tuple(trace))
        current, t = collapse_pair(current, *pair)
        trace.extend(t)


def replay_trace(s: Cnf2, trace: Iterable[SubstitutionStep]) -> Cnf2:
    """Apply recorded steps in order; reproduces the simplified sentence."""
    current = s
    for step in trace:
        current = substitute(current, step)
    return current


def lift_model(outcome: SimplifyOutcome, model: Mapping[int, bool]) -> Assignment:
    """Extend a model of the simplified sentence to one of the original.

    Walks the trace backwards, giving each substituted variable the value
    its replacement took.  A literal replacement whose source variable is
    still unbound gets a default of true first.
    """
    if outcome.result is SimplifyResult.UNSATISFIABLE:
        raise ValueError("an unsatisfiable outcome has no model to lift")
    if outcome.is_simple and not apply_assignment(outcome.cnf, model).is_true:
        raise ModelInvalid("model does not satisfy the simplified sentence")
    lifted: Assignment = dict(model)
    for step in reversed(outcome.trace):
        if isinstance(step.replacement, bool):
            lifted[step.target] = step.replacement
        else:
            source = step.replacement
            if source.var not in lifted:
                lifted[source.var] = True
            value = lifted[source.var]
            lifted[step.target] = value if source.positive else not value
    return lifted
