"""Reduced CNF sentences with clauses of length one or two.

A stored sentence is always in reduced form: the boolean constants are
eliminated, duplicate literals and exact-duplicate clauses are collapsed,
and clauses containing a variable together with its negation are dropped
as tautologies.  The three possible shapes are the constant-true sentence,
the constant-false sentence, and a nonempty canonical clause set.  All
values are immutable; every operation returns a new value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

# Partial truth assignment, variable index -> value.
Assignment = dict[int, bool]


class FormulaError(ValueError):
    """Base class for errors raised while building or parsing sentences."""


class ParseError(FormulaError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ClauseTooLong(FormulaError):
    """A clause mentions three or more distinct literals."""


class VariableOutOfRange(FormulaError):
    """A DIMACS literal exceeds the declared variable count."""


class Const(enum.Enum):
    """Boolean constants, admitted only transiently inside raw clauses."""

    TOP = "top"
    BOTTOM = "bottom"


TOP = Const.TOP
BOTTOM = Const.BOTTOM


@dataclass(frozen=True)
class Literal:
    """A variable or its negation.  Variable indices are 1-based."""

    var: int
    positive: bool = True

    def __post_init__(self) -> None:
        if self.var < 1:
            raise ValueError(f"variable index must be >= 1, got {self.var}")

    def negate(self) -> Literal:
        return Literal(self.var, not self.positive)

    @classmethod
    def from_int(cls, n: int) -> Literal:
        if n == 0:
            raise ValueError("0 does not encode a literal")
        return cls(abs(n), n > 0)

    def to_int(self) -> int:
        return self.var if self.positive else -self.var

    @property
    def key(self) -> tuple[int, int]:
        # canonical order: by variable, positive before negative
        return (self.var, 0 if self.positive else 1)

    def __repr__(self) -> str:
        return str(self.to_int())


RawLiteral = Union[Literal, Const, int]
RawClause = Sequence[RawLiteral]


@dataclass(frozen=True)
class Clause:
    """A disjunction of one or two literals over distinct variables.

    Literals are kept sorted by (variable, sign); duplicate or
    complementary literals are rejected because reduction removes them
    before a Clause is ever formed.
    """

    literals: tuple[Literal, ...]

    def __post_init__(self) -> None:
        lits = tuple(sorted(self.literals, key=lambda l: l.key))
        if not 1 <= len(lits) <= 2:
            raise ValueError(f"clause must have 1 or 2 literals, got {len(lits)}")
        if len(lits) == 2 and lits[0].var == lits[1].var:
            if lits[0].positive == lits[1].positive:
                raise ValueError("duplicate literal; reduce the clause first")
            raise ValueError("complementary literals form a tautology, not a clause")
        object.__setattr__(self, "literals", lits)

    @classmethod
    def of(cls, *ints: int) -> Clause:
        return cls(tuple(Literal.from_int(n) for n in ints))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(l.var for l in self.literals)

    @property
    def is_unit(self) -> bool:
        return len(self.literals) == 1

    def literal_for(self, var: int) -> Literal:
        for l in self.literals:
            if l.var == var:
                return l
        raise KeyError(var)

    @property
    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(l.key for l in self.literals)

    def __repr__(self) -> str:
        return "(" + " ".join(repr(l) for l in self.literals) + ")"


class CnfKind(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class Cnf2:
    """A reduced sentence: constant true, constant false, or a clause set.

    In the nontrivial state the clause tuple is nonempty, sorted
    canonically, and free of exact duplicates, so two sentences built from
    the same clauses in any order compare equal.
    """

    kind: CnfKind
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self) -> None:
        if self.kind is CnfKind.NONTRIVIAL:
            if not self.clauses:
                raise ValueError("nontrivial sentence needs at least one clause")
            ordered = tuple(sorted(set(self.clauses), key=lambda c: c.key))
            object.__setattr__(self, "clauses", ordered)
        elif self.clauses:
            raise ValueError(f"{self.kind.value} sentence carries no clauses")

    @classmethod
    def true(cls) -> Cnf2:
        return cls(CnfKind.TRUE)

    @classmethod
    def false(cls) -> Cnf2:
        return cls(CnfKind.FALSE)

    @classmethod
    def of(cls, clauses: Iterable[Clause]) -> Cnf2:
        cs = tuple(clauses)
        if not cs:
            return cls.true()
        return cls(CnfKind.NONTRIVIAL, cs)

    @classmethod
    def from_ints(cls, clause_lists: Iterable[Iterable[int]]) -> Cnf2:
        """Build and reduce a sentence from DIMACS-style integer clauses."""
        return reduce(list(map(list, clause_lists)))

    @property
    def is_true(self) -> bool:
        return self.kind is CnfKind.TRUE

    @property
    def is_false(self) -> bool:
        return self.kind is CnfKind.FALSE

    @property
    def is_nontrivial(self) -> bool:
        return self.kind is CnfKind.NONTRIVIAL

    def variables(self) -> frozenset[int]:
        out: set[int] = set()
        for c in self.clauses:
            out.update(c.support)
        return frozenset(out)

    def __repr__(self) -> str:
        if self.is_true:
            return "Cnf2<true>"
        if self.is_false:
            return "Cnf2<false>"
        return "Cnf2" + "".join(repr(c) for c in self.clauses)


@dataclass(frozen=True)
class SubstitutionStep:
    """One variable binding: to a constant or to another variable's literal."""

    target: int
    replacement: Union[Literal, bool]

    def __post_init__(self) -> None:
        if self.target < 1:
            raise ValueError("target must be a variable index")
        if isinstance(self.replacement, Literal) and self.replacement.var == self.target:
            raise ValueError("literal replacement must use a different variable")

    def __repr__(self) -> str:
        if self.replacement is True:
            return f"{self.target}:=T"
        if self.replacement is False:
            return f"{self.target}:=F"
        return f"{self.target}:={self.replacement!r}"


def _coerce(x: RawLiteral) -> Union[Literal, Const]:
    if isinstance(x, int) and not isinstance(x, bool):
        return Literal.from_int(x)
    if isinstance(x, (Literal, Const)):
        return x
    raise TypeError(f"not a raw literal: {x!r}")


def reduce(raw_clauses: Iterable[RawClause]) -> Cnf2:
    """Apply the reduction tautologies to raw clauses until a fixpoint.

    Constants are eliminated, duplicate literals and clauses collapse,
    clauses holding a complementary pair drop out, and a clause left empty
    makes the whole sentence false.  Idempotent; accepts plain ints,
    Literal values, and the TOP/BOTTOM constants inside clauses.
    """
    kept: list[Clause] = []
    false_seen = False
    for raw in raw_clauses:
        lits: list[Literal] = []
        always_true = False
        for x in raw:
            y = _coerce(x)
            if y is TOP:
                always_true = True
            elif y is BOTTOM:
                continue
            elif isinstance(y, Literal):
                if y.negate() in lits:
                    always_true = True
                elif y not in lits:
                    lits.append(y)
        if always_true:
            continue
        if not lits:
            false_seen = True
            continue
        if len(lits) > 2:
            raise ClauseTooLong(f"{len(lits)} distinct literals in one clause")
        kept.append(Clause(tuple(lits)))
    if false_seen:
        return Cnf2.false()
    return Cnf2.of(kept)


def substitute(s: Cnf2, step: SubstitutionStep) -> Cnf2:
    """Replace every occurrence of the target variable, then reduce.

    A constant replacement sets the variable; a literal replacement maps
    occurrences of the target to that literal and negated occurrences to
    its negation.  True and false sentences are fixed points.
    """
    if not s.is_nontrivial:
        return s
    raw: list[list[RawLiteral]] = []
    for clause in s.clauses:
        row: list[RawLiteral] = []
        for lit in clause.literals:
            if lit.var != step.target:
                row.append(lit)
            elif isinstance(step.replacement, Literal):
                row.append(step.replacement if lit.positive else step.replacement.negate())
            else:
                value = step.replacement if lit.positive else not step.replacement
                row.append(TOP if value else BOTTOM)
        raw.append(row)
    return reduce(raw)


def apply_assignment(s: Cnf2, asg: Mapping[int, bool]) -> Cnf2:
    """Set every bound variable at once; equals folding substitute in any order."""
    if not s.is_nontrivial:
        return s
    raw: list[list[RawLiteral]] = []
    for clause in s.clauses:
        row: list[RawLiteral] = []
        for lit in clause.literals:
            if lit.var in asg:
                value = asg[lit.var] if lit.positive else not asg[lit.var]
                row.append(TOP if value else BOTTOM)
            else:
                row.append(lit)
        raw.append(row)
    return reduce(raw)


def clause_support(c: Clause) -> frozenset[int]:
    """The set of distinct variables the clause mentions."""
    return c.support


def is_reduced(s: Union[Cnf2, Iterable[RawClause]]) -> bool:
    """True iff reduction would leave the input unchanged.

    Cnf2 values are reduced by construction.  Raw clause lists are checked
    literally: any constant, duplicate or complementary literal, empty
    clause, or repeated clause means a tautology still applies.
    """
    if isinstance(s, Cnf2):
        return True
    seen: set[frozenset[Literal]] = set()
    for raw in s:
        lits: set[Literal] = set()
        for x in raw:
            y = _coerce(x)
            if isinstance(y, Const):
                return False
            if y in lits or y.negate() in lits:
                return False
            lits.add(y)
        if not lits:
            return False
        key = frozenset(lits)
        if key in seen:
            return False
        seen.add(key)
    return True


def rename_variables(s: Cnf2, mapping: Mapping[int, int]) -> Cnf2:
    """Rename variables through an injective map; unmapped variables keep their index."""
    if not s.is_nontrivial:
        return s
    old = s.variables()
    image = {mapping.get(v, v) for v in old}
    if len(image) != len(old):
        raise ValueError("variable renaming is not injective on this sentence")
    out = []
    for clause in s.clauses:
        out.append(
            Clause(tuple(Literal(mapping.get(l.var, l.var), l.positive) for l in clause.literals))
        )
    return Cnf2.of(out)


def parse_dimacs(text: Union[str, bytes]) -> Cnf2:
    """Parse DIMACS CNF text into a reduced sentence.

    Accepts `c` comment lines, one `p cnf <nvars> <nclauses>` header, and
    clauses of nonzero integers terminated by 0 (clauses may span lines).
    Clauses with three or more distinct literals are rejected; the declared
    clause count is not enforced.  An explicit empty clause yields the
    false sentence; no clauses at all yield the true sentence.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(0, f"input is not valid UTF-8: {exc}") from None
    nvars: int | None = None
    clauses: list[tuple[list[int], int]] = []
    pending: list[int] = []
    pending_line = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if nvars is not None:
                raise ParseError(lineno, "duplicate problem line")
            parts = stripped.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ParseError(lineno, f"malformed problem line: {stripped!r}")
            try:
                nvars, _ = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, f"malformed problem line: {stripped!r}") from None
            if nvars < 0:
                raise ParseError(lineno, "negative variable count")
            continue
        if nvars is None:
            raise ParseError(lineno, "clause appears before the problem line")
        for token in stripped.split():
            try:
                n = int(token)
            except ValueError:
                raise ParseError(lineno, f"bad token {token!r}") from None
            if n == 0:
                clauses.append((pending, lineno))
                pending = []
            else:
                if abs(n) > nvars:
                    raise VariableOutOfRange(
                        f"line {lineno}: literal {n} exceeds declared count {nvars}"
                    )
                pending.append(n)
        pending_line = lineno
    if pending:
        raise ParseError(pending_line, "clause not terminated by 0")
    if nvars is None:
        raise ParseError(0, "missing problem line")
    for ints, lineno in clauses:
        if len(set(ints)) > 2:
            raise ClauseTooLong(f"line {lineno}: clause has {len(set(ints))} distinct literals")
    return reduce([ints for ints, _ in clauses])


def cnf_to_dimacs(s: Cnf2, comments: Sequence[str] = ()) -> str:
    """Emit DIMACS text, clauses in canonical sorted order, one per line."""
    lines = [f"c {c}" if c else "c" for c in comments]
    if s.is_true:
        lines.append("p cnf 0 0")
    elif s.is_false:
        lines.append("p cnf 0 1")
        lines.append("0")
    else:
        nvars = max(s.variables())
        lines.append(f"p cnf {nvars} {len(s.clauses)}")
        for clause in s.clauses:
            lines.append(" ".join(str(l.to_int()) for l in clause.literals) + " 0")
    return "\n".join(lines) + "\n"
