"""Polynomial constraints and conjunctive formulas."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple

from ...common.errors import UsageError
from ..polyarith import Polynomial
from ..realalg import RealAlgebraicNumber, sign_at


class Relation(Enum):
    LT = "<"
    LE = "<="
    EQ = "="
    NE = "!="
    GE = ">="
    GT = ">"

    @property
    def is_strict(self) -> bool:
        return self in (Relation.LT, Relation.GT, Relation.NE)

    def holds(self, sign: int) -> bool:
        """Whether ``sign(p) rel 0`` holds for a polynomial of the given sign."""
        return {
            Relation.LT: sign < 0,
            Relation.LE: sign <= 0,
            Relation.EQ: sign == 0,
            Relation.NE: sign != 0,
            Relation.GE: sign >= 0,
            Relation.GT: sign > 0,
        }[self]

    def negated(self) -> "Relation":
        return {
            Relation.LT: Relation.GE,
            Relation.LE: Relation.GT,
            Relation.EQ: Relation.NE,
            Relation.NE: Relation.EQ,
            Relation.GE: Relation.LT,
            Relation.GT: Relation.LE,
        }[self]

    @classmethod
    def parse(cls, symbol: str) -> "Relation":
        for relation in cls:
            if relation.value == symbol:
                return relation
        if symbol == "distinct":
            return cls.NE
        raise UsageError(f"unknown relation {symbol!r}")


@dataclass(frozen=True)
class Constraint:
    """``poly rel 0`` for a non-zero polynomial."""

    poly: Polynomial
    relation: Relation

    def __post_init__(self):
        if self.poly.is_zero():
            raise UsageError("constraint polynomial must be non-zero")

    @property
    def is_strict(self) -> bool:
        return self.relation.is_strict

    def to_string(self, names: Sequence[str] = None) -> str:
        return f"{self.poly.to_string(names)} {self.relation.value} 0"

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class Formula:
    """A conjunction of constraints over ordered variables x1 < ... < xn."""

    variables: Tuple[str, ...]
    constraints: Tuple[Constraint, ...]

    def __post_init__(self):
        if not self.variables:
            raise UsageError("formula needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise UsageError(f"duplicate variable names in {self.variables}")
        for constraint in self.constraints:
            if constraint.poly.nvars != len(self.variables):
                raise UsageError(f"constraint {constraint} uses {constraint.poly.nvars} variables, "
                                 f"formula has {len(self.variables)}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def with_constraints(self, extra: Sequence[Constraint]) -> "Formula":
        return Formula(self.variables, self.constraints + tuple(extra))

    def pin(self, var: int, value: RealAlgebraicNumber) -> "Formula":
        """Restrict x_var to exactly ``value`` by added constraints."""
        return self.with_constraints(pin_constraints(self.nvars, var, value))

    def pin_prefix(self, prefix: Sequence[RealAlgebraicNumber]) -> "Formula":
        formula = self
        for var, value in enumerate(prefix):
            formula = formula.pin(var, value)
        return formula

    def violated_at(self, point: Sequence[RealAlgebraicNumber]) -> List[Constraint]:
        """Constraints violated at a full point (empty when the point is a model)."""
        return [c for c in self.constraints if not c.relation.holds(sign_at(c.poly, point))]

    def describe(self) -> str:
        return " and ".join(c.to_string(self.variables) for c in self.constraints) or "true"


def pin_constraints(nvars: int, var: int, value: RealAlgebraicNumber) -> List[Constraint]:
    x = Polynomial.variable(nvars, var)
    if value.is_rational:
        return [Constraint(x - value.rational_value, Relation.EQ)]
    lo, hi = value.bounds
    return [
        Constraint(value.defining_polynomial(nvars, var), Relation.EQ),
        Constraint(x - Fraction(lo), Relation.GT),
        Constraint(x - Fraction(hi), Relation.LT),
    ]
