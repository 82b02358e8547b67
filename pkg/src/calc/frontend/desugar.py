"""Translation between parsed SMT-LIB atoms and solver formulas."""

import re
from fractions import Fraction
from typing import Dict, List, Sequence

from ...common.errors import ParseError, UnsupportedError
from ..engine import Constraint, Formula, Relation
from ..polyarith import Polynomial
from ..realalg import RealAlgebraicNumber
from .smtlib import Atom, Binding, Node, SExpr, SourceScript, Token, parse, position

_NUMERAL = re.compile(r"^[0-9]+(\.[0-9]+)?$")

_SMT_RELATIONS = {
    Relation.LT: "<",
    Relation.LE: "<=",
    Relation.EQ: "=",
    Relation.GE: ">=",
    Relation.GT: ">",
}


class _TermReader:
    """Turns real-valued terms into polynomials over the declared variables."""

    def __init__(self, variables: Sequence[str]):
        self.index = {name: i for i, name in enumerate(variables)}
        self.nvars = len(variables)

    def read(self, term: Node, scope: Dict[str, Binding]) -> Polynomial:
        if isinstance(term, Token):
            return self._atom(term, scope)
        head = term.head
        args = term.items[1:]
        if head == "!":
            return self.read(args[0], scope)
        if head == "let":
            return self.read(args[-1], self._bind(term, args, scope))
        if head == "+":
            return self._fold(term, args, scope, lambda a, b: a + b)
        if head == "*":
            return self._fold(term, args, scope, lambda a, b: a * b)
        if head == "-":
            if len(args) == 1:
                return -self.read(args[0], scope)
            return self._fold(term, args, scope, lambda a, b: a - b)
        if head == "/":
            return self._divide(term, args, scope)
        if head == "to_real":
            return self.read(args[0], scope)
        raise UnsupportedError(f"unsupported arithmetic operator {head or '(...)'}", *position(term))

    def _atom(self, token: Token, scope: Dict[str, Binding]) -> Polynomial:
        if _NUMERAL.match(token.text):
            return Polynomial.constant(self.nvars, Fraction(token.text))
        if token.text in scope:
            binding = scope[token.text]
            return self.read(binding.term, binding.scope)
        if token.text in self.index:
            return Polynomial.variable(self.nvars, self.index[token.text])
        if token.text.startswith("#"):
            raise UnsupportedError(f"unsupported literal {token.text}", token.line, token.column)
        raise ParseError(f"undeclared symbol {token.text}", token.line, token.column)

    def _fold(self, term: SExpr, args: List[Node], scope, combine) -> Polynomial:
        if not args:
            raise ParseError(f"{term.head} needs arguments", *position(term))
        result = self.read(args[0], scope)
        for arg in args[1:]:
            result = combine(result, self.read(arg, scope))
        return result

    def _divide(self, term: SExpr, args: List[Node], scope) -> Polynomial:
        if len(args) < 2:
            raise ParseError("/ needs at least two arguments", *position(term))
        result = self.read(args[0], scope)
        for arg in args[1:]:
            divisor = self.read(arg, scope)
            if not divisor.is_constant():
                raise UnsupportedError("division by a non-constant term", *position(arg))
            if divisor.is_zero():
                raise ParseError("division by zero", *position(arg))
            result = result.scale(1 / divisor.constant_value())
        return result

    @staticmethod
    def _bind(term: SExpr, args: List[Node], scope: Dict[str, Binding]) -> Dict[str, Binding]:
        if len(args) != 2 or not isinstance(args[0], SExpr):
            raise ParseError("malformed let", *position(term))
        inner = dict(scope)
        for pair in args[0].items:
            if not isinstance(pair, SExpr) or len(pair.items) != 2 or not isinstance(pair.items[0], Token):
                raise ParseError("malformed let binding", *position(pair))
            inner[pair.items[0].text] = Binding(pair.items[1], scope)
        return inner


def to_formula(script: SourceScript) -> Formula:
    """Formula over the declared variables, in declaration order."""
    if not script.variables:
        raise UnsupportedError("the script declares no real variables")
    reader = _TermReader(script.variables)
    constraints = []
    for atom in script.atoms:
        constraint = atom_to_constraint(atom, reader)
        if constraint is not None:
            constraints.append(constraint)
    return Formula(tuple(script.variables), tuple(constraints))


def atom_to_constraint(atom: Atom, reader: _TermReader):
    poly = reader.read(atom.lhs, atom.scope) - reader.read(atom.rhs, atom.scope)
    if poly.is_zero():
        if atom.relation.holds(0):
            return None
        # an unsatisfiable constant constraint: 1 < 0
        return Constraint(Polynomial.constant(reader.nvars, 1), Relation.LT)
    return Constraint(poly, atom.relation)


def parse_formula(text: str) -> Formula:
    return to_formula(parse(text))


# ----------------------------------------------------------------------
# Printing
# ----------------------------------------------------------------------

def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    magnitude = abs(value)
    if magnitude.denominator == 1:
        body = str(magnitude.numerator)
    else:
        body = f"(/ {magnitude.numerator} {magnitude.denominator})"
    return f"(- {body})" if value < 0 else body


def polynomial_to_term(poly: Polynomial, names: Sequence[str]) -> str:
    if poly.is_zero():
        return "0"
    monomials = []
    for exps, coeff in poly:
        factors = []
        for name, power in zip(names, exps):
            factors.extend([name] * power)
        if not factors:
            monomials.append(format_rational(coeff))
        elif coeff == 1:
            monomials.append(factors[0] if len(factors) == 1 else f"(* {' '.join(factors)})")
        else:
            monomials.append(f"(* {format_rational(coeff)} {' '.join(factors)})")
    return monomials[0] if len(monomials) == 1 else f"(+ {' '.join(monomials)})"


def constraint_to_term(constraint: Constraint, names: Sequence[str]) -> str:
    lhs = polynomial_to_term(constraint.poly, names)
    if constraint.relation is Relation.NE:
        return f"(not (= {lhs} 0))"
    return f"({_SMT_RELATIONS[constraint.relation]} {lhs} 0)"


def formula_to_smtlib(formula: Formula) -> str:
    """A QF_NRA script asserting ``formula``; parsing it gives the same formula back."""
    lines = ["(set-logic QF_NRA)"]
    lines.extend(f"(declare-fun {name} () Real)" for name in formula.variables)
    lines.extend(f"(assert {constraint_to_term(c, formula.variables)})" for c in formula.constraints)
    lines.append("(check-sat)")
    return "\n".join(lines) + "\n"


def format_value(value: RealAlgebraicNumber) -> str:
    """SMT-LIB rendering of a model value; irrational values use root-of."""
    if value.is_rational:
        return format_rational(value.rational_value)
    poly = polynomial_to_term(value.defining_polynomial(), ["?x"])
    lo, hi = value.bounds
    return f"(root-of {poly} ({format_rational(lo)} {format_rational(hi)}))"


def format_model(formula: Formula, model: Sequence[RealAlgebraicNumber]) -> str:
    lines = ["("]
    for name, value in zip(formula.variables, model):
        lines.append(f"  (define-fun {name} () Real {format_value(value)})")
    lines.append(")")
    return "\n".join(lines)
