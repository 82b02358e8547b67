"""
Exact sign evaluation and root specialization at algebraic sample points.

Both operations first substitute the rational coordinates of a sample. When
irrational coordinates remain, sign_at relies on interval evaluation, with
an eliminating polynomial and a root separation bound to decide zero.
specialize_roots eliminates the irrational coordinates through resultants
and filters the resulting candidates exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Sequence, Tuple

from ...common.errors import UsageError
from ..polyarith import Polynomial, resultant, univariate
from .intervals import enclose
from .isolation import irreducible_factors, isolate_squarefree
from .numbers import RealAlgebraicNumber, compare

SamplePoint = Tuple[RealAlgebraicNumber, ...]


@dataclass(frozen=True)
class SpecializedRoots:
    """Real roots of a polynomial on the line above a sample."""

    roots: Tuple[RealAlgebraicNumber, ...]
    nullified: bool = False


def sort_numbers(numbers) -> List[RealAlgebraicNumber]:
    return sorted(numbers, key=cmp_to_key(compare))


def isolate_roots(poly: Polynomial) -> List[RealAlgebraicNumber]:
    """Distinct real roots of a univariate polynomial, in increasing order."""
    if poly.is_zero():
        raise UsageError("the zero polynomial has no isolated roots")
    var = poly.main_variable()
    if var is None:
        return []
    return isolate_dense(univariate.from_polynomial(poly, var))


def isolate_dense(coeffs: Sequence) -> List[RealAlgebraicNumber]:
    ints = univariate.primitive_integer(coeffs)
    roots = []
    for factor in irreducible_factors(ints):
        if len(factor) == 2:
            roots.append(RealAlgebraicNumber.rational(Fraction(-factor[0], factor[1])))
            continue
        for lo, hi in isolate_squarefree(factor):
            if lo == hi:
                roots.append(RealAlgebraicNumber.rational(lo))
            else:
                roots.append(RealAlgebraicNumber.from_isolating_interval(factor, lo, hi))
    return sort_numbers(roots)


def _substitute_rationals(poly: Polynomial, sample: SamplePoint) -> Tuple[Polynomial, List[int]]:
    reduced = poly
    for var in poly.variables():
        if var < len(sample) and sample[var].is_rational:
            reduced = reduced.substitute(var, sample[var].rational_value)
    algebraic = [var for var in reduced.variables() if var < len(sample)]
    return reduced, algebraic


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def _eliminant(poly: Polynomial, sample: SamplePoint, algebraic: Sequence[int]) -> List:
    """Univariate E(t) with E(poly(sample)) = 0, leading coefficient a non-zero constant."""
    t = poly.nvars
    expr = Polynomial.variable(t + 1, t) - poly.with_extra_variables(1)
    for var in sorted(algebraic, reverse=True):
        if expr.degree(var) <= 0:
            continue
        defining = univariate.to_polynomial(sample[var].defining_coefficients, t + 1, var)
        expr = resultant(expr, defining, var)
    return univariate.from_polynomial(expr, t)


def sign_at(poly: Polynomial, sample: Sequence[RealAlgebraicNumber]) -> int:
    """Exact sign of ``poly`` at ``sample``; poly may only use the first len(sample) variables."""
    sample = tuple(sample)
    main = poly.main_variable()
    if main is not None and main >= len(sample):
        raise UsageError(f"sample of length {len(sample)} does not bind x{main + 1}")
    reduced, algebraic = _substitute_rationals(poly, sample)
    if reduced.is_constant():
        return _sign(reduced.constant_value())
    eliminant = None
    zero_bound = None
    while True:
        box = {var: sample[var].enclosure() for var in algebraic}
        estimate = enclose(reduced, box)
        if estimate.lo > 0:
            return 1
        if estimate.hi < 0:
            return -1
        if eliminant is None:
            eliminant = _eliminant(reduced, sample, algebraic)
            stripped, zeros = univariate.strip_zero_roots(eliminant)
            if zeros:
                zero_bound = univariate.cauchy_lower_bound(stripped)
        if zero_bound is not None and -zero_bound < estimate.lo and estimate.hi < zero_bound:
            return 0
        for var in algebraic:
            sample[var].refine()


def _divide_by_univariate(expr: Polynomial, divisor: Sequence, var: int):
    """Quotient of expr by a univariate divisor in ``var``, or None if it does not divide."""
    coeffs = expr.coefficients_ascending(var)
    degree = len(divisor) - 1
    if len(coeffs) - 1 < degree:
        return None
    remainder = list(coeffs)
    quotient = [Polynomial.zero(expr.nvars)] * (len(coeffs) - degree)
    lead = divisor[-1]
    for shift in range(len(coeffs) - 1 - degree, -1, -1):
        factor = remainder[shift + degree].scale(1 / lead)
        quotient[shift] = factor
        for offset, c in enumerate(divisor):
            if c:
                remainder[shift + offset] = remainder[shift + offset] - factor.scale(c)
    if any(not r.is_zero() for r in remainder[:degree]):
        return None
    return Polynomial.from_coefficients(quotient, var)


def strip_factor(expr: Polynomial, divisor: Sequence, var: int) -> Polynomial:
    """Divide out every power of a univariate divisor in ``var``."""
    divisor = [Fraction(c) for c in divisor]
    while not expr.is_zero() and expr.degree(var) > 0:
        quotient = _divide_by_univariate(expr, divisor, var)
        if quotient is None:
            break
        expr = quotient
    return expr


def _eliminate_for_roots(poly: Polynomial, sample: SamplePoint, algebraic: Sequence[int]) -> Polynomial:
    expr = poly
    for var in sorted(algebraic, reverse=True):
        defining = sample[var].defining_coefficients
        expr = strip_factor(expr, defining, var)
        if expr.degree(var) > 0:
            expr = resultant(expr, univariate.to_polynomial(defining, poly.nvars, var), var)
    return expr


def specialize_roots(poly: Polynomial, sample: Sequence[RealAlgebraicNumber]) -> SpecializedRoots:
    """Real roots in x_{k+1} of poly(sample, x_{k+1}) where k = len(sample).

    Reports ``nullified`` when the polynomial vanishes identically on that
    line. Leading coefficients vanishing at the sample are dropped first.
    """
    sample = tuple(sample)
    level = len(sample)
    if poly.nvars <= level:
        raise UsageError(f"sample of length {level} leaves no free variable")
    main = poly.main_variable()
    if main is not None and main > level:
        raise UsageError(f"x{main + 1} is above the specialized variable x{level + 1}")
    coeffs = poly.coefficients_ascending(level)
    top = len(coeffs) - 1
    while top >= 0 and sign_at(coeffs[top], sample) == 0:
        top -= 1
    if top < 0:
        return SpecializedRoots((), nullified=True)
    if top == 0:
        return SpecializedRoots(())
    trimmed = Polynomial.from_coefficients(coeffs[:top + 1], level)
    reduced, algebraic = _substitute_rationals(trimmed, sample)
    if not algebraic:
        return SpecializedRoots(tuple(isolate_roots(reduced)))
    eliminated = _eliminate_for_roots(reduced, sample, algebraic)
    candidates = isolate_roots(eliminated)
    roots = [r for r in candidates if sign_at(poly, sample + (r,)) == 0]
    return SpecializedRoots(tuple(roots))
