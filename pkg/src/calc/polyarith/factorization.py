"""
Greatest common divisors, square-free splitting and canonical factor sets.

The canonical form of a polynomial has coprime integer coefficients and a
positive leading coefficient in the canonical term order, so equal factors
found along different paths compare equal.
"""

from fractions import Fraction
from functools import reduce
from math import gcd as int_gcd
from typing import FrozenSet, List

from ...common.errors import UsageError
from . import univariate
from .polynomial import Polynomial
from .resultants import pseudo_remainder


def canonical(p: Polynomial) -> Polynomial:
    """Scale p to coprime integer coefficients with a positive leading term."""
    if p.is_zero():
        return p
    denominator = 1
    numerators = []
    for _exps, c in p:
        denominator = denominator * c.denominator // int_gcd(denominator, c.denominator)
    for _exps, c in p:
        numerators.append(int(c * denominator))
    content = reduce(int_gcd, numerators)
    factor = Fraction(denominator, content)
    if p.leading_term()[1] < 0:
        factor = -factor
    return p if factor == 1 else p.scale(factor)


def content_in(p: Polynomial, var: int) -> Polynomial:
    """Gcd of the coefficients of p with respect to ``var`` (canonical form)."""
    coeffs = [c for c in p.coefficients_ascending(var) if not c.is_zero()]
    if not coeffs:
        return Polynomial.zero(p.nvars)
    result = canonical(coeffs[0])
    for c in coeffs[1:]:
        if result.is_constant():
            break
        result = gcd(result, c)
    if result.is_constant():
        return Polynomial.constant(p.nvars, 1)
    return result


def primitive_in(p: Polynomial, var: int) -> Polynomial:
    if p.is_zero():
        return p
    return canonical(p.divide_exact(content_in(p, var)))


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Multivariate gcd over the rationals, in canonical form.

    Works recursively on the highest variable with a primitive remainder
    sequence. gcd(0, 0) is zero; otherwise the result is non-zero.
    """
    if p.nvars != q.nvars:
        raise UsageError(f"variable count mismatch: {p.nvars} vs {q.nvars}")
    if p.is_zero():
        return canonical(q)
    if q.is_zero():
        return canonical(p)
    if p.is_constant() or q.is_constant():
        return Polynomial.constant(p.nvars, 1)
    var = max(p.main_variable(), q.main_variable())
    if p.degree(var) == 0:
        return gcd(p, content_in(q, var))
    if q.degree(var) == 0:
        return gcd(content_in(p, var), q)
    cp, cq = content_in(p, var), content_in(q, var)
    common = gcd(cp, cq)
    a, b = p.divide_exact(cp), q.divide_exact(cq)
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while True:
        r = pseudo_remainder(a, b, var)
        if r.is_zero():
            return canonical(common * primitive_in(b, var))
        if r.degree(var) == 0:
            return common
        a, b = b, primitive_in(r, var)


def gcd_univariate(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd of two univariate polynomials in the same variable."""
    var = p.main_variable() if p.main_variable() is not None else q.main_variable()
    if var is None:
        if p.is_zero() and q.is_zero():
            return Polynomial.zero(p.nvars)
        return Polynomial.constant(p.nvars, 1)
    dense = univariate.gcd(univariate.from_polynomial(p, var), univariate.from_polynomial(q, var))
    return univariate.to_polynomial(dense, p.nvars, var)


def squarefree_factors(p: Polynomial, var: int) -> List[Polynomial]:
    """Square-free factors of positive degree in ``var`` of a primitive p (Yun)."""
    factors = []
    dp = p.derivative(var)
    b = gcd(p, dp)
    c = p.divide_exact(b)
    d = dp.divide_exact(b) - c.derivative(var)
    while c.degree(var) > 0:
        g = gcd(c, d)
        if g.degree(var) > 0:
            factors.append(canonical(g))
        c = c.divide_exact(g)
        d = d.divide_exact(g) - c.derivative(var)
    return factors


def normalize(p: Polynomial) -> FrozenSet[Polynomial]:
    """Canonical square-free factor set of p; constants give the empty set."""
    if p.is_zero():
        raise UsageError("cannot normalize the zero polynomial")
    found = set()
    _collect_factors(p, found)
    return frozenset(found)


def _collect_factors(p: Polynomial, found: set) -> None:
    if p.is_constant():
        return
    var = p.main_variable()
    content = content_in(p, var)
    _collect_factors(content, found)
    primitive = p.divide_exact(content)
    for factor in squarefree_factors(primitive, var):
        found.add(factor)


def sorted_polys(polys) -> List[Polynomial]:
    """Deterministic ordering of a polynomial collection."""
    return sorted(polys, key=lambda poly: poly.sort_key())
