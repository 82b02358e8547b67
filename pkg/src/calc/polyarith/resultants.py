"""Resultants, discriminants and pseudo-division with respect to one variable."""

from typing import List

from ...common.errors import UsageError
from .polynomial import Polynomial


def _check_pair(p: Polynomial, q: Polynomial, var: int) -> None:
    if p.nvars != q.nvars:
        raise UsageError(f"variable count mismatch: {p.nvars} vs {q.nvars}")
    if not 0 <= var < p.nvars:
        raise UsageError(f"variable index {var} out of range")


def pseudo_remainder(a: Polynomial, b: Polynomial, var: int) -> Polynomial:
    """prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, taken in ``var``."""
    _check_pair(a, b, var)
    db = b.degree(var)
    if db < 0:
        raise UsageError("pseudo-division by the zero polynomial")
    da = a.degree(var)
    if da < db:
        return a
    lead_b = b.leading_coefficient(var)
    x = Polynomial.variable(a.nvars, var)
    remainder = a
    pending = da - db + 1
    while not remainder.is_zero() and remainder.degree(var) >= db:
        shift = remainder.degree(var) - db
        remainder = remainder * lead_b - remainder.leading_coefficient(var) * b * x ** shift
        pending -= 1
    return remainder * lead_b ** pending


def resultant(p: Polynomial, q: Polynomial, var: int) -> Polynomial:
    """Resultant of p and q with respect to ``var`` via the subresultant PRS.

    Both inputs need degree at least one in ``var``; the result does not
    depend on ``var`` and is zero exactly when p and q share a factor of
    positive degree in ``var``.
    """
    _check_pair(p, q, var)
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise UsageError(f"resultant needs positive degree in x{var + 1}")
    nvars = p.nvars
    a, b = p, q
    sign = 1
    if a.degree(var) < b.degree(var):
        a, b = b, a
        if a.degree(var) % 2 and b.degree(var) % 2:
            sign = -1
    g = Polynomial.constant(nvars, 1)
    h = Polynomial.constant(nvars, 1)
    while True:
        da, db = a.degree(var), b.degree(var)
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = pseudo_remainder(a, b, var)
        if r.is_zero():
            return Polynomial.zero(nvars)
        a = b
        b = r.divide_exact(g * h ** delta)
        g = a.leading_coefficient(var)
        if delta:
            h = (g ** delta).divide_exact(h ** (delta - 1))
        if b.degree(var) == 0:
            da = a.degree(var)
            result = (b ** da).divide_exact(h ** (da - 1))
            return result if sign > 0 else -result


def discriminant(p: Polynomial, var: int) -> Polynomial:
    """disc(p) = (-1)^(n(n-1)/2) * res(p, p') / lc(p) in ``var``."""
    n = p.degree(var)
    if n < 2:
        raise UsageError(f"discriminant needs degree at least 2 in x{var + 1}")
    res = resultant(p, p.derivative(var), var)
    disc = res.divide_exact(p.leading_coefficient(var))
    return -disc if (n * (n - 1) // 2) % 2 else disc


def sylvester_matrix(p: Polynomial, q: Polynomial, var: int) -> List[List[Polynomial]]:
    """Sylvester matrix of p and q in ``var``; its determinant is res(p, q)."""
    _check_pair(p, q, var)
    m, n = p.degree(var), q.degree(var)
    if m < 1 or n < 1:
        raise UsageError(f"Sylvester matrix needs positive degree in x{var + 1}")
    size = m + n
    zero = Polynomial.zero(p.nvars)
    rows = []
    for coeffs, count in ((p.coefficients(var), n), (q.coefficients(var), m)):
        for shift in range(count):
            row = [zero] * size
            for offset, c in enumerate(coeffs):
                row[shift + offset] = c
            rows.append(row)
    return rows
