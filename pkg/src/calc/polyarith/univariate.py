"""
Dense univariate helpers over the rationals.

A dense polynomial is a list of Fractions, lowest power first, with no
trailing zeros (the zero polynomial is the empty list).
"""

from fractions import Fraction
from math import gcd as int_gcd
from typing import List, Sequence, Tuple

from ...common.errors import UsageError
from .polynomial import Polynomial

Dense = List[Fraction]


def trim(coeffs: Sequence) -> Dense:
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def degree(coeffs: Sequence) -> int:
    return len(coeffs) - 1


def from_polynomial(poly: Polynomial, var: int) -> Dense:
    """Dense coefficients of a polynomial that depends on ``var`` only."""
    out: Dense = [Fraction(0)] * (max(poly.degree(var), 0) + 1)
    for exps, coeff in poly:
        if any(e for i, e in enumerate(exps) if i != var):
            raise UsageError(f"{poly} is not univariate in x{var + 1}")
        out[exps[var]] += coeff
    return trim(out)


def to_polynomial(coeffs: Sequence, nvars: int, var: int) -> Polynomial:
    terms = {}
    for power, c in enumerate(coeffs):
        if c:
            exps = [0] * nvars
            exps[var] = power
            terms[tuple(exps)] = c
    return Polynomial(nvars, terms)


def add(a: Sequence, b: Sequence) -> Dense:
    size = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)])


def sub(a: Sequence, b: Sequence) -> Dense:
    return add(a, [-c for c in b])


def mul(a: Sequence, b: Sequence) -> Dense:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def scale(a: Sequence, factor) -> Dense:
    return trim([c * factor for c in a])


def divmod_dense(a: Sequence, b: Sequence) -> Tuple[Dense, Dense]:
    b = trim(b)
    if not b:
        raise UsageError("division by the zero polynomial")
    rem = trim(a)
    if len(rem) < len(b):
        return [], rem
    quot = [Fraction(0)] * (len(rem) - len(b) + 1)
    lead = b[-1]
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[i + shift] -= factor * c
        rem = trim(rem)
    return trim(quot), rem


def monic(a: Sequence) -> Dense:
    a = trim(a)
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def gcd(a: Sequence, b: Sequence) -> Dense:
    """Monic greatest common divisor (empty list when both inputs are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_dense(a, b)[1]
    return monic(a)


def derivative(a: Sequence) -> Dense:
    return trim([c * i for i, c in enumerate(a)][1:])


def evaluate(a: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def sign_at(a: Sequence, x) -> int:
    value = evaluate(a, x)
    return (value > 0) - (value < 0)


def squarefree_part(a: Sequence) -> Dense:
    a = trim(a)
    if len(a) <= 2:
        return a
    g = gcd(a, derivative(a))
    return divmod_dense(a, g)[0] if len(g) > 1 else a


def primitive_integer(a: Sequence) -> List[int]:
    """Scale to coprime integers with a positive leading coefficient."""
    a = trim(a)
    if not a:
        return []
    denominator = 1
    for c in a:
        denominator = denominator * c.denominator // int_gcd(denominator, c.denominator)
    ints = [int(c * denominator) for c in a]
    content = 0
    for c in ints:
        content = int_gcd(content, c)
    if ints[-1] < 0:
        content = -content
    return [c // content for c in ints]


def taylor_shift(a: Sequence, shift) -> Dense:
    """Coefficients of a(x + shift)."""
    out: Dense = []
    for c in reversed(a):
        new = [Fraction(0)] * (len(out) + 1)
        for i, v in enumerate(out):
            new[i] += v * shift
            new[i + 1] += v
        new[0] += c
        out = new
    return trim(out)


def scale_variable(a: Sequence, factor) -> Dense:
    """Coefficients of a(factor * x)."""
    out = []
    power = Fraction(1)
    for c in a:
        out.append(c * power)
        power *= factor
    return trim(out)


def negate_variable(a: Sequence) -> Dense:
    return scale_variable(a, -1)


def sign_variations(values: Sequence) -> int:
    count = 0
    last = 0
    for v in values:
        if v:
            s = 1 if v > 0 else -1
            if last and s != last:
                count += 1
            last = s
    return count


def cauchy_upper_bound(a: Sequence) -> Fraction:
    """Strict upper bound on the absolute value of every root."""
    a = trim(a)
    lead = abs(a[-1])
    return 1 + max((abs(c) / lead for c in a[:-1]), default=Fraction(0))


def cauchy_lower_bound(a: Sequence) -> Fraction:
    """Strict lower bound on the absolute value of every root; requires a(0) != 0."""
    a = trim(a)
    if not a or not a[0]:
        raise UsageError("lower root bound needs a non-zero constant term")
    tail = max((abs(c) for c in a[1:]), default=Fraction(0))
    return abs(a[0]) / (abs(a[0]) + tail)


def strip_zero_roots(a: Sequence) -> Tuple[Dense, int]:
    """Split a = x^k * b with b(0) != 0; returns (b, k)."""
    a = trim(a)
    k = 0
    while k < len(a) and not a[k]:
        k += 1
    return a[k:], k
