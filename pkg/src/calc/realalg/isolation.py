"""
Real root isolation for univariate integer polynomials.

Rational roots come out of sympy's factorization over the integers as
linear factors; every other irreducible factor is isolated with Descartes'
rule of signs and bisection. Sturm sequences are kept as an independent
root counter.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import sympy

from ..polyarith import univariate

_X = sympy.Symbol("x")


@lru_cache(maxsize=4096)
def _factor_cached(coeffs: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    poly = sympy.Poly(list(reversed(coeffs)), _X, domain=sympy.ZZ)
    _content, factors = poly.factor_list()
    out = []
    for factor, _multiplicity in factors:
        ints = [int(c) for c in reversed(factor.all_coeffs())]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        out.append(tuple(ints))
    return tuple(sorted(out, key=lambda f: (len(f), f)))


def irreducible_factors(coeffs: Sequence[int]) -> List[Tuple[int, ...]]:
    """Distinct irreducible factors over the integers, lowest power first."""
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) <= 1:
        return []
    return list(_factor_cached(coeffs))


def _descartes_count(dense: Sequence[Fraction], lo: Fraction, hi: Fraction) -> int:
    """Descartes bound on the number of roots in the open interval (lo, hi)."""
    moved = univariate.scale_variable(univariate.taylor_shift(dense, lo), hi - lo)
    reflected = univariate.taylor_shift(list(reversed(moved)), 1)
    return univariate.sign_variations(reflected)


def root_bound(coeffs: Sequence) -> Fraction:
    """A power of two strictly above the absolute value of every root."""
    bound = univariate.cauchy_upper_bound([Fraction(c) for c in coeffs])
    power = Fraction(1)
    while power <= bound:
        power *= 2
    return power


def isolate_squarefree(coeffs: Sequence) -> List[Tuple[Fraction, Fraction]]:
    """Isolating intervals of a square-free polynomial, in increasing order.

    Each entry is either an open interval (lo, hi) containing exactly one
    root with neither endpoint a root, or a pair (r, r) for an exact
    rational root met during bisection.
    """
    dense = univariate.trim(coeffs)
    if len(dense) <= 1:
        return []
    bound = root_bound(dense)
    found = []
    pending = [(-bound, bound)]
    while pending:
        lo, hi = pending.pop()
        count = _descartes_count(dense, lo, hi)
        if count == 0:
            continue
        if count == 1:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if not univariate.evaluate(dense, mid):
            found.append((mid, mid))
        pending.append((mid, hi))
        pending.append((lo, mid))
    return sorted(found)


def sturm_sequence(coeffs: Sequence) -> List[List[Fraction]]:
    """Sturm sequence p, p', -rem(p, p'), ... of a non-constant polynomial."""
    first = univariate.trim(coeffs)
    sequence = [first, univariate.derivative(first)]
    while len(sequence[-1]) > 1:
        remainder = univariate.divmod_dense(sequence[-2], sequence[-1])[1]
        if not remainder:
            break
        sequence.append([-c for c in remainder])
    return sequence


def _variations_at(sequence: Sequence[Sequence[Fraction]], point: Optional[Fraction], side: int) -> int:
    if point is None:
        # side=+1 for +infinity, -1 for -infinity
        values = [p[-1] * (side ** (len(p) - 1)) for p in sequence if p]
    else:
        values = [univariate.evaluate(p, point) for p in sequence]
    return univariate.sign_variations(values)


def count_roots(coeffs: Sequence, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None) -> int:
    """Number of distinct real roots in (lo, hi]; None stands for an infinite end."""
    dense = univariate.trim(coeffs)
    if len(dense) <= 1:
        return 0
    sequence = sturm_sequence(dense)
    return _variations_at(sequence, lo, -1) - _variations_at(sequence, hi, 1)
