"""Closed rational intervals and interval evaluation of polynomials."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ..polyarith import Polynomial


@dataclass(frozen=True)
class RationalInterval:
    """A closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    @classmethod
    def point(cls, value) -> "RationalInterval":
        value = Fraction(value)
        return cls(value, value)

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other: "RationalInterval") -> "RationalInterval":
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RationalInterval(min(products), max(products))

    def scale(self, factor: Fraction) -> "RationalInterval":
        a, b = self.lo * factor, self.hi * factor
        return RationalInterval(min(a, b), max(a, b))

    def __pow__(self, exponent: int) -> "RationalInterval":
        if exponent == 0:
            return RationalInterval.point(1)
        a, b = self.lo ** exponent, self.hi ** exponent
        if exponent % 2 == 0:
            if self.lo <= 0 <= self.hi:
                return RationalInterval(Fraction(0), max(a, b))
            return RationalInterval(min(a, b), max(a, b))
        return RationalInterval(a, b)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def sign(self) -> int:
        """Sign of every point in the interval, or 0 if it contains zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0


def enclose(poly: Polynomial, box: Mapping[int, RationalInterval]) -> RationalInterval:
    """Interval enclosure of ``poly`` over ``box`` (variables absent from box must not occur)."""
    total = RationalInterval.point(0)
    for exps, coeff in poly:
        term = RationalInterval.point(coeff)
        for var, power in enumerate(exps):
            if power:
                term = term * box[var] ** power
        total = total + term
    return total
