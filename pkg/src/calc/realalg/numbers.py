"""
Exact real algebraic numbers.

A number is either a rational, or an irrational root of an irreducible
integer polynomial of degree at least two together with an open isolating
interval (lo, hi) that contains exactly that root. Intervals only ever
shrink; refinement is guarded by a per-instance lock so shared numbers can
be refined from several threads.
"""

import math
import threading
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from ...common.errors import UsageError
from ..polyarith import Polynomial, univariate
from .intervals import RationalInterval

Rationalish = Union[int, Fraction]


class RealAlgebraicNumber:
    """A real algebraic number with an exact representation."""

    __slots__ = ("_value", "_defining", "_lo", "_hi", "_lo_sign", "_lock")

    def __init__(self):
        self._value: Optional[Fraction] = None
        self._defining: Tuple[int, ...] = ()
        self._lo = Fraction(0)
        self._hi = Fraction(0)
        self._lo_sign = 0
        self._lock = threading.Lock()

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def rational(cls, value: Rationalish) -> "RealAlgebraicNumber":
        number = cls()
        number._value = Fraction(value)
        number._lo = number._hi = number._value
        return number

    @classmethod
    def from_isolating_interval(cls, coeffs: Sequence, lo: Rationalish, hi: Rationalish) -> "RealAlgebraicNumber":
        """Root of the irreducible polynomial ``coeffs`` (lowest power first) inside (lo, hi)."""
        ints = univariate.primitive_integer(coeffs)
        if len(ints) < 2:
            raise UsageError("defining polynomial must have positive degree")
        if len(ints) == 2:
            return cls.rational(Fraction(-ints[0], ints[1]))
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise UsageError(f"isolating interval ({lo}, {hi}) is empty")
        lo_sign = univariate.sign_at(ints, lo)
        hi_sign = univariate.sign_at(ints, hi)
        if lo_sign == 0 or hi_sign == 0 or lo_sign == hi_sign:
            raise UsageError(f"({lo}, {hi}) does not isolate a simple root")
        number = cls()
        number._defining = tuple(ints)
        number._lo, number._hi = lo, hi
        number._lo_sign = lo_sign
        return number

    def __getstate__(self):
        return (self._value, self._defining, self._lo, self._hi, self._lo_sign)

    def __setstate__(self, state):
        self._value, self._defining, self._lo, self._hi, self._lo_sign = state
        self._lock = threading.Lock()

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._value is not None

    @property
    def rational_value(self) -> Fraction:
        if self._value is None:
            raise UsageError(f"{self} is irrational")
        return self._value

    @property
    def defining_coefficients(self) -> Tuple[int, ...]:
        """Integer minimal polynomial, lowest power first (x - q scaled for rationals)."""
        if self._value is not None:
            return tuple(univariate.primitive_integer([-self._value, Fraction(1)]))
        return self._defining

    def defining_polynomial(self, nvars: int = 1, var: int = 0) -> Polynomial:
        return univariate.to_polynomial(self.defining_coefficients, nvars, var)

    @property
    def bounds(self) -> Tuple[Fraction, Fraction]:
        return self._lo, self._hi

    def enclosure(self) -> RationalInterval:
        return RationalInterval(self._lo, self._hi)

    def sign(self) -> int:
        return self.compare(RealAlgebraicNumber.rational(0))

    # ------------------------------------------------------------------
    # Refinement
    # ------------------------------------------------------------------

    def refine(self) -> None:
        """Halve the isolating interval; a no-op for rationals."""
        if self._value is not None:
            return
        with self._lock:
            mid = (self._lo + self._hi) / 2
            mid_sign = univariate.sign_at(self._defining, mid)
            if mid_sign == self._lo_sign:
                self._lo = mid
            else:
                self._hi = mid

    def refine_to(self, width: Fraction) -> None:
        while self._hi - self._lo > width:
            self.refine()

    def approximate(self, tolerance: Rationalish = Fraction(1, 10 ** 6)) -> Fraction:
        """Rational within ``tolerance`` of the number."""
        if self._value is not None:
            return self._value
        self.refine_to(Fraction(tolerance))
        return (self._lo + self._hi) / 2

    def floor(self) -> int:
        if self._value is not None:
            return math.floor(self._value)
        while True:
            base = math.floor(self._lo)
            if base + 1 >= self._hi:
                return base
            self.refine()

    def ceil(self) -> int:
        if self._value is not None:
            return math.ceil(self._value)
        return self.floor() + 1

    def negate(self) -> "RealAlgebraicNumber":
        if self._value is not None:
            return RealAlgebraicNumber.rational(-self._value)
        return RealAlgebraicNumber.from_isolating_interval(
            univariate.negate_variable(self._defining), -self._hi, -self._lo)

    # ------------------------------------------------------------------
    # Comparison
    # ------------------------------------------------------------------

    def compare(self, other: Union["RealAlgebraicNumber", Rationalish]) -> int:
        """Return -1, 0 or 1 as self is below, equal to or above other."""
        if not isinstance(other, RealAlgebraicNumber):
            other = RealAlgebraicNumber.rational(other)
        if self is other:
            return 0
        if self._value is not None and other._value is not None:
            return (self._value > other._value) - (self._value < other._value)
        if other._value is not None:
            return self._compare_rational(other._value)
        if self._value is not None:
            return -other._compare_rational(self._value)
        return self._compare_algebraic(other)

    def _compare_rational(self, value: Fraction) -> int:
        while True:
            if value <= self._lo:
                return 1
            if value >= self._hi:
                return -1
            self.refine()

    def _compare_algebraic(self, other: "RealAlgebraicNumber") -> int:
        while True:
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            if self._defining == other._defining:
                lo = max(self._lo, other._lo)
                hi = min(self._hi, other._hi)
                if univariate.sign_at(self._defining, lo) != univariate.sign_at(self._defining, hi):
                    return 0
            if self._hi - self._lo >= other._hi - other._lo:
                self.refine()
            else:
                other.refine()

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RealAlgebraicNumber, int, Fraction)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __hash__(self) -> int:
        if self._value is not None:
            return hash(self._value)
        return hash(self._defining)

    # ------------------------------------------------------------------
    # Printing
    # ------------------------------------------------------------------

    def __float__(self) -> float:
        return float(self.approximate(Fraction(1, 10 ** 12)))

    def __str__(self) -> str:
        if self._value is not None:
            return str(self._value)
        poly = self.defining_polynomial().to_string(["x"])
        return f"root({poly}, ({self._lo}, {self._hi}))"

    def __repr__(self) -> str:
        if self._value is not None:
            return f"RealAlgebraicNumber({self._value})"
        return f"RealAlgebraicNumber({self}, ~{float(self):.6g})"


def compare(a: RealAlgebraicNumber, b: RealAlgebraicNumber) -> int:
    """Three-way exact comparison."""
    return a.compare(b)


RAN = RealAlgebraicNumber
