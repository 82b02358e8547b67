"""Interval bounds over the real algebraic numbers."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ...common.errors import UsageError
from ..realalg import RealAlgebraicNumber


class BoundKind(Enum):
    NEG_INF = "-inf"
    POS_INF = "+inf"
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True)
class Bound:
    """One end of an interval: infinite, or a finite open/closed value."""

    kind: BoundKind
    value: Optional[RealAlgebraicNumber] = None

    def __post_init__(self):
        finite = self.kind in (BoundKind.OPEN, BoundKind.CLOSED)
        if finite and self.value is None:
            raise UsageError(f"{self.kind.value} bound needs a value")
        if not finite and self.value is not None:
            raise UsageError("infinite bound cannot carry a value")

    @classmethod
    def neg_inf(cls) -> "Bound":
        return cls(BoundKind.NEG_INF)

    @classmethod
    def pos_inf(cls) -> "Bound":
        return cls(BoundKind.POS_INF)

    @classmethod
    def open(cls, value: RealAlgebraicNumber) -> "Bound":
        return cls(BoundKind.OPEN, value)

    @classmethod
    def closed(cls, value: RealAlgebraicNumber) -> "Bound":
        return cls(BoundKind.CLOSED, value)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @property
    def is_closed(self) -> bool:
        return self.kind is BoundKind.CLOSED

    def flipped(self) -> "Bound":
        """Same finite value with the opposite openness."""
        if not self.is_finite:
            raise UsageError("cannot flip an infinite bound")
        kind = BoundKind.OPEN if self.is_closed else BoundKind.CLOSED
        return Bound(kind, self.value)

    def closed_version(self) -> "Bound":
        return Bound.closed(self.value) if self.is_finite else self


def compare_lower(a: Bound, b: Bound) -> int:
    """Order lower bounds by where the covered set starts."""
    if a.kind is BoundKind.NEG_INF or b.kind is BoundKind.NEG_INF:
        return (b.kind is BoundKind.NEG_INF) - (a.kind is BoundKind.NEG_INF)
    order = a.value.compare(b.value)
    if order:
        return order
    # a closed lower bound starts earlier than an open one at the same value
    return (a.kind is BoundKind.OPEN) - (b.kind is BoundKind.OPEN)


def compare_upper(a: Bound, b: Bound) -> int:
    """Order upper bounds by where the covered set ends."""
    if a.kind is BoundKind.POS_INF or b.kind is BoundKind.POS_INF:
        return (a.kind is BoundKind.POS_INF) - (b.kind is BoundKind.POS_INF)
    order = a.value.compare(b.value)
    if order:
        return order
    return (a.kind is BoundKind.CLOSED) - (b.kind is BoundKind.CLOSED)


def connects(reach: Bound, lower: Bound) -> bool:
    """True when an interval starting at ``lower`` leaves no gap after ``reach``."""
    if lower.kind is BoundKind.NEG_INF or reach.kind is BoundKind.POS_INF:
        return True
    order = reach.value.compare(lower.value)
    if order:
        return order > 0
    return reach.is_closed or lower.is_closed


@dataclass(frozen=True)
class Interval:
    """A non-empty interval of the real line."""

    lower: Bound
    upper: Bound

    def __post_init__(self):
        if self.lower.kind is BoundKind.POS_INF or self.upper.kind is BoundKind.NEG_INF:
            raise UsageError("interval bounds point the wrong way")
        if self.lower.is_finite and self.upper.is_finite:
            order = self.lower.value.compare(self.upper.value)
            if order > 0 or (order == 0 and not (self.lower.is_closed and self.upper.is_closed)):
                raise UsageError(f"empty interval {self}")

    @classmethod
    def whole(cls) -> "Interval":
        return cls(Bound.neg_inf(), Bound.pos_inf())

    @classmethod
    def point(cls, value: RealAlgebraicNumber) -> "Interval":
        return cls(Bound.closed(value), Bound.closed(value))

    @property
    def is_point(self) -> bool:
        return (self.lower.is_finite and self.upper.is_finite
                and self.lower.value.compare(self.upper.value) == 0)

    @property
    def is_whole(self) -> bool:
        return not self.lower.is_finite and not self.upper.is_finite

    @property
    def is_closed(self) -> bool:
        """True when every finite bound is closed."""
        return all(b.is_closed for b in (self.lower, self.upper) if b.is_finite)

    def closure(self) -> "Interval":
        return Interval(self.lower.closed_version(), self.upper.closed_version())

    def contains(self, value: RealAlgebraicNumber) -> bool:
        if self.lower.is_finite:
            order = value.compare(self.lower.value)
            if order < 0 or (order == 0 and not self.lower.is_closed):
                return False
        if self.upper.is_finite:
            order = value.compare(self.upper.value)
            if order > 0 or (order == 0 and not self.upper.is_closed):
                return False
        return True

    def __str__(self) -> str:
        if self.lower.is_finite:
            left = ("[" if self.lower.is_closed else "(") + str(self.lower.value)
        else:
            left = "(-oo"
        if self.upper.is_finite:
            right = str(self.upper.value) + ("]" if self.upper.is_closed else ")")
        else:
            right = "+oo)"
        return f"{left}, {right}"
