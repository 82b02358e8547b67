"""
Coverage checks, sample choice and covering selection.

All routines sweep intervals in order of their lower bounds and keep track
of the furthest upper bound reached so far.
"""

from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ...common.errors import UsageError
from ..realalg import RealAlgebraicNumber
from .bounds import Bound, BoundKind, Interval, compare_lower, compare_upper, connects
from .cells import CellRep, Heuristic

IntervalLike = Union[Interval, CellRep]

_ZERO = RealAlgebraicNumber.rational(0)


def _interval(item: IntervalLike) -> Interval:
    return item.interval if isinstance(item, CellRep) else item


def _by_lower(a: Interval, b: Interval) -> int:
    return compare_lower(a.lower, b.lower) or -compare_upper(a.upper, b.upper)


def sort_intervals(items: Iterable[IntervalLike]) -> list:
    return sorted(items, key=cmp_to_key(lambda a, b: _by_lower(_interval(a), _interval(b))))


def uncovered_gaps(items: Iterable[IntervalLike]) -> List[Interval]:
    """Maximal intervals not covered by any item, in increasing order."""
    gaps: List[Interval] = []
    reach: Optional[Bound] = None
    for item in sort_intervals(items):
        interval = _interval(item)
        if reach is None:
            if interval.lower.is_finite:
                gaps.append(Interval(Bound.neg_inf(), interval.lower.flipped()))
            reach = interval.upper
            continue
        if reach.kind is BoundKind.POS_INF:
            break
        if not connects(reach, interval.lower):
            gaps.append(Interval(reach.flipped(), interval.lower.flipped()))
        if compare_upper(interval.upper, reach) > 0:
            reach = interval.upper
    if reach is None:
        return [Interval.whole()]
    if reach.kind is not BoundKind.POS_INF:
        gaps.append(Interval(reach.flipped(), Bound.pos_inf()))
    return gaps


def is_covering(items: Iterable[IntervalLike]) -> bool:
    """True iff the union of the intervals is the whole real line."""
    return not uncovered_gaps(items)


def union_covers(items: Iterable[IntervalLike], target: Interval) -> bool:
    """True iff ``target`` lies inside the union of the intervals."""
    for gap in uncovered_gaps(items):
        if _overlaps(gap, target):
            return False
    return True


def _overlaps(a: Interval, b: Interval) -> bool:
    return connects_strictly(a.upper, b.lower) and connects_strictly(b.upper, a.lower)


def connects_strictly(upper: Bound, lower: Bound) -> bool:
    """True when the interval ending at ``upper`` and one starting at ``lower`` share a point."""
    if lower.kind is BoundKind.NEG_INF or upper.kind is BoundKind.POS_INF:
        return True
    order = upper.value.compare(lower.value)
    if order:
        return order > 0
    return upper.is_closed and lower.is_closed


# ----------------------------------------------------------------------
# Picking rationals
# ----------------------------------------------------------------------

def _gallop(holds: Callable[[int], bool]) -> int:
    """Largest k >= 1 with holds(k), for a predicate true at 1 and eventually false."""
    lo, hi = 1, 2
    while holds(hi):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _stern_brocot(lower: RealAlgebraicNumber, upper: RealAlgebraicNumber) -> Fraction:
    # Walk the Stern-Brocot tree with lower >= 0; runs of equal moves are galloped.
    def at_or_below(n: int, d: int) -> bool:
        return lower.compare(Fraction(n, d)) >= 0

    def at_or_above(n: int, d: int) -> bool:
        return d == 0 or upper.compare(Fraction(n, d)) <= 0

    ln, ld, rn, rd = 0, 1, 1, 0
    while True:
        mn, md = ln + rn, ld + rd
        if at_or_below(mn, md):
            k = _gallop(lambda k: at_or_below(ln + k * rn, ld + k * rd))
            ln, ld = ln + k * rn, ld + k * rd
        elif at_or_above(mn, md):
            k = _gallop(lambda k: at_or_above(rn + k * ln, rd + k * ld))
            rn, rd = rn + k * ln, rd + k * ld
        else:
            return Fraction(mn, md)


def simplest_between(lower: RealAlgebraicNumber, upper: RealAlgebraicNumber) -> RealAlgebraicNumber:
    """Simplest rational strictly between two numbers (smallest denominator, then numerator)."""
    if lower.compare(upper) >= 0:
        raise UsageError(f"no rational strictly between {lower} and {upper}")
    if lower.sign() < 0 < upper.sign():
        return _ZERO
    if upper.sign() <= 0:
        return simplest_between(upper.negate(), lower.negate()).negate()
    return RealAlgebraicNumber.rational(_stern_brocot(lower, upper))


def pick_inside(interval: Interval) -> RealAlgebraicNumber:
    """A simple rational in the interior of a non-point interval (the point itself otherwise)."""
    if interval.is_point:
        return interval.lower.value
    lower, upper = interval.lower, interval.upper
    if not lower.is_finite and not upper.is_finite:
        return _ZERO
    if not upper.is_finite:
        if lower.value.sign() < 0:
            return _ZERO
        return RealAlgebraicNumber.rational(lower.value.floor() + 1)
    if not lower.is_finite:
        if upper.value.sign() > 0:
            return _ZERO
        return RealAlgebraicNumber.rational(upper.value.ceil() - 1)
    return simplest_between(lower.value, upper.value)


def _pick_in_gap(gap: Interval) -> RealAlgebraicNumber:
    if gap.is_point:
        return gap.lower.value
    closed_rationals = [b.value for b in (gap.lower, gap.upper)
                        if b.is_finite and b.is_closed and b.value.is_rational]
    if closed_rationals:
        return min(closed_rationals, key=lambda v: abs(v.rational_value))
    return pick_inside(gap)


def sample_outside(items: Iterable[IntervalLike]) -> Optional[RealAlgebraicNumber]:
    """A deterministic point outside every interval, or None if they cover the line.

    Zero is taken when uncovered. Otherwise the leftmost gap right of zero is
    used (the leftmost gap overall if none lies right of zero), and inside it
    a closed rational endpoint, a neighbouring integer of an unbounded gap's
    finite end, or the simplest rational of the open gap.
    """
    gaps = uncovered_gaps(items)
    if not gaps:
        return None
    for gap in gaps:
        if gap.contains(_ZERO):
            return _ZERO
    right = [gap for gap in gaps if gap.lower.is_finite and gap.lower.value.sign() >= 0]
    return _pick_in_gap(right[0] if right else gaps[0])


# ----------------------------------------------------------------------
# Selection
# ----------------------------------------------------------------------

def select_covering(cells: Iterable[CellRep], heuristic: Heuristic = Heuristic.MIN_COUNT) -> List[CellRep]:
    """Irredundant sub-covering of a covering list of cells, ordered by lower bound."""
    cells = list(cells)
    if not is_covering(cells):
        raise UsageError("cells do not cover the real line")
    if heuristic is Heuristic.CLOSED_FIRST:
        closed = [cell for cell in cells if cell.closed_flag]
        if closed and is_covering(closed):
            return _minimum_cover(closed)
    return _minimum_cover(cells)


def _minimum_cover(cells: Sequence[CellRep]) -> List[CellRep]:
    # Chains of cells from -oo to +oo where each next cell starts before the
    # previous one ends and reaches strictly further. Among the shortest
    # chains prefer the fewest distinct polynomials, then selection keys.
    by_reach = sorted(range(len(cells)),
                      key=cmp_to_key(lambda i, j: -compare_upper(cells[i].interval.upper, cells[j].interval.upper)))
    best: Dict[int, Tuple] = {}
    for i in by_reach:
        interval = cells[i].interval
        own_key = cells[i].selection_key()
        if interval.upper.kind is BoundKind.POS_INF:
            best[i] = (1, len(cells[i].polys), (own_key,), frozenset(cells[i].polys), (i,))
            continue
        options = []
        for j, tail in best.items():
            nxt = cells[j].interval
            if compare_upper(nxt.upper, interval.upper) > 0 and connects(interval.upper, nxt.lower):
                polys = tail[3] | cells[i].polys
                options.append((tail[0] + 1, len(polys), (own_key,) + tail[2], polys, (i,) + tail[4]))
        if options:
            best[i] = min(options, key=lambda option: option[:3])
    starts = [best[i] for i in best if cells[i].interval.lower.kind is BoundKind.NEG_INF]
    if not starts:
        raise UsageError("cells do not cover the real line")
    chosen = [cells[i] for i in min(starts, key=lambda option: option[:3])[4]]
    for cell in list(chosen):
        rest = [other for other in chosen if other is not cell]
        if rest and is_covering(rest):
            chosen = rest
    return sort_intervals(chosen)


def close_up(intervals: Sequence[Interval]) -> List[Interval]:
    """Close the finite ends of every non-point interval and drop absorbed points."""
    closed = [interval.closure() for interval in intervals if not interval.is_point]
    kept = list(closed)
    for interval in intervals:
        if interval.is_point and not union_covers(closed, interval):
            kept.append(interval)
    return sort_intervals(kept)
