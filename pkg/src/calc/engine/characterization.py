"""
Generalizing a covering of one variable to an interval of the variable below.

construct_characterization collects the lower-level polynomials whose sign
invariance keeps the covering valid; interval_from_characterization turns
them into the largest interval around the current sample value bounded by
their roots.
"""

from functools import lru_cache
from typing import Callable, FrozenSet, Iterable, Optional, Sequence, Set

from ..covering import Bound, CellRep, Interval, sort_intervals
from ..polyarith import Polynomial, discriminant, gcd, normalize, resultant, sorted_polys
from ..realalg import RealAlgebraicNumber, SamplePoint, sign_at, specialize_roots
from .options import Variant


@lru_cache(maxsize=8192)
def _resultant(p: Polynomial, q: Polynomial, var: int) -> Polynomial:
    return resultant(p, q, var)


@lru_cache(maxsize=4096)
def _discriminant(p: Polynomial, var: int) -> Polynomial:
    return discriminant(p, var)


class _Projection:
    """Accumulates normalized projection factors for one characterization."""

    def __init__(self, sample: SamplePoint):
        self.sample = sample
        self.level = len(sample)
        self.polys: Set[Polynomial] = set()

    def add(self, poly: Polynomial) -> None:
        if not poly.is_zero():
            self.polys.update(normalize(poly))

    def add_coefficients(self, poly: Polynomial) -> None:
        """Leading coefficients down to the first one not vanishing at the sample."""
        for coeff in poly.coefficients(self.level):
            if coeff.is_zero():
                continue
            self.add(coeff)
            if sign_at(coeff, self.sample) != 0:
                break

    def add_discriminant(self, poly: Polynomial) -> None:
        if poly.degree(self.level) >= 2:
            self.add(_discriminant(poly, self.level))

    def add_resultant(self, p: Polynomial, q: Polynomial) -> None:
        if p == q:
            return
        res = _resultant(p, q, self.level)
        if not res.is_zero():
            self.add(res)
            return
        # p and q share a factor: project the common part and the cofactors.
        common = gcd(p, q)
        self.add_discriminant(common)
        self.add_coefficients(common)
        parts = [p.divide_exact(common), q.divide_exact(common), common]
        for i, first in enumerate(parts):
            for second in parts[i + 1:]:
                if first.degree(self.level) > 0 and second.degree(self.level) > 0:
                    self.add_resultant(first, second)


def construct_characterization(cells: Sequence[CellRep], sample: Sequence[RealAlgebraicNumber]) -> FrozenSet[Polynomial]:
    """Polynomials in the variables below the covered one.

    ``cells`` cover the line above ``sample``. The result holds
    discriminants and the relevant leading coefficients of every cell
    polynomial, resultants linking the bound polynomials of neighbouring
    cells and of each cell's two ends, resultants of each cell polynomial
    with that cell's bound polynomials, and the lower-level polynomials of
    the cells unchanged.
    """
    sample = tuple(sample)
    projection = _Projection(sample)
    level = projection.level
    ordered = sort_intervals(cells)
    for cell in ordered:
        for poly in sorted_polys(cell.polys):
            if poly.degree(level) <= 0:
                projection.add(poly)
                continue
            projection.add_discriminant(poly)
            projection.add_coefficients(poly)
        for p in sorted_polys(cell.lower_polys):
            for q in sorted_polys(cell.upper_polys):
                projection.add_resultant(p, q)
        bounds = cell.lower_polys | cell.upper_polys
        for p in sorted_polys(cell.polys):
            if p.degree(level) <= 0:
                continue
            for q in sorted_polys(bounds):
                projection.add_resultant(p, q)
    for left, right in zip(ordered, ordered[1:]):
        for p in sorted_polys(left.upper_polys):
            for q in sorted_polys(right.lower_polys):
                projection.add_resultant(p, q)
    return frozenset(projection.polys)


def interval_from_characterization(polys: Iterable[Polynomial], sample: Sequence[RealAlgebraicNumber],
                                   value: RealAlgebraicNumber, parents: Sequence[CellRep] = (),
                                   variant: Variant = Variant.BASE,
                                   next_id: Optional[Callable[[], int]] = None) -> CellRep:
    """Cell around ``value`` on the line above ``sample`` bounded by the nearest roots of ``polys``.

    With a closing variant and every parent flagged closed, finite bounds
    are closed and the cell is flagged closed as well.
    """
    sample = tuple(sample)
    level = len(sample)
    polys = frozenset(p for p in polys if not p.is_constant())
    lower: Optional[RealAlgebraicNumber] = None
    upper: Optional[RealAlgebraicNumber] = None
    lower_polys: Set[Polynomial] = set()
    upper_polys: Set[Polynomial] = set()
    on_value: Set[Polynomial] = set()
    for poly in sorted_polys(polys):
        if poly.degree(level) <= 0:
            continue
        found = specialize_roots(poly, sample)
        if found.nullified:
            continue
        for root in found.roots:
            order = root.compare(value)
            if order == 0:
                on_value.add(poly)
            elif order < 0:
                step = 1 if lower is None else root.compare(lower)
                if step > 0:
                    lower, lower_polys = root, {poly}
                elif step == 0:
                    lower_polys.add(poly)
            else:
                step = 1 if upper is None else upper.compare(root)
                if step > 0:
                    upper, upper_polys = root, {poly}
                elif step == 0:
                    upper_polys.add(poly)

    closed = variant.closes_cells and all(parent.closed_flag for parent in parents)
    if on_value:
        interval = Interval.point(value)
        lower_polys = upper_polys = on_value
    else:
        make_bound = Bound.closed if closed else Bound.open
        interval = Interval(
            make_bound(lower) if lower is not None else Bound.neg_inf(),
            make_bound(upper) if upper is not None else Bound.pos_inf(),
        )
    return CellRep(
        interval=interval,
        polys=polys,
        sample=sample + (value,),
        closed_flag=closed,
        depth=1 + max((parent.depth for parent in parents), default=0),
        parents=tuple(parent.ident for parent in parents),
        lower_polys=frozenset(lower_polys),
        upper_polys=frozenset(upper_polys),
        ident=next_id() if next_id is not None else 0,
    )
