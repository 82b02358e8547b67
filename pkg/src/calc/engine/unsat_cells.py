"""Cells on which a single constraint is violated, above a fixed sample."""

import itertools
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from ...common.errors import UsageError
from ..covering import Bound, CellRep, Interval, close_up, pick_inside
from ..polyarith import Polynomial, normalize, sorted_polys
from ..realalg import RealAlgebraicNumber, SamplePoint, sign_at, specialize_roots
from .constraints import Constraint, Formula, Relation
from .options import Variant

IdSource = Callable[[], int]


def _regions(roots: Sequence[RealAlgebraicNumber]) -> List[Interval]:
    """Sectors and sections of the line cut at the given increasing roots."""
    if not roots:
        return [Interval.whole()]
    regions = [Interval(Bound.neg_inf(), Bound.open(roots[0]))]
    for index, root in enumerate(roots):
        regions.append(Interval.point(root))
        upper = Bound.open(roots[index + 1]) if index + 1 < len(roots) else Bound.pos_inf()
        regions.append(Interval(Bound.open(root), upper))
    return regions


def _merged_roots(factors: Sequence[Polynomial], sample: SamplePoint) -> List[Tuple[RealAlgebraicNumber, FrozenSet[Polynomial]]]:
    """Distinct roots of all factors on the line, each with the factors vanishing there."""
    merged: List[Tuple[RealAlgebraicNumber, set]] = []
    for factor in factors:
        for root in specialize_roots(factor, sample).roots:
            for known, owners in merged:
                if known.compare(root) == 0:
                    owners.add(factor)
                    break
            else:
                merged.append((root, {factor}))
    merged.sort(key=lambda entry: entry[0])
    return [(root, frozenset(owners)) for root, owners in merged]


def _owners_at(bound: Bound, owners: Dict[int, FrozenSet[Polynomial]], roots: Sequence[RealAlgebraicNumber]) -> FrozenSet[Polynomial]:
    if not bound.is_finite:
        return frozenset()
    for index, root in enumerate(roots):
        if root.compare(bound.value) == 0:
            return owners[index]
    return frozenset()


def _nullified_on_line(poly: Polynomial, sample: SamplePoint, level: int) -> bool:
    return all(c.is_zero() or sign_at(c, sample) == 0 for c in poly.coefficients(level))


def constraint_cells(constraint: Constraint, sample: SamplePoint, variant: Variant, next_id: IdSource) -> List[CellRep]:
    """Cells of the line above ``sample`` on which ``constraint`` is false."""
    level = len(sample)
    poly, relation = constraint.poly, constraint.relation
    closing = variant.closes_cells and constraint.is_strict
    factors = normalize(poly)

    def make(interval: Interval, polys, lower_polys=frozenset(), upper_polys=frozenset()) -> CellRep:
        flag = closing and not (relation is Relation.NE and interval.is_point
                                and not interval.lower.value.is_rational)
        return CellRep(
            interval=interval,
            polys=frozenset(polys),
            sample=sample + (pick_inside(interval),),
            closed_flag=flag,
            depth=1,
            constraint=constraint,
            lower_polys=lower_polys,
            upper_polys=upper_polys,
            ident=next_id(),
        )

    if _nullified_on_line(poly, sample, level):
        if relation.holds(0):
            return []
        polys = set()
        for coeff in poly.coefficients(level):
            if not coeff.is_zero():
                polys |= normalize(coeff)
        return [make(Interval.whole(), polys)]

    line_factors = [f for f in sorted_polys(factors) if f.degree(level) > 0]
    merged = _merged_roots(line_factors, sample)
    roots = [root for root, _owners in merged]
    owners = {index: entry[1] for index, entry in enumerate(merged)}

    violated = []
    for region in _regions(roots):
        if region.is_point:
            sign = 0
        else:
            sign = sign_at(poly, sample + (pick_inside(region),))
        if not relation.holds(sign):
            violated.append(region)
    if closing:
        violated = close_up(violated)
    return [
        make(region, factors, _owners_at(region.lower, owners, roots), _owners_at(region.upper, owners, roots))
        for region in violated
    ]


def get_unsat_intervals(formula: Formula, sample: Sequence[RealAlgebraicNumber], variant: Variant = Variant.BASE,
                        next_id: Optional[IdSource] = None) -> List[CellRep]:
    """Cells of the x_{k+1} line, k = len(sample), violating a constraint with main variable x_{k+1}.

    Constraints over lower variables were enforced when the sample was
    built; constant constraints are checked at the first level.
    """
    sample = tuple(sample)
    level = len(sample)
    if level >= formula.nvars:
        raise UsageError(f"sample of length {level} leaves no variable of {formula.nvars} free")
    if next_id is None:
        next_id = itertools.count(1).__next__
    cells: List[CellRep] = []
    for constraint in formula.constraints:
        main = constraint.poly.main_variable()
        if main == level or (main is None and level == 0):
            cells.extend(constraint_cells(constraint, sample, variant, next_id))
    return cells
