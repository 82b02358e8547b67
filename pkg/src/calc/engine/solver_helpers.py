"""Helper functions for the covering solver."""

from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

from ...common.errors import SoundnessError
from ..covering import CellRep, sample_outside
from ..realalg import RealAlgebraicNumber, SamplePoint
from .constraints import Formula


class Verdict(Enum):
    SAT = "sat"
    UNSAT = "unsat"


def next_sample(cells: Sequence[CellRep], hints: Sequence[Fraction] = ()) -> Optional[RealAlgebraicNumber]:
    """First uncovered hint, else the default uncovered sample; None when covered."""
    for hint in hints:
        candidate = RealAlgebraicNumber.rational(hint)
        if not any(cell.interval.contains(candidate) for cell in cells):
            return candidate
    return sample_outside(cells)


def check_model(formula: Formula, model: SamplePoint) -> None:
    """Raise SoundnessError unless every constraint holds at ``model``."""
    violated = formula.violated_at(model)
    if violated:
        names = ", ".join(c.to_string(formula.variables) for c in violated)
        raise SoundnessError(f"model {format_point(model)} violates {names}")


def format_point(point: Sequence[RealAlgebraicNumber]) -> str:
    return "(" + ", ".join(str(value) for value in point) + ")"


def describe_covering(cells: Sequence[CellRep]) -> List[str]:
    return [cell.describe() for cell in cells]
