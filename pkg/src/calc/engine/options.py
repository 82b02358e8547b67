"""Solver variants and run options."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Sequence

from ...common.errors import UsageError
from ..covering import Heuristic
from ..logger import NULL_LOGGER, Logger


class Variant(Enum):
    BASE = "base"
    CLOSED = "closed"
    CLOSED_HEURISTIC = "closed-heuristic"

    @property
    def closes_cells(self) -> bool:
        return self is not Variant.BASE

    @property
    def heuristic(self) -> Heuristic:
        return Heuristic.CLOSED_FIRST if self is Variant.CLOSED_HEURISTIC else Heuristic.MIN_COUNT

    @classmethod
    def parse(cls, name: str) -> "Variant":
        key = name.strip().lower().replace("_", "-")
        for variant in cls:
            if variant.value == key:
                return variant
        raise UsageError(f"unknown variant {name!r}; choose from {', '.join(v.value for v in cls)}")


@dataclass
class SolverOptions:
    """Options for one solver run.

    ``sample_hints`` maps a variable index to rationals tried, in order,
    before the default sample choice whenever they are uncovered.
    """

    variant: Variant = Variant.BASE
    sample_hints: Dict[int, Sequence[Fraction]] = field(default_factory=dict)
    logger: Logger = NULL_LOGGER
    verify_model: bool = True
