"""Cell records produced while building coverings."""

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, FrozenSet, Optional, Tuple

from ..polyarith import Polynomial, sorted_polys
from ..realalg import SamplePoint
from .bounds import Interval

if TYPE_CHECKING:
    from ..engine.constraints import Constraint


class Heuristic(Enum):
    MIN_COUNT = "min-count"
    CLOSED_FIRST = "closed-first"


@dataclass(eq=False)
class CellRep:
    """An interval of one variable over a fixed lower-dimensional sample.

    ``polys`` are the polynomials the interval was derived from;
    ``lower_polys``/``upper_polys`` are those vanishing at the respective
    finite endpoint. A cell comes either from a constraint (``constraint``
    is set) or from characterizing a covering one level up (``parents``
    holds the identifiers of the covering's cells).
    """

    interval: Interval
    polys: FrozenSet[Polynomial]
    sample: SamplePoint
    closed_flag: bool = False
    depth: int = 1
    constraint: Optional["Constraint"] = None
    parents: Tuple[int, ...] = ()
    lower_polys: FrozenSet[Polynomial] = field(default_factory=frozenset)
    upper_polys: FrozenSet[Polynomial] = field(default_factory=frozenset)
    ident: int = 0

    @property
    def level(self) -> int:
        """Index of the variable the interval ranges over."""
        return len(self.sample) - 1

    @property
    def from_constraint(self) -> bool:
        return self.constraint is not None

    def selection_key(self) -> Tuple:
        """Tie-break key: closed upper bound first, then fewer and smaller polynomials."""
        upper_closed = self.interval.upper.is_finite and self.interval.upper.is_closed
        return (0 if upper_closed else 1, len(self.polys),
                tuple(p.sort_key() for p in sorted_polys(self.polys)), self.ident)

    def describe(self) -> str:
        origin = f"constraint {self.constraint}" if self.constraint is not None else f"parents {list(self.parents)}"
        flag = "closed" if self.closed_flag else "open"
        return f"#{self.ident} {self.interval} [{flag}, depth {self.depth}, {origin}]"
