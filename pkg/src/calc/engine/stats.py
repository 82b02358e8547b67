"""Counters collected during a solver run."""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List

from ..covering import CellRep


@dataclass
class Stats:
    """Per-run counters.

    ``cells_created`` and ``cells_closed`` count cells built by
    characterizing a covering; constraint cells are not counted there but
    do take part in the depth maxima.
    """

    samples_per_level: List[int] = field(default_factory=list)
    cells_created: int = 0
    cells_closed: int = 0
    max_depth: int = 0
    max_closed_depth: int = 0
    characterization_calls: int = 0

    @classmethod
    def for_variables(cls, nvars: int) -> "Stats":
        return cls(samples_per_level=[0] * nvars)

    @property
    def closed_ratio(self) -> float:
        if not self.cells_created:
            return 0.0
        return self.cells_closed / self.cells_created

    @property
    def relative_max_closed_depth(self) -> float:
        if not self.max_depth:
            return 0.0
        return self.max_closed_depth / self.max_depth

    @property
    def total_samples(self) -> int:
        return sum(self.samples_per_level)

    def record_cell(self, cell: CellRep, derived: bool) -> None:
        if derived:
            self.cells_created += 1
            if cell.closed_flag:
                self.cells_closed += 1
        self.max_depth = max(self.max_depth, cell.depth)
        if cell.closed_flag:
            self.max_closed_depth = max(self.max_closed_depth, cell.depth)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["closed_ratio"] = self.closed_ratio
        data["relative_max_closed_depth"] = self.relative_max_closed_depth
        return data
