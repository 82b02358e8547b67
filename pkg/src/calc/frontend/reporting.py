"""Per-run statistics reports in JSON and CSV form."""

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterable, List, TextIO

from ..engine import SolveResult

CSV_FIELDS = [
    "instance",
    "variant",
    "verdict",
    "time_ms",
    "samples_per_level",
    "cells_created",
    "cells_closed",
    "closed_ratio",
    "max_depth",
    "max_closed_depth",
    "relative_max_closed_depth",
    "characterization_calls",
    "agreement",
]


@dataclass
class StatsReport:
    instance: str
    variant: str
    verdict: str
    time_ms: float
    samples_per_level: List[int] = field(default_factory=list)
    cells_created: int = 0
    cells_closed: int = 0
    closed_ratio: float = 0.0
    max_depth: int = 0
    max_closed_depth: int = 0
    relative_max_closed_depth: float = 0.0
    characterization_calls: int = 0
    agreement: str = ""

    @classmethod
    def from_result(cls, instance: str, result: SolveResult) -> "StatsReport":
        stats = result.stats
        return cls(
            instance=instance,
            variant=result.variant.value,
            verdict=result.verdict.value,
            time_ms=round(result.elapsed_ms, 3),
            samples_per_level=list(stats.samples_per_level),
            cells_created=stats.cells_created,
            cells_closed=stats.cells_closed,
            closed_ratio=stats.closed_ratio,
            max_depth=stats.max_depth,
            max_closed_depth=stats.max_closed_depth,
            relative_max_closed_depth=stats.relative_max_closed_depth,
            characterization_calls=stats.characterization_calls,
        )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StatsReport":
        return cls(**{name: data[name] for name in CSV_FIELDS if name in data})

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        if not self.agreement:
            del data["agreement"]
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_row(self) -> Dict[str, Any]:
        row = asdict(self)
        row["samples_per_level"] = ";".join(str(count) for count in self.samples_per_level)
        return row


def write_csv(reports: Iterable[StatsReport], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        writer.writerow(report.to_row())


def render(reports: List[StatsReport], fmt: str) -> str:
    """Render ``reports`` as ``json`` (an object, or a list for several) or ``csv``."""
    if fmt == "csv":
        buffer = io.StringIO()
        write_csv(reports, buffer)
        return buffer.getvalue()
    if len(reports) == 1:
        return reports[0].to_json() + "\n"
    return json.dumps([report.to_dict() for report in reports], indent=2) + "\n"
