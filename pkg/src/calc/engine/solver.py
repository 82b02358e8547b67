"""
Cylindrical algebraic covering solver for conjunctions of polynomial constraints.

The solver builds a sample point one coordinate at a time. At each level it
collects the cells where some constraint fails, samples outside them and
recurses; when a deeper level comes back fully covered, that covering is
characterized and generalized into a new cell of the current level. A
covering of the first level proves the formula unsatisfiable.
"""

import itertools
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence

from ..covering import CellRep, is_covering, select_covering
from ..realalg import SamplePoint
from ..utils import stopwatch
from .characterization import construct_characterization, interval_from_characterization
from .constraints import Formula
from .options import SolverOptions, Variant
from .solver_helpers import Verdict, check_model, describe_covering, format_point, next_sample
from .stats import Stats
from .unsat_cells import get_unsat_intervals


@dataclass
class SolveResult:
    """Outcome of one solver run."""

    verdict: Verdict
    variant: Variant
    stats: Stats
    model: Optional[SamplePoint] = None
    covering: List[CellRep] = field(default_factory=list)
    characterizations: List[CellRep] = field(default_factory=list)
    sample_log: List[SamplePoint] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def is_sat(self) -> bool:
        return self.verdict is Verdict.SAT


class _LevelOutcome(NamedTuple):
    model: Optional[SamplePoint]
    covering: Optional[List[CellRep]]


class CoveringSolver:
    """Decides one formula under one variant."""

    def __init__(self, formula: Formula, options: Optional[SolverOptions] = None):
        self.formula = formula
        self.options = options or SolverOptions()
        self.variant = self.options.variant
        self.logger = self.options.logger
        self.stats = Stats.for_variables(formula.nvars)
        self._ids = itertools.count(1)
        self._derived: List[CellRep] = []
        self._samples: List[SamplePoint] = []

    def _next_id(self) -> int:
        return next(self._ids)

    def solve(self) -> SolveResult:
        self.logger.debug_log("solving {} variables, {} constraints, variant {}",
                              self.formula.nvars, len(self.formula.constraints), self.variant.value)
        with stopwatch() as timing:
            outcome = self._cover(())
        if outcome.model is not None:
            if self.options.verify_model:
                check_model(self.formula, outcome.model)
            verdict = Verdict.SAT
            self.logger.debug_log("sat at {}", format_point(outcome.model))
        else:
            verdict = Verdict.UNSAT
            for line in describe_covering(outcome.covering):
                self.logger.debug_log("root covering {}", line)
        return SolveResult(
            verdict=verdict,
            variant=self.variant,
            stats=self.stats,
            model=outcome.model,
            covering=outcome.covering or [],
            characterizations=list(self._derived),
            sample_log=list(self._samples),
            elapsed_ms=timing["elapsed_ms"],
        )

    def _cover(self, prefix: SamplePoint) -> _LevelOutcome:
        level = len(prefix)
        cells = get_unsat_intervals(self.formula, prefix, self.variant, self._next_id)
        for cell in cells:
            self.stats.record_cell(cell, derived=False)
        hints = self.options.sample_hints.get(level, ())
        while True:
            if is_covering(cells):
                selected = select_covering(cells, self.variant.heuristic)
                self.logger.debug_log("level {} covered by {} of {} cells", level + 1, len(selected), len(cells))
                return _LevelOutcome(None, selected)
            value = next_sample(cells, hints)
            sample = prefix + (value,)
            self.stats.samples_per_level[level] += 1
            self._samples.append(sample)
            self.logger.debug_log("level {} sample {}", level + 1, value)
            if level + 1 == self.formula.nvars:
                return _LevelOutcome(sample, None)
            outcome = self._cover(sample)
            if outcome.model is not None:
                return outcome
            cells.append(self._generalize(outcome.covering, prefix, value))

    def _generalize(self, covering: Sequence[CellRep], prefix: SamplePoint, value) -> CellRep:
        self.stats.characterization_calls += 1
        polys = construct_characterization(covering, prefix + (value,))
        cell = interval_from_characterization(polys, prefix, value, covering, self.variant, self._next_id)
        self.stats.record_cell(cell, derived=True)
        self._derived.append(cell)
        self.logger.debug_log("generalized {}", cell.describe())
        return cell


def solve(formula: Formula, variant: Variant = Variant.BASE, options: Optional[SolverOptions] = None) -> SolveResult:
    """Decide ``formula``; ``variant`` is ignored when ``options`` are given."""
    if options is None:
        options = SolverOptions(variant=variant)
    return CoveringSolver(formula, options).solve()
