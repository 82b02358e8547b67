"""
Running instances: single solves, variant comparison and covering verification.

Compare runs every (instance, variant) pair in a process pool; each task
re-reads its file so nothing but plain dicts crosses process boundaries.
Verification re-solves an UNSAT instance with the generalized variable of
each recorded cell pinned to points of the cell, which must all stay UNSAT.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ...common.errors import CalcError, ParseError, SoundnessError
from ..covering import CellRep, pick_inside
from ..engine import Formula, SolveResult, SolverOptions, Variant, Verdict, solve
from ..logger import NULL_LOGGER, Logger
from ..realalg import RealAlgebraicNumber
from ..utils import instance_name
from .desugar import to_formula
from .reporting import StatsReport
from .smtlib import SourceScript, parse


def read_instance(path: str) -> Tuple[SourceScript, Formula]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}") from e
    script = parse(text)
    return script, to_formula(script)


def solve_formula(formula: Formula, variant: Variant, logger: Logger = NULL_LOGGER) -> SolveResult:
    return solve(formula, options=SolverOptions(variant=variant, logger=logger))


# ----------------------------------------------------------------------
# Verification
# ----------------------------------------------------------------------

@dataclass
class VerifyReport:
    instance: str
    variant: str
    verdict: str
    cells_checked: int = 0
    points_checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return (f"{self.instance} [{self.variant}] {self.verdict}: "
                f"{self.cells_checked} cells, {self.points_checked} pinned points, {status}")


def verification_points(cell: CellRep) -> List[RealAlgebraicNumber]:
    """An interior point of the cell plus every finite bound the cell includes."""
    interval = cell.interval
    points = [pick_inside(interval)]
    for bound in (interval.lower, interval.upper):
        if bound.is_finite and bound.is_closed and all(bound.value.compare(p) != 0 for p in points):
            points.append(bound.value)
    return points


def _recorded_cells(result: SolveResult) -> List[CellRep]:
    seen: Dict[int, CellRep] = {}
    for cell in list(result.covering) + list(result.characterizations):
        seen.setdefault(id(cell), cell)
    return list(seen.values())


def verify_result(formula: Formula, result: SolveResult, instance: str = "",
                  logger: Logger = NULL_LOGGER) -> VerifyReport:
    """Pin each recorded UNSAT cell and re-solve with the base variant."""
    report = VerifyReport(instance, result.variant.value, result.verdict.value)
    if result.verdict is not Verdict.UNSAT:
        return report
    for cell in _recorded_cells(result):
        report.cells_checked += 1
        prefix = cell.sample[:-1]
        restricted = formula.pin_prefix(prefix)
        for value in verification_points(cell):
            report.points_checked += 1
            pinned = restricted.pin(cell.level, value)
            outcome = solve(pinned, options=SolverOptions(variant=Variant.BASE))
            if outcome.is_sat:
                message = (f"cell {cell.describe()} at level {cell.level + 1}: "
                           f"{formula.variables[cell.level]} = {value} is satisfiable")
                logger.error("{}", message)
                report.violations.append(message)
            else:
                logger.debug_log("pinned {} = {} stays unsat", formula.variables[cell.level], value)
    return report


def run_verify(path: str, variant: Variant, logger: Logger = NULL_LOGGER) -> VerifyReport:
    _script, formula = read_instance(path)
    result = solve_formula(formula, variant, logger)
    return verify_result(formula, result, instance_name(path), logger)


# ----------------------------------------------------------------------
# Variant comparison
# ----------------------------------------------------------------------

def _compare_task(path: str, variant_name: str) -> Dict:
    """Worker entry point; returns a StatsReport dict or an error dict."""
    variant = Variant.parse(variant_name)
    try:
        _script, formula = read_instance(path)
        result = solve_formula(formula, variant)
    except SoundnessError as e:
        return {"instance": instance_name(path), "variant": variant.value, "error": str(e), "soundness": True}
    except CalcError as e:
        return {"instance": instance_name(path), "variant": variant.value, "error": str(e)}
    return StatsReport.from_result(instance_name(path), result).to_dict()


@dataclass
class CompareOutcome:
    reports: List[StatsReport] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    disagreements: List[str] = field(default_factory=list)
    soundness_failures: List[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if self.disagreements or self.soundness_failures:
            return 3
        if self.errors:
            return 2
        return 0


def _run_tasks(tasks: Sequence[Tuple[str, str]], jobs: int, seed: Optional[int]) -> List[Dict]:
    order = list(range(len(tasks)))
    if seed is not None:
        random.Random(seed).shuffle(order)
    results: List[Optional[Dict]] = [None] * len(tasks)
    if jobs <= 1:
        for index in order:
            results[index] = _compare_task(*tasks[index])
        return results
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {index: pool.submit(_compare_task, *tasks[index]) for index in order}
        for index, future in futures.items():
            results[index] = future.result()
    return results


def run_compare(paths: Sequence[str], variants: Iterable[Variant], jobs: int = 1,
                seed: Optional[int] = None, logger: Logger = NULL_LOGGER) -> CompareOutcome:
    """Solve every instance under every variant.

    Rows come back in input order whatever the scheduling; ``seed`` only
    shuffles the submission order. Rows of an instance whose variants
    disagree are marked ``DISAGREE``.
    """
    variants = list(variants)
    tasks = [(path, variant.value) for path in paths for variant in variants]
    outcome = CompareOutcome()
    by_instance: Dict[str, List[StatsReport]] = {}
    for task, data in zip(tasks, _run_tasks(tasks, jobs, seed)):
        if "error" in data:
            message = f"{task[0]} [{data['variant']}]: {data['error']}"
            logger.error("{}", message)
            (outcome.soundness_failures if data.get("soundness") else outcome.errors).append(message)
            continue
        report = StatsReport.from_dict(data)
        outcome.reports.append(report)
        by_instance.setdefault(task[0], []).append(report)
    for path, reports in by_instance.items():
        verdicts = {report.verdict for report in reports}
        agreement = "ok" if len(verdicts) == 1 else "DISAGREE"
        for report in reports:
            report.agreement = agreement
        if agreement != "ok":
            message = f"{path}: " + ", ".join(f"{r.variant}={r.verdict}" for r in reports)
            logger.error("verdict disagreement {}", message)
            outcome.disagreements.append(message)
    logger.info("compared {} instances under {} variants", len(paths), len(variants))
    return outcome

