"""Seeded random conjunctions for differential testing of the variants."""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from ...common.errors import SoundnessError
from ..engine import Constraint, Formula, Relation, Variant
from ..logger import NULL_LOGGER, Logger
from ..polyarith import Polynomial
from .desugar import formula_to_smtlib, parse_formula
from .harness import solve_formula, verify_result

RELATIONS = list(Relation)
VARIABLE_NAMES = ("x", "y", "z", "u", "v", "w")


def random_polynomial(rng: np.random.Generator, nvars: int, degree: int,
                      max_terms: int = 4, coefficient_bound: int = 5) -> Polynomial:
    """A sparse non-constant polynomial with integer coefficients in [-bound, bound]."""
    while True:
        terms: Dict[tuple, int] = {}
        for _ in range(int(rng.integers(1, max_terms + 1))):
            total = int(rng.integers(0, degree + 1))
            exponents = [0] * nvars
            for _ in range(total):
                exponents[int(rng.integers(0, nvars))] += 1
            coeff = int(rng.integers(-coefficient_bound, coefficient_bound + 1))
            if coeff:
                terms[tuple(exponents)] = terms.get(tuple(exponents), 0) + coeff
        poly = Polynomial(nvars, terms)
        if not poly.is_constant():
            return poly


def random_formula(rng: np.random.Generator, max_vars: int = 3, max_constraints: int = 3,
                   degree: int = 3) -> Formula:
    nvars = int(rng.integers(1, max_vars + 1))
    constraints = []
    for _ in range(int(rng.integers(1, max_constraints + 1))):
        relation = RELATIONS[int(rng.integers(0, len(RELATIONS)))]
        constraints.append(Constraint(random_polynomial(rng, nvars, degree), relation))
    return Formula(VARIABLE_NAMES[:nvars], tuple(constraints))


def generate_instances(count: int, seed: int, max_vars: int = 3, degree: int = 3) -> List[str]:
    """SMT-LIB texts of ``count`` random formulas; the same seed gives the same texts."""
    rng = np.random.default_rng(seed)
    return [formula_to_smtlib(random_formula(rng, max_vars=max_vars, degree=degree)) for _ in range(count)]


@dataclass
class FuzzSummary:
    instances: int = 0
    sat: int = 0
    unsat: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 3 if self.failures else 0

    def summary(self) -> str:
        return (f"{self.instances} instances: {self.sat} sat, {self.unsat} unsat, "
                f"{len(self.failures)} failure(s)")


def check_instance(name: str, text: str) -> Dict:
    """Solve ``text`` under every variant, verify UNSAT coverings, compare verdicts."""
    formula = parse_formula(text)
    verdicts = {}
    failures = []
    for variant in Variant:
        try:
            result = solve_formula(formula, variant)
        except SoundnessError as e:
            failures.append(f"{name} [{variant.value}]: {e}")
            continue
        verdicts[variant.value] = result.verdict.value
        report = verify_result(formula, result, name)
        failures.extend(f"{name} [{variant.value}]: {message}" for message in report.violations)
    if len(set(verdicts.values())) > 1:
        failures.append(f"{name}: " + ", ".join(f"{v}={verdict}" for v, verdict in verdicts.items()))
    verdict = next(iter(verdicts.values()), "error")
    return {"name": name, "verdict": verdict, "failures": failures}


def run_fuzz(count: int, seed: int, max_vars: int = 3, degree: int = 3, out: Optional[str] = None,
             jobs: int = 1, logger: Logger = NULL_LOGGER) -> FuzzSummary:
    texts = generate_instances(count, seed, max_vars, degree)
    names = [f"fuzz-{seed}-{index:04d}" for index in range(count)]
    if out:
        os.makedirs(out, exist_ok=True)
        for name, text in zip(names, texts):
            with open(os.path.join(out, name + ".smt2"), "w", encoding="utf-8") as handle:
                handle.write(text)
        logger.info("wrote {} instances to {}", count, out)

    if jobs <= 1:
        results = [check_instance(name, text) for name, text in zip(names, texts)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_instance, names, texts))

    summary = FuzzSummary(instances=count)
    for result in results:
        if result["verdict"] == "sat":
            summary.sat += 1
        elif result["verdict"] == "unsat":
            summary.unsat += 1
        for failure in result["failures"]:
            logger.error("{}", failure)
        summary.failures.extend(result["failures"])
        logger.debug_log("{} {}", result["name"], result["verdict"])
    return summary
