"""SMT-LIB frontend, reports and the compare/verify/fuzz harnesses."""

from .desugar import format_model, format_value, formula_to_smtlib, parse_formula, polynomial_to_term, to_formula
from .fuzzing import FuzzSummary, generate_instances, random_formula, run_fuzz
from .harness import CompareOutcome, VerifyReport, read_instance, run_compare, run_verify, solve_formula, verify_result
from .reporting import CSV_FIELDS, StatsReport, render, write_csv
from .smtlib import SourceScript, parse

__all__ = [
    "CSV_FIELDS",
    "CompareOutcome",
    "FuzzSummary",
    "SourceScript",
    "StatsReport",
    "VerifyReport",
    "format_model",
    "format_value",
    "formula_to_smtlib",
    "generate_instances",
    "parse",
    "parse_formula",
    "polynomial_to_term",
    "random_formula",
    "read_instance",
    "render",
    "run_compare",
    "run_fuzz",
    "run_verify",
    "solve_formula",
    "to_formula",
    "verify_result",
    "write_csv",
]
