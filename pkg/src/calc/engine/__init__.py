"""The covering solver and its building blocks."""

from .characterization import construct_characterization, interval_from_characterization
from .constraints import Constraint, Formula, Relation, pin_constraints
from .options import SolverOptions, Variant
from .solver import CoveringSolver, SolveResult, solve
from .solver_helpers import Verdict, check_model, next_sample
from .stats import Stats
from .unsat_cells import constraint_cells, get_unsat_intervals

__all__ = [
    "Constraint",
    "CoveringSolver",
    "Formula",
    "Relation",
    "SolveResult",
    "SolverOptions",
    "Stats",
    "Variant",
    "Verdict",
    "check_model",
    "constraint_cells",
    "construct_characterization",
    "get_unsat_intervals",
    "interval_from_characterization",
    "next_sample",
    "pin_constraints",
    "solve",
]
