"""Intervals, cells and covering construction for one variable."""

from .bounds import Bound, BoundKind, Interval, compare_lower, compare_upper, connects
from .cells import CellRep, Heuristic
from .sweep import (
    close_up,
    is_covering,
    pick_inside,
    sample_outside,
    select_covering,
    simplest_between,
    sort_intervals,
    uncovered_gaps,
    union_covers,
)

__all__ = [
    "Bound",
    "BoundKind",
    "CellRep",
    "Heuristic",
    "Interval",
    "close_up",
    "compare_lower",
    "compare_upper",
    "connects",
    "is_covering",
    "pick_inside",
    "sample_outside",
    "select_covering",
    "simplest_between",
    "sort_intervals",
    "uncovered_gaps",
    "union_covers",
]
