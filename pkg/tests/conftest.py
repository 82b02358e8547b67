import os
from fractions import Fraction

import pytest

from src.calc.covering import is_covering
from src.calc.engine import Constraint, Formula, Relation, get_unsat_intervals
from src.calc.polyarith import Polynomial
from src.calc.realalg import RealAlgebraicNumber

BENCHMARKS = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "benchmarks")


def variables(n):
    return [Polynomial.variable(n, i) for i in range(n)]


def parabola_polys():
    x1, x2 = variables(2)
    return -x1 * x1 - x2 + 1, x1 * x1 - x2 - 1


@pytest.fixture
def spheres_formula():
    """Inside a paraboloid, inside a small sphere, outside a large sphere."""
    x, y, z = variables(3)
    return Formula(("x", "y", "z"), (
        Constraint(z - y * y - x * x, Relation.GE),
        Constraint(z * z + y * y + x * x - 3, Relation.LT),
        Constraint(z * z + (y - Fraction(5, 2)) ** 2 + x * x - 16, Relation.GT),
    ))


@pytest.fixture
def parabolas_circle_formula():
    x1, x2 = variables(2)
    p1, p2 = parabola_polys()
    p3 = (x1 - Fraction(1, 2)) ** 2 + (x2 + Fraction(3, 2)) ** 2 - Fraction(1, 4)
    p4 = x1 + Fraction(1, 2)
    return Formula(("x1", "x2"), (
        Constraint(p1, Relation.LT),
        Constraint(p2, Relation.GT),
        Constraint(p3, Relation.GE),
        Constraint(p4, Relation.GE),
    ))


@pytest.fixture
def parabolas_formula():
    p1, p2 = parabola_polys()
    return Formula(("x1", "x2"), (Constraint(p1, Relation.LT), Constraint(p2, Relation.GT)))


@pytest.fixture
def benchmark_path():
    def locate(name):
        return os.path.join(BENCHMARKS, name)
    return locate


def points_inside(interval, rng, count=5):
    """``count`` numbers of the interval: its closed endpoints and random rationals inside."""
    found = [b.value for b in (interval.lower, interval.upper) if b.is_finite and b.is_closed]
    if interval.is_point:
        return found[:1]
    lo = interval.lower.value.approximate(Fraction(1, 1000)) if interval.lower.is_finite else None
    hi = interval.upper.value.approximate(Fraction(1, 1000)) if interval.upper.is_finite else None
    lo = hi - 10 if lo is None and hi is not None else lo
    lo = Fraction(-5) if lo is None else lo
    hi = lo + 10 if hi is None else hi
    while len(found) < count:
        candidate = RealAlgebraicNumber.rational(lo + (hi - lo) * Fraction(rng.randint(1, 99), 100))
        if interval.contains(candidate):
            found.append(candidate)
    return found[:count]


def covering_persists(formula, result, rng):
    """Constraint cells still cover the line above points of each generalized cell built from them."""
    for derived in result.characterizations:
        if derived.depth != 2:
            continue
        prefix = derived.sample[:-1]
        for value in points_inside(derived.interval, rng):
            if not is_covering(get_unsat_intervals(formula, prefix + (value,), result.variant)):
                return False
    return True


def fingerprint(result):
    """Everything a run reports, in comparable form."""
    cells = result.covering + result.characterizations
    return (
        result.verdict,
        None if result.model is None else [str(v) for v in result.model],
        [(str(c.interval), sorted(p.sort_key() for p in c.polys), c.closed_flag, c.depth) for c in cells],
        [[str(v) for v in s] for s in result.sample_log],
        result.stats.to_dict(),
    )
