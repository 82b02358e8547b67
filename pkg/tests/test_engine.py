import random
from fractions import Fraction

import pytest

from conftest import covering_persists, fingerprint, parabola_polys, variables
from src.calc.covering import select_covering
from src.calc.engine import (
    Constraint,
    Formula,
    Relation,
    SolverOptions,
    Variant,
    Verdict,
    construct_characterization,
    get_unsat_intervals,
    interval_from_characterization,
    solve,
)
from src.calc.polyarith import Polynomial, canonical
from src.calc.realalg import RealAlgebraicNumber
from src.common.errors import UsageError

ZERO = RealAlgebraicNumber.rational(0)
SQRT3 = RealAlgebraicNumber.from_isolating_interval([-3, 0, 1], 1, 2)
OUTER = RealAlgebraicNumber.from_isolating_interval([-39, 0, 4], 3, 4)


def rational(value):
    return RealAlgebraicNumber.rational(Fraction(value))


def shapes(cells):
    """(lower, upper) as (value or None, closed) pairs for compact comparisons."""
    out = []
    for cell in cells:
        lower, upper = cell.interval.lower, cell.interval.upper
        out.append(((lower.value, lower.is_closed) if lower.is_finite else None,
                    (upper.value, upper.is_closed) if upper.is_finite else None))
    return out


def projection_polys():
    x, y, _z = variables(3)
    return {
        y * y + x * x - 3,
        canonical(y * y - 5 * y + x * x - Fraction(39, 4)),
        canonical(y + Fraction(27, 20)),
    }


# ----------------------------------------------------------------------
# Relations and formulas
# ----------------------------------------------------------------------

def test_relation_helpers():
    assert Relation.LT.is_strict and Relation.NE.is_strict and not Relation.GE.is_strict
    assert Relation.LE.negated() is Relation.GT
    assert Relation.NE.negated() is Relation.EQ
    assert Relation.GE.holds(0) and not Relation.GT.holds(0)
    assert Relation.parse("distinct") is Relation.NE
    with pytest.raises(UsageError):
        Relation.parse("~")


def test_constraint_and_formula_validation():
    x, y = variables(2)
    with pytest.raises(UsageError):
        Constraint(x - x, Relation.LT)
    with pytest.raises(UsageError):
        Formula(("x",), (Constraint(x + y, Relation.LT),))
    with pytest.raises(UsageError):
        Formula(("x", "x"), ())


def test_pin_irrational_value():
    (x,) = variables(1)
    formula = Formula(("x",), (Constraint(x - 2, Relation.LT),))
    pinned = formula.pin(0, SQRT3)
    assert len(pinned.constraints) == 4
    assert solve(pinned).is_sat
    assert not solve(Formula(("x",), (Constraint(x - 2, Relation.GT),)).pin(0, SQRT3)).is_sat


def test_violated_at():
    p1, p2 = parabola_polys()
    formula = Formula(("x1", "x2"), (Constraint(p1, Relation.LT), Constraint(p2, Relation.GT)))
    assert formula.violated_at((rational(2), rational(0))) == []
    assert len(formula.violated_at((rational(0), rational(0)))) == 2


# ----------------------------------------------------------------------
# Constraint cells
# ----------------------------------------------------------------------

def test_unsat_intervals_open_table(spheres_formula):
    cells = get_unsat_intervals(spheres_formula, (ZERO, ZERO), Variant.BASE)
    assert shapes(cells) == [
        (None, (ZERO, False)),
        (None, (SQRT3.negate(), False)),
        ((SQRT3.negate(), True), (SQRT3.negate(), True)),
        ((SQRT3, True), (SQRT3, True)),
        ((SQRT3, False), None),
        ((OUTER.negate(), True), (OUTER.negate(), True)),
        ((OUTER.negate(), False), (OUTER, False)),
        ((OUTER, True), (OUTER, True)),
    ]
    assert not any(cell.closed_flag for cell in cells)


def test_unsat_intervals_closed_table(spheres_formula):
    cells = get_unsat_intervals(spheres_formula, (ZERO, ZERO), Variant.CLOSED)
    assert shapes(cells) == [
        (None, (ZERO, False)),
        (None, (SQRT3.negate(), True)),
        ((SQRT3, True), None),
        ((OUTER.negate(), True), (OUTER, True)),
    ]
    assert [cell.closed_flag for cell in cells] == [False, True, True, True]


def test_unsat_intervals_skip_other_levels(spheres_formula):
    assert get_unsat_intervals(spheres_formula, (), Variant.BASE) == []
    assert get_unsat_intervals(spheres_formula, (ZERO,), Variant.BASE) == []
    with pytest.raises(UsageError):
        get_unsat_intervals(spheres_formula, (ZERO, ZERO, ZERO))


def test_unsat_intervals_for_parabolas_at_quarter(parabolas_formula):
    cells = get_unsat_intervals(parabolas_formula, (rational(Fraction(1, 4)),), Variant.BASE)
    assert shapes(cells)[0] == (None, (Fraction(15, 16), False))
    assert shapes(cells)[-1] == ((Fraction(-15, 16), False), None)
    assert len(cells) == 4


def test_disequality_on_irrational_point_is_not_flagged():
    (x,) = variables(1)
    formula = Formula(("x",), (Constraint(x * x - 2, Relation.NE), Constraint(x - 1, Relation.NE)))
    cells = get_unsat_intervals(formula, (), Variant.CLOSED)
    assert all(cell.interval.is_point for cell in cells)
    flags = {cell.interval.lower.value.is_rational: cell.closed_flag for cell in cells}
    assert flags == {False: False, True: True}


def test_nullified_constraint_covers_the_line():
    x, y = variables(2)
    formula = Formula(("x", "y"), (Constraint((x - 1) * y, Relation.GT),))
    cells = get_unsat_intervals(formula, (rational(1),), Variant.BASE)
    assert len(cells) == 1
    assert cells[0].interval.is_whole
    assert cells[0].polys == {x - 1}
    assert get_unsat_intervals(formula, (rational(2),), Variant.BASE)[0].interval.upper.value == 0


# ----------------------------------------------------------------------
# Characterization
# ----------------------------------------------------------------------

@pytest.mark.parametrize("variant", list(Variant))
def test_projection_of_sphere_covering(spheres_formula, variant):
    cells = get_unsat_intervals(spheres_formula, (ZERO, ZERO), variant)
    covering = select_covering(cells, variant.heuristic)
    assert all(cell.constraint is not spheres_formula.constraints[0] for cell in covering)
    assert construct_characterization(covering, (ZERO, ZERO)) == projection_polys()


def test_projection_of_parabola_covering(parabolas_formula):
    quarter = rational(Fraction(1, 4))
    cells = get_unsat_intervals(parabolas_formula, (quarter,), Variant.BASE)
    polys = construct_characterization(select_covering(cells), (quarter,))
    x1, _x2 = variables(2)
    assert x1 * x1 - 1 in polys


def test_interval_from_projection_open_and_closed(spheres_formula):
    polys = projection_polys()
    base_parents = select_covering(get_unsat_intervals(spheres_formula, (ZERO, ZERO), Variant.BASE))
    base = interval_from_characterization(polys, (ZERO,), ZERO, base_parents, Variant.BASE)
    assert shapes([base]) == [((Fraction(-27, 20), False), (SQRT3, False))]
    assert not base.closed_flag

    closed_parents = select_covering(get_unsat_intervals(spheres_formula, (ZERO, ZERO), Variant.CLOSED))
    closed = interval_from_characterization(polys, (ZERO,), ZERO, closed_parents, Variant.CLOSED)
    assert shapes([closed]) == [((Fraction(-27, 20), True), (SQRT3, True))]
    assert closed.closed_flag
    assert closed.depth == 2
    assert closed.lower_polys == {canonical(variables(3)[1] + Fraction(27, 20))}


def test_interval_collapses_to_section_on_root():
    x1, _x2 = variables(2)
    cell = interval_from_characterization({x1 * x1 - 1}, (), rational(1))
    assert cell.interval.is_point


# ----------------------------------------------------------------------
# Solver
# ----------------------------------------------------------------------

@pytest.mark.parametrize("variant", list(Variant))
def test_parabolas_circle_is_sat(parabolas_circle_formula, variant):
    result = solve(parabolas_circle_formula, variant)
    assert result.verdict is Verdict.SAT
    assert parabolas_circle_formula.violated_at(result.model) == []


def test_parabolas_circle_closed_skips_the_section(parabolas_circle_formula):
    result = solve(parabolas_circle_formula, Variant.CLOSED)
    assert list(result.model) == [2, 0]
    first_level = [sample[0] for sample in result.sample_log if len(sample) == 1]
    assert first_level == [0, 2]
    generalized = result.characterizations[0]
    assert shapes([generalized]) == [((-1, True), (1, True))]
    assert generalized.closed_flag and generalized.depth == 2


def test_parabolas_circle_base_samples_the_section(parabolas_circle_formula):
    result = solve(parabolas_circle_formula, Variant.BASE)
    first_level = [sample[0] for sample in result.sample_log if len(sample) == 1]
    assert first_level[:2] == [0, 1]
    assert shapes([result.characterizations[0]]) == [((-1, False), (1, False))]


@pytest.mark.parametrize("variant", list(Variant))
def test_spheres_are_unsat(spheres_formula, variant):
    result = solve(spheres_formula, variant)
    assert result.verdict is Verdict.UNSAT
    assert result.model is None
    assert result.stats.max_closed_depth <= result.stats.max_depth


def test_spheres_first_generalization(spheres_formula):
    base = solve(spheres_formula, Variant.BASE).characterizations[0]
    closed = solve(spheres_formula, Variant.CLOSED).characterizations[0]
    assert shapes([base]) == [((Fraction(-27, 20), False), (SQRT3, False))]
    assert shapes([closed]) == [((Fraction(-27, 20), True), (SQRT3, True))]
    assert closed.closed_flag and not base.closed_flag


def test_spheres_first_level_generalization(spheres_formula):
    edge = RealAlgebraicNumber.from_isolating_interval([-471, 0, 400], 1, 2)
    for variant in (Variant.BASE, Variant.CLOSED):
        result = solve(spheres_formula, variant)
        first_level = [cell for cell in result.characterizations if cell.level == 0]
        assert first_level
        interval = first_level[0].interval
        assert interval.lower.value == edge.negate()
        assert interval.upper.value == edge


def _second_level_samples_at_origin(result):
    return [s for s in result.sample_log if len(s) == 2 and s[0] == 0]


def test_closed_cells_need_fewer_samples(spheres_formula):
    base = solve(spheres_formula, Variant.BASE)
    closed = solve(spheres_formula, Variant.CLOSED)
    assert len(_second_level_samples_at_origin(closed)) == 4
    assert len(_second_level_samples_at_origin(base)) == 6


def test_forced_sampling_sequence(spheres_formula):
    hints = {1: [Fraction(0), Fraction(-3, 2), Fraction(-2), Fraction(2)]}
    base = solve(spheres_formula, options=SolverOptions(variant=Variant.BASE, sample_hints=hints))
    closed = solve(spheres_formula, options=SolverOptions(variant=Variant.CLOSED, sample_hints=hints))
    closed_samples = [s[1] for s in _second_level_samples_at_origin(closed)]
    assert closed_samples[:2] == [0, Fraction(-3, 2)]
    assert len(closed_samples) == 4
    assert len(_second_level_samples_at_origin(base)) == 6


def test_strict_parabolas_never_sample_the_section(parabolas_formula):
    closed = solve(parabolas_formula, Variant.CLOSED)
    base = solve(parabolas_formula, Variant.BASE)
    closed_first = [s[0] for s in closed.sample_log if len(s) == 1]
    base_first = [s[0] for s in base.sample_log if len(s) == 1]
    assert all(value.compare(1) != 0 and value.compare(-1) != 0 for value in closed_first)
    assert 1 in base_first
    assert closed.is_sat and base.is_sat


def test_trivial_contradiction():
    (x,) = variables(1)
    formula = Formula(("x",), (Constraint(x, Relation.GT), Constraint(x, Relation.LT)))
    for variant in Variant:
        result = solve(formula, variant)
        assert result.verdict is Verdict.UNSAT
        assert result.stats.characterization_calls == 0
        assert result.stats.total_samples == 0


def test_closed_ratio_on_strict_unsat_instance():
    x, y = variables(2)
    formula = Formula(("x", "y"), (Constraint(y * y + x * x + 1, Relation.LT),))
    closed = solve(formula, Variant.CLOSED)
    base = solve(formula, Variant.BASE)
    assert closed.verdict is base.verdict is Verdict.UNSAT
    assert closed.stats.cells_created == 1
    assert closed.stats.closed_ratio == 1.0
    assert base.stats.closed_ratio == 0.0
    assert 0.0 <= closed.stats.relative_max_closed_depth <= 1.0


def test_irrational_model():
    (x,) = variables(1)
    result = solve(Formula(("x",), (Constraint(x * x - 2, Relation.EQ), Constraint(x, Relation.GT))))
    assert result.is_sat
    (value,) = result.model
    assert not value.is_rational
    assert value.compare(Fraction(141, 100)) > 0


def test_constant_false_constraint():
    formula = Formula(("x",), (Constraint(Polynomial.constant(1, 1), Relation.LT),))
    assert solve(formula).verdict is Verdict.UNSAT


def test_empty_formula_is_sat_at_origin():
    result = solve(Formula(("x", "y"), ()))
    assert result.is_sat
    assert list(result.model) == [0, 0]


def test_rootless_factor_stays_in_the_cell():
    x, y = variables(2)
    poly = y * y + x + 1
    formula = Formula(("x", "y"), (Constraint(poly, Relation.LT),))
    (whole,) = get_unsat_intervals(formula, (ZERO,), Variant.BASE)
    assert whole.interval.is_whole
    assert whole.polys == {poly}
    for variant in Variant:
        result = solve(formula, variant)
        assert result.is_sat
        assert formula.violated_at(result.model) == []
        assert result.model[0].compare(-1) < 0


def test_lower_level_factor_stays_in_the_cell():
    x, y = variables(2)
    formula = Formula(("x", "y"), (Constraint((x - 1) * y, Relation.GT),))
    cells = get_unsat_intervals(formula, (rational(2),), Variant.BASE)
    assert all(x - 1 in cell.polys for cell in cells)
    result = solve(formula, Variant.CLOSED)
    assert result.is_sat


# ----------------------------------------------------------------------
# Properties
# ----------------------------------------------------------------------

@pytest.mark.parametrize("variant", list(Variant))
def test_covering_persists_over_generalized_cells(spheres_formula, parabolas_circle_formula, variant):
    rng = random.Random(variant.value)
    for formula in (spheres_formula, parabolas_circle_formula):
        result = solve(formula, variant)
        assert result.characterizations
        assert covering_persists(formula, result, rng)


@pytest.mark.parametrize("variant", list(Variant))
def test_solve_is_deterministic(spheres_formula, parabolas_circle_formula, variant):
    for formula in (spheres_formula, parabolas_circle_formula):
        assert fingerprint(solve(formula, variant)) == fingerprint(solve(formula, variant))
