import pickle
import random
from fractions import Fraction

import pytest
import sympy

from src.calc.polyarith import Polynomial
from src.calc.realalg import (
    RationalInterval,
    RealAlgebraicNumber,
    count_roots,
    enclose,
    isolate_dense,
    isolate_roots,
    isolate_squarefree,
    sign_at,
    specialize_roots,
)
from src.common.errors import UsageError

SQRT3 = RealAlgebraicNumber.from_isolating_interval([-3, 0, 1], 1, 2)


def variables(n):
    return [Polynomial.variable(n, i) for i in range(n)]


def rational(value):
    return RealAlgebraicNumber.rational(Fraction(value))


def test_rational_numbers_compare_exactly():
    assert rational(Fraction(1, 3)) < rational(Fraction(1, 2))
    assert rational(2) == 2
    assert rational(Fraction(-3, 2)).floor() == -2
    assert rational(Fraction(-3, 2)).ceil() == -1


def test_square_root_of_three():
    root = RealAlgebraicNumber.from_isolating_interval([-3, 0, 1], 1, 2)
    assert not root.is_rational
    assert root.compare(Fraction(173, 100)) > 0
    assert root.compare(Fraction(174, 100)) < 0
    assert root.floor() == 1
    assert root.ceil() == 2
    assert abs(root.approximate(Fraction(1, 10 ** 9)) - Fraction(17320508, 10 ** 7)) < Fraction(1, 10 ** 6)


def test_linear_defining_polynomial_gives_rational():
    number = RealAlgebraicNumber.from_isolating_interval([-3, 2], 0, 5)
    assert number.is_rational
    assert number.rational_value == Fraction(3, 2)


def test_isolating_interval_must_bracket_a_root():
    with pytest.raises(UsageError):
        RealAlgebraicNumber.from_isolating_interval([-3, 0, 1], 2, 3)


def test_negate_and_equality_of_conjugates():
    other = RealAlgebraicNumber.from_isolating_interval([-3, 0, 1], Fraction(3, 2), 2)
    assert other == SQRT3
    assert hash(other) == hash(SQRT3)
    minus = SQRT3.negate()
    assert minus < 0
    assert minus.compare(SQRT3) < 0
    assert minus.negate() == SQRT3


def test_pickle_round_trip_keeps_value():
    restored = pickle.loads(pickle.dumps(SQRT3))
    assert restored == SQRT3
    restored.refine()


def test_isolate_roots_of_table_polynomials():
    (z,) = variables(1)
    roots = isolate_roots(z * z - 3)
    assert len(roots) == 2
    assert roots[0] == SQRT3.negate() and roots[1] == SQRT3
    outer = isolate_roots(z * z - Fraction(39, 4))
    assert [float(r) for r in outer] == pytest.approx([-3.1225, 3.1225], abs=1e-3)


def test_isolate_roots_finds_rational_roots_exactly():
    (x,) = variables(1)
    roots = isolate_roots((x - Fraction(1, 3)) * (x + 2) * (x * x - 2))
    assert [r.is_rational for r in roots] == [True, False, True, False]
    assert roots[0] == -2
    assert roots[2] == Fraction(1, 3)


def test_isolate_roots_of_zero_polynomial_is_an_error():
    with pytest.raises(UsageError):
        isolate_roots(Polynomial.zero(1))


def test_isolate_squarefree_intervals_are_disjoint():
    intervals = isolate_squarefree([Fraction(c) for c in (2, 0, -5, 0, 1)])
    assert len(intervals) == 4
    for (lo1, hi1), (lo2, hi2) in zip(intervals, intervals[1:]):
        assert hi1 <= lo2


@pytest.mark.parametrize("seed", range(50))
def test_isolation_matches_sturm_and_sympy_counts(seed):
    rng = random.Random(seed)
    x = sympy.Symbol("x")
    for _ in range(20):
        degree = rng.randint(1, 6)
        coeffs = [rng.randint(-9, 9) for _ in range(degree)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
        expected = sympy.Poly(list(reversed(coeffs)), x).count_roots()
        distinct = len(sympy.Poly(list(reversed(coeffs)), x).real_roots(multiple=False))
        found = isolate_dense(coeffs)
        assert len(found) == distinct
        assert count_roots(coeffs) == distinct
        assert expected >= distinct
        for left, right in zip(found, found[1:]):
            assert left < right


def test_count_roots_on_half_open_interval():
    coeffs = [-1, 0, 1]
    assert count_roots(coeffs, Fraction(-1), Fraction(1)) == 1
    assert count_roots(coeffs, Fraction(-2), Fraction(1)) == 2
    assert count_roots(coeffs, None, Fraction(0)) == 1


def test_interval_enclosure():
    x, y = variables(2)
    box = {0: RationalInterval(Fraction(-1), Fraction(2)), 1: RationalInterval(Fraction(1), Fraction(1))}
    bounds = enclose(x * x + y, box)
    assert bounds.lo <= 1 and bounds.hi >= 5


def test_sign_at_rational_points():
    x1, x2 = variables(2)
    p1 = -x1 * x1 - x2 + 1
    p2 = x1 * x1 - x2 - 1
    assert sign_at(p1, (rational(Fraction(3, 2)), rational(0))) == -1
    assert sign_at(p2, (rational(1), rational(0))) == 0


def test_sign_at_algebraic_points():
    x, y = variables(2)
    assert sign_at(x * x - 3, (SQRT3,)) == 0
    assert sign_at(x - Fraction(7, 4), (SQRT3,)) == -1
    # y = sqrt(3) above x = sqrt(3): x*y = 3
    assert sign_at(x * y - 3, (SQRT3, SQRT3)) == 0
    assert sign_at(x * y - 3 - Fraction(1, 10 ** 12), (SQRT3, SQRT3)) == -1


def test_sign_at_needs_bound_variables():
    x, y = variables(2)
    with pytest.raises(UsageError):
        sign_at(y, (rational(0),))


def test_specialize_roots_at_rational_sample():
    x1, x2 = variables(2)
    p1 = -x1 * x1 - x2 + 1
    found = specialize_roots(p1, (rational(Fraction(1, 4)),))
    assert not found.nullified
    assert list(found.roots) == [Fraction(15, 16)]


def test_specialize_roots_at_algebraic_sample():
    x, y = variables(2)
    found = specialize_roots(y * y - x, (SQRT3,))
    assert len(found.roots) == 2
    fourth_root = found.roots[1]
    assert sign_at(y * y - x, (SQRT3, fourth_root)) == 0
    assert fourth_root.compare(Fraction(131, 100)) > 0 and fourth_root.compare(Fraction(132, 100)) < 0


def test_specialize_roots_drops_vanishing_leading_coefficient():
    x, y = variables(2)
    found = specialize_roots((x - 1) * y * y + y - 2, (rational(1),))
    assert list(found.roots) == [2]


def test_specialize_roots_reports_nullification():
    x, y = variables(2)
    found = specialize_roots((x * x - 3) * y, (SQRT3,))
    assert found.nullified
    assert found.roots == ()


def random_poly(rng, nvars, degree, terms=4):
    mapping = {}
    for _ in range(terms):
        exps = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(nvars)] += 1
        mapping[tuple(exps)] = mapping.get(tuple(exps), 0) + rng.randint(-5, 5)
    return Polynomial(nvars, mapping)


def random_numbers(rng, count):
    """Rationals and isolated roots of random quadratics and cubics."""
    numbers = []
    while len(numbers) < count:
        if rng.random() < 0.3:
            numbers.append(rational(Fraction(rng.randint(-9, 9), rng.randint(1, 4))))
            continue
        degree = rng.randint(2, 3)
        coeffs = [rng.randint(-6, 6) for _ in range(degree)] + [rng.choice([-2, -1, 1, 2])]
        numbers.extend(isolate_dense(coeffs))
    return numbers[:count]


@pytest.mark.parametrize("seed", range(10))
def test_compare_is_a_total_order(seed):
    rng = random.Random(seed)
    numbers = random_numbers(rng, 12)
    for _ in range(100):
        a, b, c = (rng.choice(numbers) for _ in range(3))
        assert a.compare(a) == 0
        assert a.compare(b) == -b.compare(a)
        if a.compare(b) <= 0 and b.compare(c) <= 0:
            assert a.compare(c) <= 0
        if a.compare(b) == 0:
            assert b.compare(c) == a.compare(c)


@pytest.mark.parametrize("seed", range(10))
def test_sign_at_agrees_with_rational_evaluation(seed):
    rng = random.Random(seed)
    for _ in range(30):
        poly = random_poly(rng, 2, 4)
        point = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(2)]
        value = poly.evaluate(point)
        expected = (value > 0) - (value < 0)
        assert sign_at(poly, tuple(rational(v) for v in point)) == expected


@pytest.mark.parametrize("seed", range(10))
def test_specialize_roots_at_rationals_matches_isolation(seed):
    rng = random.Random(seed)
    for _ in range(20):
        poly = random_poly(rng, 2, 4, terms=5)
        if poly.degree(1) < 1:
            continue
        s = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        found = specialize_roots(poly, (rational(s),))
        line = poly.evaluate_partial([s])
        if line.is_zero():
            assert found.nullified
            continue
        expected = isolate_roots(line)
        assert not found.nullified
        assert len(found.roots) == len(expected)
        assert all(a.compare(b) == 0 for a, b in zip(found.roots, expected))


@pytest.mark.parametrize("seed", range(10))
def test_refinement_does_not_change_answers(seed):
    rng = random.Random(seed)
    numbers = random_numbers(rng, 8)
    x, y = variables(2)
    polys = [random_poly(rng, 2, 3) for _ in range(4)] + [x - y, x * x - y]
    pairs = [(a, b) for a in numbers for b in numbers]
    orders = [a.compare(b) for a, b in pairs]
    signs = [sign_at(p, (a, b)) for p in polys for a, b in pairs[:10]]
    for number in numbers:
        for _ in range(rng.randint(1, 6)):
            number.refine()
    assert [a.compare(b) for a, b in pairs] == orders
    assert [sign_at(p, (a, b)) for p in polys for a, b in pairs[:10]] == signs
