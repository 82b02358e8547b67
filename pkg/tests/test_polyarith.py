import random
from fractions import Fraction

import pytest
import sympy

from src.calc.polyarith import (
    Polynomial,
    arith,
    canonical,
    discriminant,
    gcd,
    gcd_univariate,
    normalize,
    pseudo_remainder,
    resultant,
    squarefree_factors,
    sylvester_matrix,
)
from src.common.errors import UsageError


def variables(n):
    return [Polynomial.variable(n, i) for i in range(n)]


def to_sympy(poly, symbols):
    expr = sympy.Integer(0)
    for exps, coeff in poly:
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for symbol, power in zip(symbols, exps):
            term *= symbol ** power
        expr += term
    return expr


def random_poly(rng, nvars, degree, terms=4):
    mapping = {}
    for _ in range(terms):
        exps = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(nvars)] += 1
        mapping[tuple(exps)] = mapping.get(tuple(exps), 0) + rng.randint(-5, 5)
    return Polynomial(nvars, mapping)


def test_ring_operations():
    x, y = variables(2)
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x * x - y * y).divide_exact(x - y) == x + y
    assert (x - x).is_zero()
    assert 3 - x == -(x - 3)


def test_divide_exact_rejects_remainder():
    x, y = variables(2)
    with pytest.raises(UsageError):
        (x * x + 1).divide_exact(x - y)


def test_degrees_and_main_variable():
    x, y, z = variables(3)
    p = x * y ** 2 + 3
    assert p.degree(1) == 2
    assert p.degree(2) == 0
    assert p.main_variable() == 1
    assert p.total_degree() == 3
    assert Polynomial.constant(3, 5).main_variable() is None
    assert Polynomial.zero(3).degree(0) == -1


def test_coefficients_highest_first():
    x, y, z = variables(3)
    p3 = z * z + (y - Fraction(5, 2)) ** 2 + x * x - 16
    coeffs = p3.coefficients(2)
    assert coeffs[0] == Polynomial.constant(3, 1)
    assert coeffs[1].is_zero()
    assert coeffs[2] == (y - Fraction(5, 2)) ** 2 + x * x - 16


def test_partial_evaluation_keeps_variable_count():
    x1, x2 = variables(2)
    p1 = -x1 * x1 - x2 + 1
    assert p1.evaluate_partial([Fraction(1, 4)]) == Fraction(15, 16) - x2
    p2 = x1 * x1 - x2 - 1
    assert p2.evaluate_partial([0]) == -x2 - 1
    assert p1.evaluate([Fraction(3, 2), 0]) == Fraction(-5, 4)


def test_difference_of_parabolas():
    x1, x2 = variables(2)
    p1 = -x1 * x1 - x2 + 1
    p2 = x1 * x1 - x2 - 1
    assert p2 - p1 == 2 * x1 * x1 - 2


def test_printing_with_names():
    x, y = variables(2)
    assert (x * x - 2 * y + Fraction(1, 2)).to_string(["x", "y"]) == "x^2 - 2*y + 1/2"
    assert str(Polynomial.zero(2)) == "0"


def test_resultant_of_spheres_is_a_square():
    x, y, z = variables(3)
    p2 = z * z + y * y + x * x - 3
    p3 = z * z + (y - Fraction(5, 2)) ** 2 + x * x - 16
    raw = resultant(p2, p3, 2)
    assert raw == 25 * (y + Fraction(27, 20)) ** 2
    assert normalize(raw) == {20 * y + 27}


def test_resultant_of_parabolas():
    x1, x2 = variables(2)
    p1 = -x1 * x1 - x2 + 1
    p2 = x1 * x1 - x2 - 1
    assert normalize(resultant(p1, p2, 1)) == {x1 * x1 - 1}


def test_resultant_vanishes_on_common_factor():
    x, y = variables(2)
    common = x - y
    assert resultant(common * (x + 1), common * (y + 2), 1).is_zero()


def test_resultant_needs_positive_degree():
    x, y = variables(2)
    with pytest.raises(UsageError):
        resultant(x + 1, y, 1)


def test_discriminants_of_sphere_polynomials():
    x, y, z = variables(3)
    p2 = z * z + y * y + x * x - 3
    p3 = z * z + (y - Fraction(5, 2)) ** 2 + x * x - 16
    assert discriminant(p2, 2) == -4 * (y * y + x * x - 3)
    assert normalize(discriminant(p2, 2)) == {y * y + x * x - 3}
    assert normalize(discriminant(p3, 2)) == {canonical(y * y - 5 * y + x * x - Fraction(39, 4))}


def test_discriminant_needs_degree_two():
    x, _y, z = variables(3)
    with pytest.raises(UsageError):
        discriminant(z + x, 2)
    with pytest.raises(UsageError):
        discriminant(x - 1, 0)


def test_pseudo_remainder_identity():
    x, y = variables(2)
    a = x * y ** 3 + y + 1
    b = x * y + 2
    r = pseudo_remainder(a, b, 1)
    assert r.degree(1) < b.degree(1)
    quotient = (b.leading_coefficient(1) ** 3 * a - r).divide_exact(b)
    assert quotient * b + r == b.leading_coefficient(1) ** 3 * a


@pytest.mark.parametrize("seed", range(20))
def test_resultant_matches_sylvester_determinant(seed):
    rng = random.Random(seed)
    symbols = sympy.symbols("a b")
    checked = 0
    while checked < 10:
        p = random_poly(rng, 2, 3)
        q = random_poly(rng, 2, 3)
        if p.degree(1) < 1 or q.degree(1) < 1:
            continue
        matrix = sympy.Matrix([[to_sympy(entry, symbols) for entry in row] for row in sylvester_matrix(p, q, 1)])
        expected = matrix.det(method="bareiss")
        assert sympy.expand(expected - to_sympy(resultant(p, q, 1), symbols)) == 0
        checked += 1


def test_gcd_multivariate():
    x, y = variables(2)
    common = x - y
    assert gcd(common * (x + 1), common * (x + 2)) == canonical(common)
    assert gcd(x + 1, y).is_constant()
    assert gcd(Polynomial.zero(2), 2 * x) == x


def test_gcd_univariate_is_monic():
    (x,) = variables(1)
    assert gcd_univariate(2 * (x - 1) * (x + 3), 4 * (x - 1) * (x - 5)) == x - 1


def test_squarefree_factors():
    x, y = variables(2)
    p = (y - x) ** 2 * (y + 1)
    factors = squarefree_factors(p, 1)
    assert set(factors) == {canonical(y + 1), canonical(y - x)}


def test_normalize_strips_scaling_and_multiplicity():
    x, y = variables(2)
    assert normalize(-4 * (y * y + x * x - 3)) == {y * y + x * x - 3}
    assert normalize(Fraction(1, 3) * (x - 1) ** 3 * (y + 2)) == {x - 1, y + 2}
    assert normalize(Polynomial.constant(2, 7)) == frozenset()
    with pytest.raises(UsageError):
        normalize(Polynomial.zero(2))


def test_normalize_splits_content():
    x, y = variables(2)
    found = normalize((x * x - 1) * (y - 2))
    assert found == {x * x - 1, y - 2}


def test_derivative():
    x1, x2 = variables(2)
    assert (x2 * x2 - 3).derivative(1) == 2 * x2
    assert Polynomial.constant(2, 7).derivative(0).is_zero()
    assert (x1 * x2 ** 2).derivative(1) == 2 * x1 * x2


def test_arith_by_name_and_mismatched_rings():
    x1, x2 = variables(2)
    assert arith(x1 + 1, x1 - 1, "*") == x1 * x1 - 1
    assert arith(x1, Polynomial.zero(2), "+") == x1
    with pytest.raises(UsageError):
        arith(x1, Polynomial.variable(3, 0), "+")
    with pytest.raises(UsageError):
        arith(x1, x2, "/")


def random_univariate(rng, degree):
    (x,) = variables(1)
    poly = Polynomial.zero(1)
    for power in range(degree + 1):
        poly = poly + rng.randint(-5, 5) * x ** power
    return poly


@pytest.mark.parametrize("seed", range(10))
def test_ring_laws_on_random_triples(seed):
    rng = random.Random(seed)
    for _ in range(100):
        p, q, r = (random_poly(rng, 3, 4) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p
        assert (p - q) + q == p


@pytest.mark.parametrize("seed", range(10))
def test_partial_evaluation_is_multiplicative(seed):
    rng = random.Random(seed)
    for _ in range(20):
        p, q = random_poly(rng, 3, 3), random_poly(rng, 3, 3)
        prefix = [Fraction(rng.randint(-7, 7), rng.randint(1, 4)) for _ in range(rng.randint(1, 3))]
        assert (p * q).evaluate_partial(prefix) == p.evaluate_partial(prefix) * q.evaluate_partial(prefix)
        assert (p + q).evaluate_partial(prefix) == p.evaluate_partial(prefix) + q.evaluate_partial(prefix)


@pytest.mark.parametrize("seed", range(10))
def test_resultant_vanishes_exactly_on_common_roots(seed):
    rng = random.Random(seed)
    (x,) = variables(1)
    for _ in range(10):
        p = random_univariate(rng, rng.randint(1, 3))
        q = random_univariate(rng, rng.randint(1, 3))
        if rng.random() < 0.5:
            shared = x - rng.randint(-3, 3)
            p, q = p * shared, q * shared
        if p.degree(0) < 1 or q.degree(0) < 1:
            continue
        common = gcd_univariate(p, q)
        assert resultant(p, q, 0).is_zero() == (common.degree(0) > 0)


@pytest.mark.parametrize("seed", range(10))
def test_discriminant_vanishes_exactly_on_repeated_roots(seed):
    rng = random.Random(seed)
    (x,) = variables(1)
    for _ in range(10):
        p = random_univariate(rng, rng.randint(1, 3))
        if rng.random() < 0.5:
            p = p * (x - rng.randint(-3, 3)) ** 2
        if p.degree(0) < 2:
            continue
        repeated = gcd_univariate(p, p.derivative(0)).degree(0) > 0
        assert discriminant(p, 0).is_zero() == repeated


@pytest.mark.parametrize("seed", range(10))
def test_normalize_is_idempotent(seed):
    rng = random.Random(seed)
    for _ in range(10):
        p = random_poly(rng, 3, 3) * random_poly(rng, 3, 2)
        if rng.random() < 0.5:
            p = p * random_poly(rng, 3, 2) ** 2
        if p.is_zero():
            continue
        for factor in normalize(p):
            assert normalize(factor) == {factor}
