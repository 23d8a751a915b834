from fractions import Fraction

import pytest

from hurwitz.polynomials import MultiPolynomial, interpolate_on_grid


def test_constant_recovery():
    samples = {(i,): Fraction(7) for i in range(1, 4)}
    poly = interpolate_on_grid(samples, 2)
    assert poly.terms == {(0,): Fraction(7)}
    assert poly.total_degree() == 0


def test_linear_recovery():
    samples = {(nu,): 2 * nu + 3 for nu in (1, 2)}
    poly = interpolate_on_grid(samples, 1)
    assert poly.evaluate((5,)) == 13
    assert poly.total_degree() == 1
    assert poly.terms == {(1,): Fraction(2), (0,): Fraction(3)}


def test_bivariate_recovery():
    def f(x, y):
        return Fraction(3) * x * x - 2 * x * y + y - 7

    samples = {(x, y): f(Fraction(x), Fraction(y))
               for x in (0, 1, 2) for y in (0, 1, 2)}
    poly = interpolate_on_grid(samples, 2)
    for x in range(-2, 5):
        for y in range(-2, 5):
            assert poly.evaluate((x, y)) == f(Fraction(x), Fraction(y))
    assert poly.total_degree() == 2


def test_zero_polynomial_degree():
    samples = {(x, y): Fraction(0) for x in (1, 2) for y in (1, 2)}
    poly = interpolate_on_grid(samples, 1)
    assert poly.is_zero()
    assert poly.total_degree() == -1


def test_grid_validation():
    with pytest.raises(ValueError):
        interpolate_on_grid({(1, 1): Fraction(0), (2, 2): Fraction(1)}, 1)
    with pytest.raises(ValueError):
        interpolate_on_grid({(1,): Fraction(0)}, 1)  # too few nodes


def test_polynomial_arithmetic_and_json():
    p = MultiPolynomial(("x", "y"), {(1, 0): Fraction(2), (0, 1): Fraction(1)})
    q = p * p
    assert q.evaluate((1, 1)) == 9
    assert q.total_degree() == 2
    assert p.to_json() == {"0,1": "1", "1,0": "2"}
