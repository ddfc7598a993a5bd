import unittest

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.exceptions import PolynomialError
from polynomial import (
    Poly,
    add,
    divide_linear,
    falling_factorial,
    falling_prefix,
    interpolate,
    mul,
    positive_integer_roots,
    scale,
    smallest_positive_support,
)

LAM = Poly.lam()
ONE = Poly.constant(1)


class TestPolyArithmetic(unittest.TestCase):
    def test_square_of_linear(self):
        # (lambda - 1)^2 = lambda^2 - 2 lambda + 1
        self.assertEqual(mul(Poly.linear(1), Poly.linear(1)).to_list(), [1, -2, 1])

    def test_add_zero_is_identity(self):
        p = Poly((3, 0, -2))
        self.assertEqual(add(p, Poly.zero()), p)

    def test_scale(self):
        self.assertEqual(scale(LAM + ONE, 3).to_list(), [3, 3])

    def test_trailing_zeros_are_stripped(self):
        self.assertEqual(Poly((1, 2, 0, 0)).coeffs, (1, 2))
        self.assertEqual(Poly((0, 0)).degree, -1)
        self.assertTrue((LAM - LAM).is_zero())

    def test_eval(self):
        # lambda (lambda - 1)^2 at 2 = 2 * 1
        self.assertEqual((LAM * Poly.linear(1) ** 2).eval(2), 2)
        self.assertEqual(Poly.zero().eval(7), 0)
        self.assertEqual(Poly((1, -2, 1))(1), 0)

    def test_big_coefficients_stay_exact(self):
        p = Poly.linear(-1) ** 60
        self.assertEqual(p.coefficient(30), 118264581564861424)
        self.assertEqual(p.eval(1), 2**60)

    def test_negative_power_rejected(self):
        with self.assertRaises(PolynomialError):
            LAM ** -1


class TestRendering(unittest.TestCase):
    def test_latex(self):
        # 4 lambda (lambda - 1)(lambda - 2)
        p = 4 * falling_factorial(2)
        self.assertEqual(p.to_latex(), "4\\lambda^{3} - 12\\lambda^{2} + 8\\lambda")

    def test_latex_signs_and_units(self):
        self.assertEqual(Poly((1, -1)).to_latex(), "-\\lambda + 1")
        self.assertEqual(Poly.zero().to_latex(), "0")
        self.assertEqual(Poly((-3,)).to_latex(), "-3")


class TestNumberExtraction(unittest.TestCase):
    def test_chromatic_number_of_triangle(self):
        self.assertEqual(smallest_positive_support(falling_factorial(2), 5), 3)

    def test_zero_polynomial_has_no_support(self):
        self.assertEqual(smallest_positive_support(Poly.zero(), 5), 0)

    def test_one_defect_polynomial_of_c4(self):
        # 4[(lambda-1)^3 - (lambda-1)] vanishes at 1 and 2, is 24 at 3
        shifted = Poly.linear(1)
        p = 4 * (shifted**3 - shifted)
        self.assertEqual(smallest_positive_support(p, 5), 3)

    def test_strictly_positive(self):
        # -(lambda - 1) is negative past 1 and zero at 1
        self.assertEqual(smallest_positive_support(-Poly.linear(1), 4), 0)

    def test_bound_must_be_positive(self):
        with self.assertRaises(PolynomialError):
            smallest_positive_support(LAM, 0)


class TestFallingPrefix(unittest.TestCase):
    def test_complete_factorization(self):
        prefix = falling_prefix(falling_factorial(2))
        self.assertEqual(prefix.r, 2)
        self.assertEqual(prefix.quotient, ONE)

    def test_repeated_root_leaves_root_in_quotient(self):
        prefix = falling_prefix(LAM * Poly.linear(1) ** 2)
        self.assertEqual(prefix.r, 1)
        self.assertEqual(prefix.quotient, Poly.linear(1))
        self.assertEqual(positive_integer_roots(prefix.quotient), [1])

    def test_power_of_lambda(self):
        prefix = falling_prefix(LAM**4)
        self.assertEqual((prefix.r, prefix.quotient), (0, LAM**3))

    def test_no_factor_of_lambda(self):
        self.assertEqual(falling_prefix(Poly((5, 1))).r, -1)

    def test_zero_rejected(self):
        with self.assertRaises(PolynomialError):
            falling_prefix(Poly.zero())
        with self.assertRaises(PolynomialError):
            positive_integer_roots(Poly.zero())


def test_divide_linear_remainder_is_value():
    p = Poly((7, -3, 0, 2))
    quotient, remainder = divide_linear(p, 3)
    assert remainder == p.eval(3)
    assert Poly.linear(3) * quotient + Poly.constant(remainder) == p


def test_interpolate_recovers_polynomial():
    p = Poly((0, 2, -3, 1))
    assert interpolate([p.eval(x) for x in range(4)]) == p


def test_interpolate_rejects_non_integral():
    # 0, 0, 1 at lambda = 0, 1, 2 is lambda(lambda - 1)/2
    with pytest.raises(PolynomialError):
        interpolate([0, 0, 1])


# ----------------------------------------------------------------------
# Properties
# ----------------------------------------------------------------------

small_polys = st.lists(st.integers(-20, 20), max_size=5).map(lambda c: Poly(tuple(c)))


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@given(small_polys, small_polys, st.integers(-6, 6))
def test_eval_is_ring_homomorphism(a, b, x):
    assert (a * b).eval(x) == a.eval(x) * b.eval(x)
    assert (a + b).eval(x) == a.eval(x) + b.eval(x)


@given(small_polys.filter(lambda p: not p.is_zero()))
def test_falling_prefix_round_trip(p):
    prefix = falling_prefix(p)
    assert prefix.product() == p
