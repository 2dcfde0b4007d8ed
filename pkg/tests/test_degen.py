from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degeneuler.characters import enumerate_characters, get_character
from degeneuler.degen import (
    QPolynomial,
    carlitz_numbers,
    carlitz_poly_eval,
    falling,
    falling_polynomial,
    fermionic_integral,
    finite_level_sum,
    generalized_numbers,
    generalized_poly_eval,
    r_sum,
    twisted_fermionic_integral,
)
from degeneuler.exactnum import p_adic_valuation
from degeneuler.fps import TruncatedEgfSeries, degenerate_exponential

sympy = pytest.importorskip("sympy")

SWEEP_D = (1, 3, 5)
SWEEP_LAMBDA = (Fraction(0), Fraction(1, 2), Fraction(-2, 3))
SWEEP_X = (Fraction(0), Fraction(1), Fraction(1, 2))


def euler_recurrence(n_max):
    """I(x^n) from 2 I(x^n) = 2[n=0] - sum_{k<n} C(n,k) I(x^k)."""
    out = []
    for n in range(n_max + 1):
        out.append((Fraction(2 * (n == 0)) - sum(comb(n, k) * out[k] for k in range(n))) / 2)
    return out


def classical_euler_poly(n, x):
    t = sympy.symbols("t")
    value = sympy.euler(n, t).subs(t, sympy.Rational(x.numerator, x.denominator))
    return Fraction(int(value.p), int(value.q))


class TestFalling:
    def test_empty_product(self):
        assert falling(Fraction(7, 3), Fraction(1, 5), 0) == 1

    def test_lambda_zero(self):
        assert falling(5, 0, 3) == 125

    def test_fraction(self):
        assert falling(Fraction(1, 2), Fraction(1, 3), 2) == Fraction(1, 12)

    def test_negative_length(self):
        with pytest.raises(ValueError):
            falling(1, 1, -1)

    def test_polynomial_form(self):
        x, lam = Fraction(2, 3), Fraction(-1, 4)
        poly = falling_polynomial(x, lam, 4)
        for y in (0, 1, Fraction(5, 2)):
            assert poly(y) == falling(x + y, lam, 4)


class TestCarlitz:
    def test_constant(self):
        for lam in SWEEP_LAMBDA:
            assert carlitz_numbers(lam, 0).values == (1,)

    def test_classical_numbers(self):
        expected = euler_recurrence(8)
        assert expected == [1, Fraction(-1, 2), 0, Fraction(1, 4), 0, Fraction(-1, 2), 0, Fraction(17, 8), 0]
        assert list(carlitz_numbers(0, 8).values) == expected

    def test_lambda_one_first_order(self):
        # 2/(2+t) = 1 - t/2 + ...
        assert carlitz_numbers(1, 1).values == (1, Fraction(-1, 2))

    def test_poly_degree_one(self):
        for lam in SWEEP_LAMBDA:
            for x in SWEEP_X:
                assert carlitz_poly_eval(lam, 1, x) == x - Fraction(1, 2)
        assert carlitz_poly_eval(Fraction(3), 0, Fraction(9)) == 1

    def test_classical_polynomial(self):
        assert carlitz_poly_eval(0, 2, Fraction(1)) == 0
        for n in range(9):
            for x in SWEEP_X + (Fraction(-3, 7),):
                assert carlitz_poly_eval(0, n, x) == classical_euler_poly(n, x)

    @pytest.mark.parametrize("n", range(9))
    @pytest.mark.parametrize("x", [Fraction(0), Fraction(1), Fraction(1, 2)])
    def test_small_lambda_limit(self, n, x):
        # E_n(x|lam) is a polynomial in lam of degree <= n; recover it exactly
        # by Lagrange interpolation, then bound the distance to the limit.
        nodes = [Fraction(k + 1) for k in range(n + 1)]
        values = [carlitz_poly_eval(lam, n, x) for lam in nodes]
        coeffs = _interpolate(nodes, values)
        limit = classical_euler_poly(n, x)
        assert coeffs[0] == limit
        bound = sum(abs(c) for c in coeffs[1:])
        for j in range(1, 5):
            lam = Fraction(1, 10**j)
            value = carlitz_poly_eval(lam, n, x)
            assert value == sum(c * lam**k for k, c in enumerate(coeffs))
            assert abs(value - limit) <= bound * lam

    def test_fermionic_consistency(self):
        for lam in SWEEP_LAMBDA:
            for x in SWEEP_X:
                for n in range(9):
                    f = falling_polynomial(x, lam, n)
                    assert fermionic_integral(f) == carlitz_poly_eval(lam, n, x)


def _interpolate(nodes, values):
    """Coefficients (lowest first) of the polynomial through the points."""
    size = len(nodes)
    coeffs = [Fraction(0)] * size
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(size):
            coeffs[k] += yi * basis[k] / denom
    return coeffs


class TestGeneralized:
    def test_modulus_one_is_carlitz(self):
        chi = get_character(1, 0)
        for lam in SWEEP_LAMBDA:
            assert list(generalized_numbers(chi, lam, 8).values) == list(carlitz_numbers(lam, 8).values)
            for x in SWEEP_X:
                assert generalized_poly_eval(chi, lam, 5, x) == carlitz_poly_eval(lam, 5, x)

    def test_constant_term(self):
        chi = get_character(3, 1)
        assert generalized_numbers(chi, Fraction(1, 2), 0).values == (-2,)

    def test_x_zero_gives_numbers(self):
        chi = get_character(5, 1)
        nums = generalized_numbers(chi, Fraction(1, 2), 6).values
        assert [generalized_poly_eval(chi, Fraction(1, 2), n, 0) for n in range(7)] == list(nums)

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_lambda_zero_classical(self, d):
        # E_{n,chi} = d^n sum_a (-1)^a chi(a) E_n(a/d) for the classical polynomials
        for chi in enumerate_characters(d):
            nums = generalized_numbers(chi, 0, 6).values
            for n in range(7):
                expected = sum(
                    (chi(a) * ((-1) ** a * classical_euler_poly(n, Fraction(a, d))) for a in range(d)),
                    0 * chi(1),
                ) * d**n
                assert nums[n] == expected

    def test_dual_oracle_point(self):
        chi = get_character(3, 1)
        lam, x = Fraction(1, 2), Fraction(1, 3)
        f = falling_polynomial(x, lam, 2)
        assert twisted_fermionic_integral(f, chi) == generalized_poly_eval(chi, lam, 2, x)

    def test_series_definition(self):
        # numerator/denominator built directly from the character table
        chi, lam, T = get_character(5, 1), Fraction(-2, 3), 6
        numer = TruncatedEgfSeries([0] * (T + 1))
        for a in range(5):
            numer = numer + degenerate_exponential(lam, a, T) * ((-1) ** a * 2) * chi(a)
        series = numer * (degenerate_exponential(lam, 5, T) + 1).inverse()
        assert generalized_numbers(chi, lam, T).values == series.coefficients

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            generalized_poly_eval(get_character(3, 1), 0, -1, 0)
        with pytest.raises(ValueError):
            generalized_numbers(get_character(3, 1), 0, -1)


@pytest.mark.parametrize("d", SWEEP_D)
def test_dual_oracle_sweep(d):
    for chi in enumerate_characters(d):
        for lam in SWEEP_LAMBDA:
            for x in SWEEP_X:
                for n in range(9):
                    f = falling_polynomial(x, lam, n)
                    assert twisted_fermionic_integral(f, chi) == generalized_poly_eval(chi, lam, n, x)


@pytest.mark.parametrize("d", SWEEP_D)
def test_distribution_sweep(d):
    for chi in enumerate_characters(d):
        for lam in SWEEP_LAMBDA:
            for x in SWEEP_X:
                for n in range(9):
                    rhs = sum(
                        (chi(a) * ((-1) ** a * carlitz_poly_eval(lam / d, n, (x + a) / d)) for a in range(d)),
                        0 * chi(1),
                    ) * d**n
                    assert generalized_poly_eval(chi, lam, n, x) == rhs


@pytest.mark.parametrize("d", SWEEP_D)
def test_shift_by_nd_sweep(d):
    for chi in enumerate_characters(d):
        for lam in SWEEP_LAMBDA:
            for n in (1, 3, 5):
                for k in range(9):
                    lhs = generalized_poly_eval(chi, lam, k, n * d) + generalized_poly_eval(chi, lam, k, 0)
                    assert lhs == r_sum(k, n * d - 1, lam, chi)


class TestRSum:
    def test_single_term(self):
        assert r_sum(0, 0, Fraction(5), get_character(1, 0)) == 2

    def test_order_zero(self):
        assert r_sum(0, 2, Fraction(7), get_character(3, 1)) == -4

    def test_order_one(self):
        for lam in SWEEP_LAMBDA:
            assert r_sum(1, 2, lam, get_character(3, 1)) == -6

    def test_negative(self):
        with pytest.raises(ValueError):
            r_sum(-1, 2, 0, get_character(3, 1))


class TestFermionic:
    def test_monomials(self):
        assert fermionic_integral(QPolynomial((1,))) == 1
        assert fermionic_integral(QPolynomial.monomial(1)) == Fraction(-1, 2)
        assert fermionic_integral(QPolynomial.monomial(2)) == 0

    def test_shift_relation(self):
        f = QPolynomial.from_coefficients([3, Fraction(-1, 2), 0, 4, 1])
        assert fermionic_integral(f.shift(1)) + fermionic_integral(f) == 2 * f(0)

    def test_twisted_reduces(self):
        chi = get_character(1, 0)
        f = QPolynomial.from_coefficients([1, 2, 3, 4])
        assert twisted_fermionic_integral(f, chi) == fermionic_integral(f)

    def test_twisted_constant(self):
        assert twisted_fermionic_integral(QPolynomial((1,)), get_character(3, 1)) == -2

    @pytest.mark.parametrize("d", [3, 5, 9])
    def test_twisted_shift_relation(self, d):
        f = QPolynomial.from_coefficients([1, -2, Fraction(1, 3), 5])
        for chi in enumerate_characters(d):
            rhs = sum((chi(l) * ((-1) ** l * 2 * f(l)) for l in range(d)), 0 * chi(1))
            assert twisted_fermionic_integral(f.shift(d), chi) + twisted_fermionic_integral(f, chi) == rhs


class TestFiniteLevel:
    def test_constant(self):
        assert finite_level_sum(QPolynomial((1,)), 3, 1) == 1

    def test_identity_function(self):
        f = QPolynomial.monomial(1)
        # 0 - 1 + 2 - ... + 8 and 0 - 1 + ... + 80
        assert finite_level_sum(f, 3, 2) == 4
        assert finite_level_sum(f, 3, 4) == 40 == (3**4 - 1) // 2
        assert p_adic_valuation(finite_level_sum(f, 3, 4) - fermionic_integral(f), 3) == 4

    def test_errors(self):
        f = QPolynomial((1,))
        with pytest.raises(ValueError):
            finite_level_sum(f, 2, 1)
        with pytest.raises(ValueError):
            finite_level_sum(f, 9, 1)
        with pytest.raises(ValueError):
            finite_level_sum(f, 3, 0)
        with pytest.raises(ValueError):
            finite_level_sum(f, 3, 1, get_character(3, 1))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=7), st.sampled_from([3, 5]), st.integers(1, 4))
    def test_convergence(self, coeffs, p, N):
        f = QPolynomial.from_coefficients(coeffs)
        assert p_adic_valuation(finite_level_sum(f, p, N) - fermionic_integral(f), p) >= N

    @pytest.mark.parametrize("d,p", [(3, 5), (5, 3), (7, 3)])
    def test_twisted_convergence(self, d, p):
        f = QPolynomial.from_coefficients([1, 0, 2, 1])
        for chi in enumerate_characters(d):
            for N in (1, 2, 3):
                diff = finite_level_sum(f, p, N, chi) - twisted_fermionic_integral(f, chi)
                assert p_adic_valuation(diff, p) >= N
