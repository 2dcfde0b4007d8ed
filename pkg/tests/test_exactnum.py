import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from degeneuler.exactnum import (
    INFINITY,
    CyclotomicElement,
    IntPolynomial,
    cyclo_add,
    cyclo_inverse,
    cyclo_mul,
    cyclo_neg,
    cyclotomic_polynomial,
    p_adic_valuation,
    root_of_unity,
    totient,
)

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=9)
nonzero_fractions = fractions.filter(bool)


def elements(m):
    return st.lists(fractions, min_size=totient(m), max_size=totient(m)).map(
        lambda c: CyclotomicElement(m, c)
    )


def to_complex(a: CyclotomicElement) -> complex:
    z = cmath.exp(2j * math.pi / a.order)
    return sum(complex(float(c)) * z**k for k, c in enumerate(a.coefficients))


def numeric_cyclotomic(m):
    """Integer coefficients of prod (x - e^(2 pi i k/m)) over k coprime to m."""
    coeffs = [1 + 0j]
    for k in range(1, m + 1):
        if math.gcd(k, m) == 1:
            root = cmath.exp(2j * math.pi * k / m)
            coeffs = [0j] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= root * coeffs[i + 1]
    return tuple(round(c.real) for c in coeffs)


class TestCyclotomicPolynomial:
    def test_first(self):
        assert cyclotomic_polynomial(1).coefficients == (-1, 1)

    def test_three(self):
        assert cyclotomic_polynomial(3).coefficients == (1, 1, 1)

    def test_six(self):
        assert cyclotomic_polynomial(6).coefficients == (1, -1, 1)

    @pytest.mark.parametrize("m", range(1, 31))
    def test_matches_product_over_primitive_roots(self, m):
        phi = cyclotomic_polynomial(m)
        assert phi.coefficients == numeric_cyclotomic(m)
        assert phi.degree == sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)
        assert phi.coefficients[-1] == 1

    @pytest.mark.parametrize("m", range(1, 13))
    def test_vanishes_at_zeta(self, m):
        assert cyclotomic_polynomial(m)(root_of_unity(m, 1)).is_zero()

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            cyclotomic_polynomial(0)

    def test_str(self):
        assert str(cyclotomic_polynomial(1)) == "x - 1"
        assert str(IntPolynomial((1, 0, 1))) == "x^2 + 1"


class TestArithmetic:
    def test_zeta3_cubed(self):
        z = root_of_unity(3, 1)
        assert z * z * z == 1

    def test_zeta6_squared(self):
        z = root_of_unity(6, 1)
        assert z * z == z - 1

    def test_additive_inverse(self):
        a = CyclotomicElement(5, [1, Fraction(2, 3), 0, -4])
        assert (a + (-a)).is_zero()
        assert cyclo_add(a, cyclo_neg(a)).is_zero()

    def test_roots_of_unity(self):
        assert root_of_unity(1, 5) == 1
        assert root_of_unity(2, 1) == -1
        assert root_of_unity(4, 2) == -1
        assert root_of_unity(7, -1) == root_of_unity(7, 6)

    def test_inverse_examples(self):
        one = CyclotomicElement.from_rational(1, 5)
        assert cyclo_inverse(one) == 1
        for m in (3, 4, 5, 12):
            assert cyclo_inverse(root_of_unity(m, 1)) == root_of_unity(m, m - 1)
        assert cyclo_inverse(CyclotomicElement.from_rational(2, 7)) == Fraction(1, 2)

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            cyclo_inverse(CyclotomicElement.from_rational(0, 5))

    def test_order_mismatch_requires_embedding(self):
        a, b = root_of_unity(3), root_of_unity(4)
        with pytest.raises(ValueError):
            cyclo_mul(a, b)
        with pytest.raises(ValueError):
            cyclo_add(a, b)
        # operators promote to the lcm
        assert (a * b).order == 12
        assert a * b == root_of_unity(12, 4 + 3)

    def test_embedding_preserves_value(self):
        z3 = root_of_unity(3)
        assert z3.embed(6) == root_of_unity(6, 2)
        assert z3 == z3.embed(12)
        assert hash(z3) == hash(z3.embed(12))
        with pytest.raises(ValueError):
            z3.embed(4)

    def test_rational_interop(self):
        half = CyclotomicElement.from_rational(Fraction(1, 2), 5)
        assert half == Fraction(1, 2)
        assert hash(half) == hash(Fraction(1, 2))
        assert half.to_rational() == Fraction(1, 2)
        with pytest.raises(ValueError):
            root_of_unity(5).to_rational()
        assert 1 - half == half
        assert 3 / CyclotomicElement.from_rational(2, 3) == Fraction(3, 2)
        assert root_of_unity(5) ** -1 == root_of_unity(5, 4)

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            CyclotomicElement(5, [1, 2])


@settings(max_examples=60)
@given(st.integers(1, 12), st.data())
def test_ring_axioms(m, data):
    a, b, c = (data.draw(elements(m)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-6 * (
        1 + abs(to_complex(a)) * abs(to_complex(b))
    )


@settings(max_examples=60)
@given(st.integers(1, 12), st.data())
def test_inverse_property(m, data):
    a = data.draw(elements(m))
    assume(not a.is_zero())
    assert a * cyclo_inverse(a) == 1


@pytest.mark.parametrize("m", range(1, 13))
def test_zeta_order(m):
    assert root_of_unity(m, 1) ** m == 1


class TestValuation:
    def test_examples(self):
        assert p_adic_valuation(Fraction(9, 2), 3) == 2
        assert p_adic_valuation(Fraction(1, 3), 3) == -1
        assert p_adic_valuation(0, 5) == INFINITY
        assert p_adic_valuation(0, 5) > 10**9

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            p_adic_valuation(Fraction(1, 2), 9)

    def test_cyclotomic(self):
        a = CyclotomicElement(4, [9, Fraction(27, 2)])
        assert p_adic_valuation(a, 3) == 2

    @given(nonzero_fractions, nonzero_fractions, st.sampled_from([3, 5, 7]))
    def test_additive(self, a, b, p):
        assert p_adic_valuation(a * b, p) == p_adic_valuation(a, p) + p_adic_valuation(b, p)
