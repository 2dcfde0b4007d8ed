import cmath
import math

import pytest

from degeneuler.characters import (
    char_order,
    char_value,
    conductor,
    enumerate_characters,
    get_character,
    is_primitive,
    parity,
    unit_group,
)
from degeneuler.exactnum import CyclotomicElement, root_of_unity

ODD_MODULI = [1, 3, 5, 7, 9, 11, 13, 15]


def euler_phi(d):
    return sum(1 for a in range(1, d + 1) if math.gcd(a, d) == 1)


def to_complex(a: CyclotomicElement) -> complex:
    z = cmath.exp(2j * math.pi / a.order)
    return sum(complex(float(c)) * z**k for k, c in enumerate(a.coefficients))


def brute_character_value(chi, n):
    """exp(2 pi i sum_i k_i log_i(n) / phi_i) with logs found by exhaustive search."""
    d = chi.modulus
    if d == 1:
        return 1
    if math.gcd(n, d) != 1:
        return 0
    angle = 0.0
    for k, f in zip(chi.exponents, unit_group(d).factors):
        log = next(j for j in range(f.group_order) if pow(f.generator, j, f.modulus) == n % f.modulus)
        angle += k * log / f.group_order
    return cmath.exp(2j * math.pi * angle)


class TestUnitGroup:
    def test_trivial(self):
        assert unit_group(1).factors == ()

    def test_three(self):
        (f,) = unit_group(3).factors
        assert (f.prime, f.exponent, f.generator, f.group_order) == (3, 1, 2, 2)

    def test_nine(self):
        (f,) = unit_group(9).factors
        assert (f.prime, f.exponent, f.generator, f.group_order) == (3, 2, 2, 6)

    @pytest.mark.parametrize("d", [15, 45, 105, 225])
    def test_structure(self, d):
        group = unit_group(d)
        assert math.prod(f.modulus for f in group.factors) == d
        for f, e in zip(group.factors, group.crt_data):
            seen = {pow(f.generator, k, f.modulus) for k in range(f.group_order)}
            assert len(seen) == f.group_order
            assert e % f.modulus == 1
            assert all(e % g.modulus == 0 for g in group.factors if g is not f)

    @pytest.mark.parametrize("d", [0, -3, 2, 12])
    def test_rejects(self, d):
        with pytest.raises(ValueError):
            unit_group(d)


class TestEnumeration:
    def test_modulus_one(self):
        (chi,) = enumerate_characters(1)
        assert chi(0) == 1 and chi(5) == 1

    def test_modulus_three(self):
        trivial, chi = enumerate_characters(3)
        assert trivial.is_trivial()
        assert chi(1) == 1 and chi(2) == -1

    def test_modulus_nine(self):
        chars = enumerate_characters(9)
        assert len(chars) == 6
        for chi in chars:
            assert 6 % chi.order == 0
            assert all((v * 1) == v.embed(6) for v in chi.values)
        assert char_value(chars[1], 2) == root_of_unity(6, 1)

    @pytest.mark.parametrize("d", ODD_MODULI)
    def test_count_and_distinct(self, d):
        chars = enumerate_characters(d)
        assert len(chars) == euler_phi(d)
        assert chars[0].is_trivial()
        common = math.lcm(*(c.order for c in chars))
        tables = {tuple(v.embed(common).coefficients for v in c.values) for c in chars}
        assert len(tables) == len(chars)

    @pytest.mark.parametrize("d", ODD_MODULI)
    def test_values_match_brute_force(self, d):
        for chi in enumerate_characters(d):
            for n in range(d):
                assert abs(to_complex(chi(n)) - brute_character_value(chi, n)) < 1e-9

    @pytest.mark.parametrize("d", ODD_MODULI)
    def test_multiplicativity(self, d):
        for chi in enumerate_characters(d):
            assert chi(1) == 1
            for a in range(d):
                for b in range(d):
                    assert chi(a * b % d) == chi(a) * chi(b)

    @pytest.mark.parametrize("d", ODD_MODULI)
    def test_orthogonality_and_zeros(self, d):
        for chi in enumerate_characters(d):
            total = sum(chi.values, CyclotomicElement.from_rational(0, chi.order))
            assert total == (0 if not chi.is_trivial() else euler_phi(d))
            for n in range(-d, 2 * d):
                assert chi(n).is_zero() == (d > 1 and math.gcd(n, d) > 1)
                assert chi(n + d) == chi(n)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            get_character(3, 2)


class TestValueExamples:
    def test_periodic_argument(self):
        assert char_value(get_character(3, 1), 5) == -1

    def test_zero_argument(self):
        for d in (3, 5, 9):
            for chi in enumerate_characters(d):
                assert char_value(chi, 0) == 0


class TestConductorOrderParity:
    def test_mod_three(self):
        trivial, chi = enumerate_characters(3)
        assert conductor(trivial) == 1
        assert conductor(chi) == 3
        assert (char_order(trivial), parity(trivial)) == (1, 1)
        assert (char_order(chi), parity(chi)) == (2, -1)

    def test_induced_from_three(self):
        chi = enumerate_characters(9)[3]
        assert chi.exponents == (3,)
        assert conductor(chi) == 3
        assert not is_primitive(chi)

    def test_order_six(self):
        assert char_order(enumerate_characters(9)[1]) == 6

    @pytest.mark.parametrize("d", ODD_MODULI)
    def test_conductor_divides(self, d):
        for chi in enumerate_characters(d):
            assert d % conductor(chi) == 0
            assert parity(chi) in (1, -1)
        assert is_primitive(enumerate_characters(d)[0]) == (d == 1)

    def test_mod_fifteen_conductors(self):
        conds = sorted(conductor(chi) for chi in enumerate_characters(15))
        # 1 trivial, 1 of conductor 3, 3 of conductor 5, 3 primitive
        assert conds == [1, 3, 5, 5, 5, 15, 15, 15]
