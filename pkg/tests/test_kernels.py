from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degeneuler import _kernels_py
from degeneuler._backend import BACKEND, COMPILED
from degeneuler.exactnum import _phi_list, totient
from degeneuler.fps import binomial_rows

try:
    from degeneuler import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def naive_egf(a, b):
    return [sum(comb(n, i) * a[i] * b[n - i] for i in range(n + 1)) for n in range(len(a))]


def naive_mod(c, phi):
    # long division by the monic phi, one leading term at a time
    c = [Fraction(v) for v in c]
    deg = len(phi) - 1
    while len(c) > deg:
        lead = c.pop()
        for j in range(deg):
            c[len(c) - deg + j] -= lead * phi[j]
    return c + [0] * (deg - len(c))


def test_backend_flag_matches_import():
    assert BACKEND == ("cython" if COMPILED else "python")


@given(st.lists(fractions, min_size=1, max_size=8), st.data())
def test_egf_mul_matches_naive(kernel_module, a, data):
    b = data.draw(st.lists(fractions, min_size=len(a), max_size=len(a)))
    assert kernel_module.egf_mul(a, b, binomial_rows(len(a) - 1)) == naive_egf(a, b)


@given(st.integers(1, 12), st.data())
def test_mulmod_matches_naive(kernel_module, m, data):
    deg = totient(m)
    a = data.draw(st.lists(fractions, min_size=deg, max_size=deg))
    b = data.draw(st.lists(fractions, min_size=deg, max_size=deg))
    prod = [0] * (2 * deg - 1)
    for i in range(deg):
        for j in range(deg):
            prod[i + j] += a[i] * b[j]
    assert kernel_module.mulmod(a, b, _phi_list(m)) == naive_mod(prod, _phi_list(m))


@given(fractions, fractions, st.integers(0, 8))
def test_falling_row(kernel_module, y, lam, n):
    expected = [Fraction(1)]
    for k in range(n):
        expected.append(expected[-1] * (y - k * lam))
    assert kernel_module.falling_row(y, lam, n) == expected


@given(st.integers(0, 7), st.data())
def test_inverse_round_trip(kernel_module, T, data):
    a = [Fraction(data.draw(st.integers(1, 5)))] + data.draw(
        st.lists(fractions, min_size=T, max_size=T)
    )
    binom = binomial_rows(T)
    b = kernel_module.egf_inverse(a, 1 / a[0], binom)
    assert kernel_module.egf_mul(a, b, binom) == [1] + [0] * T


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")
@settings(max_examples=50)
@given(st.sampled_from([3, 4, 5, 7, 8, 12]), st.integers(0, 6), st.data())
def test_backends_agree_on_vector_kernels(m, T, data):
    deg = totient(m)
    vec = st.lists(fractions, min_size=deg, max_size=deg)
    A = data.draw(st.lists(vec, min_size=T + 1, max_size=T + 1))
    B = data.draw(st.lists(vec, min_size=T + 1, max_size=T + 1))
    b = data.draw(st.lists(fractions, min_size=T + 1, max_size=T + 1))
    binom, phi = binomial_rows(T), _phi_list(m)
    assert _kernels_c.egf_mul_mod(A, B, binom, phi) == _kernels_py.egf_mul_mod(A, B, binom, phi)
    assert _kernels_c.egf_mul_vec_scalar(A, b, binom) == _kernels_py.egf_mul_vec_scalar(A, b, binom)
    A[0] = [Fraction(1)] + [Fraction(0)] * (deg - 1)
    inv0 = A[0]
    assert _kernels_c.egf_inverse_mod(A, inv0, binom, phi) == _kernels_py.egf_inverse_mod(
        A, inv0, binom, phi
    )


def test_reduce_mod_pads_short_input(kernel_module):
    assert kernel_module.reduce_mod([Fraction(3)], _phi_list(5)) == [3, 0, 0, 0]
