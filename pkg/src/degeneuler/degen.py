"""Degenerate Euler numbers and polynomials, their character twists, R-sums,
and the fermionic-integral oracles used to cross-check them.

Notation: ``(y|lam)_n = y (y - lam) ... (y - (n-1) lam)`` and
``e_lam^y(t) = (1 + lam t)^(y/lam) = sum_n (y|lam)_n t^n/n!``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from ._backend import kernels
from .characters import DirichletCharacter
from .exactnum import CyclotomicElement, is_prime
from .fps import TruncatedEgfSeries, binomial_rows, degenerate_exponential


@dataclass(frozen=True)
class DegenEulerNumbers:
    lam: Fraction
    n_max: int
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class GenDegenEulerNumbers:
    chi: DirichletCharacter
    lam: Fraction
    n_max: int
    values: tuple[CyclotomicElement, ...]


@dataclass(frozen=True)
class QPolynomial:
    """Dense polynomial in one variable, lowest degree first.

    Coefficients may be ints, Fractions or cyclotomic elements.
    """

    coefficients: tuple = (0,)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence) -> QPolynomial:
        coeffs = list(coeffs) or [0]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, n: int, c=1) -> QPolynomial:
        return cls.from_coefficients([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: QPolynomial) -> QPolynomial:
        a, b = list(self.coefficients), list(other.coefficients)
        size = max(len(a), len(b))
        a += [0] * (size - len(a))
        b += [0] * (size - len(b))
        return QPolynomial.from_coefficients([x + y for x, y in zip(a, b)])

    def __mul__(self, other) -> QPolynomial:
        if not isinstance(other, QPolynomial):
            return QPolynomial.from_coefficients([c * other for c in self.coefficients])
        prod = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                prod[i + j] = prod[i + j] + a * b
        return QPolynomial.from_coefficients(prod)

    __rmul__ = __mul__

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    def shift(self, c) -> QPolynomial:
        """The polynomial ``y -> self(y + c)``."""
        out = QPolynomial()
        step = QPolynomial.from_coefficients([c, 1])
        for a in reversed(self.coefficients):
            out = out * step + QPolynomial((a,))
        return out


def falling(y, lam, n: int):
    """``(y|lam)_n``; equals ``y**n`` when ``lam == 0`` and 1 when ``n == 0``."""
    if n < 0:
        raise ValueError(f"falling factorial length must be non-negative, got {n}")
    acc = 1
    for k in range(n):
        acc = acc * (y - k * lam)
    return acc


def falling_polynomial(x, lam, n: int) -> QPolynomial:
    """``(x + y|lam)_n`` as a polynomial in ``y``."""
    poly = QPolynomial((1,))
    for k in range(n):
        poly = poly * QPolynomial.from_coefficients([x - k * lam, 1])
    return poly


# -- generating-function engine ---------------------------------------------


def signed_character_series(chi: DirichletCharacter, lam, T: int, stretch: int = 1) -> TruncatedEgfSeries:
    """``sum_{a<d} (-1)^a chi(a) e_lam^(stretch*a)(t)`` truncated at ``T``."""
    m = chi.order
    buckets = [[0] * (T + 1) for _ in range(m)]
    lam = Fraction(lam)
    for a in range(chi.modulus):
        e = chi.exponent_at(a)
        if e is None:
            continue
        row = kernels.falling_row(Fraction(stretch * a), lam, T)
        bucket = buckets[e]
        if a % 2:
            for n in range(T + 1):
                bucket[n] -= row[n]
        else:
            for n in range(T + 1):
                bucket[n] += row[n]
    coeffs = [CyclotomicElement.from_power_sums(m, [b[n] for b in buckets]) for n in range(T + 1)]
    return TruncatedEgfSeries(coeffs, ring=m)


@lru_cache(maxsize=4096)
def _carlitz(lam: Fraction, n_max: int) -> tuple[Fraction, ...]:
    denom = degenerate_exponential(lam, 1, n_max) + 1
    return tuple(Fraction(c) for c in (denom.inverse() * 2).coefficients)


def carlitz_numbers(lam, n_max: int) -> DegenEulerNumbers:
    """Coefficients of ``2 / (e_lam^1(t) + 1)`` up to ``n_max``."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    lam = Fraction(lam)
    return DegenEulerNumbers(lam, n_max, _carlitz(lam, n_max))


def carlitz_poly_eval(lam, n: int, x) -> Fraction:
    """Degenerate Euler polynomial at ``x``: ``sum_k C(n,k) E_k(lam) (x|lam)_(n-k)``."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    lam = Fraction(lam)
    nums = _carlitz(lam, n)
    fall = kernels.falling_row(Fraction(x), lam, n)
    row = binomial_rows(n)[n]
    return sum((row[k] * nums[k] * fall[n - k] for k in range(n + 1)), Fraction(0))


@lru_cache(maxsize=4096)
def _generalized(chi: DirichletCharacter, lam: Fraction, n_max: int) -> TruncatedEgfSeries:
    numerator = signed_character_series(chi, lam, n_max) * 2
    denominator = degenerate_exponential(lam, chi.modulus, n_max) + 1
    return numerator * denominator.inverse()


def generalized_numbers(chi: DirichletCharacter, lam, n_max: int) -> GenDegenEulerNumbers:
    """Twisted degenerate Euler numbers: coefficients of
    ``2 sum_a (-1)^a chi(a) e_lam^a / (e_lam^d + 1)`` over Q(zeta_ord(chi))."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    lam = Fraction(lam)
    return GenDegenEulerNumbers(chi, lam, n_max, _generalized(chi, lam, n_max).coefficients)


def generalized_poly_series(chi: DirichletCharacter, lam, n_max: int, x) -> TruncatedEgfSeries:
    """EGF whose n-th coefficient is the twisted degenerate Euler polynomial at ``x``."""
    lam = Fraction(lam)
    return _generalized(chi, lam, n_max) * degenerate_exponential(lam, x, n_max)


def generalized_poly_eval(chi: DirichletCharacter, lam, n: int, x) -> CyclotomicElement:
    """``sum_k C(n,k) E_{k,lam,chi} (x|lam)_(n-k)``."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    lam = Fraction(lam)
    nums = _generalized(chi, lam, n)
    fall = kernels.falling_row(Fraction(x), lam, n)
    row = binomial_rows(n)[n]
    width = len(nums._raw[0])
    acc = [0] * width
    for k in range(n + 1):
        c = row[k] * fall[n - k]
        if c:
            for p, v in enumerate(nums._raw[k]):
                if v:
                    acc[p] += c * v
    return CyclotomicElement._from_list(chi.order, acc)


def _signed_char_buckets(chi: DirichletCharacter, upto: int, term) -> CyclotomicElement:
    """``sum_{l=0}^{upto} (-1)^l chi(l) term(l)`` for rational-valued ``term``."""
    m = chi.order
    buckets = [0] * m
    for l in range(upto + 1):
        e = chi.exponent_at(l)
        if e is None:
            continue
        v = term(l)
        buckets[e] += -v if l % 2 else v
    return CyclotomicElement.from_power_sums(m, buckets)


def r_sum(k: int, n: int, lam, chi: DirichletCharacter) -> CyclotomicElement:
    """``2 sum_{l=0}^{n} (-1)^l chi(l) (l|lam)_k``."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be non-negative")
    lam = Fraction(lam)
    return _signed_char_buckets(chi, n, lambda l: falling(Fraction(l), lam, k)) * 2


@lru_cache(maxsize=4096)
def r_sums(n: int, lam: Fraction, chi: DirichletCharacter, k_max: int) -> tuple[CyclotomicElement, ...]:
    """``(r_sum(0, n, lam, chi), ..., r_sum(k_max, n, lam, chi))``."""
    m = chi.order
    buckets = [[0] * (k_max + 1) for _ in range(m)]
    for l in range(n + 1):
        e = chi.exponent_at(l)
        if e is None:
            continue
        row = kernels.falling_row(Fraction(l), Fraction(lam), k_max)
        sign = -2 if l % 2 else 2
        for k in range(k_max + 1):
            buckets[e][k] += sign * row[k]
    return tuple(
        CyclotomicElement.from_power_sums(m, [b[k] for b in buckets]) for k in range(k_max + 1)
    )


# -- fermionic-integral oracles ----------------------------------------------


@lru_cache(maxsize=None)
def _fermionic_moments(n_max: int) -> tuple[Fraction, ...]:
    # I(f(.+1)) + I(f) = 2 f(0) on f = x^n:  2 I(x^n) = 2[n=0] - sum_{k<n} C(n,k) I(x^k)
    binom = binomial_rows(n_max)
    moments: list[Fraction] = []
    for n in range(n_max + 1):
        s = Fraction(2 if n == 0 else 0)
        for k in range(n):
            s -= binom[n][k] * moments[k]
        moments.append(s / 2)
    return tuple(moments)


def fermionic_integral(f: QPolynomial):
    """The linear functional with ``I(f(.+1)) + I(f) = 2 f(0)``, applied to ``f``."""
    moments = _fermionic_moments(f.degree)
    return sum((c * moments[k] for k, c in enumerate(f.coefficients)), Fraction(0))


@lru_cache(maxsize=1024)
def _twisted_moments(chi: DirichletCharacter, n_max: int) -> tuple[CyclotomicElement, ...]:
    # J(f(.+d)) + J(f) = 2 sum_{l<d} (-1)^l chi(l) f(l) on f = x^n
    d = chi.modulus
    binom = binomial_rows(n_max)
    moments: list[CyclotomicElement] = []
    for n in range(n_max + 1):
        s = _signed_char_buckets(chi, d - 1, lambda l: Fraction(l) ** n) * 2
        for k in range(n):
            s = s - moments[k] * (binom[n][k] * d ** (n - k))
        moments.append(s * Fraction(1, 2))
    return tuple(moments)


def twisted_fermionic_integral(f: QPolynomial, chi: DirichletCharacter) -> CyclotomicElement:
    """The linear functional with ``J(f(.+d)) + J(f) = 2 sum_{l<d} (-1)^l chi(l) f(l)``."""
    moments = _twisted_moments(chi, f.degree)
    acc = CyclotomicElement.from_rational(0, chi.order)
    for k, c in enumerate(f.coefficients):
        if c:
            acc = acc + moments[k] * c
    return acc


def finite_level_sum(f: QPolynomial, p: int, N: int, chi: Optional[DirichletCharacter] = None):
    """``sum_{x=0}^{d p^N - 1} chi(x) f(x) (-1)^x``; untwisted (d = 1) when ``chi`` is None."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if N < 1:
        raise ValueError(f"level N must be at least 1, got {N}")
    if chi is None:
        total = 0
        for x in range(p**N):
            v = f(x)
            total += -v if x % 2 else v
        return total if isinstance(total, Fraction) else Fraction(total)
    if math.gcd(p, chi.modulus) != 1:
        raise ValueError(f"p={p} must be coprime to the modulus {chi.modulus}")
    return _signed_char_buckets(chi, chi.modulus * p**N - 1, f)


__all__ = [
    "DegenEulerNumbers",
    "GenDegenEulerNumbers",
    "QPolynomial",
    "carlitz_numbers",
    "carlitz_poly_eval",
    "falling",
    "falling_polynomial",
    "fermionic_integral",
    "finite_level_sum",
    "generalized_numbers",
    "generalized_poly_eval",
    "generalized_poly_series",
    "r_sum",
    "r_sums",
    "signed_character_series",
    "twisted_fermionic_integral",
]
