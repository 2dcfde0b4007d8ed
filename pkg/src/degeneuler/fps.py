"""Truncated exponential generating functions over Q or Q(zeta_m).

A series of truncation order ``T`` holds ``a_0..a_T`` and denotes
``sum a_n t^n / n!``.  Products are binomial convolutions.  Coefficients in
Q(zeta_m) are kept internally as raw power-basis vectors so that the
kernels can work on plain lists.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from ._backend import kernels
from .exactnum import CyclotomicElement, _phi_list, totient


@lru_cache(maxsize=None)
def _binomial_rows(T: int) -> list[list[int]]:
    rows = [[1]]
    for n in range(1, T + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


def binomial_rows(T: int) -> list[list[int]]:
    """Pascal rows ``0..T``, cached per ``T``. Do not mutate."""
    return _binomial_rows(T)


def _ring_of(value) -> Optional[int]:
    if isinstance(value, CyclotomicElement):
        return value.order
    return None


def _join_rings(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return math.lcm(a, b)


class TruncatedEgfSeries:
    """``sum_{n<=T} a_n t^n/n!`` with exact coefficients.

    ``ring`` is ``None`` for rational coefficients, else the cyclotomic order m.
    """

    __slots__ = ("ring", "_raw")

    def __init__(self, coefficients: Sequence, ring: Optional[int] = None):
        coeffs = list(coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        for c in coeffs:
            ring = _join_rings(ring, _ring_of(c))
        self.ring = ring
        if ring is None:
            self._raw = [c if isinstance(c, int) else Fraction(c) for c in coeffs]
        else:
            raw = []
            for c in coeffs:
                if isinstance(c, CyclotomicElement):
                    raw.append(list(c.embed(ring).coefficients))
                else:
                    raw.append(list(CyclotomicElement.from_rational(c, ring).coefficients))
            self._raw = raw

    @classmethod
    def _wrap(cls, raw: list, ring: Optional[int]) -> TruncatedEgfSeries:
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._raw = raw
        return obj

    @property
    def truncation_order(self) -> int:
        return len(self._raw) - 1

    @property
    def coefficients(self) -> tuple:
        if self.ring is None:
            return tuple(self._raw)
        return tuple(CyclotomicElement._from_list(self.ring, v) for v in self._raw)

    def __getitem__(self, n: int):
        if self.ring is None:
            return self._raw[n]
        return CyclotomicElement._from_list(self.ring, self._raw[n])

    def __len__(self) -> int:
        return len(self._raw)

    def to_ring(self, ring: Optional[int]) -> TruncatedEgfSeries:
        """Re-express the coefficients over Q(zeta_ring) (a multiple of the current ring)."""
        if ring == self.ring:
            return self
        if ring is None:
            raise ValueError("cannot move cyclotomic coefficients down to Q")
        if self.ring is None:
            pad = [0] * (totient(ring) - 1)
            return TruncatedEgfSeries._wrap([[c] + pad for c in self._raw], ring)
        return TruncatedEgfSeries._wrap(
            [list(CyclotomicElement._from_list(self.ring, v).embed(ring).coefficients)
             for v in self._raw],
            ring,
        )

    def _align(self, other: TruncatedEgfSeries):
        if not isinstance(other, TruncatedEgfSeries):
            raise TypeError(f"expected a series, got {type(other).__name__}")
        if len(self) != len(other):
            raise ValueError(
                f"truncation order mismatch: {self.truncation_order} vs {other.truncation_order}"
            )
        ring = _join_rings(self.ring, other.ring)
        return self.to_ring(ring), other.to_ring(ring), ring

    def __add__(self, other):
        if not isinstance(other, TruncatedEgfSeries):
            return self + constant(other, self.truncation_order)
        a, b, ring = self._align(other)
        if ring is None:
            return TruncatedEgfSeries._wrap([x + y for x, y in zip(a._raw, b._raw)], None)
        return TruncatedEgfSeries._wrap(
            [[x + y for x, y in zip(u, v)] for u, v in zip(a._raw, b._raw)], ring
        )

    __radd__ = __add__

    def __neg__(self) -> TruncatedEgfSeries:
        if self.ring is None:
            return TruncatedEgfSeries._wrap([-x for x in self._raw], None)
        return TruncatedEgfSeries._wrap([[-x for x in v] for v in self._raw], self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> TruncatedEgfSeries:
        if isinstance(c, CyclotomicElement):
            return self * constant(c, self.truncation_order)
        if self.ring is None:
            return TruncatedEgfSeries._wrap([c * x for x in self._raw], None)
        return TruncatedEgfSeries._wrap([[c * x for x in v] for v in self._raw], self.ring)

    def __mul__(self, other):
        if not isinstance(other, TruncatedEgfSeries):
            return self.scale(other)
        if len(self) != len(other):
            raise ValueError(
                f"truncation order mismatch: {self.truncation_order} vs {other.truncation_order}"
            )
        binom = binomial_rows(self.truncation_order)
        if self.ring is None and other.ring is None:
            return TruncatedEgfSeries._wrap(kernels.egf_mul(self._raw, other._raw, binom), None)
        if other.ring is None:
            return TruncatedEgfSeries._wrap(
                kernels.egf_mul_vec_scalar(self._raw, other._raw, binom), self.ring
            )
        if self.ring is None:
            return TruncatedEgfSeries._wrap(
                kernels.egf_mul_vec_scalar(other._raw, self._raw, binom), other.ring
            )
        a, b, ring = self._align(other)
        return TruncatedEgfSeries._wrap(
            kernels.egf_mul_mod(a._raw, b._raw, binom, _phi_list(ring)), ring
        )

    def __rmul__(self, other):
        return self.scale(other)

    def inverse(self) -> TruncatedEgfSeries:
        binom = binomial_rows(self.truncation_order)
        if self.ring is None:
            a0 = self._raw[0]
            if a0 == 0:
                raise ZeroDivisionError("series with zero constant term is not invertible")
            return TruncatedEgfSeries._wrap(
                kernels.egf_inverse(self._raw, 1 / Fraction(a0), binom), None
            )
        inv0 = self[0].inverse()  # raises ZeroDivisionError for zero
        return TruncatedEgfSeries._wrap(
            kernels.egf_inverse_mod(self._raw, list(inv0.coefficients), binom, _phi_list(self.ring)),
            self.ring,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedEgfSeries):
            return NotImplemented
        if len(self) != len(other):
            return False
        return all(x == y for x, y in zip(self.coefficients, other.coefficients))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        ring = "Q" if self.ring is None else f"Q(zeta_{self.ring})"
        body = ", ".join(str(c) for c in self.coefficients)
        return f"TruncatedEgfSeries[{ring}, T={self.truncation_order}]({body})"


def constant(value, T: int) -> TruncatedEgfSeries:
    ring = _ring_of(value)
    if ring is None:
        return TruncatedEgfSeries([value] + [0] * T)
    return TruncatedEgfSeries([value] + [CyclotomicElement.from_rational(0, ring)] * T)


def one(T: int) -> TruncatedEgfSeries:
    return constant(1, T)


def series_add(s: TruncatedEgfSeries, u: TruncatedEgfSeries) -> TruncatedEgfSeries:
    s._align(u)
    return s + u


def series_neg(s: TruncatedEgfSeries) -> TruncatedEgfSeries:
    return -s


def series_scale(s: TruncatedEgfSeries, c) -> TruncatedEgfSeries:
    return s.scale(c)


def series_mul(s: TruncatedEgfSeries, u: TruncatedEgfSeries) -> TruncatedEgfSeries:
    s._align(u)
    return s * u


def series_inverse(s: TruncatedEgfSeries) -> TruncatedEgfSeries:
    return s.inverse()


def degenerate_exponential(lam, y, T: int) -> TruncatedEgfSeries:
    """EGF of ``(1 + lam t)^(y/lam)``: coefficients ``(y|lam)_n``; ``e^(yt)`` when ``lam == 0``."""
    if T < 0:
        raise ValueError(f"truncation order must be non-negative, got {T}")
    return TruncatedEgfSeries._wrap(kernels.falling_row(Fraction(y), Fraction(lam), T), None)


__all__ = [
    "TruncatedEgfSeries",
    "binomial_rows",
    "constant",
    "degenerate_exponential",
    "one",
    "series_add",
    "series_inverse",
    "series_mul",
    "series_neg",
    "series_scale",
]
