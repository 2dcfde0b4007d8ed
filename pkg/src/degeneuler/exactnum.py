"""Exact scalars: rationals, cyclotomic numbers and p-adic valuations.

Rationals are :class:`fractions.Fraction`.  Elements of Q(zeta_m) are dense
coefficient vectors in the power basis ``1, zeta, ..., zeta^(phi(m)-1)``,
reduced modulo the m-th cyclotomic polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from ._backend import kernels

Rational = Fraction
Scalar = Union[int, Fraction]

INFINITY = math.inf


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        if self.coefficients == (0,):
            return -1
        return len(self.coefficients) - 1

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _exact_divide(num: list[int], den: Sequence[int]) -> list[int]:
    """Quotient of ``num`` by the monic ``den``; raises if the remainder is nonzero."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(quot) - 1, -1, -1):
        q = num[k + dd]
        quot[k] = q
        if q:
            for j, c in enumerate(den):
                num[k + j] -= q * c
    if any(num[:dd]):
        raise ArithmeticError("polynomial division is not exact")
    return quot


def _divisors(m: int) -> list[int]:
    return [k for k in range(1, m + 1) if m % k == 0]


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    num = [-1] + [0] * (m - 1) + [1]
    for k in _divisors(m)[:-1]:
        num = _exact_divide(num, _cyclotomic_coeffs(k))
    return tuple(num)


def cyclotomic_polynomial(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, obtained by dividing ``x^m - 1`` by the lower ones."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    return IntPolynomial(_cyclotomic_coeffs(m))


@lru_cache(maxsize=None)
def _phi_list(m: int) -> list[int]:
    return list(_cyclotomic_coeffs(m))


def totient(m: int) -> int:
    return len(_cyclotomic_coeffs(m)) - 1


def _mobius(n: int) -> int:
    result, q = 1, 2
    while q * q <= n:
        if n % q == 0:
            n //= q
            if n % q == 0:
                return 0
            result = -result
        q += 1
    return -result if n > 1 else result


@lru_cache(maxsize=None)
def _normalized_traces(m: int) -> tuple[Fraction, ...]:
    # Tr(zeta_m^i) / phi(m) = mu(m/g) / phi(m/g) with g = gcd(i, m)
    out = []
    for i in range(totient(m)):
        r = m // math.gcd(i, m)
        out.append(Fraction(_mobius(r), totient(r)))
    return tuple(out)


class CyclotomicElement:
    """An exact element of Q(zeta_m).

    Arithmetic operators accept ints, Fractions and elements of any order;
    operands of different orders are embedded into Q(zeta_lcm) first.
    """

    __slots__ = ("order", "coefficients")

    def __init__(self, order: int, coefficients: Sequence[Scalar]):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        coeffs = tuple(coefficients)
        if len(coeffs) != totient(order):
            raise ValueError(
                f"Q(zeta_{order}) needs {totient(order)} coefficients, got {len(coeffs)}"
            )
        self.order = order
        self.coefficients = coeffs

    @classmethod
    def _from_list(cls, order: int, coeffs: list) -> CyclotomicElement:
        obj = cls.__new__(cls)
        obj.order = order
        obj.coefficients = tuple(coeffs)
        return obj

    @classmethod
    def from_rational(cls, value: Scalar, order: int = 1) -> CyclotomicElement:
        return cls._from_list(order, [value] + [0] * (totient(order) - 1))

    @classmethod
    def from_power_sums(cls, order: int, sums: Sequence[Scalar]) -> CyclotomicElement:
        """Build ``sum_k sums[k] * zeta^k`` for arbitrary-length ``sums``."""
        return cls._from_list(order, kernels.reduce_mod(sums, _phi_list(order)))

    def embed(self, order: int) -> CyclotomicElement:
        """Image of ``self`` in Q(zeta_order); ``order`` must be a multiple of ``self.order``."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        spread = [0] * ((len(self.coefficients) - 1) * step + 1)
        for i, c in enumerate(self.coefficients):
            spread[i * step] = c
        return CyclotomicElement.from_power_sums(order, spread)

    def _coerce(self, other) -> tuple[CyclotomicElement, CyclotomicElement] | None:
        if isinstance(other, CyclotomicElement):
            if other.order == self.order:
                return self, other
            m = math.lcm(self.order, other.order)
            return self.embed(m), other.embed(m)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicElement.from_rational(other, self.order)
        return None

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_rational(self) -> bool:
        return not any(self.coefficients[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.coefficients[0])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicElement._from_list(
            a.order, [x + y for x, y in zip(a.coefficients, b.coefficients)]
        )

    __radd__ = __add__

    def __neg__(self) -> CyclotomicElement:
        return CyclotomicElement._from_list(self.order, [-x for x in self.coefficients])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicElement._from_list(
            a.order, [x - y for x, y in zip(a.coefficients, b.coefficients)]
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement._from_list(
                self.order, [x * other for x in self.coefficients]
            )
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicElement._from_list(
            a.order,
            kernels.mulmod(list(a.coefficients), list(b.coefficients), _phi_list(a.order)),
        )

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicElement:
        return cyclo_inverse(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * cyclo_inverse(b)

    def __rtruediv__(self, other):
        return cyclo_inverse(self) * other

    def __pow__(self, k: int) -> CyclotomicElement:
        if k < 0:
            return cyclo_inverse(self) ** (-k)
        result = CyclotomicElement.from_rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coefficients == b.coefficients

    def __hash__(self) -> int:
        # the normalized trace is invariant under embedding, so equal values hash equal
        if self.is_rational():
            return hash(Fraction(self.coefficients[0]))
        traces = _normalized_traces(self.order)
        return hash(sum((c * t for c, t in zip(self.coefficients, traces)), Fraction(0)))

    def __repr__(self) -> str:
        coeffs = ", ".join(str(c) for c in self.coefficients)
        return f"CyclotomicElement({self.order}, [{coeffs}])"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = f"z{self.order}" + (f"^{k}" if k > 1 else "")
                terms.append(z if c == 1 else ("-" + z if c == -1 else f"{c}*{z}"))
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _require_same_order(a: CyclotomicElement, b: CyclotomicElement) -> None:
    if a.order != b.order:
        raise ValueError(
            f"order mismatch: {a.order} vs {b.order}; embed both into the lcm first"
        )


def cyclo_add(a: CyclotomicElement, b: CyclotomicElement) -> CyclotomicElement:
    _require_same_order(a, b)
    return a + b


def cyclo_mul(a: CyclotomicElement, b: CyclotomicElement) -> CyclotomicElement:
    _require_same_order(a, b)
    return a * b


def cyclo_neg(a: CyclotomicElement) -> CyclotomicElement:
    return -a


def cyclo_inverse(a: CyclotomicElement) -> CyclotomicElement:
    """Inverse in Q(zeta_m), found by solving the multiplication-by-``a`` linear system."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero cyclotomic element")
    m = a.order
    if a.is_rational():
        return CyclotomicElement.from_rational(1 / Fraction(a.coefficients[0]), m)
    deg = totient(m)
    phi = _phi_list(m)
    # column j is a * zeta^j
    cols = []
    for j in range(deg):
        unit = [0] * deg
        unit[j] = 1
        cols.append(kernels.mulmod(list(a.coefficients), unit, phi))
    rows = [[Fraction(cols[j][i]) for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
    for col in range(deg):
        pivot = next(r for r in range(col, deg) if rows[r][col])
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pv = rows[col][col]
        rows[col] = [v / pv for v in rows[col]]
        for r in range(deg):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return CyclotomicElement._from_list(m, [rows[i][deg] for i in range(deg)])


def root_of_unity(m: int, k: int = 1) -> CyclotomicElement:
    """``zeta_m ** (k mod m)`` in Q(zeta_m)."""
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    k %= m
    sums = [0] * (k + 1)
    sums[k] = 1
    return CyclotomicElement.from_power_sums(m, sums)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_adic_valuation(q, p: int):
    """Exponent of ``p`` in ``q``; ``math.inf`` for zero.

    For a cyclotomic element this is the minimum over its power-basis
    coefficients, which is its valuation at ``p`` whenever ``p`` does not
    divide the order (the power basis is then an integral basis at ``p``).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(q, CyclotomicElement):
        return min(p_adic_valuation(c, p) for c in q.coefficients)
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


__all__ = [
    "INFINITY",
    "CyclotomicElement",
    "IntPolynomial",
    "Rational",
    "cyclo_add",
    "cyclo_inverse",
    "cyclo_mul",
    "cyclo_neg",
    "cyclotomic_polynomial",
    "is_prime",
    "p_adic_valuation",
    "root_of_unity",
    "totient",
]
