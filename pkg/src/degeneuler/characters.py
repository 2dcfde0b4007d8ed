"""Dirichlet characters modulo an odd integer, with exact cyclotomic values."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Optional

from .exactnum import CyclotomicElement, root_of_unity


@dataclass(frozen=True)
class PrimePowerFactor:
    prime: int
    exponent: int
    generator: int
    group_order: int

    @property
    def modulus(self) -> int:
        return self.prime**self.exponent


@dataclass(frozen=True)
class UnitGroupStructure:
    """Cyclic decomposition of (Z/dZ)^* for odd d, one factor per prime power."""

    modulus: int
    factors: tuple[PrimePowerFactor, ...]
    crt_data: tuple[int, ...]  # e_i with e_i = 1 mod q_i^k_i and 0 mod the other factors

    def combine(self, residues) -> int:
        return sum(r * e for r, e in zip(residues, self.crt_data)) % self.modulus


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            k = 0
            while n % q == 0:
                n //= q
                k += 1
            out.append((q, k))
        q += 1
    if n > 1:
        out.append((n, 1))
    return out


def _multiplicative_order(g: int, n: int) -> int:
    k, x = 1, g % n
    while x != 1:
        x = x * g % n
        k += 1
    return k


@lru_cache(maxsize=None)
def unit_group(d: int) -> UnitGroupStructure:
    if d < 1 or d % 2 == 0:
        raise ValueError(f"modulus must be an odd positive integer, got {d}")
    factors = []
    for q, e in _factorize(d):
        qe = q**e
        order = qe - qe // q
        g = next(
            g for g in range(2, qe)
            if math.gcd(g, q) == 1 and _multiplicative_order(g, qe) == order
        )
        factors.append(PrimePowerFactor(q, e, g, order))
    crt = []
    for f in factors:
        rest = d // f.modulus
        crt.append(rest * pow(rest, -1, f.modulus) % d)
    return UnitGroupStructure(d, tuple(factors), tuple(crt))


@lru_cache(maxsize=None)
def _log_tables(d: int) -> tuple[dict[int, int], ...]:
    tables = []
    for f in unit_group(d).factors:
        table, x = {}, 1
        for k in range(f.group_order):
            table[x] = k
            x = x * f.generator % f.modulus
        tables.append(table)
    return tuple(tables)


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod ``modulus`` fixed by one exponent per cyclic factor.

    ``chi(g_i) = exp(2 pi i * exponents[i] / phi(q_i^e_i))`` on the generator
    of the i-th factor.  Values live in Q(zeta_order).
    """

    modulus: int
    exponents: tuple[int, ...]
    index: int = field(default=0, compare=False)

    def __post_init__(self):
        group = unit_group(self.modulus)
        if len(self.exponents) != len(group.factors):
            raise ValueError("one exponent per cyclic factor is required")
        for k, f in zip(self.exponents, group.factors):
            if not 0 <= k < f.group_order:
                raise ValueError(f"exponent {k} out of range for factor {f}")

    @cached_property
    def order(self) -> int:
        m = 1
        for k, f in zip(self.exponents, unit_group(self.modulus).factors):
            m = math.lcm(m, f.group_order // math.gcd(k, f.group_order))
        return m

    @cached_property
    def _exponent_table(self) -> tuple[Optional[int], ...]:
        d, m = self.modulus, self.order
        if d == 1:
            return (0,)
        factors = unit_group(d).factors
        weights = [k * m // f.group_order for k, f in zip(self.exponents, factors)]
        logs = _log_tables(d)
        table = []
        for n in range(d):
            if math.gcd(n, d) != 1:
                table.append(None)
                continue
            e = sum(w * logs[i][n % f.modulus] for i, (w, f) in enumerate(zip(weights, factors)))
            table.append(e % m)
        return tuple(table)

    def exponent_at(self, n: int) -> Optional[int]:
        """``e`` with ``chi(n) = zeta_order^e``, or ``None`` where chi vanishes."""
        return self._exponent_table[n % self.modulus]

    @cached_property
    def values(self) -> tuple[CyclotomicElement, ...]:
        zero = CyclotomicElement.from_rational(0, self.order)
        return tuple(
            zero if e is None else root_of_unity(self.order, e) for e in self._exponent_table
        )

    def __call__(self, n: int) -> CyclotomicElement:
        return self.values[n % self.modulus]

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __repr__(self) -> str:
        return f"DirichletCharacter(modulus={self.modulus}, exponents={self.exponents})"


@lru_cache(maxsize=None)
def _enumerate(d: int) -> tuple[DirichletCharacter, ...]:
    group = unit_group(d)
    ranges = [range(f.group_order) for f in group.factors]
    return tuple(
        DirichletCharacter(d, tuple(exps), index=i)
        for i, exps in enumerate(itertools.product(*ranges))
    )


def enumerate_characters(d: int) -> list[DirichletCharacter]:
    """All phi(d) characters mod ``d``, trivial first, in lexicographic exponent order."""
    return list(_enumerate(d))


def get_character(d: int, index: int) -> DirichletCharacter:
    chars = _enumerate(d)
    if not 0 <= index < len(chars):
        raise ValueError(f"character index {index} out of range for modulus {d} ({len(chars)} characters)")
    return chars[index]


def char_value(chi: DirichletCharacter, n: int) -> CyclotomicElement:
    return chi(n)


def conductor(chi: DirichletCharacter) -> int:
    d = chi.modulus
    units = [a for a in range(d) if math.gcd(a, d) == 1]
    for f in sorted(k for k in range(1, d + 1) if d % k == 0):
        seen: dict[int, Optional[int]] = {}
        if all(seen.setdefault(a % f, chi.exponent_at(a)) == chi.exponent_at(a) for a in units):
            return f
    return d


def is_primitive(chi: DirichletCharacter) -> bool:
    return conductor(chi) == chi.modulus


def char_order(chi: DirichletCharacter) -> int:
    return chi.order


def parity(chi: DirichletCharacter) -> int:
    """``chi(-1)`` as +1 or -1 (+1 for modulus 1)."""
    value = chi(chi.modulus - 1)
    if value.is_zero():
        return 0
    return int(value.to_rational())


__all__ = [
    "DirichletCharacter",
    "PrimePowerFactor",
    "UnitGroupStructure",
    "char_order",
    "char_value",
    "conductor",
    "enumerate_characters",
    "get_character",
    "is_primitive",
    "parity",
    "unit_group",
]
