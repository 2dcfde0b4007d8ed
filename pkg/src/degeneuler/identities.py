"""Exact verification of the symmetry identities for twisted degenerate Euler
polynomials.

Each checker evaluates two (or three) independently computed sides degree by
degree and records whether they agree exactly.  Identity ids:

``thm1``
    binomial-convolution symmetry with R-sum factors (R indexed by ``l - i``)
``thm2``
    character-sum symmetry in shifted arguments
``corollary_w2_1`` / ``corollary_x0``
    ``thm2`` specialised to ``w2 = 1`` (and additionally ``x = 0``), written out directly
``eq18``
    ``E_{k,lam,chi}(n d) + E_{k,lam,chi} = R_k(n d - 1, lam | chi)`` for odd ``n``
``i_series_consistency``
    three routes to the symmetric double-integral series
``dual_oracle``
    twisted fermionic integral vs generating-function values
``distribution``
    twisted polynomial vs a signed sum of untwisted ones at ``lam / d``
``padic_limit``
    finite alternating sums converge p-adically to the fermionic integral
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Sequence

from .characters import DirichletCharacter, get_character, enumerate_characters
from .degen import (
    QPolynomial,
    carlitz_poly_eval,
    falling_polynomial,
    fermionic_integral,
    finite_level_sum,
    generalized_poly_eval,
    generalized_poly_series,
    r_sums,
    signed_character_series,
    twisted_fermionic_integral,
)
from .exactnum import CyclotomicElement, p_adic_valuation
from .fps import TruncatedEgfSeries, binomial_rows, degenerate_exponential

IDENTITY_IDS = (
    "thm1",
    "thm2",
    "eq18",
    "corollary_w2_1",
    "corollary_x0",
    "dual_oracle",
    "distribution",
    "i_series_consistency",
    "padic_limit",
)

# recorded in every thm1 / consistency report
R_INDEX_NOTE = "R factor indexed by l-i (forced by the Cauchy product of the two EGFs)"


@dataclass(frozen=True)
class IdentityParams:
    identity: str
    d: int = 1
    chi: int = 0
    lam: Fraction = Fraction(0)
    w1: int = 1
    w2: int = 1
    x: Fraction = Fraction(0)
    L: int = 8
    n: int = 1
    p: int = 3
    N: int = 4
    f: tuple[int, ...] = (0, 1)

    def __post_init__(self):
        if self.identity not in IDENTITY_IDS:
            raise ValueError(f"unknown identity {self.identity!r}")
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "f", tuple(int(c) for c in self.f))
        for name in ("d", "w1", "w2"):
            v = getattr(self, name)
            if v < 1 or v % 2 == 0:
                raise ValueError(f"{name} must be an odd positive integer, got {v}")
        if self.identity == "eq18" and (self.n < 1 or self.n % 2 == 0):
            raise ValueError(f"n must be an odd positive integer, got {self.n}")
        if self.L < 0:
            raise ValueError(f"degree bound L must be non-negative, got {self.L}")
        if self.identity == "padic_limit":
            if self.N < 1:
                raise ValueError(f"level N must be at least 1, got {self.N}")
            if math.gcd(self.p, self.d) != 1:
                raise ValueError(f"p={self.p} must be coprime to d={self.d}")
        get_character(self.d, self.chi)

    @property
    def character(self) -> DirichletCharacter:
        return get_character(self.d, self.chi)

    def as_dict(self) -> dict:
        out = {"d": self.d, "chi": self.chi, "exponents": list(self.character.exponents)}
        for name in _RELEVANT[self.identity]:
            value = getattr(self, name)
            if isinstance(value, Fraction):
                value = str(value)
            elif isinstance(value, tuple):
                value = list(value)
            out[name] = value
        return out


_RELEVANT = {
    "thm1": ("lam", "w1", "w2", "x", "L"),
    "thm2": ("lam", "w1", "w2", "x", "L"),
    "i_series_consistency": ("lam", "w1", "w2", "x", "L"),
    "corollary_w2_1": ("lam", "w1", "x", "L"),
    "corollary_x0": ("lam", "w1", "L"),
    "eq18": ("lam", "n", "L"),
    "dual_oracle": ("lam", "x", "L"),
    "distribution": ("lam", "x", "L"),
    "padic_limit": ("p", "N", "f"),
}


@dataclass(frozen=True)
class DegreeRecord:
    n: int
    lhs: object
    rhs: object
    equal: bool
    routes: tuple = ()


@dataclass
class IdentityReport:
    params: IdentityParams
    rows: list[DegreeRecord]
    elapsed: float = 0.0
    notes: tuple[str, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return all(r.equal for r in self.rows)

    @property
    def first_failure(self) -> Optional[int]:
        return next((r.n for r in self.rows if not r.equal), None)


def _compare(params: IdentityParams, lhs: Callable, rhs: Callable, notes=()) -> IdentityReport:
    start = time.perf_counter()
    rows = []
    for n in range(params.L + 1):
        a, b = lhs(n), rhs(n)
        rows.append(DegreeRecord(n, a, b, a == b))
    return IdentityReport(params, rows, time.perf_counter() - start, tuple(notes))


# -- double-integral series ------------------------------------------------


def double_i_series(w1: int, w2: int, lam, x, chi: DirichletCharacter, T: int) -> TruncatedEgfSeries:
    """EGF of twice the symmetric double fermionic integral, from its closed form

    ``4 (e^{d w1 w2} + 1) e^{w1 w2 x} A(w1) A(w2) / ((e^{w1 d} + 1)(e^{w2 d} + 1))``

    with ``e^y = (1 + lam t)^(y/lam)`` and ``A(w) = sum_a (-1)^a chi(a) e^{w a}``.
    """
    if w1 % 2 == 0 or w2 % 2 == 0 or w1 < 1 or w2 < 1:
        raise ValueError(f"w1 and w2 must be odd positive integers, got {w1}, {w2}")
    lam, x = Fraction(lam), Fraction(x)
    d = chi.modulus
    e = lambda y: degenerate_exponential(lam, y, T)  # noqa: E731
    numer = (e(d * w1 * w2) + 1) * e(w1 * w2 * x) * 4
    denom = (e(w1 * d) + 1) * (e(w2 * d) + 1)
    chars = signed_character_series(chi, lam, T, w1) * signed_character_series(chi, lam, T, w2)
    return chars * (numer * denom.inverse())


def _cauchy_route(chi, lam, w1, w2, x, L) -> list[CyclotomicElement]:
    """``sum_i C(l,i) E_{i,lam/w2,chi}(w1 x) w2^i w1^(l-i) R_{l-i}(d w2 - 1, lam/w1 | chi)``."""
    d = chi.modulus
    polys = generalized_poly_series(chi, lam / w2, L, w1 * x)
    rs = r_sums(d * w2 - 1, lam / w1, chi, L)
    binom = binomial_rows(L)
    out = []
    for l in range(L + 1):
        s = CyclotomicElement.from_rational(0, chi.order)
        for i in range(l + 1):
            s = s + polys[i] * rs[l - i] * (binom[l][i] * w2**i * w1 ** (l - i))
        out.append(s)
    return out


def _shifted_sum_route(chi, lam, w1, w2, x, L) -> list[CyclotomicElement]:
    """``w2^n sum_{l<d w2} (-1)^l chi(l) E_{n,lam/w2,chi}(w1 x + w1 l / w2)`` for n <= L."""
    d = chi.modulus
    total = [CyclotomicElement.from_rational(0, chi.order)] * (L + 1)
    for l in range(d * w2):
        c = chi(l)
        if c.is_zero():
            continue
        if l % 2:
            c = -c
        polys = generalized_poly_series(chi, lam / w2, L, w1 * x + Fraction(w1 * l, w2))
        total = [t + c * polys[n] for n, t in enumerate(total)]
    return [t * w2**n for n, t in enumerate(total)]


# -- checkers ----------------------------------------------------------------


def check_thm1(params: IdentityParams) -> IdentityReport:
    chi, lam, x = params.character, params.lam, params.x
    w1, w2, L = params.w1, params.w2, params.L
    lhs = _cauchy_route(chi, lam, w2, w1, x, L)
    rhs = _cauchy_route(chi, lam, w1, w2, x, L)
    return _compare(params, lhs.__getitem__, rhs.__getitem__, notes=(R_INDEX_NOTE,))


def check_thm2(params: IdentityParams) -> IdentityReport:
    chi, lam, x = params.character, params.lam, params.x
    w1, w2, L = params.w1, params.w2, params.L
    lhs = _shifted_sum_route(chi, lam, w1, w2, x, L)
    rhs = _shifted_sum_route(chi, lam, w2, w1, x, L)
    return _compare(params, lhs.__getitem__, rhs.__getitem__)


def check_corollary_w2_1(params: IdentityParams) -> IdentityReport:
    """``sum_{l<d} (-1)^l chi(l) E_{n,lam,chi}(w1 x + w1 l)
    = w1^n sum_{l<d w1} (-1)^l chi(l) E_{n,lam/w1,chi}(x + l/w1)``."""
    chi, lam, x, w1 = params.character, params.lam, params.x, params.w1
    d = chi.modulus

    def lhs(n):
        return sum(
            (chi(l) * (-1) ** l * generalized_poly_eval(chi, lam, n, w1 * x + w1 * l) for l in range(d)),
            CyclotomicElement.from_rational(0, chi.order),
        )

    def rhs(n):
        s = sum(
            (chi(l) * (-1) ** l * generalized_poly_eval(chi, lam / w1, n, x + Fraction(l, w1))
             for l in range(d * w1)),
            CyclotomicElement.from_rational(0, chi.order),
        )
        return s * w1**n

    return _compare(params, lhs, rhs)


def check_corollary_x0(params: IdentityParams) -> IdentityReport:
    return check_corollary_w2_1(replace(params, x=Fraction(0)))


def check_eq18(params: IdentityParams) -> IdentityReport:
    chi, lam, n, L = params.character, params.lam, params.n, params.L
    nd = n * chi.modulus
    rs = r_sums(nd - 1, lam, chi, L)
    at_nd = generalized_poly_series(chi, lam, L, nd)
    at_0 = generalized_poly_series(chi, lam, L, 0)
    return _compare(params, lambda k: at_nd[k] + at_0[k], rs.__getitem__)


def check_consistency(params: IdentityParams) -> IdentityReport:
    """Closed-form series vs Cauchy-product route vs (doubled) shifted-sum route."""
    chi, lam, x = params.character, params.lam, params.x
    w1, w2, L = params.w1, params.w2, params.L
    start = time.perf_counter()
    closed = double_i_series(w1, w2, lam, x, chi, L)
    cauchy = _cauchy_route(chi, lam, w1, w2, x, L)
    # the shifted-sum expansion is the single (not doubled) integral
    shifted = [2 * v for v in _shifted_sum_route(chi, lam, w1, w2, x, L)]
    rows = []
    for n in range(L + 1):
        a, b, c = closed[n], cauchy[n], shifted[n]
        rows.append(DegreeRecord(n, a, b, a == b == c, routes=(a, b, c)))
    return IdentityReport(params, rows, time.perf_counter() - start, (R_INDEX_NOTE,))


def check_dual_oracle(params: IdentityParams) -> IdentityReport:
    chi, lam, x = params.character, params.lam, params.x
    return _compare(
        params,
        lambda n: twisted_fermionic_integral(falling_polynomial(x, lam, n), chi),
        lambda n: generalized_poly_eval(chi, lam, n, x),
    )


def check_distribution(params: IdentityParams) -> IdentityReport:
    """``E_{n,lam,chi}(x) = d^n sum_{a<d} (-1)^a chi(a) E_n((x+a)/d | lam/d)``."""
    chi, lam, x = params.character, params.lam, params.x
    d = chi.modulus

    def rhs(n):
        s = CyclotomicElement.from_rational(0, chi.order)
        for a in range(d):
            c = chi(a)
            if not c.is_zero():
                s = s + c * ((-1) ** a * carlitz_poly_eval(lam / d, n, (x + a) / d))
        return s * d**n

    return _compare(params, lambda n: generalized_poly_eval(chi, lam, n, x), rhs)


def check_padic_limit(params: IdentityParams) -> IdentityReport:
    """Rows are levels ``N = 1..params.N``: lhs is the valuation of
    ``S_N(f) - I(f)``, rhs is ``N``, and a row passes when lhs >= rhs."""
    start = time.perf_counter()
    f = QPolynomial.from_coefficients(params.f)
    chi = params.character
    if chi.modulus == 1:
        oracle, twist = fermionic_integral(f), None
    else:
        oracle, twist = twisted_fermionic_integral(f, chi), chi
    rows = []
    for level in range(1, params.N + 1):
        diff = finite_level_sum(f, params.p, level, twist) - oracle
        v = p_adic_valuation(diff, params.p)
        rows.append(DegreeRecord(level, v, level, v >= level))
    return IdentityReport(params, rows, time.perf_counter() - start)


CHECKERS: dict[str, Callable[[IdentityParams], IdentityReport]] = {
    "thm1": check_thm1,
    "thm2": check_thm2,
    "eq18": check_eq18,
    "corollary_w2_1": check_corollary_w2_1,
    "corollary_x0": check_corollary_x0,
    "dual_oracle": check_dual_oracle,
    "distribution": check_distribution,
    "i_series_consistency": check_consistency,
    "padic_limit": check_padic_limit,
}


def check(params: IdentityParams) -> IdentityReport:
    return CHECKERS[params.identity](params)


# -- sweeps ------------------------------------------------------------------


DEFAULT_GRID = {
    "d": [1, 3, 5],
    "chi": "all",
    "lam": [Fraction(0), Fraction(1, 2), Fraction(-2, 3), Fraction(3)],
    "w1": [1, 3, 5],
    "w2": [1, 3, 5],
    "x": [Fraction(0), Fraction(1), Fraction(1, 2)],
    "L": 8,
    "n": [1, 3, 5],
    "p": [3, 5],
    "N": 4,
    "f": [(1,), (0, 1), (0, 0, 1), (0, 2, 0, 1)],
}


@dataclass
class SweepConfig:
    identities: Sequence[str] = IDENTITY_IDS
    d: Sequence[int] = (1, 3, 5)
    chi: object = "all"
    lam: Sequence[Fraction] = tuple(DEFAULT_GRID["lam"])
    w1: Sequence[int] = (1, 3, 5)
    w2: Sequence[int] = (1, 3, 5)
    x: Sequence[Fraction] = tuple(DEFAULT_GRID["x"])
    L: int = 8
    n: Sequence[int] = (1, 3, 5)
    p: Sequence[int] = (3, 5)
    N: int = 4
    f: Sequence[tuple[int, ...]] = tuple(DEFAULT_GRID["f"])
    padic_twisted: bool = True

    def __post_init__(self):
        for ident in self.identities:
            if ident not in IDENTITY_IDS:
                raise ValueError(f"unknown identity {ident!r}")

    def characters(self, d: int) -> list[int]:
        count = len(enumerate_characters(d))
        if self.chi == "all":
            return list(range(count))
        return [c for c in self.chi if c < count]

    def expand(self) -> list[IdentityParams]:
        """All parameter tuples in deterministic grid order."""
        out = []
        for ident in self.identities:
            for d in self.d:
                for chi in self.characters(d):
                    out.extend(self._tuples(ident, d, chi))
        return out

    def _tuples(self, ident: str, d: int, chi: int):
        base = dict(identity=ident, d=d, chi=chi, L=self.L)
        if ident in ("thm1", "thm2", "i_series_consistency"):
            for lam, w1, w2, x in product(self.lam, self.w1, self.w2, self.x):
                yield IdentityParams(lam=lam, w1=w1, w2=w2, x=x, **base)
        elif ident == "corollary_w2_1":
            for lam, w1, x in product(self.lam, self.w1, self.x):
                yield IdentityParams(lam=lam, w1=w1, x=x, **base)
        elif ident == "corollary_x0":
            for lam, w1 in product(self.lam, self.w1):
                yield IdentityParams(lam=lam, w1=w1, **base)
        elif ident == "eq18":
            for lam, n in product(self.lam, self.n):
                yield IdentityParams(lam=lam, n=n, **base)
        elif ident in ("dual_oracle", "distribution"):
            for lam, x in product(self.lam, self.x):
                yield IdentityParams(lam=lam, x=x, **base)
        elif ident == "padic_limit":
            if d != 1 and not self.padic_twisted:
                return
            for p, f in product(self.p, self.f):
                if math.gcd(p, d) == 1:
                    yield IdentityParams(p=p, N=self.N, f=f, **base)


def _check_by_id(params: IdentityParams) -> IdentityReport:
    return CHECKERS[params.identity](params)


def sweep(config: SweepConfig, workers: int = 1) -> list[IdentityReport]:
    """Check every tuple of the grid; reports come back in grid order."""
    tuples = config.expand()
    if workers <= 1 or len(tuples) < 2:
        return [CHECKERS[p.identity](p) for p in tuples]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_check_by_id, tuples, chunksize=max(1, len(tuples) // (4 * workers))))


__all__ = [
    "CHECKERS",
    "DEFAULT_GRID",
    "IDENTITY_IDS",
    "DegreeRecord",
    "IdentityParams",
    "IdentityReport",
    "SweepConfig",
    "check",
    "check_consistency",
    "check_corollary_w2_1",
    "check_corollary_x0",
    "check_distribution",
    "check_dual_oracle",
    "check_eq18",
    "check_padic_limit",
    "check_thm1",
    "check_thm2",
    "double_i_series",
    "sweep",
]
