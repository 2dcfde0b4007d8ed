"""Pure-Python hot kernels.

Every routine takes plain lists of exact scalars (``int`` or ``Fraction``)
and returns lists of ``int``/``Fraction``.  Polynomials and cyclotomic
coefficient vectors are lowest degree first; ``phi`` is always a monic
integer polynomial.  Inner loops run on integers over a common denominator
and normalize once per output entry.  The compiled ``_kernels`` module
exposes the same functions with the same results.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _scale(values):
    """``(ints, den)`` with ``values[i] == ints[i] / den``."""
    den = 1
    for v in values:
        if type(v) is not int:
            den = lcm(den, v.denominator)
    if den == 1:
        return [int(v) for v in values], 1
    return [v.numerator * (den // v.denominator) for v in values], den


def _scale_rows(rows):
    den = 1
    for row in rows:
        for v in row:
            if type(v) is not int:
                den = lcm(den, v.denominator)
    return [[v.numerator * (den // v.denominator) for v in row] for row in rows], den


def _unscale(ints, den):
    if den == 1:
        return ints
    return [Fraction(v, den) for v in ints]


def _reduce_ints(c, phi):
    deg = len(phi) - 1
    for top in range(len(c) - 1, deg - 1, -1):
        lead = c[top]
        if lead:
            shift = top - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    c[shift + j] -= lead * pj
    if len(c) < deg:
        c.extend([0] * (deg - len(c)))
    else:
        del c[deg:]
    return c


def reduce_mod(c, phi):
    """Remainder of ``c`` modulo the monic polynomial ``phi``, padded to ``deg(phi)``."""
    ints, den = _scale(c)
    return _unscale(_reduce_ints(ints, phi), den)


def _mul_ints(a, b):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    return prod


def mulmod(a, b, phi):
    ia, da = _scale(a)
    ib, db = _scale(b)
    return _unscale(_reduce_ints(_mul_ints(ia, ib), phi), da * db)


def falling_row(y, lam, n):
    """``[(y|lam)_0, ..., (y|lam)_n]`` where ``(y|lam)_k = y (y - lam) ... (y - (k-1) lam)``."""
    (iy, il), den = _scale([y, lam])
    row = [1]
    acc, dk = 1, 1
    for k in range(n):
        acc *= iy - k * il
        dk *= den
        row.append(acc if dk == 1 else Fraction(acc, dk))
    return row


def egf_mul(a, b, binom):
    """Binomial convolution of two scalar coefficient lists of equal length."""
    ia, da = _scale(a)
    ib, db = _scale(b)
    out = []
    for n in range(len(ia)):
        row = binom[n]
        s = 0
        for i in range(n + 1):
            ai = ia[i]
            if ai:
                bj = ib[n - i]
                if bj:
                    s += row[i] * ai * bj
        out.append(s)
    return _unscale(out, da * db)


def egf_mul_vec_scalar(A, b, binom):
    """Binomial convolution of a vector-valued list ``A`` with a scalar list ``b``."""
    iA, dA = _scale_rows(A)
    ib, db = _scale(b)
    den = dA * db
    width = len(iA[0])
    out = []
    for n in range(len(iA)):
        row = binom[n]
        acc = [0] * width
        for i in range(n + 1):
            bj = ib[n - i]
            if bj:
                c = row[i] * bj
                Ai = iA[i]
                for p in range(width):
                    if Ai[p]:
                        acc[p] += c * Ai[p]
        out.append(_unscale(acc, den))
    return out


def _conv_acc(iA, iB, row, n, start, width):
    acc = [0] * (2 * width - 1)
    for i in range(start, n + 1):
        Ai = iA[i]
        Bj = iB[n - i]
        c = row[i]
        for p in range(width):
            ap = Ai[p]
            if ap:
                ap *= c
                for q in range(width):
                    bq = Bj[q]
                    if bq:
                        acc[p + q] += ap * bq
    return acc


def egf_mul_mod(A, B, binom, phi):
    """Binomial convolution of vector-valued lists, reduced modulo ``phi`` once per degree."""
    iA, dA = _scale_rows(A)
    iB, dB = _scale_rows(B)
    den = dA * dB
    width = len(iA[0])
    return [
        _unscale(_reduce_ints(_conv_acc(iA, iB, binom[n], n, 0, width), phi), den)
        for n in range(len(iA))
    ]


def egf_inverse(a, inv0, binom):
    """Multiplicative inverse of a scalar EGF given the inverse of its constant term."""
    b = [inv0]
    for n in range(1, len(a)):
        row = binom[n]
        s = 0
        for k in range(1, n + 1):
            ak = a[k]
            if ak:
                s += row[k] * ak * b[n - k]
        b.append(-inv0 * s)
    return b


def egf_inverse_mod(A, inv0, binom, phi):
    """Vector-valued counterpart of :func:`egf_inverse`; ``inv0`` is a coefficient vector."""
    width = len(A[0])
    b = [list(inv0)]
    for n in range(1, len(A)):
        acc = [0] * (2 * width - 1)
        row = binom[n]
        for k in range(1, n + 1):
            c = row[k]
            for p, ap in enumerate(A[k]):
                if ap:
                    ap = c * ap
                    for q, bq in enumerate(b[n - k]):
                        if bq:
                            acc[p + q] += ap * bq
        s = reduce_mod(acc, phi)
        b.append([-v for v in mulmod(inv0, s, phi)])
    return b
