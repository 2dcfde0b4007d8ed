# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; mirrors ``_kernels_py`` function for function."""

from fractions import Fraction
from math import lcm


cdef tuple _scale(object values):
    cdef object den = 1, v
    for v in values:
        if type(v) is not int:
            den = lcm(den, v.denominator)
    if den == 1:
        return [int(v) for v in values], 1
    return [v.numerator * (den // v.denominator) for v in values], den


cdef tuple _scale_rows(list rows):
    cdef object den = 1, v
    cdef list row
    for row in rows:
        for v in row:
            if type(v) is not int:
                den = lcm(den, v.denominator)
    return [[v.numerator * (den // v.denominator) for v in row] for row in rows], den


cdef list _unscale(list ints, object den):
    if den == 1:
        return ints
    return [Fraction(v, den) for v in ints]


cdef list _reduce_ints(list c, list phi):
    cdef Py_ssize_t deg = len(phi) - 1
    cdef Py_ssize_t top, shift, j
    cdef object lead, pj
    for top in range(len(c) - 1, deg - 1, -1):
        lead = c[top]
        if lead:
            shift = top - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    c[shift + j] = c[shift + j] - lead * pj
    if len(c) < deg:
        c.extend([0] * (deg - len(c)))
    else:
        del c[deg:]
    return c


cpdef list reduce_mod(object c, list phi):
    ints, den = _scale(c)
    return _unscale(_reduce_ints(ints, phi), den)


cdef list _mul_ints(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef list prod = [0] * (la + lb - 1)
    cdef object ai, bj
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    prod[i + j] = prod[i + j] + ai * bj
    return prod


cpdef list mulmod(list a, list b, list phi):
    ia, da = _scale(a)
    ib, db = _scale(b)
    return _unscale(_reduce_ints(_mul_ints(ia, ib), phi), da * db)


cpdef list falling_row(object y, object lam, Py_ssize_t n):
    cdef list row = [1]
    cdef object acc = 1, dk = 1, iy, il, den
    cdef Py_ssize_t k
    (iy, il), den = _scale([y, lam])
    for k in range(n):
        acc = acc * (iy - k * il)
        dk = dk * den
        row.append(acc if dk == 1 else Fraction(acc, dk))
    return row


cpdef list egf_mul(list a, list b, list binom):
    cdef Py_ssize_t size = len(a), n, i
    cdef list out = [], row, ia, ib
    cdef object s, ai, bj, da, db
    ia, da = _scale(a)
    ib, db = _scale(b)
    for n in range(size):
        row = binom[n]
        s = 0
        for i in range(n + 1):
            ai = ia[i]
            if ai:
                bj = ib[n - i]
                if bj:
                    s = s + row[i] * ai * bj
        out.append(s)
    return _unscale(out, da * db)


cpdef list egf_mul_vec_scalar(list A, list b, list binom):
    cdef Py_ssize_t size = len(A), width = len(A[0]), n, i, p
    cdef list out = [], row, acc, Ai, iA, ib
    cdef object bj, c, v, dA, db, den
    iA, dA = _scale_rows(A)
    ib, db = _scale(b)
    den = dA * db
    for n in range(size):
        row = binom[n]
        acc = [0] * width
        for i in range(n + 1):
            bj = ib[n - i]
            if bj:
                c = row[i] * bj
                Ai = iA[i]
                for p in range(width):
                    v = Ai[p]
                    if v:
                        acc[p] = acc[p] + c * v
        out.append(_unscale(acc, den))
    return out


cdef list _conv_acc(list A, list B, list row, Py_ssize_t n, Py_ssize_t start, Py_ssize_t width):
    cdef list acc = [0] * (2 * width - 1), Ai, Bj
    cdef Py_ssize_t i, p, q
    cdef object c, ap, bq
    for i in range(start, n + 1):
        Ai = A[i]
        Bj = B[n - i]
        c = row[i]
        for p in range(width):
            ap = Ai[p]
            if ap:
                ap = c * ap
                for q in range(width):
                    bq = Bj[q]
                    if bq:
                        acc[p + q] = acc[p + q] + ap * bq
    return acc


cpdef list egf_mul_mod(list A, list B, list binom, list phi):
    cdef Py_ssize_t size = len(A), width = len(A[0]), n
    cdef list out = [], iA, iB
    cdef object dA, dB, den
    iA, dA = _scale_rows(A)
    iB, dB = _scale_rows(B)
    den = dA * dB
    for n in range(size):
        out.append(_unscale(_reduce_ints(_conv_acc(iA, iB, binom[n], n, 0, width), phi), den))
    return out


cpdef list egf_inverse(list a, object inv0, list binom):
    cdef Py_ssize_t size = len(a), n, k
    cdef list b = [inv0], row
    cdef object s, ak
    for n in range(1, size):
        row = binom[n]
        s = 0
        for k in range(1, n + 1):
            ak = a[k]
            if ak:
                s = s + row[k] * ak * b[n - k]
        b.append(-inv0 * s)
    return b


cpdef list egf_inverse_mod(list A, object inv0, list binom, list phi):
    cdef Py_ssize_t size = len(A), width = len(A[0]), n
    cdef list b = [list(inv0)], s, inv = list(inv0)
    for n in range(1, size):
        # _conv_acc indexes A[i] * B[n - i]; B is the partial inverse here
        s = reduce_mod(_conv_acc(A, b, binom[n], n, 1, width), phi)
        b.append([-v for v in mulmod(inv, s, phi)])
    return b
