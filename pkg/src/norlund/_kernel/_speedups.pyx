# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled drop-in replacement for :mod:`norlund._kernel.pure`.

Same functions, same exact results.  Rationals are unpacked into
numerator/denominator integer pairs so the inner loops run on plain
Python ints (kept reduced with ``math.gcd``) instead of ``Fraction``
objects; convolutions are additionally rescaled to a common integer
denominator so the innermost loop is pure integer multiply-add.
"""

from fractions import Fraction
from math import gcd, lcm

cdef object _Fraction = Fraction


cdef inline tuple _padd(object an, object ad, object bn, object bd):
    # Reduced sum of two reduced pairs with positive denominators.
    cdef object g = gcd(ad, bd)
    cdef object s, t, x, g2
    if g == 1:
        return (an * bd + bn * ad, ad * bd)
    s = ad // g
    t = bd // g
    x = an * t + bn * s
    g2 = gcd(x, g)
    if g2 == 1:
        return (x, s * bd)
    return (x // g2, s * (bd // g2))


cdef inline tuple _pmul(object an, object ad, object bn, object bd):
    # Reduced product of two reduced pairs.
    cdef object g1 = gcd(an, bd)
    cdef object g2 = gcd(ad, bn)
    return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))


cdef void _unpack(list src, list nums, list dens):
    cdef Py_ssize_t i
    for i in range(len(src)):
        c = src[i]
        nums.append(c.numerator)
        dens.append(c.denominator)


def conv(list a, list b):
    """Full convolution of two non-empty coefficient lists."""
    return conv_trunc(a, b, len(a) + len(b) - 1)


def conv_trunc(list a, list b, Py_ssize_t n):
    """First ``n`` coefficients of the product ``a * b``."""
    cdef list an = [], ad = [], bn = [], bd = []
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, k, lo, hi
    _unpack(a, an, ad)
    _unpack(b, bn, bd)

    # Rescale both inputs to a common integer denominator so the inner
    # loop is integer-only; one Fraction normalisation per output term.
    cdef object La = 1, Lb = 1, acc, scale
    for i in range(la):
        La = lcm(La, ad[i])
    for j in range(lb):
        Lb = lcm(Lb, bd[j])
    cdef list ai = [0] * la, bi = [0] * lb
    for i in range(la):
        ai[i] = an[i] * (La // ad[i])
    for j in range(lb):
        bi[j] = bn[j] * (Lb // bd[j])

    scale = La * Lb
    cdef list out = [None] * n
    for k in range(n):
        acc = 0
        lo = k - lb + 1
        if lo < 0:
            lo = 0
        hi = k if k < la - 1 else la - 1
        for i in range(lo, hi + 1):
            x = ai[i]
            if x:
                y = bi[k - i]
                if y:
                    acc = acc + x * y
        out[k] = _Fraction(acc, scale)
    return out


def inv_trunc(list a, Py_ssize_t n):
    """First ``n`` coefficients of ``1 / a``; ``a[0]`` must be nonzero."""
    cdef list an = [], ad = []
    _unpack(a, an, ad)
    cdef Py_ssize_t top = len(a) - 1, k, j, m
    cdef object in0, id0, sn, sd, tn, td, g

    if an[0] == 0:
        raise ZeroDivisionError("series has zero constant term")
    in0 = ad[0]
    id0 = an[0]
    if id0 < 0:
        in0 = -in0
        id0 = -id0

    cdef list gn = [0] * n, gd = [1] * n
    gn[0], gd[0] = in0, id0
    for k in range(1, n):
        sn, sd = 0, 1
        m = k if k < top else top
        for j in range(1, m + 1):
            if an[j] == 0 or gn[k - j] == 0:
                continue
            tn, td = _pmul(an[j], ad[j], gn[k - j], gd[k - j])
            sn, sd = _padd(sn, sd, tn, td)
        if sn:
            sn, sd = _pmul(-sn, sd, in0, id0)
            gn[k], gd[k] = sn, sd
    return [_Fraction(gn[k], gd[k]) for k in range(n)]


def exp_trunc(list a, Py_ssize_t n):
    """First ``n`` coefficients of ``exp(a)``; ``a[0]`` must be zero."""
    cdef list an = [], ad = []
    _unpack(a, an, ad)
    cdef Py_ssize_t top = len(a) - 1, k, j, m
    cdef object sn, sd, tn, td, g

    cdef list gn = [0] * n, gd = [1] * n
    gn[0] = 1
    for k in range(1, n):
        sn, sd = 0, 1
        m = k if k < top else top
        for j in range(1, m + 1):
            if an[j] == 0 or gn[k - j] == 0:
                continue
            tn, td = _pmul(an[j], ad[j], gn[k - j], gd[k - j])
            g = gcd(j, td)
            tn = tn * (j // g)
            td = td // g
            sn, sd = _padd(sn, sd, tn, td)
        if sn:
            g = gcd(sn, k)
            gn[k] = sn // g
            gd[k] = sd * (k // g)
    return [_Fraction(gn[k], gd[k]) for k in range(n)]


def log_trunc(list a, Py_ssize_t n):
    """First ``n`` coefficients of ``log(a)``; ``a[0]`` must be one."""
    cdef list an = [], ad = []
    _unpack(a, an, ad)
    cdef Py_ssize_t la = len(a), k, j
    cdef object sn, sd, tn, td, g

    cdef list hn = [0] * n, hd = [1] * n
    for k in range(1, n):
        if k < la and an[k] != 0:
            g = gcd(k, ad[k])
            sn, sd = an[k] * (k // g), ad[k] // g
        else:
            sn, sd = 0, 1
        for j in range(1, k):
            if hn[j] == 0 or k - j >= la or an[k - j] == 0:
                continue
            tn, td = _pmul(hn[j], hd[j], an[k - j], ad[k - j])
            g = gcd(j, td)
            tn = tn * (j // g)
            td = td // g
            sn, sd = _padd(sn, sd, -tn, td)
        if sn:
            g = gcd(sn, k)
            hn[k] = sn // g
            hd[k] = sd * (k // g)
    return [_Fraction(hn[k], hd[k]) for k in range(n)]
