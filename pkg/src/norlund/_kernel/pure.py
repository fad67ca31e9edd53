"""Pure-Python reference implementation of the dense series kernels.

A series is a list ``c`` of :class:`~fractions.Fraction` where ``c[k]`` is
the coefficient of ``t**k``.  These functions are the hot inner loops of the
package; :mod:`norlund._kernel._speedups` provides a compiled drop-in
replacement, and the two must agree exactly on every input.

Preconditions (zero / unit constant term) are validated by the callers in
:mod:`norlund.exact_arith`; the kernels assume them.
"""

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def conv(a, b):
    """Full convolution of two non-empty coefficient lists."""
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def conv_trunc(a, b, n):
    """First ``n`` coefficients of the product ``a * b``."""
    out = [_ZERO] * n
    for i, ai in enumerate(a):
        if i >= n or not ai:
            continue
        top = min(n - i, len(b))
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def inv_trunc(a, n):
    """First ``n`` coefficients of ``1 / a``; ``a[0]`` must be nonzero."""
    inv0 = 1 / a[0]
    out = [_ZERO] * n
    out[0] = inv0
    top = len(a) - 1
    for k in range(1, n):
        acc = _ZERO
        for j in range(1, min(k, top) + 1):
            aj = a[j]
            if aj:
                acc += aj * out[k - j]
        if acc:
            out[k] = -inv0 * acc
    return out


def exp_trunc(a, n):
    """First ``n`` coefficients of ``exp(a)``; ``a[0]`` must be zero.

    Uses the differential recurrence ``(exp a)' = a' * exp a``, i.e.
    ``k * g_k = sum_{j=1..k} j * a_j * g_{k-j}``.
    """
    out = [_ZERO] * n
    out[0] = _ONE
    top = len(a) - 1
    for k in range(1, n):
        acc = _ZERO
        for j in range(1, min(k, top) + 1):
            aj = a[j]
            if aj:
                acc += j * aj * out[k - j]
        if acc:
            out[k] = acc / k
    return out


def log_trunc(a, n):
    """First ``n`` coefficients of ``log(a)``; ``a[0]`` must be one.

    Uses ``a * (log a)' = a'``, i.e.
    ``k * h_k = k * a_k - sum_{j=1..k-1} j * h_j * a_{k-j}``.
    """
    out = [_ZERO] * n
    la = len(a)
    for k in range(1, n):
        acc = k * a[k] if k < la else _ZERO
        for j in range(1, k):
            hj = out[j]
            if hj and k - j < la:
                akj = a[k - j]
                if akj:
                    acc -= j * hj * akj
        if acc:
            out[k] = acc / k
    return out
