"""Exact scalars, dense univariate polynomials, and truncated power series.

Three layers, each exact (no rounding anywhere):

* ``Rational`` -- an alias of :class:`fractions.Fraction`, which already
  stores every value canonically (positive denominator, reduced).
* :class:`UniPoly` -- dense polynomial in the symbol ``s`` with rational
  coefficients, trailing zeros trimmed.
* :class:`Series` -- power series in ``t`` truncated at a caller-chosen
  order ``N`` (coefficients of ``t^0 .. t^N`` retained), over either the
  rational ring or the polynomial ring.  Mixing rings or orders is an
  error, never a silent coercion.

``exp``/``log``/``pow`` use the O(N^2) differential recurrences; the inner
convolutions are delegated to :mod:`norlund._kernel`.

Text formats: a rational prints as ``"p/q"`` with the denominator omitted
when it is 1 (``str(Fraction)`` does exactly this); a polynomial or series
serializes as a JSON-ready list of such strings in ascending degree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from . import _kernel
from .errors import (
    ConstantTermError,
    OrderMismatchError,
    ParameterError,
    RingMismatchError,
    UnsupportedParameterError,
)

Rational = Fraction

#: Marker accepted by :func:`exp_st` for a symbolic first argument.
SYMBOLIC = "sym"

RATIONAL = "rational"
POLY = "poly"

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact :class:`Fraction`.

    Accepts fractions, integers and strings like ``"-691/2730"`` or ``"3"``.
    Floats are rejected: this package never rounds.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_root(value: Fraction, k: int) -> Fraction:
    """Exact ``k``-th root of ``value`` (``k >= 1``), if it is rational.

    Raises :class:`UnsupportedParameterError` when the root is irrational
    or complex (negative value with even ``k``).
    """
    if k < 1:
        raise ValueError("root index must be positive")
    if k == 1:
        return value
    if value < 0:
        if k % 2 == 0:
            raise UnsupportedParameterError(
                f"{value} has no real rational {k}-th root"
            )
        return -rational_root(-value, k)
    num, exact_n = _int_nthroot(value.numerator, k)
    den, exact_d = _int_nthroot(value.denominator, k)
    if not (exact_n and exact_d):
        raise UnsupportedParameterError(f"{value} has no rational {k}-th root")
    return Fraction(num, den)


def rational_pow(base: Fraction, exponent: Fraction) -> Fraction:
    """Exact ``base ** exponent`` for rational exponent, if rational.

    ``0 ** e`` is 0 for positive ``e`` and an error otherwise.  Raises
    :class:`UnsupportedParameterError` when the result is irrational.
    """
    base = as_rational(base)
    exponent = as_rational(exponent)
    if exponent.denominator == 1:
        e = int(exponent)
        if base == 0 and e <= 0:
            raise ZeroDivisionError("0 cannot be raised to a non-positive power")
        return base ** e
    if base == 0:
        if exponent > 0:
            return Fraction(0)
        raise ZeroDivisionError("0 cannot be raised to a negative power")
    root = rational_root(base, exponent.denominator)
    return root ** exponent.numerator


def _int_nthroot(n: int, k: int) -> tuple[int, bool]:
    # Newton iteration on integers; n >= 0.
    if n in (0, 1):
        return n, True
    x = 1 << (-(-n.bit_length() // k))  # upper-ish starting point
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x ** k == n


class UniPoly:
    """Dense univariate polynomial in ``s`` over the rationals.

    ``coeffs[k]`` is the coefficient of ``s**k``; trailing zeros are
    trimmed, and the zero polynomial has an empty coefficient tuple.
    Instances are immutable and support ``+ - *``, integer powers,
    evaluation via call syntax, and Taylor shift ``p.shift(c) == p(s+c)``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        items = [as_rational(c) for c in coeffs]
        while items and not items[-1]:
            items.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(items)

    @classmethod
    def constant(cls, value: RationalLike) -> "UniPoly":
        return cls((as_rational(value),))

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "UniPoly":
        return cls((0,) * degree + (as_rational(coefficient),))

    @classmethod
    def zero(cls) -> "UniPoly":
        return _POLY_ZERO

    @classmethod
    def one(cls) -> "UniPoly":
        return _POLY_ONE

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "UniPoly":
        return cls(Fraction(item) for item in items)

    def to_strings(self) -> list[str]:
        """Coefficients as ``"p/q"`` strings, ascending degree."""
        return [str(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def constant_value(self) -> Fraction:
        return self.coefficient(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c: RationalLike) -> "UniPoly":
        """Return ``p(s + c)``."""
        c = as_rational(c)
        if not c or self.is_zero:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for k, ck in enumerate(self.coeffs):
            if not ck:
                continue
            power = Fraction(1)
            for j in range(k, -1, -1):
                out[j] += ck * math.comb(k, j) * power
                power *= c
        return UniPoly(out)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            q = as_rational(other)
            if not q:
                return _POLY_ZERO
            return UniPoly(tuple(c * q for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return _POLY_ZERO
        return UniPoly(_kernel.conv(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = as_rational(other)
        return UniPoly(tuple(c / q for c in self.coeffs))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = _POLY_ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "s" if k == 1 else f"s^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


_POLY_ZERO = UniPoly()
_POLY_ONE = UniPoly((1,))


def _coerce_elem(ring: str, value):
    if ring == POLY:
        return value if isinstance(value, UniPoly) else UniPoly.constant(value)
    if isinstance(value, UniPoly):
        raise RingMismatchError("polynomial coefficient in a rational-ring series")
    return as_rational(value)


def _ring_zero(ring: str):
    return _POLY_ZERO if ring == POLY else Fraction(0)


def _ring_one(ring: str):
    return _POLY_ONE if ring == POLY else Fraction(1)


class Series:
    """Power series in ``t`` truncated at order ``N`` (``N+1`` coefficients).

    Every operation agrees with exact formal-power-series arithmetic modulo
    ``t^(N+1)``.  The coefficient ring is fixed per series -- ``RATIONAL``
    or ``POLY`` -- and operands must share both ring and order.
    Instances are immutable; all operations return new series.
    """

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, coeffs: Sequence = (), order: int | None = None,
                 ring: str | None = None):
        items = list(coeffs)
        if ring is None:
            ring = POLY if any(isinstance(c, UniPoly) for c in items) else RATIONAL
        if ring not in (RATIONAL, POLY):
            raise ValueError(f"unknown coefficient ring {ring!r}")
        if order is None:
            if not items:
                raise ValueError("series needs coefficients or an explicit order")
            order = len(items) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        items = [_coerce_elem(ring, c) for c in items[: order + 1]]
        zero = _ring_zero(ring)
        items.extend([zero] * (order + 1 - len(items)))
        self.ring = ring
        self.order = order
        self.coeffs = tuple(items)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, order: int, ring: str = RATIONAL) -> "Series":
        return cls((), order=order, ring=ring)

    @classmethod
    def one(cls, order: int, ring: str = RATIONAL) -> "Series":
        return cls((_ring_one(ring),), order=order, ring=ring)

    @classmethod
    def from_function(cls, fn: Callable[[int], RationalLike], order: int,
                      ring: str = RATIONAL) -> "Series":
        """Series with ``coeff(k) = fn(k)`` for ``k = 0..order``."""
        return cls([fn(k) for k in range(order + 1)], order=order, ring=ring)

    # -- inspection -------------------------------------------------------

    def coefficient(self, k: int):
        """Coefficient of ``t**k`` (zero above the truncation order)."""
        return self.coeffs[k] if 0 <= k <= self.order else _ring_zero(self.ring)

    def egf_coefficient(self, n: int):
        """``n! *`` coefficient of ``t**n`` -- the EGF normalization."""
        return self.coeffs[n] * math.factorial(n)

    def to_payload(self):
        """JSON-ready representation: list of rational strings, or list of
        such lists for polynomial coefficients."""
        if self.ring == RATIONAL:
            return [str(c) for c in self.coeffs]
        return [c.to_strings() for c in self.coeffs]

    def _check_compatible(self, other: "Series"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"cannot combine {self.ring}-ring and {other.ring}-ring series"
            )
        if self.order != other.order:
            raise OrderMismatchError(
                f"cannot combine series of orders {self.order} and {other.order}"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        self._check_compatible(other)
        coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs)]
        return Series(coeffs, order=self.order, ring=self.ring)

    def __sub__(self, other: "Series") -> "Series":
        self._check_compatible(other)
        coeffs = [a - b for a, b in zip(self.coeffs, other.coeffs)]
        return Series(coeffs, order=self.order, ring=self.ring)

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], order=self.order, ring=self.ring)

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return self.scale(other)
        self._check_compatible(other)
        n = self.order + 1
        if self.ring == RATIONAL:
            coeffs = _kernel.conv_trunc(list(self.coeffs), list(other.coeffs), n)
        else:
            coeffs = _poly_conv_trunc(self.coeffs, other.coeffs, n)
        return Series(coeffs, order=self.order, ring=self.ring)

    def __rmul__(self, other) -> "Series":
        return self.scale(other)

    def scale(self, factor) -> "Series":
        """Multiply every coefficient by a ring element."""
        factor = _coerce_elem(self.ring, factor)
        return Series([c * factor for c in self.coeffs],
                      order=self.order, ring=self.ring)

    def inv(self) -> "Series":
        """Multiplicative inverse modulo ``t^(N+1)``.

        The constant term must be invertible: nonzero in the rational ring,
        a nonzero constant polynomial in the polynomial ring.
        """
        n = self.order + 1
        if self.ring == RATIONAL:
            if not self.coeffs[0]:
                raise ConstantTermError("series inverse needs a nonzero constant term")
            return Series(_kernel.inv_trunc(list(self.coeffs), n),
                          order=self.order, ring=RATIONAL)
        c0 = self.coeffs[0]
        if not c0.is_constant or c0.is_zero:
            raise ConstantTermError(
                "series inverse over the polynomial ring needs a nonzero "
                "constant polynomial as constant term"
            )
        inv0 = UniPoly.constant(1 / c0.constant_value())
        out = [inv0]
        for k in range(1, n):
            acc = _POLY_ZERO
            for j in range(1, k + 1):
                aj = self.coeffs[j]
                if not aj.is_zero:
                    acc = acc + aj * out[k - j]
            out.append(-(inv0 * acc))
        return Series(out, order=self.order, ring=POLY)

    def exp(self) -> "Series":
        """``exp`` of a series with zero constant term."""
        if self.coeffs[0] != _ring_zero(self.ring):
            raise ConstantTermError("series exp needs a zero constant term")
        n = self.order + 1
        if self.ring == RATIONAL:
            return Series(_kernel.exp_trunc(list(self.coeffs), n),
                          order=self.order, ring=RATIONAL)
        out = [_POLY_ONE]
        for k in range(1, n):
            acc = _POLY_ZERO
            for j in range(1, k + 1):
                aj = self.coeffs[j]
                if not aj.is_zero:
                    acc = acc + (aj * j) * out[k - j]
            out.append(acc / k)
        return Series(out, order=self.order, ring=POLY)

    def log(self) -> "Series":
        """``log`` of a series with constant term one."""
        if self.coeffs[0] != _ring_one(self.ring):
            raise ConstantTermError("series log needs constant term 1")
        n = self.order + 1
        if self.ring == RATIONAL:
            return Series(_kernel.log_trunc(list(self.coeffs), n),
                          order=self.order, ring=RATIONAL)
        out = [_POLY_ZERO]
        for k in range(1, n):
            acc = self.coeffs[k] * k
            for j in range(1, k):
                hj = out[j]
                if not hj.is_zero:
                    acc = acc - (hj * j) * self.coeffs[k - j]
            out.append(acc / k)
        return Series(out, order=self.order, ring=POLY)

    def pow(self, gamma: RationalLike) -> "Series":
        """``self ** gamma`` for a rational exponent, as ``exp(gamma*log)``.

        Requires constant term one.
        """
        gamma = as_rational(gamma)
        return self.log().scale(gamma).exp()

    def scale_t(self, c: RationalLike) -> "Series":
        """Substitute ``t -> c*t``: coefficient of ``t**k`` gains ``c**k``."""
        c = as_rational(c)
        power = Fraction(1)
        out = []
        for coeff in self.coeffs:
            out.append(coeff * power)
            power *= c
        return Series(out, order=self.order, ring=self.ring)

    def mul_t(self, j: int = 1) -> "Series":
        """Multiply by ``t**j`` (same truncation order; top terms drop off)."""
        zero = _ring_zero(self.ring)
        out = [zero] * j + list(self.coeffs[: self.order + 1 - j])
        return Series(out, order=self.order, ring=self.ring)

    def div_t(self, j: int = 1) -> "Series":
        """Divide by ``t**j``; the first ``j`` coefficients must vanish.

        The result is truncated at order ``N - j``.
        """
        zero = _ring_zero(self.ring)
        if any(c != zero for c in self.coeffs[:j]):
            raise ConstantTermError(
                f"cannot divide by t^{j}: lower-order coefficients are nonzero"
            )
        if j > self.order:
            raise OrderMismatchError("division by t exhausts the series")
        return Series(self.coeffs[j:], order=self.order - j, ring=self.ring)

    def truncate(self, order: int) -> "Series":
        """Drop coefficients above ``order`` (which must not exceed N)."""
        if order > self.order:
            raise OrderMismatchError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], order=order, ring=self.ring)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.ring == other.ring and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring, self.order, self.coeffs))

    def __repr__(self):
        return (f"Series(order={self.order}, ring={self.ring!r}, "
                f"coeffs={list(self.coeffs)!r})")


def _poly_conv_trunc(a, b, n):
    out = [_POLY_ZERO] * n
    for i, ai in enumerate(a):
        if i >= n or ai.is_zero:
            continue
        for j in range(min(n - i, len(b))):
            bj = b[j]
            if not bj.is_zero:
                out[i + j] = out[i + j] + ai * bj
    return out


# -- operation-style aliases ---------------------------------------------

def series_add(f: Series, g: Series) -> Series:
    return f + g


def series_mul(f: Series, g: Series) -> Series:
    return f * g


def series_inv(f: Series) -> Series:
    return f.inv()


def series_exp(f: Series) -> Series:
    return f.exp()


def series_log(f: Series) -> Series:
    return f.log()


def series_pow(f: Series, gamma: RationalLike) -> Series:
    return f.pow(gamma)


def series_scale_t(f: Series, c: RationalLike) -> Series:
    return f.scale_t(c)


def exp_st(s, order: int) -> Series:
    """The series of ``e^{s t}``: coefficient of ``t**k`` is ``s**k / k!``.

    Pass ``SYMBOLIC`` (or ``None``) for a polynomial-ring series in the
    symbol ``s``; pass a rational for a rational-ring series.
    """
    if s is None or (isinstance(s, str) and s == SYMBOLIC):
        coeffs = [UniPoly.monomial(k, Fraction(1, math.factorial(k)))
                  for k in range(order + 1)]
        return Series(coeffs, order=order, ring=POLY)
    s = as_rational(s)
    coeffs, power = [], Fraction(1)
    for k in range(order + 1):
        coeffs.append(power / math.factorial(k))
        power *= s
    return Series(coeffs, order=order, ring=RATIONAL)


def egf_poly_coefficient(series: Series, n: int) -> UniPoly:
    """``n! * [t^n] (e^{s t} * series)`` as a polynomial in ``s``.

    ``series`` must be a rational-ring series of order at least ``n``.  The
    coefficient of ``s**k`` is ``n!/k! * series[n-k]``, so the whole family
    of polynomials drops out of one rational series.
    """
    if series.ring != RATIONAL:
        raise RingMismatchError("prefactor assembly expects a rational-ring series")
    if series.order < n:
        raise OrderMismatchError(f"series order {series.order} < n = {n}")
    nfact = math.factorial(n)
    coeffs = [series.coeffs[n - k] * Fraction(nfact, math.factorial(k))
              for k in range(n + 1)]
    return UniPoly(coeffs)


def egf_poly_table(series: Series, n_max: int) -> list[UniPoly]:
    """:func:`egf_poly_coefficient` for every ``n = 0..n_max``."""
    return [egf_poly_coefficient(series, n) for n in range(n_max + 1)]


def egf_values(series: Series, s: RationalLike, n_max: int) -> list[Fraction]:
    """``n! * [t^n] (e^{s t} * series)`` at a concrete rational ``s``.

    Scalar fast path for identity grids: one truncated convolution instead
    of a polynomial assembly per ``n``.
    """
    if series.order < n_max:
        raise OrderMismatchError(f"series order {series.order} < n_max = {n_max}")
    product = exp_st(as_rational(s), series.order) * series
    return [product.egf_coefficient(n) for n in range(n_max + 1)]
