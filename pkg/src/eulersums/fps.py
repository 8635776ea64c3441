"""Truncated power series in ``u`` whose coefficients are polynomials in ``v``.

Grading convention: pi never appears.  The stored coefficient of ``u**n``
stands for a rational multiple of ``pi**(2n)``, so a kernel such as
``sin(x)/x`` with ``x**2 = q * p(v) * pi**2 * u`` is stored with ``q*p(v)``
in place of ``pi**2 * q * p(v)``.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

DEFAULT_ORDER = 16


class Poly:
    """Dense univariate polynomial over the rationals; index is the power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def shift(self, k: int = 1) -> Poly:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


PolyV = Poly


class SeriesOrderError(ValueError):
    """Truncation orders differ, or a coefficient beyond the order was requested."""


class NonInvertibleSeriesError(ZeroDivisionError):
    pass


class Series2:
    """Truncated series ``sum_{n<=order} c_n(v) u**n``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Poly | Scalar], order: int = DEFAULT_ORDER):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [c if isinstance(c, Poly) else Poly.const(c) for c in list(coeffs)[: order + 1]]
        cs += [Poly()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[Poly, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> Series2:
        return cls([1], order)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> Series2:
        return cls([], order)

    def _check(self, other: Series2) -> None:
        if self.order != other.order:
            raise SeriesOrderError(f"truncation orders differ: {self.order} vs {other.order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series2([other], self.order)
        if not isinstance(other, Series2):
            return NotImplemented
        self._check(other)
        return Series2([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> Series2:
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar | Poly) -> Series2:
        return Series2([a * c for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        if not isinstance(other, Series2):
            return NotImplemented
        self._check(other)
        out = [Poly()] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return Series2(out, self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        if not isinstance(other, Series2):
            return NotImplemented
        return series_div(self, other)

    def shift(self, k: int = 1) -> Series2:
        """Multiply by ``u**k`` (dropping what falls past the order)."""
        return Series2([Poly()] * k + list(self.coeffs), self.order)

    def coeff(self, n: int, d: int) -> Fraction:
        return coeff(self, n, d)

    def __repr__(self) -> str:
        return f"Series2(order={self.order}, coeffs={self.coeffs!r})"


def series_add(a: Series2, b: Series2 | Scalar) -> Series2:
    return a + b


def series_mul(a: Series2, b: Series2 | Scalar) -> Series2:
    return a * b


def series_scale(a: Series2, c: Scalar) -> Series2:
    return a.scale(c)


def series_div(a: Series2, b: Series2) -> Series2:
    """``a / b`` truncated at the common order; ``b`` must have constant term 1."""
    a._check(b)
    if b.coeffs[0] != Poly.const(1):
        raise NonInvertibleSeriesError("non-invertible series: constant term must be the unit polynomial 1")
    out: list[Poly] = []
    for n in range(a.order + 1):
        c = a.coeffs[n]
        for k in range(1, n + 1):
            if b.coeffs[k] and out[n - k]:
                c = c - b.coeffs[k] * out[n - k]
        out.append(c)
    return Series2(out, a.order)


def coeff(a: Series2, n: int, d: int) -> Fraction:
    """Rational coefficient of ``u**n v**d``; the represented value is this times ``pi**(2n)``."""
    if n > a.order:
        raise SeriesOrderError(f"coefficient u^{n} exceeds truncation order {a.order}")
    if n < 0 or d < 0:
        return Fraction(0)
    return a.coeffs[n][d]


class KernelKind(enum.Enum):
    SINC = "sinc"  # sum (-1)^k z^k / (2k+1)!   = sin(x)/x,  x^2 = z
    COS = "cos"  # sum (-1)^k z^k / (2k)!
    SINHC = "sinhc"  # sum z^k / (2k+1)!
    COSH = "cosh"  # sum z^k / (2k)!


def _kernel_coeff(kind: KernelKind, k: int) -> Fraction:
    if kind is KernelKind.SINC:
        return Fraction((-1) ** k, math.factorial(2 * k + 1))
    if kind is KernelKind.COS:
        return Fraction((-1) ** k, math.factorial(2 * k))
    if kind is KernelKind.SINHC:
        return Fraction(1, math.factorial(2 * k + 1))
    return Fraction(1, math.factorial(2 * k))


def kernel_series(kind: KernelKind, q: Scalar, p: Poly | Scalar = 1, order: int = DEFAULT_ORDER) -> Series2:
    """Kernel evaluated at ``z = q * p(v) * u`` (pi^2 absorbed into the grade).

    The coefficient of ``u**k`` is ``kernel_k * q**k * p(v)**k``.
    """
    if not isinstance(p, Poly):
        p = Poly.const(p)
    q = Fraction(q)
    out = []
    pk = Poly.const(1)
    for k in range(order + 1):
        out.append(pk * (_kernel_coeff(kind, k) * q**k))
        pk = pk * p
    return Series2(out, order)
