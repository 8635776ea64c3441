"""Generating functions of the restricted sums and their polynomial systems.

All series follow the pi-grading of :mod:`eulersums.fps`: the coefficient of
``u**n v**d`` times ``pi**(2n)`` is the depth-``d`` restricted sum of weight
``2n``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .fps import DEFAULT_ORDER, KernelKind, Poly, Series2, kernel_series, series_div

PolyX = Poly

_ONE_MINUS_V = Poly([1, -1])
_ONE_PLUS_V = Poly([1, 1])
_QUARTER = Fraction(1, 4)


@lru_cache(maxsize=None)
def phi_series(order: int = DEFAULT_ORDER) -> Series2:
    """Generating function of Xi(2n, d).

    ``[S((1-v)u/4) / S(u/4)] * [Ch((1-v)u/4) / Ch(u/4)]`` with S the sinc
    kernel and Ch the cosh kernel; the ``1/sqrt(1-v)`` prefactor is absorbed
    into the first ratio.
    """
    sin_part = series_div(
        kernel_series(KernelKind.SINC, _QUARTER, _ONE_MINUS_V, order),
        kernel_series(KernelKind.SINC, _QUARTER, 1, order),
    )
    cosh_part = series_div(
        kernel_series(KernelKind.COSH, _QUARTER, _ONE_MINUS_V, order),
        kernel_series(KernelKind.COSH, _QUARTER, 1, order),
    )
    return sin_part * cosh_part


@lru_cache(maxsize=None)
def psi_tot_series(order: int = DEFAULT_ORDER) -> Series2:
    """Generating function of A_d(2n, d), the totally alternating sums."""
    sin_part = series_div(
        kernel_series(KernelKind.SINC, _QUARTER, _ONE_MINUS_V, order),
        kernel_series(KernelKind.SINC, _QUARTER, 1, order),
    )
    cos_part = series_div(
        kernel_series(KernelKind.COS, _QUARTER, _ONE_PLUS_V, order),
        kernel_series(KernelKind.COS, _QUARTER, 1, order),
    )
    return sin_part * cos_part


@lru_cache(maxsize=None)
def psi1_series(order: int = DEFAULT_ORDER) -> Series2:
    """Generating function of A_1(2n, d), exactly one alternating component.

    Uses ``v / (2 S(u)) * sum_{j>=1} (-1)^j u^j (1-v)^(j-1) / (2j+1)!`` so
    that every v-coefficient stays polynomial.
    """
    terms = [Poly()]
    power = Poly.const(1)
    for j in range(1, order + 1):
        terms.append(power * Fraction(_sign(j), math.factorial(2 * j + 1)))
        power = power * _ONE_MINUS_V
    tail = Series2(terms, order)
    half_v = Poly([0, Fraction(1, 2)])
    return series_div(tail, kernel_series(KernelKind.SINC, 1, 1, order)) * half_v


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _floor_range(upper_numer: int, denom: int) -> range:
    # range(0, floor(upper_numer/denom) + 1); empty when the bound is negative
    return range(0, upper_numer // denom + 1)


def xyzw_polys_recursive(d: int) -> tuple[Poly, Poly, Poly, Poly]:
    """Iterate the coupled recurrences from ``X0=Y0=Z0=0, W0=1``."""
    if d < 0:
        raise ValueError("depth must be nonnegative")
    X, Y, Z, W = Poly(), Poly(), Poly(), Poly.const(1)
    half = Fraction(1, 2)
    for k in range(d):
        xX, xY = X.shift(), Y.shift()
        nX = X * k - X.derivative().shift() - Z * half - W * half
        nY = Y * k - Y.derivative().shift() + Z * half - W * half
        nZ = Z * Fraction(2 * k + 1, 2) - Z.derivative().shift() - xX * half - xY * half
        nW = W * Fraction(2 * k + 1, 2) - W.derivative().shift() + xX * half - xY * half
        inv = Fraction(1, k + 1)
        X, Y, Z, W = nX * inv, nY * inv, nZ * inv, nW * inv
    return X, Y, Z, W


def xyzw_polys_closed(d: int) -> tuple[Poly, Poly, Poly, Poly]:
    """Explicit binomial-sum formulas for ``(X_d, Y_d, Z_d, W_d)``."""
    if d < 0:
        raise ValueError("depth must be nonnegative")
    X = Poly()
    Y = Poly()
    for j in _floor_range(d - 1, 2):
        base = Fraction(8**j * math.comb(2 * d - 2 * j - 1, d), 2 ** (2 * d - 1) * math.factorial(2 * j + 1))
        X = X + Poly.monomial(_sign(j // 2 - 1) * base, j)
        Y = Y + Poly.monomial(_sign((j - 1) // 2) * base, j)
    Z = Poly()
    for j in _floor_range(d - 2, 4):
        c = Fraction(_sign(j) * 8 ** (2 * j + 1) * math.comb(2 * d - 4 * j - 2, d), 2 ** (2 * d) * math.factorial(4 * j + 2))
        Z = Z + Poly.monomial(c, 2 * j + 1)
    W = Poly()
    for j in _floor_range(d, 4):
        c = Fraction(_sign(j) * 8 ** (2 * j) * math.comb(2 * d - 4 * j, d), 2 ** (2 * d) * math.factorial(4 * j))
        W = W + Poly.monomial(c, 2 * j)
    return X, Y, Z, W


def pq_polys_recursive(d: int) -> tuple[Poly, Poly]:
    """Iterate the P/Q system from ``P0 = 0, Q0 = 1``."""
    if d < 0:
        raise ValueError("depth must be nonnegative")
    P, Q = Poly(), Poly.const(1)
    half = Fraction(1, 2)
    for k in range(d):
        P, Q = (
            P * (k + 1) - P.derivative().shift() - Q * half,
            Q * Fraction(2 * k + 3, 2) - Q.derivative().shift() + P.shift() * half,
        )
    return P, Q


def half_binomial(a: Fraction, m: int) -> Fraction:
    """Generalized binomial ``C(a, m)`` for rational ``a`` (falling factorial over m!)."""
    if m < 0:
        return Fraction(0)
    acc = Fraction(1)
    for i in range(m):
        acc *= Fraction(a) - i
    return acc / math.factorial(m)


def pq_polys_closed(d: int) -> tuple[Poly, Poly]:
    """Closed double-sum formulas for ``(P_d, Q_d)``."""
    if d < 0:
        raise ValueError("depth must be nonnegative")
    fd = math.factorial(d)
    P = Poly()
    for j in _floor_range(d - 1, 2):
        c = sum(
            Fraction(_sign(d + j + k + 1) * math.comb(2 * j + 1, k), math.factorial(2 * j + 1))
            * half_binomial(Fraction(k - 3, 2), d)
            for k in range(2 * j + 2)
        )
        P = P + Poly.monomial(fd * c, j)
    Q = Poly()
    for j in _floor_range(d, 2):
        c = sum(
            Fraction(_sign(d + j + k) * math.comb(2 * j, k), math.factorial(2 * j))
            * half_binomial(Fraction(k - 3, 2), d)
            for k in range(2 * j + 1)
        )
        Q = Q + Poly.monomial(fd * c, j)
    return P, Q
