"""Closed-form restricted sums of alternating Euler sums at even arguments.

Every evaluator returns an exact :class:`~eulersums.exact.PiPoly`.  Sums whose
floor-bounded upper limit is negative are empty.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .exact import ZERO, PiPoly, bernoulli, euler_number, zeta_bar_even, zeta_even
from .genfun import half_binomial


class DomainError(ValueError):
    """Arguments outside the range where a formula is stated."""


class UnsupportedFormulaError(NotImplementedError):
    """No closed form is available for the requested (n, d, alpha)."""


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _check_nd(n: int, d: int) -> None:
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got n={n}, d={d}")


def zeta(s: int) -> PiPoly:
    return zeta_even(s)


def zeta_bar(s: int) -> PiPoly:
    return zeta_bar_even(s)


def zeta_tilde(n: int, m: int) -> PiPoly:
    """zeta(m) when ``n`` is even, zeta(m-bar) when ``n`` is odd."""
    return zeta_even(m) if n % 2 == 0 else zeta_bar_even(m)


def cot_tanh_conv(m: int) -> PiPoly:
    """``sum_{r+s=m} (-1)^r (4^r - 1) zeta(2r) zeta(2s)``, r, s >= 0."""
    acc = ZERO
    for r in range(m + 1):
        if r:
            acc = acc + (zeta(2 * r) * zeta(2 * (m - r))).scale(_sign(r) * (4**r - 1))
    return acc


def zeta_bar2_power(n: int) -> PiPoly:
    """zeta({2-bar}^n) = (-1)^floor((n+1)/2) pi^(2n) / (2^n (2n+1)!)."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return PiPoly.monomial(Fraction(_sign((n + 1) // 2), 2**n * math.factorial(2 * n + 1)), 2 * n)


def xi_thm11(n: int, d: int) -> PiPoly:
    """Xi(2n, d) by the two-sum formula with the parity-dependent zeta."""
    _check_nd(n, d)
    acc = ZERO
    for j in range((d - 1) // 2 + 1):
        c = Fraction(_sign(j // 2) * math.comb(2 * d - 2 * j - 1, d), 2 ** (2 * d - j - 2) * math.factorial(2 * j + 1))
        acc = acc + zeta_tilde(n, 2 * n - 2 * j).shift(2 * j).scale(c)
    for j in range((d - 2) // 4 + 1):
        inner = cot_tanh_conv(n - 2 * j).scale(Fraction(1, 4 ** (n - 2 * j)))
        # 2^(2d-2j-5) can be a fractional power for small d
        c = _sign(j) * Fraction(2) ** (5 - 2 * d + 2 * j) * Fraction(math.comb(2 * d - 4 * j - 2, d), math.factorial(4 * j + 2))
        acc = acc + inner.shift(4 * j).scale(c)
    return acc


def xi_thm13(n: int, d: int) -> PiPoly:
    """Xi(2n, d) by the Euler-number form; it has n - d + 1 outer terms."""
    _check_nd(n, d)
    acc = ZERO
    for ell in range(n - d + 1):
        inner = ZERO
        for j in range(ell + 1):
            inner = inner + zeta_bar(2 * ell - 2 * j).shift(2 * n - 2 * ell + 2 * j).scale(
                Fraction(euler_number(2 * j), math.factorial(2 * j))
            )
        c = Fraction(
            2 * _sign(d + (ell - n - 1) // 2) * math.comb(n - ell, d),
            2 ** (n + ell) * math.factorial(2 * n - 2 * ell + 1),
        )
        acc = acc + inner.scale(c)
    return acc


def xi_row_sum(n: int) -> PiPoly:
    """``sum_d Xi(2n, d)`` via Euler numbers."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    acc = ZERO
    for j in range(n + 1):
        acc = acc + zeta_bar(2 * n - 2 * j).shift(2 * j).scale(Fraction(euler_number(2 * j), math.factorial(2 * j)))
    return acc.scale(Fraction(-2, 4**n))


def a0(n: int, d: int) -> PiPoly:
    """Restricted sum of multiple zeta values of weight 2n and depth d (Hoffman)."""
    _check_nd(n, d)
    acc = zeta(2 * n).scale(Fraction(math.comb(2 * d - 1, d), 4 ** (d - 1)))
    for j in range(1, (d - 1) // 2 + 1):
        c = Fraction(math.comb(2 * d - 2 * j - 1, d)) / (Fraction(2) ** (2 * d - 3) * (2 * j + 1) * bernoulli(2 * j))
        acc = acc - (zeta(2 * j) * zeta(2 * n - 2 * j)).scale(c)
    return acc


def a_total(n: int, d: int) -> PiPoly:
    """Restricted sum over all sign patterns: ``2^d 4^-n`` times :func:`a0`."""
    _check_nd(n, d)
    acc = zeta(2 * n).scale(Fraction(math.comb(2 * d - 1, d)) / Fraction(2) ** (2 * n + d - 2))
    for j in range(1, (d - 1) // 2 + 1):
        c = Fraction(math.comb(2 * d - 2 * j - 1, d)) / (Fraction(2) ** (2 * n + d - 3) * (2 * j + 1) * bernoulli(2 * j))
        acc = acc - (zeta(2 * j) * zeta(2 * n - 2 * j)).scale(c)
    return acc


def a1(n: int, d: int) -> PiPoly:
    """Sums with exactly one alternating component."""
    _check_nd(n, d)
    acc = zeta_bar(2 * n)
    for j in range((d - 2) // 2 + 1):
        c = sum(
            Fraction(_sign(d + j + k) * math.comb(2 * j + 1, k), math.factorial(2 * j + 1))
            * half_binomial(Fraction(k - 3, 2), d - 1)
            for k in range(2 * j + 2)
        )
        acc = acc - zeta(2 * n - 2 * j).shift(2 * j).scale(c)
    return acc


def a1_via_a0(n: int, d: int) -> PiPoly:
    """A_1(2n, d) from depth-(d-k) MZV restricted sums, with A_0(2m, 1) = zeta(2m).

    Independent of :func:`a1`; used to cross-check it.
    """
    _check_nd(n, d)
    acc = zeta_bar(2 * n).scale(_sign(d - 1) * math.comb(n - 1, d - 1))
    for k in range(1, d):
        for ell in range(k, n + k - d + 1):
            acc = acc + (zeta_bar(2 * ell) * a0(n - ell, d - k)).scale(_sign(k - 1) * math.comb(ell - 1, k - 1))
    return acc


def a_d(n: int, d: int) -> PiPoly:
    """Totally alternating sums, every component barred."""
    _check_nd(n, d)

    def z(j: int, k: int) -> PiPoly:
        return zeta(2 * n - 2 * j - 2 * k).shift(2 * j + 2 * k)

    acc = ZERO
    for j in range((d - 1) // 2 + 1):
        c = _sign(j) * Fraction(4) ** (j - n - d + 1) * Fraction(math.comb(2 * d - 2 * j - 1, d), math.factorial(2 * j + 1))
        acc = acc + zeta(2 * n - 2 * j).shift(2 * j).scale(c)
    for c_ in range(1, d + 1):
        for j in range((c_ - 1) // 2 + 1):
            for k in range((d - c_) // 2 + 1):
                if j + k > n:
                    continue
                num = _sign(c_ + j + k) * (1 - Fraction(4) ** (j + k - n))
                den = c_ * math.factorial(2 * j) * math.factorial(2 * k) * 4 ** (d - 1)
                coef = num / den * math.comb(2 * c_ - 2 * j - 2, c_ - 1) * math.comb(2 * d - 2 * c_ - 2 * k, d - c_)
                acc = acc + z(j, k).scale(coef)
        for j in range(1, c_ // 2 + 1):
            for k in range((d - c_ - 1) // 2 + 1):
                if j + k > n:
                    continue
                coef = (
                    _sign(c_ + j + k)
                    * Fraction(4) ** (j + k - n - d + 1)
                    / (c_ * math.factorial(2 * j - 1) * math.factorial(2 * k + 1))
                    * math.comb(2 * c_ - 2 * j - 1, c_ - 1)
                    * math.comb(2 * d - 2 * c_ - 2 * k - 1, d - c_)
                )
                acc = acc + z(j, k).scale(coef)
    return acc


def _a2_depth3(n: int) -> PiPoly:
    return zeta(2 * n).scale(Fraction(7, 8)) + zeta_bar(2 * n)


def _a2_depth4(n: int) -> PiPoly:
    return (
        zeta(2 * n).scale(Fraction(57, 32))
        + zeta_bar(2 * n).scale(Fraction(3, 2))
        - (zeta(2) * zeta(2 * n - 2)).scale(Fraction(3, 16))
    )


def _a3_depth4(n: int) -> PiPoly:
    return (
        zeta(2 * n).scale(Fraction(11, 16))
        + zeta_bar(2 * n).scale(Fraction(3, 2))
        - (zeta(2) * zeta_bar(2 * n - 2)).scale(Fraction(1, 2))
    )


_MIXED = {
    (3, 2): _a2_depth3,
    (4, 2): _a2_depth4,
    (4, 3): _a3_depth4,
}


def a_alpha_small_depth(n: int, d: int, alpha: int) -> PiPoly:
    """A_alpha(2n, d): sums with exactly ``alpha`` alternating components.

    alpha in {0, 1, d} works at every depth; the remaining alphas only for
    d <= 4.  Other combinations have no closed form and raise
    :class:`UnsupportedFormulaError`.
    """
    _check_nd(n, d)
    if not 0 <= alpha <= d:
        raise DomainError(f"need 0 <= alpha <= d, got alpha={alpha}, d={d}")
    if alpha == 0:
        return a0(n, d)
    if alpha == d:
        return a_d(n, d)
    if alpha == 1:
        return a1(n, d)
    try:
        return _MIXED[d, alpha](n)
    except KeyError:
        raise UnsupportedFormulaError(
            f"unsupported: no closed form for alpha={alpha} at depth d={d}; "
            "only alpha in {0, 1, d} is known in general, other alphas only for d <= 4"
        ) from None


a_alpha = a_alpha_small_depth


def a1_moment(r: int, n: int) -> PiPoly:
    """``sum_{j=1}^{n-1} j^r zeta(2j) zeta(2n-2j bar)`` for r in {0, 1, 2}."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    zn, zbn = zeta(2 * n), zeta_bar(2 * n)
    cross = zeta_bar(2) * zeta_bar(2 * n - 2)
    if r == 0:
        return zn.scale(Fraction(1, 2)) + zbn.scale(n)
    if r == 1:
        return zn.scale(Fraction(n, 2)) + zbn.scale(Fraction(n * (2 * n - 1), 4)) - cross.scale(Fraction(3, 2))
    if r == 2:
        return (
            zn.scale(Fraction(n * n, 2))
            + zbn.scale(Fraction(n * (2 * n - 1) * (4 * n - 1), 24))
            - cross.scale(Fraction(4 * n + 3, 4))
        )
    raise UnsupportedFormulaError(f"unsupported moment r={r}; only r in {{0, 1, 2}}")


def a0_moment(r: int, n: int) -> PiPoly:
    """``sum_{l=1}^{n-1} l^r zeta(2l) zeta(2n-2l)`` for r in {0, 1, 2}, n >= 2."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    zn = zeta(2 * n)
    if r == 0:
        return zn.scale(Fraction(2 * n + 1, 2))
    if r == 1:
        return zn.scale(Fraction(n * (2 * n + 1), 4))
    if r == 2:
        return zn.scale(Fraction(n * (8 * n * n + 6 * n + 1), 24)) - (zeta(2) * zeta(2 * n - 2)).scale(
            Fraction(2 * n - 3, 2)
        )
    raise UnsupportedFormulaError(f"unsupported moment r={r}; only r in {{0, 1, 2}}")


def l2(n: int) -> PiPoly:
    """``sum_{j=1}^{n-1} j^2 zeta(2j bar) zeta(2n-2j bar)``."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return (
        zeta(2 * n).scale(Fraction(n * (2 * n - 1) * (4 * n - 1), 24))
        + (zeta(2) * zeta(2 * n - 2)).scale(Fraction(2 * n - 3, 4))
        + zeta_bar(2 * n).scale(Fraction(n * n, 2))
    )


def olzeta_conv(n: int) -> PiPoly:
    """``sum_{a+b=n; a,b>0} zeta(2a bar) zeta(2b bar) = (2n-1)/2 zeta(2n) + zeta(2n bar)``."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return zeta(2 * n).scale(Fraction(2 * n - 1, 2)) + zeta_bar(2 * n)


def ramanujan_R_exact(n: int) -> PiPoly:
    """``sum_{r+s=n; r,s>=0} (-1)^r zeta(2r) zeta(2s)`` with zeta(0) = -1/2."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    acc = ZERO
    for r in range(n + 1):
        acc = acc + (zeta(2 * r) * zeta(2 * n - 2 * r)).scale(_sign(r))
    return acc


def _zeta_odd_float(s: int) -> float:
    # direct summation until the term drops below 1e-16, then the integral tail
    kmax = int(math.ceil(1e16 ** (1.0 / s)))
    k = np.arange(kmax, 0, -1, dtype=np.float64)
    head = math.fsum(k ** (-float(s)))
    tail = (kmax + 0.5) ** (1 - s) / (s - 1)
    return head + tail


def ramanujan_R1_numeric(n: int, terms: int = 20) -> float:
    """Grosswald's fast series for R_n(1), ``n`` even:
    ``-pi (zeta(2n-1) + 2 sum_k k^(1-2n) / (e^(2 k pi) - 1))``.
    """
    if n < 2 or n % 2:
        raise DomainError(f"need even n >= 2, got {n}")
    if terms < 1:
        raise DomainError("need at least one term")
    ks = range(1, terms + 1)
    series = math.fsum(k ** (1 - 2 * n) / math.expm1(2 * k * math.pi) for k in ks)
    return -math.pi * (_zeta_odd_float(2 * n - 1) + 2 * series)
