"""Exact scalars: Bernoulli and Euler numbers, even zeta values, and PiPoly.

Every closed form in this package is a finite sum ``sum_k c_k * pi**(2k)``
with rational ``c_k``; :class:`PiPoly` is that value type.  Rationals are
plain :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]

_CACHE_LIMIT = 64
_lock = threading.Lock()
_bernoulli: list[Fraction] = []
_euler: list[int] = []  # _euler[j] == E_{2j}


def _fill_bernoulli(m: int) -> None:
    # sum_{k=0}^{j} C(j+1, k) B_k = 0 for j >= 1
    with _lock:
        while len(_bernoulli) <= m:
            j = len(_bernoulli)
            if j == 0:
                _bernoulli.append(Fraction(1))
                continue
            acc = sum(math.comb(j + 1, k) * _bernoulli[k] for k in range(j))
            _bernoulli.append(-acc / (j + 1))


def _fill_euler(j: int) -> None:
    # sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0 for n >= 1
    with _lock:
        while len(_euler) <= j:
            n = len(_euler)
            if n == 0:
                _euler.append(1)
                continue
            _euler.append(-sum(math.comb(2 * n, 2 * k) * _euler[k] for k in range(n)))


_fill_bernoulli(_CACHE_LIMIT)
_fill_euler(_CACHE_LIMIT // 2)


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m from ``x/(e^x - 1)``, so ``B_1 = -1/2``."""
    if m < 0:
        raise ValueError(f"bernoulli index must be nonnegative, got {m}")
    if m >= len(_bernoulli):
        _fill_bernoulli(m)
    return _bernoulli[m]


def euler_number(m: int) -> int:
    """Euler number E_m from ``sec x = sum (-1)^j E_2j x^2j / (2j)!``.

    Odd indices are rejected: every formula here indexes even Euler numbers
    only, so an odd request is an indexing bug.
    """
    if m < 0:
        raise ValueError(f"euler_number index must be nonnegative, got {m}")
    if m % 2:
        raise ValueError(f"odd Euler number E_{m} is zero by convention; only even indices are accepted")
    j = m // 2
    if j >= len(_euler):
        _fill_euler(j)
    return _euler[j]


class PiPoly:
    """Exact value ``sum c_k pi**e_k`` with even exponents and rational ``c_k``.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for exp, c in items:
            if exp < 0 or exp % 2:
                raise ValueError(f"pi exponent must be a nonnegative even integer, got {exp}")
            acc[exp] = acc.get(exp, Fraction(0)) + Fraction(c)
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e] != 0}
        self._hash = None

    @classmethod
    def monomial(cls, coeff: Scalar, pi_exp: int) -> PiPoly:
        return cls({pi_exp: coeff})

    @classmethod
    def constant(cls, c: Scalar) -> PiPoly:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, pi_exp: int) -> Fraction:
        return self._terms.get(pi_exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PiPoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> PiPoly:
        return PiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PiPoly):
            return NotImplemented
        out: list[tuple[int, Fraction]] = []
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out.append((e1 + e2, c1 * c2))
        return PiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def scale(self, c: Scalar) -> PiPoly:
        return PiPoly({e: v * c for e, v in self._terms.items()})

    def shift(self, pi_exp: int) -> PiPoly:
        """Multiply by ``pi**pi_exp``."""
        return PiPoly({e + pi_exp: c for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PiPoly.constant(other)
        if not isinstance(other, PiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __float__(self) -> float:
        return to_float(self)

    def __repr__(self) -> str:
        return f"PiPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            if e == 0:
                parts.append(str(c))
            else:
                parts.append(f"({c})*pi^{e}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"den": str(c.denominator), "num": str(c.numerator), "pi_exp": e}
                for e, c in self._terms.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> PiPoly:
        return cls(
            (int(t["pi_exp"]), Fraction(int(t["num"]), int(t["den"]))) for t in data["terms"]
        )


def _coerce(x):
    if isinstance(x, PiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return PiPoly.constant(x)
    return NotImplemented


ZERO = PiPoly()
ONE = PiPoly.constant(1)


def pipoly_add(a: PiPoly, b: PiPoly | Scalar) -> PiPoly:
    return a + b


def pipoly_mul(a: PiPoly, b: PiPoly | Scalar) -> PiPoly:
    return a * b


def pipoly_scale(a: PiPoly, c: Scalar) -> PiPoly:
    return a.scale(c)


def pipoly_neg(a: PiPoly) -> PiPoly:
    return -a


def to_float(a: PiPoly) -> float:
    """Double-precision value, summing terms in increasing exponent order."""
    total = 0.0
    for e, c in a.terms.items():
        total += float(c) * math.pi**e
    return total


pipoly_to_float = to_float


def zeta_even(s: int) -> PiPoly:
    """zeta(s) for even ``s >= 0`` as an exact multiple of ``pi**s``; zeta(0) = -1/2."""
    if s < 0 or s % 2:
        raise ValueError(f"zeta_even needs a nonnegative even argument, got {s}")
    if s == 0:
        return PiPoly.constant(Fraction(-1, 2))
    m = s // 2
    c = (-1) ** (m + 1) * bernoulli(s) * 2**s / (2 * math.factorial(s))
    return PiPoly.monomial(c, s)


def zeta_bar_even(s: int) -> PiPoly:
    """Alternating zeta(s-bar) = (2^(1-s) - 1) zeta(s) for even ``s``; zeta(0-bar) = -1/2."""
    if s < 0 or s % 2:
        raise ValueError(f"zeta_bar_even needs a nonnegative even argument, got {s}")
    if s == 0:
        return PiPoly.constant(Fraction(-1, 2))
    return zeta_even(s).scale(Fraction(2) ** (1 - s) - 1)
