"""Verification suites: exact identities, oracle grounding, stuffle soundness."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterator

from . import closed_forms as cf
from .exact import ZERO, PiPoly, to_float, zeta_bar_even, zeta_even
from .fps import KernelKind, Poly, Series2, coeff, kernel_series, series_div
from .genfun import (
    phi_series,
    pq_polys_closed,
    pq_polys_recursive,
    psi1_series,
    psi_tot_series,
    xyzw_polys_closed,
    xyzw_polys_recursive,
)
from .oracle import eval_word_refined, restricted_sum_numeric
from .words import EulerWord, parse_word, stuffle

SUITES = ("exact", "numeric", "stuffle")


@dataclass
class Check:
    id: str
    passed: bool
    lhs: Any
    rhs: Any

    def to_json(self) -> dict:
        return {"id": self.id, "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs), "status": "pass" if self.passed else "fail"}


@dataclass
class VerifyReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "checks": [c.to_json() for c in self.checks],
            "failed": len(self.failures),
            "status": "pass" if self.passed else "fail",
            "suite": self.suite,
            "total": len(self.checks),
        }

    def summary(self) -> str:
        lines = [f"suite {self.suite}: {len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed"]
        for c in self.failures:
            lines.append(f"  FAIL {c.id}: lhs={_text(c.lhs)} rhs={_text(c.rhs)}")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, PiPoly):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Poly):
        return [str(c) for c in x.coeffs]
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    return x


def _text(x) -> str:
    return str(x) if not isinstance(x, (tuple, list)) else "(" + ", ".join(_text(v) for v in x) + ")"


def _eq(cid: str, lhs, rhs) -> Check:
    return Check(cid, lhs == rhs, lhs, rhs)


def _graded(series: Series2, n: int, d: int) -> PiPoly:
    return PiPoly.monomial(coeff(series, n, d), 2 * n)


def _sum(items) -> PiPoly:
    acc = ZERO
    for x in items:
        acc = acc + x
    return acc


def exact_checks(max_n: int = 12) -> Iterator[Check]:
    order = max(max_n, 1)
    phi, tot, one = phi_series(order), psi_tot_series(order), psi1_series(order)
    z, zb = zeta_even, zeta_bar_even

    for n in range(1, max_n + 1):
        for d in range(1, n + 1):
            g = _graded(phi, n, d)
            yield _eq(f"xi_thm11({n},{d})=phi", cf.xi_thm11(n, d), g)
            yield _eq(f"xi_thm13({n},{d})=phi", cf.xi_thm13(n, d), g)
            yield _eq(f"a_d({n},{d})=psi_tot", cf.a_d(n, d), _graded(tot, n, d))
            yield _eq(f"a1({n},{d})=psi1", cf.a1(n, d), _graded(one, n, d))
        yield _eq(f"row_sum({n})", _sum(cf.xi_thm11(n, d) for d in range(1, n + 1)), cf.xi_row_sum(n))
        if n >= 2:
            yield _eq(f"zeta22_sum({n})", cf.a0(n, 2), z(2 * n).scale(Fraction(3, 4)))
        yield _eq(f"zeta_bar2_power({n})=xi_thm13", cf.zeta_bar2_power(n), cf.xi_thm13(n, n))
        yield _eq(f"zeta_bar2_power({n})=a_d", cf.zeta_bar2_power(n), cf.a_d(n, n))
        yield _eq(f"zeta_bar2_power({n})=xi_thm11", cf.zeta_bar2_power(n), cf.xi_thm11(n, n))
        if n % 2:
            yield _eq(f"ramanujan_R({n})=0", cf.ramanujan_R_exact(n), ZERO)
        for r in range(3):
            direct = _sum((z(2 * j) * zb(2 * n - 2 * j)).scale(j**r) for j in range(1, n))
            yield _eq(f"a1_moment({r},{n})", cf.a1_moment(r, n), direct)
            if n >= 2:
                direct = _sum((z(2 * j) * z(2 * n - 2 * j)).scale(j**r) for j in range(1, n))
                yield _eq(f"a0_moment({r},{n})", cf.a0_moment(r, n), direct)
        if n >= 2:
            yield _eq(f"l2({n})", cf.l2(n), _sum((zb(2 * j) * zb(2 * n - 2 * j)).scale(j * j) for j in range(1, n)))
            yield _eq(f"olzeta_conv({n})", cf.olzeta_conv(n), _sum(zb(2 * j) * zb(2 * n - 2 * j) for j in range(1, n)))
            yield _eq(f"a1_depth_sum({n})", _sum(cf.a1(n, d) for d in range(1, n + 1)), z(2) * zb(2 * n - 2))
            yield _eq(
                f"a_total2_split({n})",
                z(2 * n).scale(Fraction(3, 2)) + zb(2 * n).scale(Fraction(3, 2)),
                z(2 * n).scale(Fraction(3, 4**n)),
            )
        for d in (2, 3, 4):
            if d <= n:
                total = _sum(cf.a_alpha_small_depth(n, d, a) for a in range(d + 1))
                yield _eq(f"alpha_sum({n},{d})", total, cf.a_total(n, d))
        if n >= 3:
            rhs = (
                z(2 * n).scale(Fraction(5, 2))
                + zb(2 * n).scale(Fraction(5, 2))
                + (zb(2) * (zb(2 * n - 2) + z(2 * n - 2))).scale(Fraction(1, 2))
            )
            yield _eq(f"a_total3_split({n})", cf.a_total(n, 3), rhs)
        if n <= 10:
            for d in range(1, min(n, 4) + 1):
                yield _eq(f"a1_route({n},{d})", cf.a1_via_a0(n, d), cf.a1(n, d))

    for d in range(11):
        yield _eq(f"xyzw({d})", xyzw_polys_recursive(d), xyzw_polys_closed(d))
        P, Q = pq_polys_recursive(d)
        yield _eq(f"pq({d})", (P, Q), pq_polys_closed(d))
        yield _eq(f"Q({d})(0)", Q(0), Fraction(math.prod(range(1, 2 * d + 2, 2)), 2**d))

    yield from _kernel_checks(max_n)

    yield _eq("a_alpha(2,2,0)", cf.a_alpha_small_depth(2, 2, 0), PiPoly.monomial(Fraction(1, 120), 4))
    yield _eq("a_alpha(2,2,1)", cf.a_alpha_small_depth(2, 2, 1), PiPoly.monomial(Fraction(-1, 240), 4))
    yield _eq("a_alpha(2,2,2)", cf.a_alpha_small_depth(2, 2, 2), PiPoly.monomial(Fraction(-1, 480), 4))
    yield _eq("a_total(2,2)", cf.a_total(2, 2), PiPoly.monomial(Fraction(1, 480), 4))


def _kernel_checks(max_n: int) -> Iterator[Check]:
    order = max_n
    quarter = Fraction(1, 4)
    cot = series_div(kernel_series(KernelKind.COS, quarter, 1, order), kernel_series(KernelKind.SINC, quarter, 1, order))
    # sqrt(x) tanh sqrt(x) = x * sinhc / cosh with x = pi^2 u / 4
    tanh = series_div(
        kernel_series(KernelKind.SINHC, quarter, 1, order), kernel_series(KernelKind.COSH, quarter, 1, order)
    ).shift(1).scale(quarter)
    for m in range(order + 1):
        zm = zeta_even(2 * m).coefficient(2 * m)
        yield _eq(f"cot_series({m})", coeff(cot, m, 0), -2 * zm / 4**m)
        sign = -1 if (m - 1) % 2 else 1
        yield _eq(f"tanh_series({m})", coeff(tanh, m, 0), 2 * sign * (4**m - 1) * zm / 4**m)


def _close(cid: str, value: float, err: float, exact: float, floor: float = 1e-5, factor: float = 3.0) -> Check:
    lim = max(floor, factor * err)
    return Check(cid, abs(value - exact) < lim, value, exact)


def numeric_checks(max_n: int = 5) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for d in range(1, min(n, 4) + 1):
            for a in range(d + 1):
                exact = to_float(cf.a_alpha_small_depth(n, d, a))
                r = restricted_sum_numeric(n, d, a)
                yield _close(f"oracle_A{a}({2 * n},{d})", r.value, r.error_estimate, exact)
            r = restricted_sum_numeric(n, d, xi=True)
            yield _close(f"oracle_Xi({2 * n},{d})", r.value, r.error_estimate, to_float(cf.xi_thm11(n, d)))
    r = restricted_sum_numeric(3, 2, xi=True)
    yield Check("anchor_Xi(6,2)", abs(r.value - math.pi**6 / 10080) < 1e-8, r.value, math.pi**6 / 10080)
    r = eval_word_refined(parse_word("2b"), 1e-8)
    yield Check("anchor_zeta(2b)", abs(r.value + math.pi**2 / 12) < 1e-8, r.value, -math.pi**2 / 12)
    for n in (2, 4, 6):
        exact = to_float(cf.ramanujan_R_exact(n))
        got = cf.ramanujan_R1_numeric(n)
        yield Check(f"grosswald({n})", abs(got - exact) < 1e-10, got, exact)


def random_even_word(rng: random.Random, max_weight: int = 10, max_depth: int = 2) -> EulerWord:
    d = rng.randint(1, max_depth)
    while True:
        parts = [rng.randint(1, max_weight // 2) for _ in range(d)]
        if 2 * sum(parts) <= max_weight:
            return EulerWord(tuple((2 * p, rng.random() < 0.5) for p in parts))


def stuffle_checks(pairs: int = 50, seed: int = 20121, max_weight: int = 10) -> Iterator[Check]:
    """Products of random depth <= 2 even words against their stuffle expansions."""
    rng = random.Random(seed)
    cache: dict[EulerWord, Any] = {}

    def ev(w):
        if w not in cache:
            cache[w] = eval_word_refined(w)
        return cache[w]

    for i in range(pairs):
        w1 = random_even_word(rng, max_weight // 2)
        w2 = random_even_word(rng, max_weight - w1.weight)
        prod = stuffle(w1, w2)
        tag = f"[{w1}]*[{w2}]"
        yield Check(f"stuffle_commutes{tag}", prod == stuffle(w2, w1), sorted(map(str, prod)), sorted(map(str, stuffle(w2, w1))))
        grading = all(w.weight == w1.weight + w2.weight and w.depth <= w1.depth + w2.depth for w in prod)
        yield Check(f"stuffle_grading{tag}", grading, w1.weight + w2.weight, sorted({w.weight for w in prod}))
        a, b = ev(w1), ev(w2)
        lhs = a.value * b.value
        rhs = math.fsum(m * ev(w).value for w, m in sorted(prod.items()))
        err = abs(a.value) * b.error_estimate + abs(b.value) * a.error_estimate + a.error_estimate * b.error_estimate
        err += math.fsum(m * ev(w).error_estimate for w, m in prod.items())
        yield Check(f"stuffle_numeric{tag}", abs(lhs - rhs) <= err + 1e-13, lhs, rhs)


def run_suite(name: str, max_n: int | None = None) -> VerifyReport:
    gens: dict[str, Callable[[], Iterator[Check]]] = {
        "exact": lambda: exact_checks(12 if max_n is None else max_n),
        "numeric": lambda: numeric_checks(5 if max_n is None else max_n),
        "stuffle": lambda: stuffle_checks(),
    }
    if name not in gens:
        raise ValueError(f"unknown suite {name!r}")
    return VerifyReport(name, list(gens[name]()))
