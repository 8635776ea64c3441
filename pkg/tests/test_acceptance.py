"""Acceptance gate: one pass/fail line per criterion (shown in the terminal summary)."""

import math
import time
from fractions import Fraction

from eulersums import closed_forms as cf
from eulersums.exact import ZERO, PiPoly, to_float, zeta_bar_even as zb, zeta_even as z
from eulersums.fps import coeff
from eulersums.genfun import (
    phi_series,
    pq_polys_closed,
    pq_polys_recursive,
    psi1_series,
    psi_tot_series,
    xyzw_polys_closed,
    xyzw_polys_recursive,
)
from eulersums.oracle import eval_word_refined, restricted_sum_numeric
from eulersums.verify import numeric_checks, stuffle_checks
from eulersums.words import parse_word

F = Fraction
NMAX = 12


def _sum(xs):
    acc = ZERO
    for x in xs:
        acc = acc + x
    return acc


def _conv(f, g, n, w=lambda j: 1):
    return _sum((f(2 * j) * g(2 * n - 2 * j)).scale(w(j)) for j in range(1, n))


def _graded(series, n, d):
    return PiPoly.monomial(coeff(series, n, d), 2 * n)


def _gate(report, label, failures, detail=""):
    report(label, not failures, detail if not failures else f"{len(failures)} failing: {failures[:3]}")
    assert not failures


def xi2_display(n):
    return cf.zeta_tilde(n, 2 * n).scale(F(3, 4)) + cf.cot_tanh_conv(n).scale(F(1, 4**n))


def xi3_display(n):
    # convolution factor 4^-n: the general Xi formula at d = 3 and the oracle both fix it
    return (
        cf.zeta_tilde(n, 2 * n).scale(F(5, 8))
        + (z(2) * cf.zeta_tilde(n, 2 * n - 2)).scale(F(1, 8))
        + cf.cot_tanh_conv(n).scale(F(1, 4**n))
    )


def test_criterion_01_xi_three_way(report):
    t0 = time.perf_counter()
    phi = phi_series(NMAX)
    bad, count = [], 0
    for n in range(1, NMAX + 1):
        for d in range(1, n + 1):
            count += 1
            g = _graded(phi, n, d)
            if not (cf.xi_thm11(n, d) == cf.xi_thm13(n, d) == g):
                bad.append((n, d))
        if n >= 2 and xi2_display(n) != cf.xi_thm11(n, 2):
            bad.append(("display2", n))
        if n >= 3 and xi3_display(n) != cf.xi_thm11(n, 3):
            bad.append(("display3", n))
    elapsed = time.perf_counter() - t0
    if count != 78 or elapsed >= 10:
        bad.append(("count/time", count, elapsed))
    _gate(report, "CRITERION 1 Xi thm11 = thm13 = phi, displays d=2,3", bad, f"{count} pairs x 3 methods, {elapsed:.2f}s")


def test_criterion_02_row_sum(report):
    bad = [n for n in range(1, NMAX + 1) if _sum(cf.xi_thm11(n, d) for d in range(1, n + 1)) != cf.xi_row_sum(n)]
    _gate(report, "CRITERION 2 row sum", bad, f"n <= {NMAX}")


def test_criterion_03_zeta22_sum(report):
    bad = [n for n in range(2, NMAX + 1) if cf.a0(n, 2) != z(2 * n).scale(F(3, 4))]
    r = restricted_sum_numeric(3, 2, 0)
    diff = abs(r.value - to_float(z(6).scale(F(3, 4))))
    if diff >= 1e-4:
        bad.append(("numeric", diff))
    _gate(report, "CRITERION 3 A0(2n,2) = 3/4 zeta(2n), exact and numeric", bad, f"|oracle - 3/4 zeta(6)| = {diff:.2e}")


def test_criterion_04_psi_tot_psi1(report):
    tot, one = psi_tot_series(NMAX), psi1_series(NMAX)
    bad = []
    for n in range(1, NMAX + 1):
        for d in range(1, n + 1):
            if cf.a_d(n, d) != _graded(tot, n, d):
                bad.append(("a_d", n, d))
            if cf.a1(n, d) != _graded(one, n, d):
                bad.append(("a1", n, d))
    _gate(report, "CRITERION 4 psi_tot / psi1 coefficients", bad)


def test_criterion_05_alpha_consistency(report):
    bad = []
    for d in (2, 3, 4):
        for n in range(d, NMAX + 1):
            if _sum(cf.a_alpha_small_depth(n, d, a) for a in range(d + 1)) != cf.a_total(n, d):
                bad.append((n, d))
    chain = [cf.a_alpha_small_depth(2, 2, a) for a in range(3)]
    want = [PiPoly.monomial(F(1, 120), 4), PiPoly.monomial(F(-1, 240), 4), PiPoly.monomial(F(-1, 480), 4)]
    if chain != want or _sum(chain) != PiPoly.monomial(F(1, 480), 4) or _sum(chain) != z(4).scale(F(3, 16)):
        bad.append("chain(2,2)")
    _gate(report, "CRITERION 5 alpha sums, depths 2-4", bad)


def test_criterion_06_a1_depth_sum(report):
    bad = [n for n in range(2, NMAX + 1) if _sum(cf.a1(n, d) for d in range(1, n + 1)) != z(2) * zb(2 * n - 2)]
    _gate(report, "CRITERION 6 sum_d A1 = zeta(2) zeta(2n-2 bar)", bad)


def test_criterion_07_polynomial_systems(report):
    bad = []
    for d in range(11):
        if xyzw_polys_recursive(d) != xyzw_polys_closed(d):
            bad.append(("xyzw", d))
        P, Q = pq_polys_recursive(d)
        if (P, Q) != pq_polys_closed(d):
            bad.append(("pq", d))
        if Q(0) != F(math.prod(range(1, 2 * d + 2, 2)), 2**d):
            bad.append(("Q(0)", d))
    _gate(report, "CRITERION 7 X/Y/Z/W and P/Q systems", bad, "d <= 10")


def test_criterion_08_lemmas(report):
    bad = []
    for n in range(1, NMAX + 1):
        if not (cf.zeta_bar2_power(n) == cf.xi_thm13(n, n) == cf.a_d(n, n)):
            bad.append(("zeta_bar2_power", n))
        for r in range(3):
            if cf.a1_moment(r, n) != _conv(z, zb, n, lambda j: j**r):
                bad.append(("a1_moment", r, n))
            if n >= 2 and cf.a0_moment(r, n) != _conv(z, z, n, lambda j: j**r):
                bad.append(("a0_moment", r, n))
        if n >= 2:
            if cf.l2(n) != _conv(zb, zb, n, lambda j: j * j):
                bad.append(("l2", n))
            if cf.olzeta_conv(n) != _conv(zb, zb, n):
                bad.append(("olzeta", n))
    _gate(report, "CRITERION 8 lemma cross-checks", bad)


def test_criterion_09_ramanujan(report):
    bad = [n for n in range(1, 12, 2) if cf.ramanujan_R_exact(n) != ZERO]
    errs = {}
    for n in (2, 4, 6):
        errs[n] = abs(cf.ramanujan_R1_numeric(n) - to_float(cf.ramanujan_R_exact(n)))
        if errs[n] >= 1e-10:
            bad.append(("grosswald", n, errs[n]))
    _gate(report, "CRITERION 9 Ramanujan / Grosswald", bad, f"max err {max(errs.values()):.1e}")


def test_criterion_10_oracle(report):
    t0 = time.perf_counter()
    checks = list(numeric_checks(5))
    elapsed = time.perf_counter() - t0
    bad = [c.id for c in checks if not c.passed]
    xi = restricted_sum_numeric(3, 2, xi=True)
    if abs(xi.value - math.pi**6 / 10080) >= 1e-8 or abs(xi.value - 0.0953759) >= 1e-6:
        bad.append("anchor Xi(6,2)")
    r = eval_word_refined(parse_word("2b"), 1e-8)
    if abs(r.value + math.pi**2 / 12) >= 1e-8:
        bad.append("anchor zeta(2b)")
    if elapsed >= 60:
        bad.append(("runtime", elapsed))
    _gate(report, "CRITERION 10 oracle vs closed forms", bad, f"{len(checks)} checks, {elapsed:.1f}s")


def test_criterion_11_stuffle(report):
    checks = list(stuffle_checks(pairs=50))
    bad = [c.id for c in checks if not c.passed]
    if len(checks) != 150:
        bad.append(("count", len(checks)))
    _gate(report, "CRITERION 11 stuffle soundness", bad, "50 random pairs")
