import math
from fractions import Fraction

import pytest

from eulersums import closed_forms as cf
from eulersums.exact import ZERO, PiPoly, to_float, zeta_bar_even as zb, zeta_even as z
from eulersums.oracle import eval_word_refined, restricted_sum_numeric
from eulersums.words import parse_word

F = Fraction


def mono(c, e):
    return PiPoly.monomial(F(c), e)


def conv(f, g, n, weight=lambda j: 1):
    acc = ZERO
    for j in range(1, n):
        acc = acc + (f(2 * j) * g(2 * n - 2 * j)).scale(weight(j))
    return acc


@pytest.mark.parametrize("fn", [cf.xi_thm11, cf.xi_thm13])
def test_xi_examples(fn):
    assert fn(1, 1) == mono(F(-1, 12), 2)
    assert fn(3, 2) == mono(F(1, 10080), 6)
    assert fn(2, 2) == cf.zeta_bar2_power(2) == mono(F(-1, 480), 4)


@pytest.mark.parametrize("fn", [cf.xi_thm11, cf.xi_thm13, cf.a0, cf.a1, cf.a_d, cf.a_total])
def test_domain_errors(fn):
    with pytest.raises(cf.DomainError):
        fn(1, 2)
    with pytest.raises(cf.DomainError):
        fn(3, 0)


def test_row_sum_examples():
    assert cf.xi_row_sum(1) == mono(F(-1, 12), 2)
    assert cf.xi_row_sum(2) == cf.xi_thm11(2, 1) + cf.xi_thm11(2, 2)
    with pytest.raises(cf.DomainError):
        cf.xi_row_sum(0)


def test_zeta_bar2_power_examples():
    assert cf.zeta_bar2_power(1) == mono(F(-1, 12), 2)
    assert cf.zeta_bar2_power(2) == mono(F(-1, 480), 4)
    assert cf.zeta_bar2_power(3) == mono(F(1, 40320), 6)


@pytest.mark.parametrize("n", range(2, 13))
def test_a0_depth2(n):
    assert cf.a0(n, 2) == z(2 * n).scale(F(3, 4))


def test_a0_examples():
    assert cf.a0(2, 2) == mono(F(1, 120), 4)
    # zeta(2,2,2) = pi^6/5040; the listed (5/8) zeta(6) drops the j=1 term
    assert cf.a0(3, 3) == mono(F(1, 5040), 6)
    assert cf.a0(3, 3) != z(6).scale(F(5, 8))
    r = eval_word_refined(parse_word("2,2,2"))
    assert abs(r.value - math.pi**6 / 5040) < 1e-5


def test_a_total_examples():
    for n in range(2, 13):
        assert cf.a_total(n, 2) == z(2 * n).scale(F(3, 4**n))
    assert cf.a_total(2, 2) == mono(F(1, 480), 4)
    for n in range(3, 13):
        assert cf.a_total(n, 3) == z(2 * n).scale(F(5, 4**n)) - (z(2) * z(2 * n - 2)).scale(F(2, 4**n))


def test_a1_examples():
    for n in range(2, 13):
        assert cf.a1(n, 2) == z(2 * n).scale(F(1, 2)) + zb(2 * n)
    assert cf.a1(2, 2) == mono(F(-1, 240), 4)
    for n in range(3, 13):
        assert cf.a1(n, 3) == z(2 * n).scale(F(7, 8)) + zb(2 * n)


def test_a_d_examples():
    for n in range(2, 13):
        assert cf.a_d(n, 2) == z(2 * n).scale(F(1, 4)) + zb(2 * n).scale(F(1, 2))
    assert cf.a_d(2, 2) == cf.zeta_bar2_power(2)
    for n in range(3, 13):
        rhs = z(2 * n).scale(F(1, 8)) + zb(2 * n).scale(F(1, 2)) + (zb(2) * zb(2 * n - 2)).scale(F(1, 2))
        assert cf.a_d(n, 3) == rhs


@pytest.mark.parametrize("n", range(4, 13))
def test_depth_four_mixed(n):
    a2 = z(2 * n).scale(F(57, 32)) + zb(2 * n).scale(F(3, 2)) - (z(2) * z(2 * n - 2)).scale(F(3, 16))
    a3 = z(2 * n).scale(F(11, 16)) + zb(2 * n).scale(F(3, 2)) - (z(2) * zb(2 * n - 2)).scale(F(1, 2))
    assert cf.a_alpha_small_depth(n, 4, 2) == a2
    assert cf.a_alpha_small_depth(n, 4, 3) == a3


def test_alpha_chain_2_2():
    vals = [cf.a_alpha_small_depth(2, 2, a) for a in range(3)]
    assert vals == [mono(F(1, 120), 4), mono(F(-1, 240), 4), mono(F(-1, 480), 4)]
    assert vals[0] + vals[1] + vals[2] == cf.a_total(2, 2) == mono(F(1, 480), 4)


def test_alpha_dispatch_limits():
    with pytest.raises(cf.UnsupportedFormulaError, match="unsupported"):
        cf.a_alpha_small_depth(5, 5, 3)
    with pytest.raises(cf.DomainError):
        cf.a_alpha_small_depth(3, 2, 3)
    # extremes are available at every depth
    assert cf.a_alpha_small_depth(6, 5, 0) == cf.a0(6, 5)
    assert cf.a_alpha_small_depth(6, 5, 1) == cf.a1(6, 5)
    assert cf.a_alpha_small_depth(6, 5, 5) == cf.a_d(6, 5)


@pytest.mark.parametrize("n,d", [(n, d) for d in (2, 3, 4) for n in range(d, 13)])
def test_alpha_sum_consistency(n, d):
    total = ZERO
    for a in range(d + 1):
        total = total + cf.a_alpha_small_depth(n, d, a)
    assert total == cf.a_total(n, d)


@pytest.mark.parametrize("n", range(1, 13))
def test_a_total_depth2_depth3_splits(n):
    assert z(2 * n).scale(F(3, 2)) + zb(2 * n).scale(F(3, 2)) == z(2 * n).scale(F(3, 4**n))
    if n >= 3:
        rhs = z(2 * n).scale(F(5, 2)) + zb(2 * n).scale(F(5, 2)) + (zb(2) * (zb(2 * n - 2) + z(2 * n - 2))).scale(F(1, 2))
        assert cf.a_total(n, 3) == rhs


@pytest.mark.parametrize("n", range(2, 13))
def test_a1_depth_sum(n):
    total = ZERO
    for d in range(1, n + 1):
        total = total + cf.a1(n, d)
    assert total == z(2) * zb(2 * n - 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_a1_recursion_route(n):
    for d in range(1, min(n, 4) + 1):
        assert cf.a1_via_a0(n, d) == cf.a1(n, d)


@pytest.mark.parametrize("n", range(1, 13))
def test_moments(n):
    for r in range(3):
        assert cf.a1_moment(r, n) == conv(z, zb, n, lambda j: j**r)
        if n >= 2:
            assert cf.a0_moment(r, n) == conv(z, z, n, lambda j: j**r)


def test_moment_examples():
    assert cf.a1_moment(0, 2) == mono(F(-1, 72), 4)
    assert cf.a0_moment(0, 2) == mono(F(1, 36), 4) == z(2) * z(2)
    assert cf.a0_moment(2, 2) == z(2) * z(2)
    for n in range(1, 13):
        assert cf.a1_moment(0, n) == z(2 * n).scale(F(1, 2)) + zb(2 * n).scale(n)
    for n in range(2, 13):
        assert cf.a0_moment(0, n) == z(2 * n).scale(F(2 * n + 1, 2))
    with pytest.raises(cf.UnsupportedFormulaError):
        cf.a1_moment(3, 4)
    with pytest.raises(cf.UnsupportedFormulaError):
        cf.a0_moment(3, 4)


def test_a1_moment_numeric_n2():
    # sum_j j zeta(2j) zeta_bar(4-2j) at n=2 is zeta(2) zeta(2b)
    got = eval_word_refined(parse_word("2")).value * eval_word_refined(parse_word("2b")).value
    assert abs(got - to_float(cf.a1_moment(1, 2))) < 1e-5


@pytest.mark.parametrize("n", range(2, 13))
def test_l2_and_olzeta(n):
    assert cf.l2(n) == conv(zb, zb, n, lambda j: j * j)
    assert cf.olzeta_conv(n) == conv(zb, zb, n)
    assert cf.olzeta_conv(n) == z(2 * n).scale(F(2 * n - 1, 2)) + zb(2 * n)


def test_l2_olzeta_examples():
    assert cf.l2(2) == mono(F(1, 144), 4)
    assert cf.olzeta_conv(2) == mono(F(1, 144), 4)
    with pytest.raises(cf.DomainError):
        cf.l2(1)
    with pytest.raises(cf.DomainError):
        cf.olzeta_conv(1)


def test_ramanujan_exact():
    for n in range(1, 12, 2):
        assert cf.ramanujan_R_exact(n) == ZERO
    assert cf.ramanujan_R_exact(2) == mono(F(-7, 180), 4)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_grosswald(n):
    got = cf.ramanujan_R1_numeric(n)
    assert abs(got - to_float(cf.ramanujan_R_exact(n))) < 1e-10


def test_grosswald_examples():
    assert cf.ramanujan_R1_numeric(2, terms=10) == pytest.approx(-3.78812, abs=2e-5)
    with pytest.raises(cf.DomainError):
        cf.ramanujan_R1_numeric(3)


def test_thm11_d3_display_coefficient_against_oracle():
    # the d = 3 display must carry a 4^-n convolution factor; 2^(1-2n) misses by orders of magnitude
    for n in (3, 4):
        r = restricted_sum_numeric(n, 3, xi=True)
        assert abs(r.value - to_float(cf.xi_thm11(n, 3))) < 1e-6
        wrong = cf.xi_thm11(n, 3) + cf.cot_tanh_conv(n - 1).scale(F(2, 4**n) - F(1, 4**n))
        assert abs(r.value - to_float(wrong)) > 1e-3
