"""Series summation: alternating sums, the g-sums, and tail honesty.

Frozen high-precision values below were computed twice (own kernels and an
mpmath-based oracle) and agree to all shown digits:

    g_sum(50 terms)          = -0.299129377269524655821304749300875
    euler_maclaurin estimate = -0.29944613494465838094862223478929
"""

import mpmath as mp
import pytest
from mpmath import mpf

from rhv.errors import ArgumentNotDominant, DomainError
from rhv.hpmath import PrecisionSpec, zeta, zeta_log_deriv
from rhv.series import (
    alternating_log_zeta_sum,
    euler_maclaurin_g_estimate,
    log_zeta_logderiv_sum,
    theorem1a_g_sum,
    zagier_product_constant,
)

G50_FROZEN = "-0.299129377269524655821304749300875"
EM_FROZEN = "-0.29944613494465838094862223478929"


class TestAlternatingSum:
    def test_brute_force_longer_truncation(self, prec40):
        # b=2, a=1 against a 5x longer summation
        s1 = alternating_log_zeta_sum(2, 1, 300, prec40)
        s2 = alternating_log_zeta_sum(2, 1, 1500, prec40)
        with prec40.workdps():
            assert abs(s1.value - s2.value) <= s1.tail_bound
            assert abs(s1.value - s2.value) < mpf(10) ** -(prec40.target_digits)

    def test_far_arguments_tiny(self, prec30):
        s = alternating_log_zeta_sum(40, 2, 50, prec30)
        with prec30.workdps():
            assert abs(s.value) <= mpf(2) ** -39

    def test_alternating_bracket(self, prec30):
        # the limit lies between consecutive partial sums once terms decrease
        with prec30.workdps():
            b, a = mpf(2), mpf(1)
            full = alternating_log_zeta_sum(b, a, 400, prec30).value
            partials = []
            total = mpf(0)
            for n in range(12):
                x = b + mp.pi / (2 * a) + mp.pi * n / a
                term = mp.log(zeta(x, prec30))
                total += term if n % 2 == 0 else -term
                partials.append(+total)
            for lo, hi in zip(partials[4::2], partials[5::2]):
                assert min(lo, hi) <= full <= max(lo, hi)

    def test_strip_arguments_rejected(self, prec30):
        with pytest.raises(ArgumentNotDominant):
            alternating_log_zeta_sum(mpf(1) / 2, mp.pi, 100, prec30)

    def test_tail_honesty(self, prec30):
        s1 = alternating_log_zeta_sum(mpf("0.7"), mpf("1.5"), 60, prec30)
        s2 = alternating_log_zeta_sum(mpf("0.7"), mpf("1.5"), 240, prec30)
        with prec30.workdps():
            assert abs(s1.value - s2.value) <= s1.tail_bound


class TestZagier:
    def test_golden_interval(self, prec40):
        s = zagier_product_constant(200, prec40)
        with prec40.workdps():
            assert mpf("0.8306") <= s.value <= mpf("0.8307")
            assert mpf("2.29485") <= mp.exp(s.value) <= mpf("2.29486")

    def test_truncation_consistency(self, prec30):
        s20 = zagier_product_constant(20, prec30)
        s200 = zagier_product_constant(200, prec30)
        with prec30.workdps():
            assert abs(s20.value - s200.value) < mpf(2) ** -19
            assert abs(s20.value - s200.value) <= s20.tail_bound


class TestGSums:
    def test_frozen_value_50_terms(self, prec50):
        g = theorem1a_g_sum(50, prec50)
        with prec50.workdps():
            assert abs(g.value - mpf(G50_FROZEN)) < mpf(10) ** -30

    def test_mpmath_oracle(self, prec40):
        g = theorem1a_g_sum(50, prec40)
        with mp.workdps(55):
            oracle = mp.mpf(0)
            for n in range(1, 51):
                s = mp.mpf(1) + n
                oracle += mp.log(mp.zeta(s)) + (n + mp.mpf(1) / 2) * mp.zeta(s, derivative=1) / mp.zeta(s)
            oracle /= mp.pi
            assert abs(g.value - oracle) < mpf(10) ** -(prec40.target_digits)

    def test_single_term(self, prec30):
        # n = 1 term is (1/pi)(ln zeta(2) + (3/2) zeta'(2)/zeta(2))
        with prec30.workdps():
            expected = (mp.log(zeta(2, prec30))
                        + mpf(3) / 2 * zeta_log_deriv(2, prec30)) / mp.pi
            g1 = theorem1a_g_sum(50, prec30)
            g0 = g1.value - sum(
                (mp.log(zeta(mpf(1 + n), prec30))
                 + (n + mpf(1) / 2) * zeta_log_deriv(mpf(1 + n), prec30)) / mp.pi
                for n in range(2, 51))
            assert abs(g0 - expected) < mpf(10) ** -(prec30.target_digits)

    def test_tail_honesty(self, prec30):
        g50 = theorem1a_g_sum(50, prec30)
        g200 = theorem1a_g_sum(200, prec30)
        with prec30.workdps():
            assert abs(g50.value - g200.value) <= g50.tail_bound


class TestEulerMaclaurinEstimate:
    def test_frozen_value(self, prec40):
        v = euler_maclaurin_g_estimate(prec40)
        with prec40.workdps():
            assert abs(v - mpf(EM_FROZEN)) < mpf(10) ** -25

    def test_published_ten_digits(self, prec40):
        # printed value -0.2994461350; ours rounds to ...49, within 1e-10
        v = euler_maclaurin_g_estimate(prec40)
        with prec40.workdps():
            assert abs(v - mpf("-0.2994461350")) < mpf(10) ** -10

    def test_gap_to_series(self, prec40):
        # the estimate sits ~3.168e-4 from the 50-term sum
        g = theorem1a_g_sum(50, prec40)
        v = euler_maclaurin_g_estimate(prec40)
        with prec40.workdps():
            gap = abs(v - g.value)
            assert abs(gap - mpf("3.16757675e-4")) < mpf(10) ** -11

    def test_f_is_derivative_of_weighted_log(self, prec30):
        # f(x) = ln zeta(1+x) + (x+1/2) zeta'/zeta(1+x) equals
        # d/dx[(x+1/2) ln zeta(1+x)], checked by finite differences
        with prec30.workdps():
            h = mpf(10) ** -(prec30.working_digits // 3)
            for x in (mpf(1), mpf(2), mpf(3)):
                g = lambda u: (u + mpf(1) / 2) * mp.log(zeta(1 + u, prec30))
                fd = (g(x + h) - g(x - h)) / (2 * h)
                f = mp.log(zeta(1 + x, prec30)) + (x + mpf(1) / 2) * zeta_log_deriv(1 + x, prec30)
                assert abs(f - fd) < mpf(10) ** -(prec30.target_digits - 3)


class TestLogDerivSum:
    def test_first_term_composition(self, prec30):
        s = log_zeta_logderiv_sum(2, 1, 10, prec30)
        with prec30.workdps():
            x0 = mpf(2) + mp.pi / 2
            first = mp.log(zeta(x0, prec30)) + (mp.pi / 2) * zeta_log_deriv(x0, prec30)
            rest = s.value - first
            s_shift = sum(
                mp.log(zeta(x0 + mp.pi * n, prec30))
                + (mp.pi / 2 + mp.pi * n) * zeta_log_deriv(x0 + mp.pi * n, prec30)
                for n in range(1, 11))
            assert abs(rest - s_shift) < mpf(10) ** -(prec30.target_digits)

    def test_limit_case_matches_g_sum(self, prec30):
        # at b = 1/2, a = pi the n >= 1 terms are exactly the g-sum terms
        with prec30.workdps():
            total = mpf(0)
            for n in range(1, 61):
                x = mpf(1) + n
                total += mp.log(zeta(x, prec30)) + (n + mpf(1) / 2) * zeta_log_deriv(x, prec30)
            g = theorem1a_g_sum(60, prec30)
            assert abs(total / mp.pi - g.value) < mpf(10) ** -(prec30.target_digits)

    def test_doubling_within_tail(self, prec30):
        s1 = log_zeta_logderiv_sum(mpf("0.6"), 2, 40, prec30)
        s2 = log_zeta_logderiv_sum(mpf("0.6"), 2, 160, prec30)
        with prec30.workdps():
            assert abs(s1.value - s2.value) <= s1.tail_bound

    def test_envelope_for_log_deriv(self, prec30):
        # |zeta'(x)/zeta(x)| <= 2 ln2 2^-x for x >= 4 (documented tail envelope)
        with prec30.workdps():
            for x in (4, 6, 9, 15, 30):
                v = abs(zeta_log_deriv(mpf(x), prec30))
                assert v <= 2 * mp.log(2) * mpf(2) ** -x, x
