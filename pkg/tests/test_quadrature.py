"""Panel engine, singular handling, oscillatory panels, tail certificates."""

import mpmath as mp
import pytest
from mpmath import mpc, mpf

from rhv import hpmath
from rhv.errors import DomainError, UnboundedTail
from rhv.hpmath import PrecisionSpec, ZetaArgTracker, branch_config
from rhv.quadrature import (
    IntegrandKind,
    IntegrandSpec,
    Weight,
    WeightKind,
    gauss_legendre_nodes,
    integrate,
    integrate_real_axis_oscillatory,
    tail_bound,
)


def _unit(f, weight):
    return IntegrandSpec(kind=IntegrandKind.CUSTOM, weight=weight, f=f, label="test")


class TestClosedForms:
    def test_exp_decay_constant(self, prec40):
        # int_0^40 e^{-2t} dt = (1 - e^{-80})/2
        with prec40.workdps():
            spec = _unit(lambda t: mpf(1), Weight(WeightKind.EXP_DECAY, mpf(2)))
            r = integrate(spec, (mpf(0), mpf(40)), prec40)
            truth = (1 - mp.exp(-80)) / 2
            assert abs(r.value - truth) < mpf(10) ** -(prec40.target_digits)
            assert abs(r.value - truth) <= r.total_error

    def test_sech_half(self, prec40):
        # int_0^inf sech(pi t) dt = 1/2, via finite part + certified tail
        with prec40.workdps():
            spec = _unit(lambda t: mpf(1), Weight(WeightKind.SECH, mp.pi))
            r = integrate(spec, (mpf(0), mpf(40)), prec40)
            tail = tail_bound(
                IntegrandSpec(kind=IntegrandKind.LOG_ABS_ZETA_VERTICAL,
                              weight=Weight(WeightKind.SECH, mp.pi),
                              f=lambda t: mpf(1), b=mpf(1) / 2),
                mpf(40), prec40, envelope=(mpf(1), mpf(0)))
            assert abs(r.value - mpf(1) / 2) < tail + r.total_error + mpf(10) ** -40

    def test_t_sech_sq(self, prec40):
        # int_0^inf t sech^2(pi t) dt = ln 2/pi^2
        with prec40.workdps():
            spec = _unit(lambda t: mpf(1), Weight(WeightKind.SECH_SQ_TIMES_T, mp.pi))
            r = integrate(spec, (mpf(0), mpf(40)), prec40)
            assert abs(r.value - mp.log(2) / mp.pi ** 2) < mpf(10) ** -(prec40.target_digits)

    def test_full_periods_of_sine(self, prec30):
        # int_0^K sin(2 pi x) dx = 0 for integer K
        with prec30.workdps():
            spec = IntegrandSpec(kind=IntegrandKind.CUSTOM,
                                 weight=Weight(WeightKind.SIN, 2 * mp.pi),
                                 f=lambda x: mpf(1), b=mpf(25), label="sin")
            r = integrate_real_axis_oscillatory(spec, mpf(12), prec30)
            assert abs(r.value) < mpf(10) ** -(prec30.target_digits)


class TestRuleProperties:
    def test_gl_polynomial_exactness(self, prec50):
        # the 32-point rule integrates degree 63 exactly
        with prec50.workdps():
            xs, ws = gauss_legendre_nodes(32, prec50.working_digits + 8)
            val = mp.fsum(w * x ** 63 for x, w in zip(xs, ws))
            assert abs(val) < mpf(10) ** -50  # odd power over [-1,1]
            val = mp.fsum(w * x ** 62 for x, w in zip(xs, ws))
            assert abs(val - mpf(2) / 63) < mpf(10) ** -50

    def test_refinement_monotonicity(self, prec30):
        # halving a smooth panel cuts the paired-rule estimate by >= 2x
        from rhv.quadrature import _gl_panel
        with prec30.workdps():
            spec = _unit(lambda t: mp.exp(-t * t) * mp.cos(3 * t),
                         Weight(WeightKind.NONE, mpf(1)))
            _, e_whole, _ = _gl_panel(spec, mpf(0), mpf(4), prec30, None)
            _, e_l, _ = _gl_panel(spec, mpf(0), mpf(2), prec30, None)
            _, e_r, _ = _gl_panel(spec, mpf(2), mpf(4), prec30, None)
            assert e_l + e_r < e_whole / 2

    def test_split_vs_unsplit_log_singularity(self, prec30):
        # ln|x - x0| integrated with and without the singularity registered
        with prec30.workdps():
            x0 = mpf(1) / 3
            f = lambda x: mp.log(abs(x - x0)) if x != x0 else mpf(0)
            w = Weight(WeightKind.EXP_DECAY, mpf(1))
            split = integrate(IntegrandSpec(kind=IntegrandKind.CUSTOM, weight=w, f=f,
                                            singular_points=(x0,)), (mpf(0), mpf(4)), prec30)
            blind = integrate(IntegrandSpec(kind=IntegrandKind.CUSTOM, weight=w, f=f),
                              (mpf(0), mpf(4)), prec30)
            assert abs(split.value - blind.value) <= split.total_error + blind.total_error
            # closed form: int ln|x-x0| e^-x over [0,4]
            ref = mp.quad(lambda x: mp.log(abs(x - x0)) * mp.exp(-x), [0, x0, 4])
            assert abs(split.value - ref) < mpf(10) ** -(prec30.target_digits - 2)

    def test_doubling_t_max_within_tail_bound(self, prec30):
        with prec30.workdps():
            b = mpf(1) / 2
            spec = IntegrandSpec(kind=IntegrandKind.LOG_ABS_ZETA_VERTICAL,
                                 weight=Weight(WeightKind.SECH, mp.pi),
                                 f=lambda t: hpmath.log_abs_zeta(b, t, prec30), b=b)
            r1 = integrate(spec, (mpf(0), mpf(20)), prec30)
            tail1 = tail_bound(spec, mpf(20), prec30)
            r2 = integrate(spec, (mpf(0), mpf(40)), prec30)
            assert abs(r2.value - r1.value) <= tail1


def _exact_log_tail(c1, c2, r, T):
    # int_T^inf (c1 + c2 ln(2+t)) e^{-rt} dt, exactly (E1 form)
    return (c1 * mp.exp(-r * T) / r
            + c2 * (mp.exp(-r * T) * mp.log(2 + T) / r
                    + mp.exp(2 * r) * mp.expint(1, r * (2 + T)) / r))


class TestTailBounds:
    def test_sech_200_certificate(self):
        # envelope (5, 2) against sech(pi t) beyond 200: exact closed-form oracle
        prec = PrecisionSpec(working_digits=30)
        with mp.workdps(60):
            spec = IntegrandSpec(kind=IntegrandKind.LOG_ABS_ZETA_VERTICAL,
                                 weight=Weight(WeightKind.SECH, mp.pi),
                                 f=lambda t: mpf(0), b=mpf(1) / 2)
            B = tail_bound(spec, mpf(200), prec, envelope=(mpf(5), mpf(2)))
            oracle = 2 * _exact_log_tail(mpf(5), mpf(2), mp.pi, mpf(200))
            assert oracle <= B < mpf(10) ** -270

    def test_exp_2pi_50_certificate(self):
        prec = PrecisionSpec(working_digits=30)
        with mp.workdps(60):
            spec = IntegrandSpec(kind=IntegrandKind.LOG_ABS_ZETA_VERTICAL,
                                 weight=Weight(WeightKind.EXP_DECAY, 2 * mp.pi),
                                 f=lambda t: mpf(0), b=mpf(1) / 2)
            B = tail_bound(spec, mpf(50), prec, envelope=(mpf(5), mpf(2)))
            oracle = _exact_log_tail(mpf(5), mpf(2), 2 * mp.pi, mpf(50))
            assert oracle <= B < mpf(10) ** -130

    def test_tail_monotone_in_t(self, prec30):
        with prec30.workdps():
            spec = IntegrandSpec(kind=IntegrandKind.LOG_ABS_ZETA_VERTICAL,
                                 weight=Weight(WeightKind.EXP_DECAY, mpf(2)),
                                 f=lambda t: mpf(0), b=mpf(1) / 2)
            bounds = [tail_bound(spec, mpf(T), prec30) for T in (20, 40, 80, 160)]
            assert all(b2 < b1 for b1, b2 in zip(bounds, bounds[1:]))
            assert all(b > 0 for b in bounds)

    def test_oscillatory_unbounded(self, prec30):
        spec = IntegrandSpec(kind=IntegrandKind.LOG_ABS_ZETA_REAL_AXIS,
                             weight=Weight(WeightKind.SIN, mpf(2)),
                             f=lambda t: mpf(0), b=mpf(1) / 2)
        with pytest.raises(UnboundedTail):
            tail_bound(spec, mpf(50), prec30)

    def test_x_max_snapping_enforced(self, prec30):
        with prec30.workdps():
            spec = IntegrandSpec(kind=IntegrandKind.CUSTOM,
                                 weight=Weight(WeightKind.SIN, 2 * mp.pi),
                                 f=lambda x: mpf(1), b=mpf(25))
            with pytest.raises(DomainError):
                integrate_real_axis_oscillatory(spec, mpf("12.3"), prec30)


class TestEnvelopes:
    """The documented growth envelopes must actually dominate samples."""

    def test_log_abs_zeta_envelope(self, prec30):
        with prec30.workdps():
            for b in (mpf(1) / 2, mpf(0), mpf(-7) / 2):
                c1, c2 = hpmath.log_abs_zeta_envelope(b)
                for t in (mpf("0.5"), mpf(3), mpf(14), mpf(47), mpf(160), mpf(420)):
                    v = abs(hpmath.log_abs_zeta(b, t, prec30))
                    assert v <= c1 + c2 * mp.log(2 + t), (b, t)

    def test_arg_zeta_envelope(self, prec30):
        with prec30.workdps():
            for b, tmax in ((mpf(1) / 2, 40), (mpf(0), 30), (mpf(-7) / 2, 30)):
                c1, c2 = hpmath.arg_zeta_envelope(b)
                tracker = ZetaArgTracker(branch_config(b, prec30), prec30)
                for t in (mpf(1), mpf(8), mpf(tmax)):
                    v = abs(tracker.value(t))
                    assert v <= c1 + c2 * (2 + t) * mp.log(2 + t), (b, t)

    def test_arg_gamma_envelope(self, prec30):
        with prec30.workdps():
            c1, c2 = hpmath.arg_gamma_envelope()
            for x0 in (mpf(3) / 4, mpf(-1) / 4, mpf(0)):
                for t in (mpf(1), mpf(20), mpf(150)):
                    v = abs(hpmath.arg_gamma(mpc(x0, t), prec30))
                    assert v <= c1 + c2 * (2 + t) * mp.log(2 + t), (x0, t)


class TestGoldenIntegral:
    @pytest.mark.slow
    def test_critical_line_sech_integral_30_digits(self):
        # quadrature of ln|zeta(1/2+it)| sech(pi t) over exactly [0, 200]
        prec = PrecisionSpec(working_digits=48)
        with prec.workdps():
            golden = mpf("0.08346229122167157875281209580070247")
            b = mpf(1) / 2
            spec = IntegrandSpec(kind=IntegrandKind.LOG_ABS_ZETA_VERTICAL,
                                 weight=Weight(WeightKind.SECH, mp.pi),
                                 f=lambda t: hpmath.log_abs_zeta(b, t, prec), b=b)
            r = integrate(spec, (mpf(0), mpf(200)), prec)
            assert abs(r.value - golden) < mpf(10) ** -31
