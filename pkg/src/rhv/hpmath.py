"""Arbitrary-precision kernels: zeta, zeta'/zeta, log|zeta|, continuous arguments.

Everything here is built on mpmath's mpf/mpc arithmetic, but the special
functions themselves are evaluated by our own Euler-Maclaurin and Stirling
kernels so that every value carries an elementary, checkable error bound:

    zeta(s)   = sum_{n<N} n^-s + N^-s/2 + N^(1-s)/(s-1)
                + sum_k B_2k/(2k)! * N^(1-s-2k) * prod_{j<2k-1}(s+j) + R
    lnGamma(z) = (z-1/2) ln z - z + ln(2pi)/2 + sum_k B_2k/((2k)(2k-1) z^(2k-1)) + R

with the remainder in each case certified by the first omitted term.  For
Re s < 0 zeta is continued with the reflection relation (see
``functional_equation_rhs``).  mpmath's own zeta/loggamma are used in the
test suite as an independent oracle, never as the production path.

Precision is threaded explicitly through :class:`PrecisionSpec`; no function
reads the ambient mpmath context.  Complex points are plain ``mpmath.mpc``
values (finite components enforced at the boundaries); wrapping them in a
dedicated class would buy nothing here.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp
from mpmath import mpc, mpf

from .errors import (
    DomainError,
    GammaPole,
    OutOfTable,
    PoleAtOne,
    PrecisionUnreachable,
    SingularPoint,
    StepCollapse,
    ZeroDenominator,
)

__all__ = [
    "PrecisionSpec",
    "BranchConfig",
    "branch_config",
    "bernoulli",
    "bernoulli_fraction",
    "zeta",
    "zeta_deriv",
    "zeta_log_deriv",
    "log_abs_zeta",
    "log_gamma",
    "arg_gamma",
    "digamma",
    "functional_equation_rhs",
    "ZetaArgTracker",
    "arg_zeta_continuous",
    "log_abs_zeta_envelope",
    "arg_zeta_envelope",
    "arg_gamma_envelope",
]

_GUARD = 8  # extra decimal digits carried inside every kernel


@dataclass(frozen=True)
class PrecisionSpec:
    """Working precision and tolerance policy shared by all kernels.

    working_digits: decimal digits carried by every intermediate value.
    target_digits: digits the caller actually wants; must leave at least
        10 guard digits below working_digits.
    max_refinement_levels: cap on adaptive subdivision / step halving.
    """

    working_digits: int = 50
    target_digits: int | None = None
    max_refinement_levels: int = 350

    def __post_init__(self):
        if self.target_digits is None:
            object.__setattr__(self, "target_digits",
                               max(5, self.working_digits - 15))
        if self.working_digits < 1 or self.target_digits < 1:
            raise DomainError("digit counts must be positive")
        if self.working_digits < self.target_digits + 10:
            raise DomainError("working_digits must exceed target_digits by >= 10 guard digits")
        if self.max_refinement_levels < 1:
            raise DomainError("max_refinement_levels must be positive")

    def workdps(self, extra: int = _GUARD):
        return mp.workdps(self.working_digits + extra)

    @property
    def kernel_tol(self) -> mpf:
        """Absolute error carried by kernel outputs."""
        return mpf(10) ** (-(self.working_digits - 2))

    @property
    def target_tol(self) -> mpf:
        return mpf(10) ** (-self.target_digits)


# ---------------------------------------------------------------------------
# Bernoulli numbers (exact rationals, grown on demand)
# ---------------------------------------------------------------------------

_BERNOULLI_LIMIT = 2048
_bern_cache: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def bernoulli_fraction(m: int) -> Fraction:
    """Exact Bernoulli number B_m (B_1 = -1/2 convention).

    Grown on demand with sum_{j<=m} C(m+1, j) B_j = 0, exact arithmetic.
    """
    from math import comb

    if m < 0 or m > _BERNOULLI_LIMIT:
        raise OutOfTable(f"B_{m} outside table limit {_BERNOULLI_LIMIT}")
    while len(_bern_cache) <= m:
        k = len(_bern_cache)
        if k % 2:
            _bern_cache.append(Fraction(0))
            continue
        s = sum(comb(k + 1, j) * _bern_cache[j] for j in range(k))
        _bern_cache.append(Fraction(-s, k + 1))
    return _bern_cache[m]


def bernoulli(m: int, prec: PrecisionSpec | None = None) -> mpf:
    """B_m as an mpf at working precision; m must be even and >= 2 (or 0)."""
    if m != 0 and (m < 2 or m % 2):
        raise DomainError("only even Bernoulli indices are tabulated (odd ones vanish)")
    frac = bernoulli_fraction(m)
    prec = prec or PrecisionSpec()
    with prec.workdps():
        return mpf(frac.numerator) / frac.denominator


# ---------------------------------------------------------------------------
# Euler-Maclaurin zeta and its s-derivative
# ---------------------------------------------------------------------------

_ln_cache: dict[tuple[int, int], mpf] = {}


def _ln(n: int) -> mpf:
    key = (n, mp.mp.prec)
    v = _ln_cache.get(key)
    if v is None:
        v = mp.log(n)
        _ln_cache[key] = v
    return v


def _em_sums(s, dps: int, want_deriv: bool):
    """Shared Euler-Maclaurin evaluation of zeta (and optionally zeta')."""
    t = abs(mp.im(s)) if isinstance(s, mpc) else mpf(0)
    N = int(0.52 * dps + 0.30 * float(t) + 10)
    tol = mpf(10) ** (-(dps + 4))
    for _attempt in range(4):
        acc = mpf(1) if not isinstance(s, mpc) else mpc(1)
        dacc = acc * 0
        for n in range(2, N):
            term = mp.exp(-s * _ln(n))
            acc += term
            if want_deriv:
                dacc -= _ln(n) * term
        lnN = _ln(N)
        Ns = mp.exp(-s * lnN)          # N^-s
        acc += Ns / 2 + Ns * N / (s - 1)
        if want_deriv:
            dacc += -lnN * Ns / 2 - Ns * N * (lnN / (s - 1) + 1 / (s - 1) ** 2)
        rising = s                      # prod_{j=0}^{2k-2}(s+j), k = 1
        harm = 1 / s if s != 0 else s * 0   # reciprocal sum of the product's factors
        Npow = Ns / N                   # N^(1-s-2k), k = 1
        k = 1
        ok = False
        prev_T = None
        while 2 * k <= int(2.8 * dps) + 60:
            b2k = bernoulli_fraction(2 * k)
            coef = (mpf(b2k.numerator) / b2k.denominator) / mp.factorial(2 * k)
            T = coef * Npow * rising
            acc += T
            if want_deriv:
                dacc += T * (harm - lnN)
            if abs(T) < tol:
                ok = True
                break
            if prev_T is not None and abs(T) > 4 * abs(prev_T):
                break  # divergence onset; restart with larger N
            prev_T = T
            rising *= (s + 2 * k - 1) * (s + 2 * k)
            harm += 1 / (s + 2 * k - 1) + 1 / (s + 2 * k)
            Npow /= N * N
            k += 1
        if ok:
            return acc, dacc
        N = int(N * 1.7) + 8
    raise PrecisionUnreachable(f"Euler-Maclaurin zeta failed at s={s}, dps={dps}")


def _as_point(s):
    s = mp.mpmathify(s)
    if isinstance(s, mpc):
        if not (mp.isfinite(s.real) and mp.isfinite(s.imag)):
            raise DomainError("non-finite complex point")
        if s.imag == 0:
            return s.real
        return s
    if not mp.isfinite(s):
        raise DomainError("non-finite point")
    return s


def zeta(s, prec: PrecisionSpec) -> mpc | mpf:
    """zeta(s) anywhere except s = 1, via Euler-Maclaurin plus reflection.

    Absolute error <= 10^(-working_digits + 2).
    """
    with prec.workdps():
        s = _as_point(s)
        if s == 1:
            raise PoleAtOne("zeta(1) requested")
        dps = prec.working_digits + _GUARD - 2
        if mp.re(s) >= 0:
            val, _ = _em_sums(s, dps, False)
            return +val
        return _reflected_zeta(s, prec)


def zeta_deriv(s, prec: PrecisionSpec) -> mpc | mpf:
    """zeta'(s) for Re s >= 0 (Euler-Maclaurin) or Re s < 0 (reflected)."""
    with prec.workdps():
        s = _as_point(s)
        if s == 1:
            raise PoleAtOne("zeta'(1) requested")
        dps = prec.working_digits + _GUARD - 2
        if mp.re(s) >= 0:
            _, dval = _em_sums(s, dps, True)
            return +dval
        # zeta'(s) = zeta(s) * (zeta'/zeta)(s) via the reflected log-derivative
        return zeta(s, prec) * zeta_log_deriv(s, prec)


def zeta_log_deriv(s, prec: PrecisionSpec) -> mpc | mpf:
    """zeta'(s)/zeta(s); raises ZeroDenominator on a zero of zeta."""
    with prec.workdps():
        s = _as_point(s)
        if s == 1:
            raise PoleAtOne("zeta'/zeta at the pole")
        if mp.re(s) >= 0:
            dps = prec.working_digits + _GUARD - 2
            val, dval = _em_sums(s, dps, True)
            if abs(val) < prec.kernel_tol:
                raise ZeroDenominator(f"zeta({s}) = 0 to working precision")
            return +(dval / val)
        # reflect: ln zeta(s) = s ln 2 + (s-1) ln pi + ln sin(pi s/2) + lnGamma(1-s) + ln zeta(1-s)
        pi = mp.pi
        return +(mp.log(2) + mp.log(pi)
                 + (pi / 2) / mp.tan(pi * s / 2)
                 - digamma(1 - s, prec)
                 - zeta_log_deriv(1 - s, prec))


def log_abs_zeta(b, t, prec: PrecisionSpec) -> mpf:
    """ln|zeta(b+it)|; finite for any representable point off a zero/pole."""
    with prec.workdps():
        b = mpf(b)
        t = mpf(t)
        s = mpc(b, t) if t != 0 else b
        v = zeta(s, prec)
        av = abs(v)
        if av == 0 or av < mpf(10) ** (-(prec.working_digits + 4)):
            raise SingularPoint(f"zeta({s}) vanishes to working precision")
        return +mp.log(av)


# ---------------------------------------------------------------------------
# log-Gamma (principal branch), arg Gamma, digamma
# ---------------------------------------------------------------------------

def _is_nonpositive_int(x) -> bool:
    return mp.im(x) == 0 and mp.re(x) <= 0 and mp.isint(mp.re(x))


def log_gamma(z, prec: PrecisionSpec) -> mpc | mpf:
    """Principal lnGamma(z): Stirling series after shifting Re z upward.

    Continuous on the plane cut along the nonpositive real axis; for Im z > 0
    its imaginary part is the continuous argument of Gamma along vertical
    lines with the natural (principal-limit) value at t -> 0+.
    """
    with prec.workdps():
        z = _as_point(z)
        if _is_nonpositive_int(z):
            raise GammaPole(f"Gamma pole at {z}")
        if mp.im(z) < 0:
            return mp.conj(log_gamma(mp.conj(z), prec))
        dps = prec.working_digits + _GUARD - 2
        shift_to = 0.37 * dps + 4
        n = max(0, int(shift_to - mp.re(z)) + 1)
        w = z + n
        # Stirling at w
        lnw = mp.log(w)
        acc = (w - mpf(1) / 2) * lnw - w + mp.log(2 * mp.pi) / 2
        tol = mpf(10) ** (-(dps + 4))
        wpow = 1 / w
        w2 = w * w
        k = 1
        while True:
            b2k = bernoulli_fraction(2 * k)
            T = (mpf(b2k.numerator) / b2k.denominator) / ((2 * k) * (2 * k - 1)) * wpow
            acc += T
            if abs(T) < tol:
                break
            if 2 * k > 2 * dps + 40:
                raise PrecisionUnreachable(f"Stirling series failed at z={z}")
            wpow /= w2
            k += 1
        # undo the recursion Gamma(z+n) = z(z+1)...(z+n-1) Gamma(z), principal logs
        for j in range(n):
            acc -= mp.log(z + j)
        return +acc


def arg_gamma(z, prec: PrecisionSpec) -> mpf:
    """Continuous-in-t argument of Gamma(x0 + it) with its natural initial value.

    At t = 0 the natural limits are 0 for x0 > 0 and -ceil(-x0)*pi for
    noninteger x0 < 0 (the limit of the principal branch from above).
    """
    with prec.workdps():
        z = _as_point(z)
        if mp.im(z) == 0:
            x = mp.re(z)
            if x > 0:
                return mpf(0)
            if _is_nonpositive_int(z):
                raise GammaPole(f"Gamma pole at {z}")
            return -mp.ceil(-x) * mp.pi
        return +mp.im(log_gamma(z, prec))


def digamma(z, prec: PrecisionSpec) -> mpc | mpf:
    """psi(z) by Stirling with upward recursion psi(z) = psi(z+1) - 1/z."""
    with prec.workdps():
        z = _as_point(z)
        if _is_nonpositive_int(z):
            raise GammaPole(f"digamma pole at {z}")
        if mp.im(z) < 0:
            return mp.conj(digamma(mp.conj(z), prec))
        dps = prec.working_digits + _GUARD - 2
        shift_to = 0.37 * dps + 4
        n = max(0, int(shift_to - mp.re(z)) + 1)
        w = z + n
        acc = mp.log(w) - 1 / (2 * w)
        tol = mpf(10) ** (-(dps + 4))
        w2 = w * w
        wpow = 1 / w2
        k = 1
        while True:
            b2k = bernoulli_fraction(2 * k)
            T = (mpf(b2k.numerator) / b2k.denominator) / (2 * k) * wpow
            acc -= T
            if abs(T) < tol:
                break
            if 2 * k > 2 * dps + 40:
                raise PrecisionUnreachable(f"digamma series failed at z={z}")
            wpow /= w2
            k += 1
        for j in range(n):
            acc -= 1 / (z + j)
        return +acc


def _reflected_zeta(s, prec: PrecisionSpec):
    """zeta(s) for Re s < 0 via the reflection relation."""
    if mp.im(s) == 0:
        # 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s); sinpi is exact at integers,
        # so trivial zeros come out exactly zero
        x = mp.re(s)
        sp = mp.sinpi(x / 2)
        if sp == 0:
            return mpf(0)
        return +(mpf(2) ** x * mp.pi ** (x - 1) * sp
                 * mp.exp(log_gamma(1 - x, prec)) * zeta(1 - x, prec))
    # symmetric form pi^(s-1/2) Gamma((1-s)/2)/Gamma(s/2) zeta(1-s)
    lg = log_gamma((1 - s) / 2, prec) - log_gamma(s / 2, prec)
    return +(mp.pi ** (s - mpf(1) / 2) * mp.exp(lg) * zeta(1 - s, prec))


def functional_equation_rhs(s, prec: PrecisionSpec) -> mpc | mpf:
    """Right-hand side of zeta(s) = pi^(s-1/2) Gamma((1-s)/2)/Gamma(s/2) zeta(1-s).

    Valid for any s where the Gamma factors avoid poles (Im s != 0 always
    qualifies); on the real axis the sine form of the reflection is used so
    that trivial zeros evaluate to exactly 0.
    """
    with prec.workdps():
        s = _as_point(s)
        if s == 0:
            # limit value: the s/2 Gamma pole cancels against zeta(1-s)'s pole
            return mpf(-0.5)
        if mp.im(s) == 0:
            x = mp.re(s)
            if x == 1:
                raise PoleAtOne("reflection at the pole")
            if x > 0 and mp.isint(x) and x % 2 == 0:
                raise GammaPole(f"Gamma(s/2) pole conflict at s={s}")
            return _reflected_zeta_real_any(x, prec)
        return _reflected_zeta(s, prec)


def _reflected_zeta_real_any(x, prec: PrecisionSpec):
    sp = mp.sinpi(x / 2)
    if sp == 0:
        return mpf(0)
    return +(mpf(2) ** x * mp.pi ** (x - 1) * sp
             * mp.exp(log_gamma(1 - x, prec)) * zeta(1 - x, prec))


# ---------------------------------------------------------------------------
# Continuous argument of zeta along vertical lines
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BranchConfig:
    """Vertical line Re s = b plus the branch's initial argument at t -> 0+."""

    b: mpf
    initial_arg: mpf


def branch_config(b, prec: PrecisionSpec | None = None) -> BranchConfig:
    """Branch conventions for arg zeta(b+it):

    - b >= 1: start at 0 (zeta(b) > 0),
    - 1 > b >= 1/2: start at -pi,
    - b <= 0: start at -pi + floor(-b/2)*pi, except at an even negative
      integer, where the line starts on a simple zero and the honest limit
      sits half a jump lower.
    - 0 < b < 1/2 is rejected: no convention is defined there.
    """
    prec = prec or PrecisionSpec()
    with prec.workdps():
        b = mpf(b)
        pi = mp.pi
        if b >= 1:
            return BranchConfig(b, mpf(0))
        if b >= mpf(1) / 2:
            return BranchConfig(b, -pi)
        if b <= 0:
            base = -pi + mp.floor(-b / 2) * pi
            if mp.isint(b) and int(b) % 2 == 0 and b != 0:
                base = -pi + (mp.floor(-b / 2) - 1) * pi + pi / 2
            return BranchConfig(b, +base)
        raise DomainError("no branch convention for 0 < b < 1/2")


class ZetaArgTracker:
    """Phase unwrapping of arg zeta(b+it) upward from t -> 0+.

    Steps of 1/8 are halved whenever a principal phase increment reaches
    pi/2.  A zero of zeta on the line pins the phase; inside the critical
    strip that is expected and is handled as an upward jump of pi (the
    continuous-limit convention, simple zero assumed), with the ordinate
    recorded in :attr:`jumps`.  Elsewhere a collapse raises
    :class:`StepCollapse`.

    Values of zeta smaller than the magnitude guard carry argument noise
    abs_error/|zeta|, so anchors are never placed inside that zone: the
    branch re-anchors at a fixed standoff on both sides of each detected
    zero, and the zero itself is refined (on the b = 1/2 line) by sign
    bisection of Re[e^{i theta(t)} zeta(1/2+it)], which stays reliable down
    to the kernel's absolute error.
    """

    _STEP = mpf(1) / 8
    _MAG_FLOOR = mpf("1e-8")    # below this, arg(zeta) is too noisy to anchor
    _STANDOFF = mpf("1e-7")     # re-anchor distance on each side of a zero

    def __init__(self, branch: BranchConfig, prec: PrecisionSpec):
        self.branch = branch
        self.prec = prec
        self.evaluations = 0
        with prec.workdps():
            self.b = mpf(branch.b)
            # anchor low enough that assigning the limit argument at t0 leaves
            # an offset O(t0 |zeta'/zeta|) below the kernel tolerance
            self._t0 = mpf(10) ** (-(prec.working_digits + 4))
            self._ts = [self._t0]
            self._args = [mpf(branch.initial_arg)]
            self._vals = [self._zeta_at(self._t0)]
            self.jumps: list[mpf] = []
            self.jump_uncertainties: list[mpf] = []
        self._allow_jumps = 0 < branch.b < 1
        self._on_critical_line = branch.b == mpf(1) / 2

    def _zeta_at(self, t):
        self.evaluations += 1
        return zeta(mpc(self.b, t), self.prec)

    @staticmethod
    def _wrap(d):
        pi = mp.pi
        d = mp.fmod(d, 2 * pi)
        if d > pi:
            d -= 2 * pi
        elif d <= -pi:
            d += 2 * pi
        return d

    def _principal_step(self, v_from, v_to):
        return self._wrap(mp.arg(v_to) - mp.arg(v_from))

    def extend(self, t_end):
        """Grow the anchor table up to t_end."""
        with self.prec.workdps():
            t_end = mpf(t_end)
            cascade_floor = mpf("1e-9")
            while self._ts[-1] < t_end:
                t_lo = self._ts[-1]
                v_lo = self._vals[-1]
                a_lo = self._args[-1]
                h = min(self._STEP, t_end - t_lo)
                level = 0
                while True:
                    t_hi = t_lo + h
                    v_hi = self._zeta_at(t_hi)
                    if abs(v_hi) < self._MAG_FLOOR:
                        self._cross_zero(t_lo, v_lo, a_lo, t_hi)
                        break
                    d = self._principal_step(v_lo, v_hi)
                    if abs(d) < mp.pi / 2:
                        self._ts.append(t_hi)
                        self._args.append(a_lo + d)
                        self._vals.append(v_hi)
                        break
                    h /= 2
                    level += 1
                    if h < cascade_floor:
                        self._cross_zero(t_lo, v_lo, a_lo, t_lo + 2 * h)
                        break
                    if level > self.prec.max_refinement_levels:
                        raise StepCollapse("refinement cap hit while unwrapping")

    def _cross_zero(self, t_lo, v_lo, a_lo, t_near):
        """Handle a zero of zeta adjacent to t_near: jump by +pi and re-anchor."""
        if not self._allow_jumps:
            raise StepCollapse(
                f"phase pinned near t={mp.nstr(t_near, 12)} on Re s = {self.b}, "
                "where the branch admits no zero")
        lo, hi = t_lo, t_near + 10 * self._STANDOFF
        if self._on_critical_line:
            t_zero, unc = self._bisect_rotated_real(lo, hi)
        else:
            t_zero, unc = (lo + hi) / 2, (hi - lo) / 2
        t_post = t_zero + self._STANDOFF
        v_post = self._zeta_at(t_post)
        if abs(v_post) < self._MAG_FLOOR / 100:
            raise StepCollapse("standoff point still inside the zero's noise zone")
        d = self._principal_step(v_lo, v_post)
        self.jumps.append(t_zero)
        self.jump_uncertainties.append(unc)
        self._ts.append(t_post)
        self._args.append(a_lo + self._wrap(d - mp.pi) + mp.pi)
        self._vals.append(v_post)

    def _rotated_real(self, t):
        """Re of e^{i theta(t)} zeta(1/2+it), real-valued on the critical line."""
        theta = arg_gamma(mpc(mpf(1) / 4, t / 2), self.prec) - t / 2 * mp.log(mp.pi)
        return mp.re(mp.expjpi(theta / mp.pi) * self._zeta_at(t))

    def _bisect_rotated_real(self, lo, hi):
        """Sign bisection of the rotated-real combination; noise-robust."""
        floor = mpf(10) ** (-(self.prec.working_digits - 4))
        f_lo = self._rotated_real(lo)
        f_hi = self._rotated_real(hi)
        if mp.sign(f_lo) == mp.sign(f_hi):
            raise StepCollapse("zero bracket lost its sign change")
        while hi - lo > floor:
            mid = (lo + hi) / 2
            f_mid = self._rotated_real(mid)
            if mp.sign(f_mid) == mp.sign(f_lo):
                lo, f_lo = mid, f_mid
            else:
                hi, f_hi = mid, f_mid
        return (lo + hi) / 2, hi - lo

    def value(self, t) -> mpf:
        """arg zeta(b+it) on this branch."""
        with self.prec.workdps():
            t = mpf(t)
            if t <= self._t0:
                return self._args[0]
            if t > self._ts[-1]:
                self.extend(t)
            i = bisect.bisect_right(self._ts, t) - 1
            # never step across a recorded jump
            for j in self.jumps:
                if self._ts[i] <= j < t:
                    raise StepCollapse("query straddles a recorded jump anchor")
            v = self._zeta_at(t)
            d = self._principal_step(self._vals[i], v)
            if abs(d) > 0.45 * mp.pi and t - self._ts[i] > mpf(10) ** (-(self.prec.working_digits - 6)):
                # local anchor too coarse; densify between
                mid = (self._ts[i] + t) / 2
                self._insert_anchor(i, mid)
                return self.value(t)
            return self._args[i] + d

    def _insert_anchor(self, i, t_mid):
        v = self._zeta_at(t_mid)
        d = self._principal_step(self._vals[i], v)
        if abs(d) >= mp.pi / 2:
            raise StepCollapse("anchor densification failed (zero adjacent to node)")
        self._ts.insert(i + 1, t_mid)
        self._vals.insert(i + 1, v)
        self._args.insert(i + 1, self._args[i] + d)


def arg_zeta_continuous(branch: BranchConfig, t, prec: PrecisionSpec) -> mpf:
    """One-shot continuous argument; repeated queries should hold a tracker."""
    if mpf(t) < 0:
        raise DomainError("t must be nonnegative")
    tracker = ZetaArgTracker(branch, prec)
    return tracker.value(t)


# ---------------------------------------------------------------------------
# Documented growth envelopes (validated empirically in the test suite)
# ---------------------------------------------------------------------------

def log_abs_zeta_envelope(b) -> tuple[mpf, mpf]:
    """(c1, c2) with |ln|zeta(b+it)|| <= c1 + c2 ln(2+t) for all t >= 0.

    Conservative for 0 <= b <= 1 at (5, 2); below the strip the reflection
    factor adds roughly (1/2 - b) ln t, reflected in the returned constants.
    """
    b = mpf(b)
    if b >= 0:
        return (mpf(5) + 2 * max(mpf(0), 1 - b), mpf(2))
    return (mpf(8) + 3 * abs(b), mpf(2) + (mpf(1) / 2 - b))


def arg_zeta_envelope(b) -> tuple[mpf, mpf]:
    """(c1, c2) with |arg zeta(b+it)| <= c1 + c2 (2+t) ln(2+t) on the tracked branch."""
    b = mpf(b)
    return (mpf(8) + 2 * abs(b), mpf(1) + max(mpf(0), (mpf(1) / 2 - b) / 4))


def arg_gamma_envelope() -> tuple[mpf, mpf]:
    """(c1, c2) with |arg Gamma(x0 + it)| <= c1 + c2 (2+t) ln(2+t) for |x0| <= 4."""
    return (mpf(10), mpf(1))
