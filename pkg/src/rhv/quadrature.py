"""Adaptive arbitrary-precision quadrature for the identity integrands.

The engine is built from three pieces:

- fixed-order Gauss-Legendre panels with a paired half-order rule whose
  difference is the panel's discretization estimate, bisected adaptively;
- tanh-sinh (double-exponential) panels applied on the two sides of every
  *registered* singular point, where the integrand has an integrable
  logarithmic blow-up (the zeta pole on the real axis, trivial zeros, and
  endpoint singularities);
- closed-form tail certificates for the decaying weights, integrating the
  documented growth envelopes of the integrand against the weight.

Zeros of zeta sitting on an integration line are *not* registered: the
weighted log-spike they create is resolved by plain bisection, which stops
as soon as the spike's weighted contribution falls below the local budget.
Jump discontinuities of a tracked argument (an on-line zero crossed by the
branch) are registered split points, so no panel straddles one.

Panels are independent; the final value is the left-to-right sum of panel
values at working precision, which makes results reproducible bit-for-bit
at a fixed precision regardless of evaluation order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence

import mpmath as mp
from mpmath import mpf

from . import hpmath
from .errors import DomainError, NonConvergent, SingularPoint, UnboundedTail
from .hpmath import PrecisionSpec

__all__ = [
    "WeightKind",
    "Weight",
    "IntegrandKind",
    "IntegrandSpec",
    "QuadResult",
    "integrate",
    "integrate_real_axis_oscillatory",
    "tail_bound",
    "gauss_legendre_nodes",
]


class WeightKind(enum.Enum):
    EXP_DECAY = "exp_decay"        # e^(-a t)
    SECH = "sech"                  # 1/cosh(a t)
    SECH_SQ_TIMES_T = "sech_sq_t"  # t/cosh^2(a t)
    SIN = "sin"                    # sin(a x)
    COS = "cos"                    # cos(a x)
    NONE = "none"                  # 1 (bare integrand)


@dataclass(frozen=True)
class Weight:
    kind: WeightKind
    a: mpf

    def __post_init__(self):
        if mpf(self.a) <= 0:
            raise DomainError("weight parameter a must be positive")

    @property
    def oscillatory(self) -> bool:
        return self.kind in (WeightKind.SIN, WeightKind.COS)

    @property
    def decay_rate(self) -> mpf:
        """r with weight envelope <= C e^(-r t)."""
        a = mpf(self.a)
        if self.kind in (WeightKind.EXP_DECAY, WeightKind.SECH):
            return a
        if self.kind is WeightKind.SECH_SQ_TIMES_T:
            return 2 * a
        raise UnboundedTail("no decay rate for oscillatory or unit weights")

    def __call__(self, t):
        if self.kind is WeightKind.NONE:
            return mpf(1)
        a = mpf(self.a)
        if self.kind is WeightKind.EXP_DECAY:
            return mp.exp(-a * t)
        if self.kind is WeightKind.SECH:
            return 1 / mp.cosh(a * t)
        if self.kind is WeightKind.SECH_SQ_TIMES_T:
            return t / mp.cosh(a * t) ** 2
        if self.kind is WeightKind.SIN:
            return mp.sin(a * t)
        return mp.cos(a * t)


class IntegrandKind(enum.Enum):
    LOG_ABS_ZETA_VERTICAL = "log_abs_zeta_vertical"
    ARG_ZETA_VERTICAL = "arg_zeta_vertical"
    LOG_ABS_ZETA_REAL_AXIS = "log_abs_zeta_real_axis"
    ARG_GAMMA_VERTICAL = "arg_gamma_vertical"
    CUSTOM = "custom"


@dataclass
class IntegrandSpec:
    """One weighted integrand: f(x) * weight(x) over nonnegative x.

    ``f`` is the bare factor (e.g. ln|zeta(b+ix)|); the weight is applied by
    the engine.  ``singular_points`` are ordinates of known integrable log
    singularities of f; ``jump_points`` are ordinates of known step
    discontinuities (tracked-argument jumps).  Both become hard panel
    boundaries, the former with double-exponential treatment.
    """

    kind: IntegrandKind
    weight: Weight
    f: Callable
    b: mpf | None = None
    singular_points: tuple = ()
    jump_points: tuple = ()
    label: str = ""

    def __post_init__(self):
        pts = tuple(sorted(mpf(p) for p in self.singular_points))
        object.__setattr__(self, "singular_points", pts)
        if any(p < 0 for p in pts):
            raise DomainError("singular points must be nonnegative")

    def value(self, x):
        return self.f(x) * self.weight(x)


@dataclass(frozen=True)
class QuadResult:
    value: mpf
    truncation_bound: mpf
    discretization_estimate: mpf
    evaluations: int

    @property
    def total_error(self) -> mpf:
        return self.truncation_bound + self.discretization_estimate


# ---------------------------------------------------------------------------
# Gauss-Legendre and tanh-sinh node tables
# ---------------------------------------------------------------------------

_gl_cache: dict = {}


def gauss_legendre_nodes(n: int, dps: int):
    """Nodes/weights of the n-point rule on [-1, 1] at dps digits."""
    key = (n, dps)
    if key in _gl_cache:
        return _gl_cache[key]
    with mp.workdps(dps + 10):
        nodes = []
        weights = []
        for k in range(1, n // 2 + n % 2 + 1):
            x = mp.cos(mp.pi * (k - mpf(1) / 4) / (n + mpf(1) / 2))
            for _ in range(100):
                p0, p1 = mpf(1), x
                for j in range(2, n + 1):
                    p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < mpf(10) ** (-(dps + 6)):
                    break
            p0, p1 = mpf(1), x
            for j in range(2, n + 1):
                p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
            dp = n * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            nodes.append(x)
            weights.append(w)
        xs, ws = [], []
        for x, w in zip(nodes, weights):
            xs.append(-x)
            ws.append(w)
        if n % 2:
            xs.pop()
            ws.pop()
        for x, w in zip(reversed(nodes), reversed(weights)):
            xs.append(x)
            ws.append(w)
        result = (tuple(xs), tuple(ws))
    _gl_cache[key] = result
    return result


_ts_cache: dict = {}


def _tanh_sinh_nodes(level: int, dps: int):
    """Symmetric tanh-sinh nodes on (-1, 1) at 2^-level spacing."""
    key = (level, dps)
    if key in _ts_cache:
        return _ts_cache[key]
    with mp.workdps(dps + 10):
        h = mpf(2) ** (-level)
        pairs = []  # strictly positive nodes; the k = 0 center is added by the panel
        k = 1
        step = 2 if level > 0 else 1
        while True:
            u = k * h
            csh = mp.cosh(u)
            snh = mp.sinh(u)
            g = mp.pi / 2 * snh
            x = mp.tanh(g)
            w = (mp.pi / 2) * csh / mp.cosh(g) ** 2
            if 1 - abs(x) < mpf(10) ** (-(2 * dps + 20)):
                break
            pairs.append((x, w))
            k += step
        result = (h, tuple(pairs))
    _ts_cache[key] = result
    return result


# ---------------------------------------------------------------------------
# Panels
# ---------------------------------------------------------------------------

def _gl_orders(prec: PrecisionSpec):
    """Paired rule orders; scaled up at high precision to keep panels coarse."""
    lo = max(16, int(0.35 * prec.working_digits))
    return lo, 2 * lo


def _eval_point(spec: IntegrandSpec, x, prec: PrecisionSpec, sink):
    try:
        v = spec.value(x)
    except SingularPoint:
        # node fell on a zero of zeta to working precision; jitter one ulp-scale
        x = x * (1 + mpf(10) ** (-(prec.working_digits - 2))) + mpf(10) ** (-(prec.working_digits + 20))
        v = spec.value(x)
    if sink is not None:
        sink.append((x, v))
    return v


def _gl_panel(spec, lo, hi, prec, sink):
    """(value, estimate, evaluations) with the paired-rule error estimate."""
    dps = prec.working_digits + 8
    n_lo, n_hi = _gl_orders(prec)
    xs1, ws1 = gauss_legendre_nodes(n_lo, dps)
    xs2, ws2 = gauss_legendre_nodes(n_hi, dps)
    mid = (lo + hi) / 2
    hw = (hi - lo) / 2
    s1 = mpf(0)
    for x, w in zip(xs1, ws1):
        s1 += w * _eval_point(spec, mid + hw * x, prec, sink)
    s2 = mpf(0)
    for x, w in zip(xs2, ws2):
        s2 += w * _eval_point(spec, mid + hw * x, prec, sink)
    return hw * s2, abs(hw * (s2 - s1)), n_lo + n_hi


def _ts_panel(spec, lo, hi, prec, tol, sink):
    """Tanh-sinh integration of a panel with an endpoint singularity.

    Nodes closer to the singular endpoint than the precision floor are
    dropped; at that distance a log singularity contributes below the
    working-precision noise, and zeta values there are indistinguishable
    from zero anyway.  The dropped mass is folded into the estimate.
    """
    dps = prec.working_digits + 8
    mid = (lo + hi) / 2
    hw = (hi - lo) / 2
    floor = mpf(10) ** (-(prec.working_digits - 2))
    evals = 0
    s_prev = None
    total = mpf(0)
    max_level = 14
    est = mp.inf
    for level in range(max_level + 1):
        h, pairs = _tanh_sinh_nodes(level, dps)
        part = mpf(0)
        for x, w in pairs:
            # both mirrored nodes sit at distance (1-x)*hw from their near endpoint
            if (1 - x) * hw >= floor:
                part += w * _eval_point(spec, mid + hw * x, prec, sink)
                part += w * _eval_point(spec, mid - hw * x, prec, sink)
                evals += 2
        if level == 0:
            part += (mp.pi / 2) * _eval_point(spec, mid, prec, sink)
            evals += 1
            total = part * h
        else:
            total = total / 2 + part * h
        if s_prev is not None:
            dropped = floor * 4 * (prec.working_digits + 10)
            est = abs(total - s_prev) * hw + dropped
            if est < tol:
                return total * hw, est, evals
        s_prev = total
    if est > 256 * tol and mp.isfinite(est):
        raise NonConvergent("tanh-sinh panel failed to converge")
    return total * hw, est if mp.isfinite(est) else tol, evals


def _initial_partition(spec: IntegrandSpec, lo, hi, prec):
    """Panel boundaries: singularities, jumps, then a geometric ladder."""
    cuts = {lo, hi}
    for p in spec.singular_points:
        if lo < p < hi:
            cuts.add(p)
    for p in spec.jump_points:
        p = mpf(p)
        if lo < p < hi:
            cuts.add(p)
    if spec.weight.oscillatory:
        half = mp.pi / spec.weight.a
        # beyond the point where the geometric decay of ln zeta leaves the
        # integrand below tolerance, 8 half-periods per panel are plenty
        b = spec.b if spec.b is not None else mpf(0)
        x_coarse = (prec.target_digits + 14) * mp.log(10) / mp.log(2) - b
        k = 1
        while k * half < hi:
            if k * half > lo:
                cuts.add(k * half)
            k += 1 if k * half <= x_coarse else 8
    else:
        w = mpf(1)
        t = lo + w
        while t < hi:
            cuts.add(t)
            w *= 2
            t += w
    return sorted(cuts)


def _singular_panel_bounds(spec, cuts):
    """Map each panel (lo, hi) to the singular endpoint it touches, if any."""
    sing = set(spec.singular_points)
    out = {}
    for i in range(len(cuts) - 1):
        lo, hi = cuts[i], cuts[i + 1]
        if lo in sing:
            out[(lo, hi)] = lo
        elif hi in sing:
            out[(lo, hi)] = hi
    return out


def integrate(spec: IntegrandSpec, interval, prec: PrecisionSpec,
              tol=None, sink=None) -> QuadResult:
    """Integrate spec.f * weight over [interval[0], interval[1]].

    Panels touching a registered singular point get tanh-sinh treatment; all
    others are Gauss-Legendre pairs, bisected until each panel's estimate
    fits its share of ``tol``.  ``sink``, when given, receives every
    (node, integrand value) pair.
    """
    with prec.workdps():
        lo, hi = mpf(interval[0]), mpf(interval[1])
        if not hi > lo:
            raise DomainError("empty integration interval")
        if tol is None:
            tol = mpf(10) ** (-(prec.target_digits + 2))
        else:
            tol = mpf(tol)
        cuts = _initial_partition(spec, lo, hi, prec)
        singular_of = _singular_panel_bounds(spec, cuts)
        width = hi - lo
        evals = 0
        entries = []  # (lo, value, estimate)
        stack = []
        for i in range(len(cuts) - 1):
            stack.append((cuts[i], cuts[i + 1], 0))
        while stack:
            a, b, depth = stack.pop()
            if (a, b) in singular_of:
                budget = tol * mp.sqrt((b - a) / width) / 4
                v, e, n = _ts_panel(spec, a, b, prec, budget, sink)
                entries.append((a, v, e))
                evals += n
                continue
            v, e, n = _gl_panel(spec, a, b, prec, sink)
            evals += n
            local_tol = tol * max((b - a) / width, mpf(1) / 4096) / 2
            if e <= local_tol or (b - a) < mpf(10) ** (-(prec.working_digits - 6)):
                entries.append((a, v, e))
            else:
                if depth >= prec.max_refinement_levels:
                    raise NonConvergent(
                        f"panel [{mp.nstr(a, 8)}, {mp.nstr(b, 8)}] exhausted refinement levels")
                m = (a + b) / 2
                stack.append((m, b, depth + 1))
                stack.append((a, m, depth + 1))
        entries.sort(key=lambda r: r[0])
        value = mpf(0)
        est = mpf(0)
        for _, v, e in entries:
            value += v
            est += e
        return QuadResult(+value, mpf(0), +(4 * est), evals)


def integrate_real_axis_oscillatory(spec: IntegrandSpec, x_max, prec: PrecisionSpec,
                                    tol=None, sink=None) -> QuadResult:
    """Oscillatory real-axis integral over [0, x_max], x_max a half-period multiple.

    Period panels keep each oscillation lobe polynomial-friendly; registered
    singular points (the zeta pole at x = 1-b, trivial zeros) split panels
    with tanh-sinh treatment.  The truncation bound comes from the geometric
    decay |ln zeta(b+x)| <= 2*2^-(b+x), valid once b + x_max is large.
    """
    with prec.workdps():
        if not spec.weight.oscillatory:
            raise DomainError("use integrate() for decaying weights")
        x_max = mpf(x_max)
        half = mp.pi / spec.weight.a
        ratio = x_max / half
        if abs(ratio - mp.nint(ratio)) > mpf(10) ** (-(prec.working_digits - 8)) * max(1, ratio):
            raise DomainError("x_max must be a multiple of pi/a (half-period)")
        res = integrate(spec, (mpf(0), x_max), prec, tol=tol, sink=sink)
        b = spec.b if spec.b is not None else mpf(0)
        if b + x_max < 20:
            raise DomainError("x_max too small for the geometric tail certificate")
        trunc = 2 * mpf(2) ** (-(b + x_max)) / mp.log(2)
        return QuadResult(res.value, +trunc, res.discretization_estimate, res.evaluations)


# ---------------------------------------------------------------------------
# Tail certificates for decaying weights
# ---------------------------------------------------------------------------

def _poly_exp_tail(coeffs: Sequence, r, T):
    """sum_m c_m * int_T^inf t^m e^(-r t) dt, exactly.

    int_T^inf t^m e^(-rt) dt = e^(-rT) sum_{j=0}^{m} (m!/j!) T^j / r^(m+1-j).
    """
    total = mpf(0)
    for m, c in enumerate(coeffs):
        if c == 0:
            continue
        s = mpf(0)
        mj = mpf(1)  # m!/j!, built downward from j = m
        for j in range(m, -1, -1):
            s += mj * T ** j / r ** (m + 1 - j)
            mj *= j
        total += c * s * mp.exp(-r * T)
    return total


def tail_bound(spec: IntegrandSpec, t_max, prec: PrecisionSpec,
               envelope=None) -> mpf:
    """Certified bound on |integral from t_max to infinity| for decaying weights.

    The integrand factor is bounded by its documented envelope
    (c1 + c2 ln(2+t) for log-of-zeta kinds, c1 + c2 (2+t) ln(2+t) for
    argument kinds), and ln(2+t) <= ln(2+T) + (t-T)/(2+T) turns the product
    into exact polynomial-times-exponential integrals.
    """
    with prec.workdps():
        T = mpf(t_max)
        if T < 10:
            raise DomainError("tail certificate needs t_max >= 10")
        w = spec.weight
        if w.oscillatory:
            raise UnboundedTail("no closed-form tail for purely oscillatory weights")
        r = w.decay_rate
        wc = mpf(2) if w.kind is WeightKind.SECH else (mpf(4) if w.kind is WeightKind.SECH_SQ_TIMES_T else mpf(1))
        if envelope is None:
            if spec.kind is IntegrandKind.LOG_ABS_ZETA_VERTICAL:
                envelope = hpmath.log_abs_zeta_envelope(spec.b)
                kind = "log"
            elif spec.kind is IntegrandKind.ARG_ZETA_VERTICAL:
                envelope = hpmath.arg_zeta_envelope(spec.b)
                kind = "arg"
            elif spec.kind is IntegrandKind.ARG_GAMMA_VERTICAL:
                envelope = hpmath.arg_gamma_envelope()
                kind = "arg"
            else:
                raise DomainError("custom integrands need an explicit envelope")
        else:
            kind = "log"
        c1, c2 = (mpf(envelope[0]), mpf(envelope[1]))
        lnT = mp.log(2 + T)
        slope = 1 / (2 + T)
        if kind == "log":
            # c1 + c2 ln(2+t)  <=  (c1 + c2 lnT - c2 slope T) + c2 slope t
            p = [c1 + c2 * (lnT - slope * T), c2 * slope]
        else:
            # c1 + c2 (2+t) ln(2+t): expand the same linearized ln bound
            a0 = lnT - slope * T
            p = [c1 + c2 * 2 * a0,
                 c2 * (a0 + 2 * slope),
                 c2 * slope]
        if w.kind is WeightKind.SECH_SQ_TIMES_T:
            p = [mpf(0)] + list(p)  # extra factor t from the weight
        return +(wc * _poly_exp_tail(p, r, T))
