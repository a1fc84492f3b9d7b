"""Certified summation of the zeta series appearing on the closed-form sides.

All sums run over real points x_n = b + pi/(2a) + pi*n/a strictly right of
the pole, where ln zeta(x) and zeta'(x)/zeta(x) decay like 2^-x.  Tail
bounds use the two-sided envelope 2^-x <= |ln zeta(x)| <= 2*2^-x (x >= 4)
and |zeta'(x)/zeta(x)| <= 2 ln2 * 2^-x (x >= 4), both checked empirically
in the test suite before being trusted.

Terms are accumulated in ascending n at working precision, so a fixed
precision yields a reproducible value.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp
from mpmath import mpf

from .errors import ArgumentNotDominant, DomainError
from .hpmath import PrecisionSpec, bernoulli, zeta, zeta_log_deriv

__all__ = [
    "SeriesResult",
    "alternating_log_zeta_sum",
    "zagier_product_constant",
    "theorem1a_g_sum",
    "euler_maclaurin_g_estimate",
    "log_zeta_logderiv_sum",
]


@dataclass(frozen=True)
class SeriesResult:
    value: mpf
    n_terms: int
    tail_bound: mpf


def _series_points(b, a, n_max, prec):
    b, a = mpf(b), mpf(a)
    if a <= 0:
        raise DomainError("a must be positive")
    x0 = b + mp.pi / (2 * a)
    if not x0 > 1:
        raise ArgumentNotDominant(
            f"first series argument b + pi/(2a) = {mp.nstr(x0, 8)} is not > 1")
    return [x0 + mp.pi * n / a for n in range(n_max + 1)]


def alternating_log_zeta_sum(b, a, n_max: int, prec: PrecisionSpec) -> SeriesResult:
    """sum_{n=0}^{n_max} (-1)^n ln zeta(b + pi/(2a) + pi n/a), with tail bound."""
    if n_max < 10:
        raise DomainError("n_max >= 10 required")
    with prec.workdps():
        xs = _series_points(b, a, n_max, prec)
        total = mpf(0)
        for n, x in enumerate(xs):
            term = mp.log(zeta(x, prec))
            total += term if n % 2 == 0 else -term
        x_next = xs[-1] + mp.pi / mpf(a)
        tail = 2 * mpf(2) ** (-x_next)
        return SeriesResult(+total, n_max + 1, +tail)


def zagier_product_constant(n_max: int, prec: PrecisionSpec) -> SeriesResult:
    """sum_{n=2}^{n_max} ln zeta(n); its exp is prod zeta(n) = 2.29485...

    Tail bound 2^(1-n_max) from the geometric envelope of ln zeta.
    """
    if n_max < 20:
        raise DomainError("n_max >= 20 required")
    with prec.workdps():
        total = mpf(0)
        for n in range(2, n_max + 1):
            total += mp.log(zeta(mpf(n), prec))
        return SeriesResult(+total, n_max - 1, +mpf(2) ** (1 - n_max))


def _g_term(n, prec):
    """f(n) = ln zeta(1+n) + (n + 1/2) zeta'(1+n)/zeta(1+n)."""
    x = mpf(1) + n
    return mp.log(zeta(x, prec)) + (n + mpf(1) / 2) * zeta_log_deriv(x, prec)


def theorem1a_g_sum(n_max: int, prec: PrecisionSpec) -> SeriesResult:
    """(1/pi) sum_{n=1}^{n_max} f(n) with f as in :func:`_g_term`.

    |f(x)| <= 2 x 2^-x for x >= 4 gives the tail
    (2/pi) * (n_max + 3) * 2^-(n_max).
    """
    if n_max < 50:
        raise DomainError("n_max >= 50 required")
    with prec.workdps():
        total = mpf(0)
        for n in range(1, n_max + 1):
            total += _g_term(mpf(n), prec)
        tail = (2 / mp.pi) * (n_max + 3) * mpf(2) ** (-n_max)
        return SeriesResult(+(total / mp.pi), n_max, +tail)


def euler_maclaurin_g_estimate(prec: PrecisionSpec) -> mpf:
    """Leading Euler-Maclaurin approximation of the same sum:

        (1/pi) [ -(3/2) ln zeta(2) + f(1)/2 - (B_2/2!) f'(1) ]

    The integral term is -(3/2) ln zeta(2) because f is the exact derivative
    of (x + 1/2) ln zeta(1+x), which vanishes at infinity; f'(1) is taken by
    a centered difference at step 10^(-working_digits/3).
    """
    with prec.workdps():
        h = mpf(10) ** (-(prec.working_digits // 3))
        f1 = _g_term(mpf(1), prec)
        df1 = (_g_term(mpf(1) + h, prec) - _g_term(mpf(1) - h, prec)) / (2 * h)
        b2 = bernoulli(2, prec)
        lnz2 = mp.log(zeta(mpf(2), prec))
        return +((-mpf(3) / 2 * lnz2 + f1 / 2 - (b2 / 2) * df1) / mp.pi)


def log_zeta_logderiv_sum(b, a, n_max: int, prec: PrecisionSpec) -> SeriesResult:
    """sum_{n=0}^{n_max} [ln zeta(x_n) + (pi/(2a) + pi n/a) zeta'(x_n)/zeta(x_n)]

    with x_n = b + pi/(2a) + pi n/a.  Note the coefficient excludes b.
    Tail bound from |ln zeta| and |zeta'/zeta| envelopes with the linear
    coefficient growth folded in.
    """
    if n_max < 10:
        raise DomainError("n_max >= 10 required")
    with prec.workdps():
        a = mpf(a)
        xs = _series_points(b, a, n_max, prec)
        total = mpf(0)
        for n, x in enumerate(xs):
            coef = mp.pi / (2 * a) + mp.pi * n / a
            total += mp.log(zeta(x, prec)) + coef * zeta_log_deriv(x, prec)
        x_next = xs[-1] + mp.pi / a
        coef_next = mp.pi / (2 * a) + mp.pi * (n_max + 1) / a
        step = mp.pi / a
        # sum_{k>=0} (2 + 2 ln2 (coef_next + k step)) 2^-(x_next + k step)
        q = mpf(2) ** (-step)
        tail = (mpf(2) ** (-x_next)) * ((2 + 2 * mp.log(2) * coef_next) / (1 - q)
                                        + 2 * mp.log(2) * step * q / (1 - q) ** 2)
        return SeriesResult(+total, n_max + 1, +tail)
