"""Rigorous bounds on what off-critical-line zeros could contribute.

For the exponential-weight identities, every hypothetical zero off the
critical line with ordinate above the verified height T contributes at most
a term of size e^{-aT} times a slowly varying prefactor.  Combining the
Riemann-von Mangoldt counting main term with Backlund's remainder bound and
integrating by parts against e^{-at} yields

    |I| < (1/(2a^3)) (0.861 lnT + lnT/a + 27.332
                      + 2.784/(a ln^2 T) + 0.861/(aT) + 1/(a^3 T)) e^{-aT}

for the real-part family; the imaginary-part family doubles the prefactor.
The bound itself underflows every fixed-exponent format, so results are
reported as (prefactor, log10 of the bound).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import mpmath as mp
from mpmath import mpf

from .errors import DomainError
from .hpmath import PrecisionSpec

__all__ = [
    "BoundFamily",
    "BoundParams",
    "BoundResult",
    "counting_main_term",
    "backlund_Q_bound",
    "bound_I",
    "T_from_zero_count",
]

# Backlund remainder constants and the prefactor coefficients they induce
# (0.861 = 2 pi 0.137, 27.332 = 2 pi 4.35, 2.784 = 2 pi 0.443); both sets
# are kept and cross-asserted so a transcription drift cannot hide.
_BACKLUND = (mpf("0.137"), mpf("0.443"), mpf("4.350"))
_PREFACTOR_COEFFS = (mpf("0.861"), mpf("2.784"), mpf("27.332"))


class BoundFamily(enum.Enum):
    REAL_PART = "real_part"
    IMAG_PART = "imag_part"


@dataclass(frozen=True)
class BoundParams:
    a: mpf
    T: mpf
    k: int | None = None

    def __post_init__(self):
        if mpf(self.a) <= 0:
            raise DomainError("a must be positive")
        if mpf(self.T) < 10 ** 3:
            raise DomainError("verified height T must be at least 10^3")


@dataclass(frozen=True)
class BoundResult:
    log10_bound: mpf
    prefactor_c: mpf
    family: BoundFamily


def counting_main_term(t, prec: PrecisionSpec) -> mpf:
    """(t/2pi)(ln(t/2pi) - 1) + 7/8, the smooth part of the zero count."""
    with prec.workdps():
        t = mpf(t)
        if t <= 2 * mp.pi:
            raise DomainError("counting main term needs t > 2 pi")
        u = t / (2 * mp.pi)
        return +(u * (mp.log(u) - 1) + mpf(7) / 8)


def backlund_Q_bound(t) -> mpf:
    """0.137 ln t + 0.443 ln ln t + 4.350, valid for t > e."""
    t = mpf(t)
    if t <= mp.e:
        raise DomainError("Backlund bound needs t > e")
    c1, c2, c3 = _BACKLUND
    return +(c1 * mp.log(t) + c2 * mp.log(mp.log(t)) + c3)


def coefficient_drift() -> mpf:
    """Largest mismatch between the printed prefactor coefficients and 2 pi
    times the Backlund constants; should vanish to three decimals."""
    b1, b2, b3 = _BACKLUND
    p1, p2, p3 = _PREFACTOR_COEFFS
    return +max(abs(p1 - 2 * mp.pi * b1), abs(p2 - 2 * mp.pi * b2), abs(p3 - 2 * mp.pi * b3))


def bound_I(params: BoundParams, family: BoundFamily, prec: PrecisionSpec) -> BoundResult:
    """Prefactor and log10 of the bound;
    log10_bound = log10(c) - a T log10(e)."""
    with prec.workdps():
        a, T = mpf(params.a), mpf(params.T)
        lnT = mp.log(T)
        c1, c2, c3 = _PREFACTOR_COEFFS
        c = (1 / (2 * a ** 3)) * (c1 * lnT + lnT / a + c3
                                  + c2 / (a * lnT ** 2) + c1 / (a * T) + 1 / (a ** 3 * T))
        if family is BoundFamily.IMAG_PART:
            c = 2 * c
        log10_bound = mp.log10(c) - a * T * mp.log10(mp.e)
        return BoundResult(+log10_bound, +c, family)


def T_from_zero_count(k: int, prec: PrecisionSpec) -> mpf:
    """Height estimate 2 pi k / ln k for the first k verified zeros.

    An estimate only: the counting function inverts to T ~ 2 pi k / ln k at
    leading order, with relative error O(ln ln k / ln k).
    """
    if k < 10 ** 3:
        raise DomainError("zero-count estimate needs k >= 10^3")
    with prec.workdps():
        k = mpf(k)
        return +(2 * mp.pi * k / mp.log(k))
