"""High-precision verification of zeta-function integral identities.

The package evaluates, to a configurable number of decimal digits, a family
of identities tying weighted integrals of ln|zeta| and arg zeta along
vertical lines (and along the real axis) to closed forms and rapidly
convergent series.  Each identity's exactness is equivalent to, or
unconditionally independent of, the Riemann hypothesis; the residual
between the two sides, together with a certified error budget, is the
deliverable.
"""

from .hpmath import PrecisionSpec, BranchConfig, branch_config
from .criteria import CaseId, EqualityParams, CheckResult, ZeroSpec, check, check_t1a_limit
from .zero_bound import BoundParams, BoundResult, BoundFamily, bound_I

__all__ = [
    "PrecisionSpec",
    "BranchConfig",
    "branch_config",
    "CaseId",
    "EqualityParams",
    "CheckResult",
    "ZeroSpec",
    "check",
    "check_t1a_limit",
    "BoundParams",
    "BoundResult",
    "BoundFamily",
    "bound_I",
]

__version__ = "0.1.0"
