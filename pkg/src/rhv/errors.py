"""Exception types raised by the verification kernels."""


class RHVError(Exception):
    """Base class for all package errors."""


class DomainError(RHVError, ValueError):
    """Input outside the mathematical domain of an operation."""


class InvalidParams(RHVError, ValueError):
    """Equality parameters violate a case constraint; message names the constraint."""


class PoleAtOne(DomainError):
    """zeta evaluated exactly at its pole s = 1."""


class SingularPoint(RHVError, ArithmeticError):
    """zeta vanishes at the requested point to working precision."""


class ZeroDenominator(RHVError, ZeroDivisionError):
    """zeta'(s)/zeta(s) requested where zeta(s) = 0 to working precision."""


class GammaPole(DomainError):
    """gamma factor evaluated at a nonpositive integer."""


class StepCollapse(RHVError, ArithmeticError):
    """Adaptive phase stepping collapsed without resolving the increment.

    Signals a zero on or next to the tracked vertical line where the branch
    convention does not permit one.  Callers retry on a jittered grid.
    """


class PrecisionUnreachable(RHVError, ArithmeticError):
    """A kernel exhausted its refinement levels before meeting its tolerance."""


class NonConvergent(RHVError, ArithmeticError):
    """Adaptive panel refinement exhausted the allowed levels."""


class SingularWeight(DomainError):
    """A weight-function pole falls inside the integration interval."""


class UnboundedTail(DomainError):
    """Tail certificate requested for a non-decaying (purely oscillatory) weight."""


class ArgumentNotDominant(DomainError):
    """Series argument enters the critical strip where the term bound fails."""


class OutOfTable(DomainError):
    """Bernoulli index beyond the configured table limit."""
