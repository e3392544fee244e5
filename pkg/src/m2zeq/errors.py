"""Exception hierarchy.

Every error raised by the library derives from :class:`M2ZError`, which is a
``ValueError`` so that callers doing plain input validation can catch it
without importing this module.
"""


class M2ZError(ValueError):
    """Base class for all library errors."""


class DegenerateInputError(M2ZError):
    """Zero where a nonzero value is required (e.g. squarefree part of 0)."""


class IncompatibleFieldError(M2ZError):
    """Arithmetic between irrational elements of different quadratic fields."""


class UnsupportedMatrixError(M2ZError):
    """Matrix with a zero off-diagonal entry (bc = 0)."""


class LiftConditionError(M2ZError):
    """A scalar solution cannot be lifted into the requested commutant."""


class ContractViolation(M2ZError):
    """An equation that should hold exactly does not."""


class FamilyConditionError(M2ZError):
    """Parameters incompatible with an explicit solution family."""


class InapplicableError(M2ZError):
    """Operation requested on an input outside its domain of definition."""


class OutOfScopeError(M2ZError):
    """Request outside the range covered by the known-results table."""


class NoSolutionsError(M2ZError):
    """The requested equation provably has no non-trivial solution."""
