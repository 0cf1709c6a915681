"""Shared exceptions and default desk-scale resource caps."""

# Largest d**n a dense operator or statevector is allowed to occupy.
DEFAULT_DENSE_CAP = 16384

# Largest n for which n!-sized tables and loops are permitted.
DEFAULT_FACTORIAL_CAP = 8

# Largest flattened term count a single LCU segment may expand to.
DEFAULT_TERM_CAP = 500_000


class SizeMismatchError(ValueError):
    """Operands are defined on different ground sets {1..n}."""


class ResourceLimitError(RuntimeError):
    """The computation would exceed a configured resource cap.

    Raised before any large allocation happens, so the caller can retry
    with smaller parameters.  This is a scale limitation, not a
    correctness failure.
    """
