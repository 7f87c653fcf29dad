"""Shared exception types.

Three failure classes, matching the CLI exit-status contract:
validation problems (bad input, exit 2), resource-bound refusals
(exit 3) and internal defects (exit 70).
"""


class ValidationError(ValueError):
    """Input violates a documented precondition."""


class DomainMismatchError(ValidationError):
    """Operands belong to different algebraic structures."""


class ResourceLimitError(RuntimeError):
    """Request exceeds a configured enumeration or size bound."""


class InternalDefectError(AssertionError):
    """A build-time self check failed; indicates a bug, not bad input."""
