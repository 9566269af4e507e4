"""Error types shared by every zetalab module.

The CLI and the HTTP service translate these into exit codes / status
codes, so library code should raise them rather than bare ValueError
whenever the failure is a caller-facing contract violation.
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation (s <= 1, even characteristic, ...)."""


class SizeError(ValueError):
    """Input exceeds a documented enumeration or closure cap."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; signals a bug, not bad input."""
