"""Shared exception types.

The CLI maps these onto exit codes: DocumentError and bad configuration
exit 2, verified-failure verdicts exit 1, everything healthy exits 0.
"""


class SimpdiscError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(SimpdiscError):
    """Composition or comparison of maps with incompatible ordinals."""


class DocumentError(SimpdiscError):
    """An interchange document is malformed or violates a type invariant."""


class BoundExceededError(SimpdiscError):
    """A search or enumeration exceeded its configured guard."""


class TruncationError(SimpdiscError):
    """A request needs simplicial data above the available truncation."""
