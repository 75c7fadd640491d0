"""Exception hierarchy.

Everything a caller can trigger with bad input derives from ``ValueError`` so
that ordinary ``except ValueError`` handling keeps working.
"""


class CatalanCodeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CatalanCodeError, ValueError):
    """An argument violates a documented precondition."""


class TableSizeError(ValidationError):
    """Requested table is larger than the configured memory cap."""


class EmptyClassError(ValidationError):
    """The requested structure class has no members, so nothing can be sampled or coded."""


class InvalidPathError(ValidationError):
    """A branch path cannot be replayed from its root.

    ``step`` is the index of the offending step, or ``len(path)`` when the
    path ends before reaching the leaf.
    """

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class InvalidStructureError(ValidationError):
    """A triangulation or Dyck word is malformed.

    ``position`` locates the first offending stroke for Dyck words; ``rule``
    names the first violated rule for triangulations.
    """

    def __init__(self, message, position=None, rule=None):
        super().__init__(message)
        self.position = position
        self.rule = rule


class BitSourceExhausted(CatalanCodeError, EOFError):
    """A finite replay bit source ran out of bits."""


class InvariantError(CatalanCodeError, AssertionError):
    """An internal consistency check failed; this is a bug, not bad input."""
