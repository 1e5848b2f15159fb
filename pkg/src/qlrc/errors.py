"""Exception hierarchy shared across the package.

The four bases map onto the CLI exit codes: bad input (2), construction
failure (3), verification failure (4), resource cap (5).
"""


class QlrcError(Exception):
    """Base class for all package errors."""


class InputError(QlrcError):
    """A caller-supplied value violates a precondition."""


class ConstructionError(QlrcError):
    """An internal consistency check failed while building a code."""


class VerificationError(QlrcError):
    """A stored artifact failed re-verification."""


class ResourceError(QlrcError):
    """The requested computation exceeds a desk-scale cap."""
