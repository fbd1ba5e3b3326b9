"""Exception types shared across the package.

Structural problems with diagrams derive from DiagramError; bad arguments
to counting functions derive from DomainError (a ValueError); the resource
guard raises TooLargeError.
"""


class DiagramError(Exception):
    """Base class for malformed or incompatible diagram input."""


class OverlapError(DiagramError):
    """Two blocks claim the same vertex."""


class CoverageError(DiagramError):
    """Some vertex belongs to no block."""


class EmptyBlockError(DiagramError):
    """A block with no vertices was supplied."""


class VertexRangeError(DiagramError, IndexError):
    """A vertex index falls outside {0, ..., 2n-1}."""


class DimensionMismatchError(DiagramError):
    """Two diagrams on different numbers of points were combined."""


class NotDecomposableError(DiagramError):
    """A block straddles two kernel classes, so no direct-sum decomposition exists."""


class NotPartialBrauerError(DiagramError):
    """A block of size > 2 was found where a partial-Brauer element is required."""


class NotBalancedError(DiagramError):
    """A two-colored graph component matches none of the four balanced forms."""


class DomainError(ValueError):
    """Arguments outside the defined range of a counting function."""


class ParityError(DomainError):
    """An index tuple violates its parity constraint (r not in I(n), etc.)."""


class TooLargeError(RuntimeError):
    """Predicted enumeration size exceeds the configured cap."""
