"""Exception hierarchy shared by all mcur modules."""


class McurError(Exception):
    """Base class for all library errors."""


class StructuralError(McurError):
    """A reference to an unknown cell, a cross-complex operation, or a
    malformed construction (bad endpoints, nonpositive weight, duplicate id)."""


class ParseError(McurError):
    """A text input (.cx1, .ch1, .wlk, .dec, .pbm) could not be parsed."""


class NonZeroBoundary(McurError):
    """An operation requiring a boundaryless chain received one with boundary."""


class BoundaryMismatch(McurError):
    """A chain's boundary disagrees with the boundary required by the caller."""


class InstanceTooLarge(McurError):
    """The exhaustive search is gated to small instances and the input exceeds
    the configured bound."""


class InvalidDecomposition(McurError):
    """A claimed decomposition fails its additivity certificate."""


class CancellingCurve(McurError):
    """The walk loses mass to back-and-forth traversal, so splitting at
    self-intersections does not apply."""


class NotApplicable(McurError):
    """The operation's classification precondition is violated."""


class SupportViolation(McurError):
    """A chain's support is not contained in the required edge set."""


class ZeroChain(McurError):
    """The operation requires a nonzero chain."""


class Mismatch(McurError):
    """An identity guaranteed by the preconditions failed; indicates an
    implementation bug, never a bad input."""


class EmptySet(McurError):
    """The pixel-set operation requires a nonempty set."""


class NotSimple(McurError):
    """Loop tracing requires a simple pixel set."""


class MissingCoordinates(McurError):
    """Rendering requires 2D vertex coordinates that the complex lacks."""
