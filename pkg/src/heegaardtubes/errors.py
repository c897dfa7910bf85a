"""Exception hierarchy shared by all heegaardtubes modules.

The CLI maps these onto its exit codes; see ``heegaardtubes.cli``.
"""


class HeegaardTubesError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(HeegaardTubesError, ValueError):
    """A bridge number, index set, label or other argument is malformed."""


class InvalidOperationError(HeegaardTubesError):
    """An operation was requested in a state where it is undefined
    (e.g. a meridional stabilization with zero bridge arcs left)."""


class InvalidMoveError(HeegaardTubesError):
    """A move names a puncture that is not a left foot of the surface."""


class ExcludedMoveError(InvalidMoveError):
    """A move with i == j, which is excluded from the move set entirely
    (it would disconnect the surface)."""


class MoveRejectedError(HeegaardTubesError):
    """A well-formed move failed its validity test.

    Carries the machine-readable reason code and, for corridor
    crossings, the left foot of the offending annulus.
    """

    def __init__(self, reason, crossing_annulus=None):
        self.reason = reason
        self.crossing_annulus = crossing_annulus
        detail = f" (annulus {crossing_annulus})" if crossing_annulus is not None else ""
        super().__init__(f"move rejected: {reason}{detail}")


class ResourceLimitError(HeegaardTubesError):
    """A configurable cap (oracle cap, graph cap) would be exceeded."""


class OracleViolationError(HeegaardTubesError):
    """The brute-force matching oracle found zero or multiple non-crossing
    matchings for an index; signals a modeling bug, never expected."""


class InternalConsistencyError(HeegaardTubesError):
    """An internal invariant that should be unreachable was violated."""


class VerificationError(HeegaardTubesError):
    """The verification suite reported at least one failed check."""
