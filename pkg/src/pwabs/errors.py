"""Exception hierarchy shared across the package."""


class PwabsError(Exception):
    """Base class for all package errors."""


class NumericalFailure(PwabsError):
    """An iterative numerical routine exceeded its safety guard."""


class DimensionMismatch(PwabsError):
    """Operands live in different ambient dimensions."""


class SingularMatrixError(PwabsError):
    """A map that must be invertible is (numerically) singular."""


class UnboundedRegionError(PwabsError):
    """Operation requires a bounded region but got an unbounded one."""


class ThinRegionError(PwabsError):
    """Rejection sampling acceptance rate fell below the floor."""


class EmptyRegionError(PwabsError):
    """Operation undefined on an empty region."""


class DegenerateClusterError(PwabsError):
    """Too few points, or points in degenerate position, for an affine fit."""


class ThresholdTooTightError(PwabsError):
    """No random candidate collected enough inliers; raise the residual bound."""


class IdentificationCollapseError(PwabsError):
    """Refinement merged or discarded every mode."""


class LtlSyntaxError(PwabsError):
    """Formula text failed to parse. Carries a 1-based column position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position})")
        self.position = position


class UnsupportedFragmentError(PwabsError):
    """Formula is outside the deterministic-automaton fragment."""


class StageError(PwabsError):
    """Pipeline stage failure; wraps the original error with a stage tag."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause
