"""Exception hierarchy shared across the package."""


class HstarkitError(Exception):
    """Base class for all package errors."""


class NotASimplexError(HstarkitError):
    """Vertex list is affinely dependent."""


class DimensionMismatchError(HstarkitError):
    """Vertex or matrix dimensions do not match the ambient space."""


class SingularMatrixError(HstarkitError):
    """A square matrix required to be nonsingular has determinant zero."""


class VolumeTooLargeError(HstarkitError):
    """Normalized volume exceeds the configured enumeration cap."""

    def __init__(self, volume: int, cap: int):
        super().__init__(f"normalized volume {volume} exceeds cap {cap}")
        self.volume = volume
        self.cap = cap


class ScanTooLargeError(HstarkitError):
    """Bounding-box scan would visit more candidate points than allowed."""

    def __init__(self, candidates: int, cap: int):
        super().__init__(f"scan of {candidates} candidate points exceeds cap {cap}")
        self.candidates = candidates
        self.cap = cap


class TooManyFacesError(HstarkitError):
    """Face enumeration refused: 2^(n+1) would be excessive."""


class HypothesisNotMetError(HstarkitError):
    """A checker's stated hypothesis fails for the given input."""


class NonIntegralHeightError(HstarkitError):
    """Coordinate sum of a fractional-weight tuple is not an integer."""


class InvalidParametersError(HstarkitError):
    """Family generator called with parameters outside its documented range."""


class PreconditionNotMetError(HstarkitError):
    """A condition checker was applied outside its applicability gate."""


class InternalCheckError(HstarkitError):
    """A proved identity failed on computed data; indicates a bug."""


class DocumentError(HstarkitError):
    """A JSON document does not conform to the expected schema."""
