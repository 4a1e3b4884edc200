"""Exception types raised by constructions whose preconditions fail."""


class MatchalgError(Exception):
    """Base class for all library errors."""


class CompositionNonzero(MatchalgError):
    """d_out . d_in != 0, so the pair is not a complex."""


class LabelSetMismatch(MatchalgError):
    """Two objects carry different label sets."""


class UnknownLabel(MatchalgError):
    """A label is not present in the relevant label set."""


class InputNotRotaBaxter(MatchalgError):
    """The supplied operator fails the relative Rota-Baxter identity."""


class NotCentral(MatchalgError):
    """An element fails to commute with some basis element."""


class AybeFails(MatchalgError):
    """The tensor family is not a matching associative r-matrix."""


class NotSkewSymmetric(MatchalgError):
    """A tensor is not skew-symmetric."""


class MultiLabelNotSupported(MatchalgError):
    """The operation is only defined for a single-label family."""


class MrrbaFails(MatchalgError):
    """The operator family fails the matching Rota-Baxter identity."""


class MdaFails(MatchalgError):
    """The structure fails the matching dendriform axioms."""


class NotMaurerCartan(MatchalgError):
    """The degree-1 element does not square to zero under the bracket."""


class DegreeOutOfRange(MatchalgError):
    """Requested cohomological degree is outside the materialized range."""


class NotAdjoint(MatchalgError):
    """The bimodule is not the adjoint one."""


class ContextMismatch(MatchalgError):
    """Cochains live over different (algebra, bimodule, labels) contexts."""


class PositionOutOfRange(MatchalgError):
    """Partial-composition position is outside 1..arity."""


class DeformationInvalid(MatchalgError):
    """The deformation fails its coefficient equations at some order."""


class NotCocycle(MatchalgError):
    """The supplied cochain is not closed."""


class NotMdaMorphism(MatchalgError):
    """The linear map is not a matching dendriform morphism."""


class InputFails(MatchalgError):
    """A homotopy-level input fails its defining identities."""


class DegreeMismatch(MatchalgError):
    """Graded data violates its internal-degree constraints."""


class UnknownTarget(MatchalgError):
    """No fixture with the requested name is loaded."""


class UnknownChecker(MatchalgError):
    """The requested checker id does not exist."""


class ConstructionFailed(MatchalgError):
    """A construction's output failed its own certificate and was refused."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
