"""Exception types shared across the toolkit."""


class RuledKitError(Exception):
    """Base class for all domain errors raised by this package."""


class SingularDirection(RuledKitError):
    """A dual vector with (near-)zero real part cannot define a line."""


class ParameterOutOfRange(RuledKitError):
    """Curve parameter outside [0, 1]."""


class DegreeTooLow(RuledKitError):
    """Requested derivative order exceeds the curve degree."""


class ParseError(RuledKitError):
    """Expression or net file failed to parse.

    Carries the 0-based character position and, when known, what was
    expected at that position.
    """

    def __init__(self, message: str, position: int, expected: str | None = None):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.expected = expected


class DomainError(RuledKitError):
    """Expression evaluated outside its domain (division by zero, 0^-n, ...)."""


class CylindricalPoint(RuledKitError):
    """Curvature below threshold: the moving frame is undefined here."""


class StrictionUndefined(RuledKitError):
    """Dual curvature vanishes: the striction angle has no finite cotangent."""


class NotClosed(RuledKitError):
    """Integral invariants require a closed motion over one period."""


class QuadratureNoConvergence(RuledKitError):
    """Adaptive quadrature hit depth limit or the two schemes disagree."""


class NormalUndefined(RuledKitError):
    """Surface normal undefined (central point of a developable ruling)."""


class AllSamplesDegenerate(RuledKitError):
    """Every sample of a tessellation request was degenerate."""
