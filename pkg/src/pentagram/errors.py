"""Exception hierarchy shared by all modules."""


class PentagramError(Exception):
    """Base class for every error raised by this package."""


class GeometryError(PentagramError, ValueError):
    pass


class EqualPoints(GeometryError):
    pass


class EqualLines(GeometryError):
    pass


class DegenerateCrossRatio(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class NotConcurrent(GeometryError):
    pass


class IndexParity(PentagramError, IndexError):
    pass


class DegeneratePolygon(GeometryError):
    """A construction on a polygon hit a non-generic configuration."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DegenerateDiagonals(DegeneratePolygon):
    pass


class DegenerateYParam(DegeneratePolygon):
    pass


class DegenerateXCoord(DegeneratePolygon):
    pass


class NotAxisAligned(GeometryError):
    pass


class NotClosed(GeometryError):
    pass


class NotClosedSides(GeometryError):
    pass


class GenerationFailed(PentagramError, RuntimeError):
    pass


class NotDivisible(PentagramError, ArithmeticError):
    pass


class ZeroToNegativePower(PentagramError, ZeroDivisionError):
    pass


class DenominatorVanishes(PentagramError, ZeroDivisionError):
    pass


class DivisionByZeroValue(PentagramError, ZeroDivisionError):
    pass


class HypothesisViolated(PentagramError, ValueError):
    pass


class BadRank(PentagramError, ValueError):
    pass


class NotASM(PentagramError, ValueError):
    pass


class ParseError(PentagramError, ValueError):
    pass
