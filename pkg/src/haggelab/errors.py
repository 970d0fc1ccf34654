"""Exception hierarchy.

Class names double as the error names written into check reports, so they
are kept short and stable.
"""


class GeometryError(Exception):
    """Base class for every construction or predicate failure."""

    @property
    def name(self) -> str:
        return type(self).__name__


# numeric
class NumericError(GeometryError):
    pass


class DivisionByZero(NumericError, ZeroDivisionError):
    pass


class MixedBackend(NumericError, TypeError):
    pass


class NegativeArgument(NumericError, ValueError):
    pass


class IrrationalInRationalBackend(NumericError, ValueError):
    """The exact root is irrational; the caller has to switch to floats."""


# primitives
class CoincidentPoints(GeometryError):
    pass


class DuplicatePoints(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class PointNotOnCircle(GeometryError):
    pass


class PointNotOnLine(GeometryError):
    pass


class DegenerateConfiguration(GeometryError):
    pass


class ParabolicConic(GeometryError):
    pass


class ConcentricCircles(GeometryError):
    pass


class CollinearCenters(GeometryError):
    pass


class PointNotOnCircumcircle(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


# triangle centers
class EquilateralEulerLine(GeometryError):
    pass


class OnSideline(GeometryError):
    pass


class OnCircumcircle(GeometryError):
    """Isogonal conjugate is at infinity.

    ``direction`` is the common direction of the three parallel lines
    joining the vertices to the conjugate.
    """

    def __init__(self, message: str, direction=None):
        super().__init__(message)
        self.direction = direction


class RationalBackendUnsupported(GeometryError):
    pass


# hagge
class POnCircumcircle(GeometryError):
    pass


class POnSideline(GeometryError):
    pass


# similarities and perspectives
class RatioOne(GeometryError):
    pass


class DegeneratePair(GeometryError):
    pass


class InvalidRatio(GeometryError):
    pass


class NotPerspective(GeometryError):
    pass


class ParallelPerspective(GeometryError):
    """The joining lines are parallel; ``direction`` is their common direction."""

    def __init__(self, message: str, direction=None):
        super().__init__(message)
        self.direction = direction


class ParallelSides(GeometryError):
    pass


class NotIndirectlySimilar(GeometryError):
    pass


class NotOrthologic(GeometryError):
    pass


class NotParalogic(GeometryError):
    pass


class NoRealSecondIntersection(GeometryError):
    pass


class DegenerateParameters(GeometryError):
    pass


# scripts and rendering
class ScriptError(GeometryError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{line}:{column}: {message}" if line else message)
        self.line = line
        self.column = column


class ScriptSyntaxError(ScriptError):
    # reported under the short name; the builtin is not shadowed
    @property
    def name(self) -> str:
        return "SyntaxError"


class UnknownName(ScriptError):
    pass


class ArityError(ScriptError):
    pass


class UseBeforeDef(ScriptError):
    pass


class ArgumentTypeError(GeometryError):
    pass


class EmptyDrawList(GeometryError):
    pass
