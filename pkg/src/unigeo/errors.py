"""Exception hierarchy shared by every unigeo module."""


class GeometryError(Exception):
    """Base class for all unigeo errors."""


# -- fields -----------------------------------------------------------------

class FieldError(GeometryError, ValueError):
    pass


class NonPrimeModulus(FieldError):
    pass


class CharacteristicTwo(FieldError):
    pass


class ParseError(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class NotInField(FieldError):
    pass


class UnsupportedField(FieldError):
    pass


class InexactField(FieldError):
    pass


# -- linear algebra / bilinear forms ----------------------------------------

class DimensionMismatch(GeometryError, ValueError):
    pass


class AsymmetricForm(GeometryError, ValueError):
    pass


class ZeroVector(GeometryError, ValueError):
    pass


class CoincidentPoints(GeometryError, ValueError):
    pass


class CollinearPoints(GeometryError, ValueError):
    pass


class DependentInput(GeometryError, ValueError):
    pass


class NullCarrier(GeometryError, ArithmeticError):
    pass


class NullCommonPoint(GeometryError, ArithmeticError):
    pass


# -- trigonometry -----------------------------------------------------------

class NullLine(GeometryError, ArithmeticError):
    pass


class NullProjectivePoint(GeometryError, ArithmeticError):
    pass


class NullTriangle(GeometryError, ArithmeticError):
    pass


class UndefinedSpread(GeometryError, ArithmeticError):
    pass


class SingularCenterSystem(GeometryError, ArithmeticError):
    pass


class NotThreeDimensional(GeometryError, ValueError):
    pass


class IdenticalLines(GeometryError, ValueError):
    pass


class WrongForm(GeometryError, ValueError):
    pass


class SingularAltitude(GeometryError, ArithmeticError):
    pass


class NoCommonPoint(GeometryError, ArithmeticError):
    pass


# -- solvers ----------------------------------------------------------------

class UndefinedCase(GeometryError, ArithmeticError):
    pass


class InconsistentKnowns(GeometryError, ValueError):
    pass


class ZeroQuadrance(GeometryError, ArithmeticError):
    pass


class SingularDenominator(GeometryError, ArithmeticError):
    pass


class NotPlanar(GeometryError, ValueError):
    pass


class NotRightHexagon(GeometryError, ValueError):
    pass


class InexactDivision(GeometryError, ArithmeticError):
    pass


# -- hyperbolic bridge ------------------------------------------------------

class OutsideCone(GeometryError, ValueError):
    pass


class ZDivisionImpossible(GeometryError, ValueError):
    pass


class DegenerateTriangle(GeometryError, ArithmeticError):
    pass


class ToleranceExceeded(GeometryError, AssertionError):
    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = dict(residuals or {})


# -- scenes -----------------------------------------------------------------

class SceneError(GeometryError, ValueError):
    """Invalid scene document; ``field`` names the offending entry."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
