"""Exception hierarchy shared by all dualsomos modules."""


class DualSomosError(Exception):
    """Base class for every mathematical failure raised by this package."""


class VanishingEvenPart(DualSomosError, ZeroDivisionError):
    """A dual number with zero even part was used where a unit is required."""


class ParseError(DualSomosError, ValueError):
    """Malformed dual-scalar literal; carries the offending position."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class NotDivisible(DualSomosError, ArithmeticError):
    """Exact Laurent-polynomial division left a nonzero remainder."""


class SingularLeadingCoefficient(DualSomosError):
    """The leading coefficient of the third-order reduction vanished."""


class SingularCasoratian(DualSomosError):
    """The 3x3 matrix of homogeneous solutions is singular at some index."""


class ConsistencyError(DualSomosError):
    """Cross-route data does not describe the same orbit."""


class DegenerateAlpha(DualSomosError):
    """The even coefficient alpha vanishes; no elliptic curve data exists."""


class SingularCurve(DualSomosError):
    """Discriminant zero: the associated cubic has a repeated root."""


class BranchFailure(DualSomosError):
    """No sign/branch combination reproduced the orbit within tolerance."""


class DomainError(DualSomosError):
    """Numerical evaluation requested outside the reliable region."""
