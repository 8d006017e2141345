"""Dual numbers x + y*eps with eps**2 = 0, over exact rationals and over complex floats.

The exact kind (:class:`DualScalar`) carries a pair of arbitrary-precision
rationals and is what every recurrence in this package iterates.  The floating
kind (:class:`DualComplex`) carries a pair of complex floats and exists for the
Weierstrass-function verification layer, where it doubles as a forward-mode
derivative tracker: for differentiable Phi, Phi(x + y*eps) = Phi(x) + Phi'(x)*y*eps.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError, VanishingEvenPart

# Arbitrary-precision rationals, always reduced, denominator > 0.
Rational = Fraction

_ExactLike = Union["DualScalar", Fraction, int]

_RAT_TOKEN = re.compile(r"-?\d+(?:/\d+)?")


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class DualScalar:
    """Exact dual number even + odd*eps with rational components.

    A value is a unit exactly when its even part is nonzero; the reciprocal of
    a unit is x**-1 * (1 - x**-1 * y * eps).
    """

    even: Fraction = Fraction(0)
    odd: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "even", _as_fraction(self.even))
        object.__setattr__(self, "odd", _as_fraction(self.odd))

    # -- constructors ------------------------------------------------------

    @classmethod
    def coerce(cls, value: _ExactLike) -> "DualScalar":
        if isinstance(value, DualScalar):
            return value
        return cls(_as_fraction(value))

    @classmethod
    def parse(cls, text: str) -> "DualScalar":
        """Parse the compact literal grammar: ``rat | rat sign rat 'e' | rat 'e'``.

        ``rat`` is ``'-'? digits ('/' digits)?`` with no whitespace anywhere,
        e.g. ``1+2e``, ``-3/2e``, ``236-527/2e``.
        """
        pos = 0

        def take_rational() -> Fraction:
            nonlocal pos
            m = _RAT_TOKEN.match(text, pos)
            if m is None:
                raise ParseError("expected a rational", text, pos)
            token = m.group()
            if "/" in token and int(token.split("/")[1]) == 0:
                raise ParseError("zero denominator", text, pos)
            pos = m.end()
            return Fraction(token)

        first = take_rational()
        if pos == len(text):
            return cls(first)
        ch = text[pos]
        if ch == "e":
            pos += 1
            if pos != len(text):
                raise ParseError("trailing characters", text, pos)
            return cls(Fraction(0), first)
        if ch in "+-":
            sign = 1 if ch == "+" else -1
            pos += 1
            second = take_rational()
            if pos == len(text) or text[pos] != "e":
                raise ParseError("expected 'e' after odd part", text, pos)
            pos += 1
            if pos != len(text):
                raise ParseError("trailing characters", text, pos)
            return cls(first, sign * second)
        raise ParseError("unexpected character", text, pos)

    # -- structure ---------------------------------------------------------

    @property
    def is_unit(self) -> bool:
        return self.even != 0

    def inv(self) -> "DualScalar":
        """Reciprocal; defined only for units."""
        if self.even == 0:
            raise VanishingEvenPart(f"{self} is a zero divisor, not invertible")
        inv_even = 1 / self.even
        return DualScalar(inv_even, -inv_even * inv_even * self.odd)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (DualScalar, Fraction, int)):
            o = DualScalar.coerce(other)
            return DualScalar(self.even + o.even, self.odd + o.odd)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (DualScalar, Fraction, int)):
            o = DualScalar.coerce(other)
            return DualScalar(self.even - o.even, self.odd - o.odd)
        return NotImplemented

    def __rsub__(self, other):
        return DualScalar.coerce(other) - self

    def __neg__(self):
        return DualScalar(-self.even, -self.odd)

    def __mul__(self, other):
        if isinstance(other, (DualScalar, Fraction, int)):
            o = DualScalar.coerce(other)
            return DualScalar(self.even * o.even, self.even * o.odd + self.odd * o.even)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (DualScalar, Fraction, int)):
            return self * DualScalar.coerce(other).inv()
        return NotImplemented

    def __rtruediv__(self, other):
        return DualScalar.coerce(other) * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        result = DualScalar(Fraction(1))
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return self.even != 0 or self.odd != 0

    # -- presentation ------------------------------------------------------

    def __str__(self):
        if self.odd == 0:
            return str(self.even)
        if self.even == 0:
            return f"{self.odd}e"
        sign = "+" if self.odd > 0 else "-"
        return f"{self.even}{sign}{abs(self.odd)}e"

    def __repr__(self):
        return f"DualScalar({self.even!r}, {self.odd!r})"


def dual(even, odd=0) -> DualScalar:
    """Shorthand constructor used throughout the tests and the CLI."""
    return DualScalar(_as_fraction(even), _as_fraction(odd))


ONE = DualScalar(Fraction(1))
ZERO = DualScalar()


# ---------------------------------------------------------------------------
# Floating dual-complex kind and the generic "smooth scalar" helpers.
# ---------------------------------------------------------------------------

_ComplexLike = Union[int, float, complex]


@dataclass(frozen=True)
class DualComplex:
    """Dual number with complex-float components, for first-order propagation."""

    even: complex = 0j
    odd: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "even", complex(self.even))
        object.__setattr__(self, "odd", complex(self.odd))

    @classmethod
    def coerce(cls, value) -> "DualComplex":
        if isinstance(value, DualComplex):
            return value
        return cls(complex(value))

    @classmethod
    def from_exact(cls, value: DualScalar) -> "DualComplex":
        return cls(complex(value.even), complex(value.odd))

    def __add__(self, other):
        if isinstance(other, (DualComplex, int, float, complex)):
            o = DualComplex.coerce(other)
            return DualComplex(self.even + o.even, self.odd + o.odd)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (DualComplex, int, float, complex)):
            o = DualComplex.coerce(other)
            return DualComplex(self.even - o.even, self.odd - o.odd)
        return NotImplemented

    def __rsub__(self, other):
        return DualComplex.coerce(other) - self

    def __neg__(self):
        return DualComplex(-self.even, -self.odd)

    def __mul__(self, other):
        if isinstance(other, (DualComplex, int, float, complex)):
            o = DualComplex.coerce(other)
            return DualComplex(self.even * o.even, self.even * o.odd + self.odd * o.even)
        return NotImplemented

    __rmul__ = __mul__

    def inv(self) -> "DualComplex":
        if self.even == 0:
            raise VanishingEvenPart("dual-complex value with zero even part is not invertible")
        inv_even = 1.0 / self.even
        return DualComplex(inv_even, -inv_even * inv_even * self.odd)

    def __truediv__(self, other):
        if isinstance(other, (DualComplex, int, float, complex)):
            return self * DualComplex.coerce(other).inv()
        return NotImplemented

    def __rtruediv__(self, other):
        return DualComplex.coerce(other) * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        result = DualComplex(1.0)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


SmoothScalar = Union[complex, DualComplex]


def smooth_sqrt(x: SmoothScalar) -> SmoothScalar:
    """Principal square root; dual inputs get sqrt(a) + b/(2 sqrt(a)) eps."""
    if isinstance(x, DualComplex):
        if x.even == 0:
            if x.odd == 0:
                return DualComplex(0j, 0j)
            raise VanishingEvenPart("square root of a pure-odd dual-complex value")
        root = cmath.sqrt(x.even)
        return DualComplex(root, x.odd / (2.0 * root))
    return cmath.sqrt(x)


def smooth_exp(x: SmoothScalar) -> SmoothScalar:
    if isinstance(x, DualComplex):
        e = cmath.exp(x.even)
        return DualComplex(e, e * x.odd)
    return cmath.exp(x)


def even_part(x: SmoothScalar) -> complex:
    return x.even if isinstance(x, DualComplex) else complex(x)


def odd_part(x: SmoothScalar) -> complex:
    return x.odd if isinstance(x, DualComplex) else 0j


def magnitude(x: SmoothScalar) -> float:
    """Size estimate used for convergence tests: |even part|."""
    return abs(even_part(x))
