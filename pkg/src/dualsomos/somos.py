"""Exact dual-rational Somos-4 engines and their conserved quantities.

Everything here is driven by the bilinear recurrence

    X_{n+4} X_n = alpha X_{n+3} X_{n+1} + beta X_{n+2}^2

over dual numbers, split into its even part (the ordinary Somos-4 recurrence
for x_n) and an inhomogeneous linear odd part for y_n.  The module also hosts
the ratio variables d_n = x_{n+1} x_{n-1} / x_n^2 with their QRT step, the
first integrals J (even and odd components), and the planar map coming from
Jacobi continued fractions together with its invariant H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .dualnum import DualScalar, Rational, dual
from .errors import ConsistencyError, VanishingEvenPart


@dataclass(frozen=True)
class SomosParams:
    """Dual coefficient pair (alpha, beta); not both even parts may vanish."""

    alpha: DualScalar
    beta: DualScalar

    def __post_init__(self):
        if self.alpha.even == 0 and self.beta.even == 0:
            raise ValueError("degenerate recurrence: alpha and beta both have zero even part")

    @property
    def a0(self) -> Fraction:
        return self.alpha.even

    @property
    def a1(self) -> Fraction:
        return self.alpha.odd

    @property
    def b0(self) -> Fraction:
        return self.beta.even

    @property
    def b1(self) -> Fraction:
        return self.beta.odd


def somos_step(window: Sequence[DualScalar], params: SomosParams, direction: str = "forward") -> DualScalar:
    """One exact step; the divisor (first term forward, last term backward) must be a unit."""
    w0, w1, w2, w3 = window
    if direction == "forward":
        numerator = params.alpha * w3 * w1 + params.beta * w2 * w2
        divisor = w0
    elif direction == "backward":
        numerator = params.alpha * w2 * w0 + params.beta * w1 * w1
        divisor = w3
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if not divisor.is_unit:
        raise VanishingEvenPart("divisor term is not a unit")
    return numerator / divisor


class SomosOrbit:
    """Indexed window of exact dual terms, extendable in both directions."""

    __slots__ = ("params", "base", "_terms")

    def __init__(self, params: SomosParams, base: int, terms: Sequence[DualScalar]):
        if len(terms) < 4:
            raise ValueError("an orbit needs at least four consecutive terms")
        self.params = params
        self.base = base
        self._terms = list(terms)

    @classmethod
    def from_seed(cls, params: SomosParams, seed: Sequence[DualScalar], base: int = -1) -> "SomosOrbit":
        seed = [DualScalar.coerce(s) for s in seed]
        if len(seed) != 4:
            raise ValueError("seed must contain exactly four terms")
        if not all(s.is_unit for s in seed):
            raise VanishingEvenPart("all four seed terms must be units")
        return cls(params, base, seed)

    @property
    def lo(self) -> int:
        return self.base

    @property
    def hi(self) -> int:
        return self.base + len(self._terms) - 1

    def has(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def term(self, n: int) -> DualScalar:
        if not self.has(n):
            raise IndexError(f"term {n} not materialized (orbit spans [{self.lo}, {self.hi}])")
        return self._terms[n - self.base]

    def even(self, n: int) -> Fraction:
        return self.term(n).even

    def odd(self, n: int) -> Fraction:
        return self.term(n).odd

    def window(self, n: int) -> tuple[DualScalar, DualScalar, DualScalar, DualScalar]:
        return (self.term(n), self.term(n + 1), self.term(n + 2), self.term(n + 3))

    def __repr__(self):
        return f"SomosOrbit(base={self.base}, span=[{self.lo},{self.hi}])"


def extend_orbit(orbit: SomosOrbit, lo: int, hi: int) -> SomosOrbit:
    """Return a new orbit whose index range covers [lo, hi] (union with current)."""
    terms = list(orbit._terms)
    base = orbit.base
    while base + len(terms) - 1 < hi:
        window = terms[-4:]
        try:
            terms.append(somos_step(window, orbit.params, "forward"))
        except VanishingEvenPart as exc:
            raise VanishingEvenPart(
                f"non-unit term blocks forward step to index {base + len(terms)}"
            ) from exc
    while base > lo:
        window = terms[:4]
        try:
            terms.insert(0, somos_step(window, orbit.params, "backward"))
        except VanishingEvenPart as exc:
            raise VanishingEvenPart(
                f"non-unit term blocks backward step to index {base - 1}"
            ) from exc
        base -= 1
    return SomosOrbit(orbit.params, base, terms)


def classical_orbit(hi: int = 16, lo: int = -2) -> SomosOrbit:
    """The alpha = beta = 1 orbit seeded with four ones at indices -1..2."""
    params = SomosParams(dual(1), dual(1))
    orbit = SomosOrbit.from_seed(params, [dual(1)] * 4, base=-1)
    return extend_orbit(orbit, lo, hi)


# ---------------------------------------------------------------------------
# Ratio variables and first integrals.
# ---------------------------------------------------------------------------


def ratios_d(orbit: SomosOrbit, n: int) -> Fraction:
    """d_n = x_{n+1} x_{n-1} / x_n^2 on even parts."""
    x_prev, x_mid, x_next = orbit.even(n - 1), orbit.even(n), orbit.even(n + 1)
    if x_mid == 0 or x_prev == 0 or x_next == 0:
        raise VanishingEvenPart(f"zero even part in ratio window around {n}")
    return x_next * x_prev / x_mid**2


def ratio_d_dual(orbit: SomosOrbit, n: int) -> DualScalar:
    """Dual-arithmetic variant of :func:`ratios_d`."""
    return orbit.term(n + 1) * orbit.term(n - 1) / (orbit.term(n) ** 2)


def qrt_step(d_prev: Fraction, d_cur: Fraction, alpha0: Fraction, beta0: Fraction) -> Fraction:
    """d_{n+1} = (alpha d_n + beta) / (d_n^2 d_{n-1})."""
    return (alpha0 * d_cur + beta0) / (d_cur**2 * d_prev)


def qrt_invariant(d_prev: Fraction, d_cur: Fraction, alpha0: Fraction, beta0: Fraction) -> Fraction:
    """The biquadratic invariant J in terms of two consecutive ratios."""
    return d_cur * d_prev + alpha0 * (1 / d_cur + 1 / d_prev) + beta0 / (d_cur * d_prev)


def j_even(x_window: Sequence[Fraction], alpha0: Fraction, beta0: Fraction) -> Fraction:
    """J in terms of four consecutive even terms."""
    x0, x1, x2, x3 = x_window
    numerator = x0**2 * x3**2 + alpha0 * (x1**3 * x3 + x0 * x2**3) + beta0 * x1**2 * x2**2
    return numerator / (x0 * x1 * x2 * x3)


def j_dual(window: Sequence[DualScalar], params: SomosParams) -> DualScalar:
    """The same invariant evaluated in dual arithmetic on a dual window."""
    w0, w1, w2, w3 = window
    numerator = (
        w0 * w0 * w3 * w3
        + params.alpha * (w1**3 * w3 + w0 * w2**3)
        + params.beta * (w1 * w1 * w2 * w2)
    )
    return numerator / (w0 * w1 * w2 * w3)


@dataclass(frozen=True)
class CoefficientRow:
    """The four window coefficients and the source term of the odd reduction."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction
    d: Fraction

    def as_tuple(self):
        return (self.c0, self.c1, self.c2, self.c3)


def coefficient_row(
    x_window: Sequence[Fraction],
    alpha0: Fraction,
    beta0: Fraction,
    alpha1: Fraction = Fraction(0),
    beta1: Fraction = Fraction(0),
) -> CoefficientRow:
    """Closed-form coefficients attached to a window of four even terms."""
    x0, x1, x2, x3 = x_window
    t_a13 = alpha0 * x1**3 * x3
    t_a02 = alpha0 * x0 * x2**3
    t_b = beta0 * x1**2 * x2**2
    t_x = x0**2 * x3**2
    return CoefficientRow(
        c0=t_a13 + t_b - t_x,
        c1=t_a02 - 2 * t_a13 - t_b + t_x,
        c2=-2 * t_a02 + t_a13 - t_b + t_x,
        c3=t_a02 + t_b - t_x,
        d=alpha1 * (x0 * x2**3 + x1**3 * x3) + beta1 * x1**2 * x2**2,
    )


def j_odd(
    x_window: Sequence[Fraction],
    y_window: Sequence[Fraction],
    params: SomosParams,
) -> Fraction:
    """Odd component of the dual invariant, linear in the odd window."""
    row = coefficient_row(x_window, params.a0, params.b0, params.a1, params.b1)
    x0, x1, x2, x3 = x_window
    weighted = sum(c * y / x for c, x, y in zip(row.as_tuple(), x_window, y_window))
    return (row.d - weighted) / (x0 * x1 * x2 * x3)


# ---------------------------------------------------------------------------
# The planar map from Jacobi continued fractions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MapState:
    """State (v_{n-1}, d_n) of the continued-fraction map, with parameters u, f."""

    u: Fraction
    f: Fraction
    v: Fraction
    d: Fraction


def dtoda_step(state: MapState) -> MapState:
    """(v, d) -> (v', d') with v' = -v + u/d and d' = -d - v'^2 - f."""
    if state.d == 0:
        raise ZeroDivisionError("map step with d = 0")
    v_next = -state.v + state.u / state.d
    d_next = -state.d - v_next**2 - state.f
    return MapState(state.u, state.f, v_next, d_next)


def dtoda_invariant(state: MapState) -> Fraction:
    """H = d (v^2 + d + f) - u v, conserved by the map."""
    return state.d * (state.v**2 + state.d + state.f) - state.u * state.v


def dtoda_jacobian_det(state: MapState) -> Fraction:
    """Determinant of the step's Jacobian from the closed-form partials."""
    if state.d == 0:
        raise ZeroDivisionError("map step with d = 0")
    v_next = -state.v + state.u / state.d
    dvdv = Fraction(-1)
    dvdd = -state.u / state.d**2
    dddv = 2 * v_next
    dddd = -1 + 2 * v_next * state.u / state.d**2
    return dvdv * dddd - dvdd * dddv


def params_from_map(u: Fraction, f: Fraction, invariant_h: Fraction):
    """Bridge map parameters to recurrence data: alpha = u^2, J = -2H, beta = alpha f + J^2/4."""
    alpha0 = u**2
    j0 = -2 * invariant_h
    beta0 = alpha0 * f + j0**2 / 4
    return alpha0, beta0, j0


def _fraction_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    root_num = isqrt(x.numerator)
    root_den = isqrt(x.denominator)
    if root_num * root_num == x.numerator and root_den * root_den == x.denominator:
        return Fraction(root_num, root_den)
    return None


def map_state_for_orbit(orbit: SomosOrbit) -> MapState:
    """Recover a rational map state (u, f, v_0, d_1) matching an orbit.

    Needs alpha0 to be a rational square and the quadratic pinning v_0 to have
    a rational root; otherwise the map route is refused with a diagnostic (the
    bordered-Hankel route does not need these square roots).
    """
    orbit = extend_orbit(orbit, -1, 3)
    a0, b0 = orbit.params.a0, orbit.params.b0
    j0 = j_even([orbit.even(i) for i in range(0, 4)], a0, b0)
    if a0 == 0:
        raise ConsistencyError("map route needs alpha0 != 0")
    root = _fraction_sqrt(a0)
    if root is None:
        raise ConsistencyError(
            "alpha0 is not a rational square; use the bordered-Hankel route instead"
        )
    lam = (j0**2 / 4 - b0) / (3 * a0)
    f = -3 * lam
    invariant_h = -j0 / 2
    d1 = ratios_d(orbit, 1)
    d0 = ratios_d(orbit, 0)
    for u in (-root, root):
        # d1 v^2 - u v + (d1^2 + d1 f - H) = 0 pins v_0 on the level set.
        disc = u**2 - 4 * d1 * (d1**2 + d1 * f - invariant_h)
        s = _fraction_sqrt(disc)
        if s is None:
            continue
        for v0 in sorted({(u + s) / (2 * d1), (u - s) / (2 * d1)}):
            if -d1 - v0**2 - f == d0:
                return MapState(u, f, v0, d1)
    raise ConsistencyError(
        "no rational map state matches the orbit; use the bordered-Hankel route instead"
    )
