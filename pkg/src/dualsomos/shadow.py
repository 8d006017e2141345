"""Shadow sequences: solutions of the linearized Somos-4 equation.

A shadow of an orbit (x_n) is a sequence (y_n) solving the odd component

    x_n y_{n+4} - a0 x_{n+1} y_{n+3} - 2 b0 x_{n+2} y_{n+2}
        - a0 x_{n+3} y_{n+1} + x_{n+4} y_n = a1 x_{n+1} x_{n+3} + b1 x_{n+2}^2.

The solution space is four-dimensional.  Three independent homogeneous
solutions are x_n, n x_n, and the telescoped map sums built here; the fourth
direction is reached by fixing a nonzero value of the odd invariant J1, which
turns the fourth-order equation into an order-three inhomogeneous one

    sum_j C_n^(j) y_{n+j} / x_{n+j} = F_n,   F_n = D_n - J1 x_n x_{n+1} x_{n+2} x_{n+3},

solved either directly for the top term or by discrete variation of parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import ConsistencyError, SingularCasoratian, SingularLeadingCoefficient
from .somos import (
    MapState,
    SomosOrbit,
    SomosParams,
    coefficient_row,
    dtoda_step,
    extend_orbit,
    params_from_map,
    ratios_d,
)

RationalSeq = Mapping[int, Fraction]


def shadow_residual_4(
    x_window: Sequence[Fraction],
    y_window: Sequence[Fraction],
    params: SomosParams,
) -> Fraction:
    """Left minus right side of the odd equation on a 5-term window."""
    x0, x1, x2, x3, x4 = x_window
    y0, y1, y2, y3, y4 = y_window
    left = (
        x0 * y4
        - params.a0 * x1 * y3
        - 2 * params.b0 * x2 * y2
        - params.a0 * x3 * y1
        + x4 * y0
    )
    right = params.a1 * x1 * x3 + params.b1 * x2**2
    return left - right


def shadow_back_step(
    x_window: Sequence[Fraction],
    y_upper: Sequence[Fraction],
    alpha0: Fraction,
    beta0: Fraction,
) -> Fraction:
    """Solve the homogeneous odd equation for y_n given y_{n+1}..y_{n+4}."""
    x0, x1, x2, x3, x4 = x_window
    y1, y2, y3, y4 = y_upper
    return (alpha0 * x1 * y3 + 2 * beta0 * x2 * y2 + alpha0 * x3 * y1 - x0 * y4) / x4


def apply_l(
    x_window: Sequence[Fraction],
    y_window: Sequence[Fraction],
    alpha0: Fraction,
    beta0: Fraction,
) -> Fraction:
    """The order-three operator: sum_j C_n^(j) y_{n+j} / x_{n+j}."""
    row = coefficient_row(x_window, alpha0, beta0)
    return sum(c * y / x for c, x, y in zip(row.as_tuple(), x_window, y_window))


def shadow_iv_step(
    x_window: Sequence[Fraction],
    y_lower: Sequence[Fraction],
    params: SomosParams,
    j1: Fraction,
) -> Fraction:
    """Top term of the order-three reduction: y_{n+3} from y_n..y_{n+2}."""
    row = coefficient_row(x_window, params.a0, params.b0, params.a1, params.b1)
    if row.c3 == 0:
        raise SingularLeadingCoefficient("leading window coefficient vanished")
    x0, x1, x2, x3 = x_window
    source = row.d - j1 * x0 * x1 * x2 * x3
    partial = sum(
        c * y / x for c, x, y in zip(row.as_tuple()[:3], x_window[:3], y_lower)
    )
    return x3 * (source - partial) / row.c3


def shadow_iv(
    orbit: SomosOrbit,
    hi: int,
    j1: Fraction = Fraction(-1),
    seed: Sequence[Fraction] = (Fraction(0), Fraction(0), Fraction(0)),
    seed_base: int = -1,
) -> dict[int, Fraction]:
    """Iterate the order-three recurrence from a 3-term seed up to index hi."""
    orbit = extend_orbit(orbit, seed_base, hi)
    values = {seed_base + i: Fraction(seed[i]) for i in range(3)}
    for m in range(seed_base + 3, hi + 1):
        n = m - 3
        x_window = [orbit.even(n + j) for j in range(4)]
        y_lower = [values[n + j] for j in range(3)]
        values[m] = shadow_iv_step(x_window, y_lower, orbit.params, j1)
    return values


def shadow_iii_from_map(orbit: SomosOrbit, map0: MapState, hi: int) -> dict[int, Fraction]:
    """Third shadow from telescoped map sums: y_n = -x_n sum_{j<n} v_j, n >= 0.

    The given map state must describe the same orbit: its d must equal the
    orbit ratio at index 1, the bridged parameters must reproduce (alpha0,
    beta0, J0), and the induced d_0 must match.  Index -1 is supplied by one
    backward homogeneous step.
    """
    from .somos import dtoda_invariant, j_even

    orbit = extend_orbit(orbit, -1, max(hi, 3))
    a0, b0 = orbit.params.a0, orbit.params.b0
    j0 = j_even([orbit.even(i) for i in range(0, 4)], a0, b0)
    alpha_m, beta_m, j_m = params_from_map(map0.u, map0.f, dtoda_invariant(map0))
    if (alpha_m, beta_m, j_m) != (a0, b0, j0):
        raise ConsistencyError("map parameters do not reproduce the orbit invariants")
    if map0.d != ratios_d(orbit, 1):
        raise ConsistencyError("map state d does not match the orbit ratio at index 1")
    if -map0.d - map0.v**2 - map0.f != ratios_d(orbit, 0):
        raise ConsistencyError("map state v is inconsistent with the orbit ratio at index 0")

    v_values = [map0.v]
    state = map0
    for _ in range(1, hi):
        state = dtoda_step(state)
        v_values.append(state.v)

    values: dict[int, Fraction] = {}
    partial = Fraction(0)
    for n in range(0, hi + 1):
        values[n] = -orbit.even(n) * partial
        if n < len(v_values):
            partial += v_values[n]
    x_window = [orbit.even(-1 + j) for j in range(5)]
    values[-1] = shadow_back_step(x_window, [values[j] for j in range(0, 4)], a0, b0)
    return values


def casoratian3(
    basis: Sequence[RationalSeq],
    n: int,
) -> Fraction:
    """Determinant of the 3x3 matrix of basis values at indices n+1..n+3."""
    rows = [[basis[j][n + i] for j in range(3)] for i in (1, 2, 3)]
    return (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )


@dataclass(frozen=True)
class VoPState:
    """Accumulators of the variation-of-parameters construction at index n."""

    f_i: Fraction
    f_ii: Fraction
    f_iii: Fraction
    n: int


def variation_of_parameters(
    orbit: SomosOrbit,
    basis: Sequence[RationalSeq],
    j1: Fraction,
    seed: VoPState,
    count: int,
) -> dict[int, Fraction]:
    """General solution of the order-three reduction via varying coefficients.

    Emits y_n = f_n^(i) y_n^(i) + f_n^(ii) y_n^(ii) + f_n^(iii) y_n^(iii) for
    ``count`` indices starting at ``seed.n``.  The increments solve

        sum_j v^(j) y^(j)_{n+1} = 0,  sum_j v^(j) y^(j)_{n+2} = 0,
        sum_j v^(j) y^(j)_{n+3} = x_{n+3} F_n / C_n^(3),

    so the three accumulators change just enough to push the inhomogeneity.
    """
    start = seed.n
    hi = start + count - 1
    orbit = extend_orbit(orbit, start, hi + 3)
    coeffs = [seed.f_i, seed.f_ii, seed.f_iii]
    out: dict[int, Fraction] = {}
    for n in range(start, hi + 1):
        out[n] = sum(c * basis[j][n] for j, c in enumerate(coeffs))
        x_window = [orbit.even(n + j) for j in range(4)]
        row = coefficient_row(
            x_window, orbit.params.a0, orbit.params.b0, orbit.params.a1, orbit.params.b1
        )
        if row.c3 == 0:
            raise SingularLeadingCoefficient(f"leading coefficient vanished at index {n}")
        det = casoratian3(basis, n)
        if det == 0:
            raise SingularCasoratian(f"basis Casoratian vanished at index {n}")
        source = row.d - j1 * x_window[0] * x_window[1] * x_window[2] * x_window[3]
        rhs = orbit.even(n + 3) * source / row.c3
        b1_, b2_, b3_ = (basis[j][n + 1] for j in range(3))
        c1_, c2_, c3_ = (basis[j][n + 2] for j in range(3))
        scale = rhs / det
        coeffs[0] += scale * (b2_ * c3_ - b3_ * c2_)
        coeffs[1] += scale * (b3_ * c1_ - b1_ * c3_)
        coeffs[2] += scale * (b1_ * c2_ - b2_ * c1_)
    return out


def vop_seed_matching(
    basis: Sequence[RationalSeq],
    targets: Sequence[Fraction],
    start: int,
) -> VoPState:
    """Solve for accumulators so the emitted values match three targets.

    The construction makes y_m = sum_j f_n^(j) y_m^(j) hold for
    m = n, n+1, n+2, so matching a 3-term initial segment is one 3x3 solve.
    """
    det = casoratian3(basis, start - 1)
    if det == 0:
        raise SingularCasoratian(f"basis Casoratian vanished at seed index {start}")
    rows = [[basis[j][start + i] for j in range(3)] for i in range(3)]
    t = list(targets)
    minors = []
    for col in range(3):
        m = [[rows[r][c] if c != col else t[r] for c in range(3)] for r in range(3)]
        minors.append(
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    return VoPState(minors[0] / det, minors[1] / det, minors[2] / det, start)


@dataclass(frozen=True)
class ShadowBasis:
    """Four aligned shadow rows of a host orbit."""

    y_i: dict[int, Fraction]
    y_ii: dict[int, Fraction]
    y_iii: dict[int, Fraction]
    y_iv: dict[int, Fraction]

    def rows(self):
        return {"i": self.y_i, "ii": self.y_ii, "iii": self.y_iii, "iv": self.y_iv}


def shadow_basis(
    orbit: SomosOrbit,
    lo: int,
    hi: int,
    map0: MapState | None = None,
    j1: Fraction = Fraction(-1),
    iv_route: str = "recurrence",
) -> ShadowBasis:
    """Construct the four independent shadows over [lo, hi].

    ``y_i`` and ``y_ii`` come straight from the orbit, ``y_iii`` from the map
    sums (state recovered from the orbit when not supplied), and ``y_iv`` from
    the order-three recurrence seeded with zeros at lo..lo+2, or from
    variation of parameters when requested.
    """
    from .somos import map_state_for_orbit

    work = extend_orbit(orbit, min(lo, -1), hi + 3)
    y_i = {n: work.even(n) for n in range(min(lo, -1), hi + 4)}
    y_ii = {n: n * work.even(n) for n in range(min(lo, -1), hi + 4)}
    if map0 is None:
        map0 = map_state_for_orbit(work)
    y_iii = shadow_iii_from_map(work, map0, hi + 3)
    if iv_route == "recurrence":
        y_iv = shadow_iv(work, hi, j1=j1, seed_base=lo)
    elif iv_route == "vop":
        basis = (y_i, y_ii, y_iii)
        seed = vop_seed_matching(basis, [Fraction(0)] * 3, lo)
        y_iv = variation_of_parameters(work, basis, j1, seed, hi - lo + 1)
    else:
        raise ValueError(f"unknown iv_route {iv_route!r}")
    return ShadowBasis(y_i, y_ii, y_iii, y_iv)
