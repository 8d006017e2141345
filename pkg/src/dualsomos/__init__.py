"""Exact Somos-4 recurrences over dual numbers.

Iterates the dual recurrence X_{n+4} X_n = alpha X_{n+3} X_{n+1} + beta X_{n+2}^2
in exact rational arithmetic, builds all four independent shadow sequences by
independent routes (order-three reduction, integrable map sums, bordered
Hankel determinants), checks the Laurent property symbolically, and validates
the Weierstrass sigma-function solution numerically.
"""

from .dualnum import DualComplex, DualScalar, Rational, dual
from .errors import (
    BranchFailure,
    ConsistencyError,
    DegenerateAlpha,
    DomainError,
    DualSomosError,
    NotDivisible,
    ParseError,
    SingularCasoratian,
    SingularCurve,
    SingularLeadingCoefficient,
    VanishingEvenPart,
)
from .hankel import (
    MomentSeq,
    MomentSpec,
    bordered_det,
    hankel_det,
    moments,
    params_from_moments,
    shadow_iii_from_bordered,
    v_from_hankel,
)
from .somos import (
    MapState,
    SomosOrbit,
    SomosParams,
    classical_orbit,
    dtoda_invariant,
    dtoda_jacobian_det,
    dtoda_step,
    extend_orbit,
    j_dual,
    j_even,
    j_odd,
    map_state_for_orbit,
    params_from_map,
    qrt_invariant,
    qrt_step,
    ratios_d,
    somos_step,
)

__version__ = "0.1.0"

__all__ = [
    "BranchFailure",
    "ConsistencyError",
    "DegenerateAlpha",
    "DomainError",
    "DualComplex",
    "DualScalar",
    "DualSomosError",
    "MapState",
    "MomentSeq",
    "MomentSpec",
    "NotDivisible",
    "ParseError",
    "Rational",
    "SingularCasoratian",
    "SingularCurve",
    "SingularLeadingCoefficient",
    "SomosOrbit",
    "SomosParams",
    "VanishingEvenPart",
    "bordered_det",
    "classical_orbit",
    "dtoda_invariant",
    "dtoda_jacobian_det",
    "dtoda_step",
    "dual",
    "extend_orbit",
    "hankel_det",
    "j_dual",
    "j_even",
    "j_odd",
    "map_state_for_orbit",
    "moments",
    "params_from_map",
    "params_from_moments",
    "qrt_invariant",
    "qrt_step",
    "ratios_d",
    "shadow_iii_from_bordered",
    "somos_step",
    "v_from_hankel",
]
