"""Moment sequences, Hankel and bordered Hankel determinants over dual rationals.

A moment specification (a_hat, b_hat, c_hat, s0, s1) generates dual moments by
the quadratic recursion

    s_j = a_hat s_{j-2} + b_hat sum_{i=0}^{j-2} s_i s_{j-2-i}
                        + c_hat sum_{i=0}^{j-3} s_i s_{j-3-i},   j >= 2,

whose Hankel determinants Delta_{n-1} solve the dual Somos-4 recurrence with
parameters recovered by :func:`params_from_moments`.  Dual determinants are
never eliminated over the dual ring (zero divisors break pivoting); instead
they split as det(A + eps B) = det A + eps * sum_i det(A with row i from B),
with each rational determinant computed by fraction-free Bareiss elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .dualnum import DualScalar
from .errors import ConsistencyError, VanishingEvenPart
from .somos import SomosOrbit


@dataclass(frozen=True)
class MomentSpec:
    """Five dual parameters; all but s1 must be units."""

    a_hat: DualScalar
    b_hat: DualScalar
    c_hat: DualScalar
    s0: DualScalar
    s1: DualScalar

    def __post_init__(self):
        for name in ("a_hat", "b_hat", "c_hat", "s0"):
            if not getattr(self, name).is_unit:
                raise VanishingEvenPart(f"moment parameter {name} must be a unit")

    @classmethod
    def parse(cls, text: str) -> "MomentSpec":
        parts = text.split(",")
        if len(parts) != 5:
            raise ValueError("moment spec needs five comma-separated dual literals")
        return cls(*(DualScalar.parse(p) for p in parts))


@dataclass(frozen=True)
class MomentSeq:
    """A finite prefix of the generated moment sequence."""

    spec: MomentSpec
    s: tuple[DualScalar, ...]

    def __len__(self):
        return len(self.s)

    def __getitem__(self, j: int) -> DualScalar:
        return self.s[j]


def moments(spec: MomentSpec, count: int) -> MomentSeq:
    """Generate s_0 .. s_{count-1} by the quadratic recursion."""
    if count < 2:
        raise ValueError("count must be at least 2")
    s = [spec.s0, spec.s1]
    for j in range(2, count):
        quad_b = sum((s[i] * s[j - 2 - i] for i in range(j - 1)), DualScalar())
        quad_c = sum((s[i] * s[j - 3 - i] for i in range(j - 2)), DualScalar())
        s.append(spec.a_hat * s[j - 2] + spec.b_hat * quad_b + spec.c_hat * quad_c)
    return MomentSeq(spec, tuple(s))


# ---------------------------------------------------------------------------
# Exact determinants.
# ---------------------------------------------------------------------------


def det_fraction(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by row-scaled integer Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m: list[list[int]] = []
    for row in rows:
        row = [Fraction(v) for v in row]
        denom = lcm(*(v.denominator for v in row)) if row else 1
        scale *= denom
        m.append([int(v * denom) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1]) / scale


def det_dual(rows: Sequence[Sequence[DualScalar]]) -> DualScalar:
    """Determinant over the dual ring via the even/odd row-replacement split."""
    n = len(rows)
    if n == 0:
        return DualScalar(Fraction(1))
    evens = [[v.even for v in row] for row in rows]
    odds = [[v.odd for v in row] for row in rows]
    even_det = det_fraction(evens)
    odd_det = Fraction(0)
    for i in range(n):
        replaced = [odds[i] if r == i else evens[r] for r in range(n)]
        odd_det += det_fraction(replaced)
    return DualScalar(even_det, odd_det)


def hankel_det(m: MomentSeq, n: int) -> DualScalar:
    """Delta_n = det(s_{i+j-2}), with Delta_0 = 1."""
    if n == 0:
        return DualScalar(Fraction(1))
    if 2 * n - 2 >= len(m):
        raise ConsistencyError(f"Delta_{n} needs moments up to s_{2 * n - 2}")
    rows = [[m[i + j] for j in range(n)] for i in range(n)]
    return det_dual(rows)


def bordered_det(m: MomentSeq, n: int) -> DualScalar:
    """Bordered variant: the last column index jumps by one; Delta*_0 = 0."""
    if n == 0:
        return DualScalar()
    if 2 * n - 1 >= len(m):
        raise ConsistencyError(f"Delta*_{n} needs moments up to s_{2 * n - 1}")
    rows = [[m[i + j] for j in range(n - 1)] + [m[i + n]] for i in range(n)]
    return det_dual(rows)


# ---------------------------------------------------------------------------
# Parameter recovery and cross-route shadows.
# ---------------------------------------------------------------------------


def params_from_moments(spec: MomentSpec) -> tuple[DualScalar, DualScalar, DualScalar]:
    """(alpha, beta, J) of the dual Somos-4 recurrence solved by Delta_{n-1}."""
    u = -(spec.s0 * spec.c_hat) - spec.s1 * spec.b_hat
    f = -spec.a_hat - 2 * spec.s0 * spec.b_hat
    j = 2 * (
        spec.s0 * spec.a_hat * spec.b_hat
        + spec.s0 * spec.s0 * spec.b_hat * spec.b_hat
        + spec.s1 * spec.c_hat
    )
    alpha = u * u
    beta = alpha * f + j * j / DualScalar(Fraction(4))
    return alpha, beta, j


def hankel_orbit_terms(spec: MomentSpec, count: int) -> list[DualScalar]:
    """X_n = Delta_{n-1} for n = 1..count."""
    seq = moments(spec, max(2, 2 * count))
    return [hankel_det(seq, n - 1) for n in range(1, count + 1)]


def v_from_hankel(m: MomentSeq, n: int) -> Fraction:
    """v_n = Delta*_{n-1}/Delta_{n-1} - Delta*_n/Delta_n on even parts, n >= 1."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    d_prev = hankel_det(m, n - 1).even
    d_cur = hankel_det(m, n).even
    if d_prev == 0 or d_cur == 0:
        raise ZeroDivisionError(f"vanishing Hankel determinant near n = {n}")
    return bordered_det(m, n - 1).even / d_prev - bordered_det(m, n).even / d_cur


def shadow_iii_from_bordered(
    m: MomentSeq,
    orbit: SomosOrbit | None = None,
    count: int | None = None,
) -> dict[int, Fraction]:
    """Representative third shadow: n -> Delta*_{n-1} (even parts), n >= 1.

    It differs from the telescoped-map normalization by a rational multiple of
    x_n.  When a host orbit is supplied, the alignment Delta_{n-1} = x_n is
    enforced and a mismatch raises :class:`ConsistencyError`.
    """
    max_n = (len(m) + 2) // 2  # Delta*_{n-1} needs s up to 2n-3
    if count is not None:
        max_n = min(max_n, count)
    if max_n < 1:
        raise ConsistencyError("moment sequence too short for any bordered determinant")
    out: dict[int, Fraction] = {}
    for n in range(1, max_n + 1):
        if orbit is not None and hankel_det(m, n - 1).even != orbit.even(n):
            raise ConsistencyError(
                f"Delta_{n - 1} does not reproduce the host orbit term x_{n}"
            )
        out[n] = bordered_det(m, n - 1).even
    return out
