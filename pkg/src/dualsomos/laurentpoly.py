"""Sparse integer Laurent polynomials in the twelve recurrence generators.

The generator list is fixed once and for all:

    x0 x1 x2 x3   initial values (the only generators allowed negative exponents)
    a0 a1 b0 b1   even/odd parts of the two recurrence coefficients
    y0 y1 y2 y3   odd parts of the initial values

Symbolic iteration of the dual recurrence stays inside this ring whenever the
exact divisions succeed, which is precisely the Laurent property being
machine-checked.  Exact division clears the x-monomial content of numerator
and denominator, then runs leading-term cancellation under graded-lex order;
a nonzero remainder raises :class:`NotDivisible`.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotDivisible, VanishingEvenPart

GENERATORS = ("x0", "x1", "x2", "x3", "a0", "a1", "b0", "b1", "y0", "y1", "y2", "y3")
NGEN = len(GENERATORS)
X_INDICES = (0, 1, 2, 3)
# Generators of odd parity: a1, b1 and the four y's.
ODD_INDICES = (5, 7, 8, 9, 10, 11)

_ZERO_EXP = (0,) * NGEN


def _grlex(exps):
    return (sum(exps), exps)


class LaurentPoly:
    """Finite map from exponent vectors to nonzero integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {} if terms is None else terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({_ZERO_EXP: c}) if c else cls()

    @classmethod
    def generator(cls, name: str) -> "LaurentPoly":
        index = GENERATORS.index(name)
        exps = [0] * NGEN
        exps[index] = 1
        return cls({tuple(exps): 1})

    # -- ring operations ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == LaurentPoly.constant(other).terms
        return NotImplemented

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        add = operator.add
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(map(add, ea, eb))
                v = out.get(key, 0) + ca * cb
                if v:
                    out[key] = v
                else:
                    del out[key]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined on polynomials")
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure queries -------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def content(self) -> tuple:
        """Componentwise minimum exponent over all monomials (zero poly: all 0)."""
        if not self.terms:
            return _ZERO_EXP
        mins = None
        for e in self.terms:
            mins = list(e) if mins is None else [min(m, v) for m, v in zip(mins, e)]
        return tuple(mins)

    def shifted(self, delta: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``delta``."""
        delta = tuple(delta)
        if delta == _ZERO_EXP:
            return self
        add = operator.add
        return LaurentPoly({tuple(map(add, e, delta)): c for e, c in self.terms.items()})

    def degree_in(self, indices: Iterable[int]):
        """Set of total degrees over the given generator subset, per monomial."""
        idx = tuple(indices)
        return {sum(e[i] for i in idx) for e in self.terms}

    def is_free_of(self, indices: Iterable[int]) -> bool:
        degrees = self.degree_in(indices)
        return degrees <= {0}

    def is_affine_linear_in(self, indices: Iterable[int]) -> bool:
        """Every monomial has total degree exactly one over the subset."""
        degrees = self.degree_in(indices)
        return degrees <= {1} and bool(self.terms)

    # -- evaluation and printing -------------------------------------------

    def evaluate(self, values) -> Fraction:
        """Evaluate at 12 rationals; negative exponents require nonzero x values."""
        powers: list[dict] = [{} for _ in range(NGEN)]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = values[i] ** e
            return cache[e]

        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for i, e in enumerate(exps):
                if e:
                    term *= power(i, e)
            total += term
        return total

    def canonical(self) -> str:
        """Deterministic text form, monomials sorted by the division order."""
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_grlex, reverse=True):
            coeff = self.terms[exps]
            factors = [
                f"{GENERATORS[i]}^{e}" if e != 1 else GENERATORS[i]
                for i, e in enumerate(exps)
                if e
            ]
            body = "*".join(factors)
            if not factors:
                text = str(abs(coeff))
            elif abs(coeff) == 1:
                text = body
            else:
                text = f"{abs(coeff)}*{body}"
            parts.append(("- " if coeff < 0 else "+ ") + text)
        head = parts[0][2:] if parts[0].startswith("+ ") else "-" + parts[0][2:]
        return " ".join([head] + parts[1:])

    def __repr__(self):
        return f"LaurentPoly({self.canonical()})"


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def _poly_div(num_terms: dict, den_terms: dict) -> dict:
    """Exact division of ordinary polynomials (all exponents >= 0) over Z."""
    den_lead = max(den_terms, key=_grlex)
    den_lead_coeff = den_terms[den_lead]
    remainder = dict(num_terms)
    quotient: dict = {}
    add = operator.add
    sub = operator.sub
    while remainder:
        lead = max(remainder, key=_grlex)
        coeff = remainder[lead]
        delta = tuple(map(sub, lead, den_lead))
        if any(d < 0 for d in delta) or coeff % den_lead_coeff:
            raise NotDivisible(f"remainder has leading term not divisible: {lead}")
        q = coeff // den_lead_coeff
        quotient[delta] = q
        for e, c in den_terms.items():
            key = tuple(map(add, e, delta))
            v = remainder.get(key, 0) - q * c
            if v:
                remainder[key] = v
            else:
                remainder.pop(key, None)
    return quotient


def lp_exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient num/den when it exists in the Laurent ring, else NotDivisible.

    Only the x generators may end up with negative exponents in the quotient.
    """
    if not den.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num.terms:
        return LaurentPoly.zero()
    num_content = num.content()
    den_content = den.content()
    shift = tuple(n - d for n, d in zip(num_content, den_content))
    if any(shift[i] < 0 for i in range(NGEN) if i not in X_INDICES):
        raise NotDivisible("denominator carries non-invertible generator content")
    num_norm = num.shifted(tuple(-v for v in num_content))
    den_norm = den.shifted(tuple(-v for v in den_content))
    quotient = _poly_div(num_norm.terms, den_norm.terms)
    return LaurentPoly(quotient).shifted(shift)


# ---------------------------------------------------------------------------
# Symbolic dual iterates.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualLaurent:
    """Symbolic dual iterate: even and odd Laurent-polynomial components."""

    even: LaurentPoly
    odd: LaurentPoly


_A0 = LaurentPoly.generator("a0")
_A1 = LaurentPoly.generator("a1")
_B0 = LaurentPoly.generator("b0")
_B1 = LaurentPoly.generator("b1")


def seed_window() -> tuple[DualLaurent, DualLaurent, DualLaurent, DualLaurent]:
    """The four formal initial values X_i = x_i + y_i*eps."""
    return tuple(
        DualLaurent(LaurentPoly.generator(f"x{i}"), LaurentPoly.generator(f"y{i}"))
        for i in range(4)
    )


def symbolic_somos_step(window, direction: str = "forward") -> DualLaurent:
    """One symbolic step of X_{n+4} X_n = alpha X_{n+3} X_{n+1} + beta X_{n+2}^2.

    ``window`` holds four consecutive symbolic iterates.  Forward consumes
    (X_n .. X_{n+3}) and divides by X_n; backward consumes (X_{n+1} .. X_{n+4})
    and divides by X_{n+4}.  Both components are produced by exact division,
    so a Laurent-property violation surfaces as :class:`NotDivisible`.
    """
    if direction == "forward":
        high, low, mid, divisor = window[3], window[1], window[2], window[0]
    elif direction == "backward":
        high, low, mid, divisor = window[2], window[0], window[1], window[3]
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if not divisor.even.terms:
        raise VanishingEvenPart("symbolic divisor has identically zero even part")
    num_even = _A0 * (high.even * low.even) + _B0 * (mid.even * mid.even)
    num_odd = (
        _A0 * (high.even * low.odd + high.odd * low.even)
        + _A1 * (high.even * low.even)
        + _B0 * ((mid.even * mid.odd) * 2)
        + _B1 * (mid.even * mid.even)
    )
    even = lp_exact_div(num_even, divisor.even)
    odd = lp_exact_div(num_odd - divisor.odd * even, divisor.even)
    return DualLaurent(even, odd)


def iterate_symbolic(depth: int) -> dict[int, DualLaurent]:
    """Symbolic iterates X_0 .. X_depth from the formal seed window."""
    window = list(seed_window())
    iterates = {i: window[i] for i in range(4)}
    for n in range(4, depth + 1):
        nxt = symbolic_somos_step(window, "forward")
        iterates[n] = nxt
        window = window[1:] + [nxt]
    return iterates


def lp_eval(value: DualLaurent, assignment: Mapping[str, Fraction]):
    """Specialize a symbolic iterate at rational generator values.

    Returns a :class:`DualScalar`.  All four x generators must be nonzero
    because they occur with negative exponents.
    """
    from .dualnum import DualScalar

    values = []
    for name in GENERATORS:
        v = Fraction(assignment[name])
        if name in ("x0", "x1", "x2", "x3") and v == 0:
            raise VanishingEvenPart(f"generator {name} assigned zero")
        values.append(v)
    return DualScalar(value.even.evaluate(values), value.odd.evaluate(values))


# ---------------------------------------------------------------------------
# Depth-verification driver.
# ---------------------------------------------------------------------------


@dataclass
class LaurentReport:
    depth: int
    term_counts: dict[int, tuple[int, int]]
    even_parity_ok: bool
    odd_linear_ok: bool
    specialization_checks: int
    specialization_ok: bool
    backward_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.even_parity_ok
            and self.odd_linear_ok
            and self.specialization_ok
            and self.backward_ok
        )


def verify_laurent(depth: int = 10, specializations: int = 20, rng_seed: int = 0) -> LaurentReport:
    """Iterate symbolically to ``depth`` and machine-check the membership claims.

    Checks, for every iterate: exact divisions succeed (otherwise NotDivisible
    propagates), the even part is free of odd generators, and the odd part is
    jointly affine-linear in (y0..y3, a1, b1).  Then cross-checks the requested
    number of random rational specializations against direct numeric iteration.
    """
    import random

    from . import somos
    from .dualnum import DualScalar, dual

    iterates = iterate_symbolic(depth)
    even_ok = all(it.even.is_free_of(ODD_INDICES) for it in iterates.values())
    odd_ok = all(
        iterates[n].odd.is_affine_linear_in(ODD_INDICES) for n in range(4, depth + 1)
    )
    counts = {n: (len(it.even), len(it.odd)) for n, it in iterates.items()}

    # Backward then forward from the seed must reproduce the formal X_3.
    back = symbolic_somos_step(seed_window(), "backward")
    window = (back,) + seed_window()[:3]
    forward_again = symbolic_somos_step(window, "forward")
    backward_ok = (
        forward_again.even == LaurentPoly.generator("x3")
        and forward_again.odd == LaurentPoly.generator("y3")
    )

    rng = random.Random(rng_seed)
    done = 0
    spec_ok = True
    while done < specializations:
        assignment = {name: Fraction(rng.randint(-4, 4)) for name in GENERATORS}
        if any(assignment[f"x{i}"] == 0 for i in range(4)):
            continue
        if assignment["a0"] == 0 and assignment["b0"] == 0:
            continue
        params = somos.SomosParams(
            dual(assignment["a0"], assignment["a1"]),
            dual(assignment["b0"], assignment["b1"]),
        )
        seed = [
            DualScalar(assignment[f"x{i}"], assignment[f"y{i}"]) for i in range(4)
        ]
        try:
            orbit = somos.extend_orbit(
                somos.SomosOrbit.from_seed(params, seed, base=0), 0, depth
            )
        except VanishingEvenPart:
            continue  # numeric orbit hit a zero divisor; draw a fresh assignment
        for n in range(depth + 1):
            if lp_eval(iterates[n], assignment) != orbit.term(n):
                spec_ok = False
        done += 1

    return LaurentReport(
        depth=depth,
        term_counts=counts,
        even_parity_ok=even_ok,
        odd_linear_ok=odd_ok,
        specialization_checks=done,
        specialization_ok=spec_ok,
        backward_ok=backward_ok,
    )
