import random
from fractions import Fraction

import pytest

from dualsomos.dualnum import DualScalar, dual
from dualsomos.errors import NotDivisible, VanishingEvenPart
from dualsomos.laurentpoly import (
    GENERATORS,
    ODD_INDICES,
    LaurentPoly,
    iterate_symbolic,
    lp_eval,
    lp_exact_div,
    seed_window,
    symbolic_somos_step,
    verify_laurent,
)
from dualsomos.somos import SomosOrbit, SomosParams, extend_orbit

X0 = LaurentPoly.generator("x0")
X1 = LaurentPoly.generator("x1")
X2 = LaurentPoly.generator("x2")
X3 = LaurentPoly.generator("x3")
A0 = LaurentPoly.generator("a0")
B0 = LaurentPoly.generator("b0")
ONE = LaurentPoly.constant(1)


def ones_assignment(**overrides):
    values = {name: Fraction(1) for name in GENERATORS}
    for name in ("a1", "b1", "y0", "y1", "y2", "y3"):
        values[name] = Fraction(0)
    values.update({k: Fraction(v) for k, v in overrides.items()})
    return values


class TestRing:
    def test_monomial_inverse(self):
        inv = lp_exact_div(ONE, X0)
        assert X0 * inv == ONE

    def test_square(self):
        assert (X1 + X2) ** 2 == X1 * X1 + 2 * (X1 * X2) + X2 * X2

    def test_numerator_at_ones(self):
        numerator = A0 * X3 * X1 + B0 * X2 * X2
        values = [Fraction(1)] * len(GENERATORS)
        assert numerator.evaluate(values) == 2

    def test_canonical_is_deterministic(self):
        p = A0 * X3 * X1 + B0 * X2 * X2 - LaurentPoly.constant(3)
        assert p.canonical() == "x1*x3*a0 + x2^2*b0 - 3"


class TestExactDivision:
    def test_difference_of_squares(self):
        q = lp_exact_div(X0 * X0 - X1 * X1, X0 - X1)
        assert q == X0 + X1

    def test_monomial_denominator(self):
        numerator = A0 * X3 * X1 + B0 * X2 * X2
        q = lp_exact_div(numerator, X0)
        assert q * X0 == numerator

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            lp_exact_div(X0 + X1, X0 + X2)

    def test_integer_content_matters(self):
        with pytest.raises(NotDivisible):
            lp_exact_div(X0 + X1, LaurentPoly.constant(2))
        assert lp_exact_div(2 * (X0 + X1), LaurentPoly.constant(2)) == X0 + X1

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            lp_exact_div(X0, LaurentPoly.zero())


class TestSymbolicIteration:
    def test_first_step_structure(self):
        step = symbolic_somos_step(seed_window(), "forward")
        expected_even = lp_exact_div(A0 * X3 * X1 + B0 * X2 * X2, X0)
        assert step.even == expected_even
        assert step.even.canonical() == "x0^-1*x1*x3*a0 + x0^-1*x2^2*b0"
        assert len(step.odd) == 7

    def test_depth_six_at_ones(self):
        iterates = iterate_symbolic(6)
        value = lp_eval(iterates[6], ones_assignment())
        assert value == dual(7, 0)

    def test_depth_eight_membership(self):
        iterates = iterate_symbolic(8)  # no NotDivisible raised
        for n in range(4, 9):
            assert iterates[n].even.is_free_of(ODD_INDICES)
            assert iterates[n].odd.is_affine_linear_in(ODD_INDICES)

    def test_specialization_commutes_with_iteration(self):
        rng = random.Random(7)
        iterates = iterate_symbolic(7)
        done = 0
        while done < 5:
            assignment = {name: Fraction(rng.randint(-3, 3)) for name in GENERATORS}
            if any(assignment[f"x{i}"] == 0 for i in range(4)):
                continue
            if assignment["a0"] == 0 and assignment["b0"] == 0:
                continue
            params = SomosParams(
                dual(assignment["a0"], assignment["a1"]),
                dual(assignment["b0"], assignment["b1"]),
            )
            seed = [DualScalar(assignment[f"x{i}"], assignment[f"y{i}"]) for i in range(4)]
            try:
                orbit = extend_orbit(SomosOrbit.from_seed(params, seed, base=0), 0, 7)
            except VanishingEvenPart:
                continue
            for n in range(8):
                assert lp_eval(iterates[n], assignment) == orbit.term(n)
            done += 1

    def test_backward_forward_roundtrip(self):
        report = verify_laurent(depth=5, specializations=3, rng_seed=3)
        assert report.backward_ok
        assert report.ok

    def test_eval_rejects_zero_x(self):
        step = symbolic_somos_step(seed_window(), "forward")
        with pytest.raises(VanishingEvenPart):
            lp_eval(step, ones_assignment(x0=0))
