import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualsomos.dualnum import (
    DualComplex,
    DualScalar,
    dual,
    even_part,
    magnitude,
    odd_part,
    smooth_exp,
    smooth_sqrt,
)
from dualsomos.errors import ParseError, VanishingEvenPart

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=24)
duals = st.builds(DualScalar, rationals, rationals)
units = st.builds(DualScalar, rationals.filter(lambda x: x != 0), rationals)


class TestArithmetic:
    def test_eps_squares_to_zero(self):
        eps = dual(0, 1)
        assert eps * eps == dual(0, 0)

    def test_binomial(self):
        assert dual(1, 1) * dual(1, 1) == dual(1, 2)

    def test_mixed_product(self):
        assert dual(1, -4) * dual(1, 1) == dual(1, -3)

    def test_int_coercion(self):
        assert 2 * dual(1, 1) + 1 == dual(3, 2)
        assert dual(1, 1) - Fraction(1, 2) == dual(Fraction(1, 2), 1)

    def test_pow(self):
        assert dual(1, 1) ** 5 == dual(1, 5)
        assert dual(2, 1) ** -1 == dual(2, 1).inv()
        assert dual(3, 2) ** 0 == dual(1)


class TestInverse:
    def test_simple(self):
        assert dual(1, 1).inv() == dual(1, -1)

    def test_reduced(self):
        value = dual(2, 1)
        assert value.inv() == dual(Fraction(1, 2), Fraction(-1, 4))
        assert value * value.inv() == dual(1, 0)

    def test_zero_divisor(self):
        with pytest.raises(VanishingEvenPart):
            dual(0, 1).inv()
        with pytest.raises(VanishingEvenPart):
            dual(1) / dual(0, 3)

    @given(units)
    @settings(max_examples=80)
    def test_unit_times_inverse_is_one(self, a):
        assert a * a.inv() == dual(1, 0)


class TestRingAxioms:
    @given(duals, duals, duals)
    @settings(max_examples=80)
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c

    @given(duals, duals)
    @settings(max_examples=80)
    def test_commutativity(self, a, b):
        assert a * b == b * a
        assert a + b == b + a


class TestParsing:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("1-3/2e", dual(1, Fraction(-3, 2))),
            ("7", dual(7)),
            ("0+1e", dual(0, 1)),
            ("1+2e", dual(1, 2)),
            ("-3/2e", dual(0, Fraction(-3, 2))),
            ("236-527/2e", dual(236, Fraction(-527, 2))),
            ("1e", dual(0, 1)),
            ("-7", dual(-7)),
        ],
    )
    def test_grammar_cases(self, text, expected):
        assert DualScalar.parse(text) == expected

    @pytest.mark.parametrize("text", ["", "e", "1+", "1+2", "1 + 2e", "1+2e3", "1/0", "2+1/0e"])
    def test_malformed(self, text):
        with pytest.raises(ParseError) as info:
            DualScalar.parse(text)
        assert info.value.position >= 0

    def test_error_position(self):
        with pytest.raises(ParseError) as info:
            DualScalar.parse("12x")
        assert info.value.position == 2

    @given(duals)
    @settings(max_examples=80)
    def test_print_parse_roundtrip(self, a):
        assert DualScalar.parse(str(a)) == a


class TestSmoothScalars:
    def test_dual_complex_ring(self):
        eps = DualComplex(0, 1)
        assert (eps * eps).even == 0 and (eps * eps).odd == 0
        x = DualComplex(2 + 1j, 0.5)
        assert magnitude(x * x.inv() - 1) < 1e-15

    def test_sqrt_and_exp_laws(self):
        x = DualComplex(3 - 2j, 1.25 + 0.5j)
        root = smooth_sqrt(x)
        assert magnitude(root * root - x) < 1e-14
        assert abs(odd_part(root) - x.odd / (2 * even_part(root))) < 1e-14
        e = smooth_exp(x)
        assert abs(even_part(e) - cmath.exp(x.even)) < 1e-13
        assert abs(odd_part(e) - cmath.exp(x.even) * x.odd) < 1e-13

    def test_sqrt_of_pure_odd_rejected(self):
        with pytest.raises(VanishingEvenPart):
            smooth_sqrt(DualComplex(0, 1))

    def test_forward_derivative_matches_finite_difference(self):
        # Composite of the contract operations only.
        def phi(t):
            return smooth_exp(smooth_sqrt(t + 3.0)) * t + 1.0 / (t + 2.0)

        for x in (0.7, 1.9 + 0.3j, -0.25 + 1j):
            ad = odd_part(phi(DualComplex(x, 1.0)))
            h = 1e-6
            fd = (phi(complex(x) + h) - phi(complex(x) - h)) / (2 * h)
            assert abs(ad - fd) / max(1.0, abs(fd)) < 1e-6
