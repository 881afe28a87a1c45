from fractions import Fraction
from math import gcd as int_gcd

import pytest
from hypothesis import given, settings, strategies as st

from cactusids.polynomials import (
    Polynomial,
    RationalGF,
    format_gf,
    format_poly,
    poly_arith,
    poly_divmod_exact,
    poly_gcd,
)


def P(*coeffs):
    return Polynomial(coeffs)


class TestPolynomial:
    def test_canonical_trim(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).coeffs == ()
        assert Polynomial().is_zero

    def test_arith_examples(self):
        assert poly_arith(P(1, 1), P(1, -1), "mul") == P(1, 0, -1)
        assert poly_arith(P(1, -1, -1), P(0, 1, 1), "add") == P(1)
        assert poly_arith(Polynomial(), P(3, 7), "mul") == Polynomial()
        assert poly_arith(P(1, 2), P(1, 2), "sub") == Polynomial()

    def test_bad_op(self):
        with pytest.raises(ValueError):
            poly_arith(P(1), P(1), "div")

    def test_non_integer_rejected(self):
        with pytest.raises(TypeError):
            Polynomial((1.5,))

    def test_eval_and_degree(self):
        p = P(1, -1, -1)
        assert p.degree == 2
        assert p(2) == 1 - 2 - 4
        assert p(Fraction(1, 2)) == Fraction(1, 4)

    def test_pow_and_shift(self):
        assert P(1, 1) ** 2 == P(1, 2, 1)
        assert P(1, 1).shift(2) == P(0, 0, 1, 1)

    def test_divmod_exact(self):
        q = poly_divmod_exact(P(1, 0, -1), P(1, 1))
        assert q == P(1, -1)
        with pytest.raises(ArithmeticError):
            poly_divmod_exact(P(1, 0, 1), P(1, 1))

    def test_format(self):
        assert format_poly(P(1, -3, -1, -2)) == "1 - 3x - x^2 - 2x^3"
        assert format_poly(P(0, 3, 2)) == "3x + 2x^2"
        assert format_poly(Polynomial()) == "0"
        assert format_poly(P(-1, 0, 1)) == "-1 + x^2"


class TestGcd:
    def test_knuth_classic(self):
        a = P(-5, 2, 8, -3, -3, 0, 1, 0, 1)
        b = P(21, -9, -4, 0, 5, 0, 3)
        assert poly_gcd(a, b) == P(1)

    def test_common_factor(self):
        f = P(1, 0, 1)
        assert poly_gcd(f * P(-3, 1), f * P(4, 1)) == f

    def test_zero_cases(self):
        assert poly_gcd(Polynomial(), Polynomial()) == Polynomial()
        assert poly_gcd(Polynomial(), P(-2, 4)) == P(2, -4) * -1

    @given(
        st.lists(st.integers(-8, 8), min_size=1, max_size=5),
        st.lists(st.integers(-8, 8), min_size=1, max_size=5),
        st.lists(st.integers(-3, 3), min_size=1, max_size=3),
    )
    @settings(max_examples=150, deadline=None)
    def test_matches_rational_euclid(self, ca, cb, cm):
        a, b, m = Polynomial(ca), Polynomial(cb), Polynomial(cm)
        a, b = a * m, b * m
        got = poly_gcd(a, b)
        want = _euclid_gcd(a, b)
        if a.is_zero and b.is_zero:
            assert got.is_zero
            return
        # both divide and match up to the content convention
        assert got.primitive_part() == want
        if not a.is_zero:
            poly_divmod_exact(a * got.content(), got * int_gcd(1, 1))

    def test_divides_both(self):
        a = P(2, 4) * P(1, 0, 1)
        b = P(6, 2) * P(1, 0, 1)
        g = poly_gcd(a, b)
        poly_divmod_exact(a, g)
        poly_divmod_exact(b, g)


def _euclid_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Reference gcd over the rationals, primitive with positive lead."""
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    fa, fb = trim(fa), trim(fb)
    while fb:
        while len(fa) >= len(fb):
            factor = fa[-1] / fb[-1]
            off = len(fa) - len(fb)
            for i, c in enumerate(fb):
                fa[off + i] -= factor * c
            fa = trim(fa)
            if not fa:
                break
        fa, fb = fb, fa
    if not fa:
        return Polynomial()
    den = 1
    for c in fa:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in fa]
    g = 0
    for c in ints:
        g = int_gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return Polynomial(ints)


class TestRationalGF:
    def test_reduction_cancels_polynomial_factor(self):
        gf = RationalGF(P(0, 1, 1), P(0, 0, 1))  # (x + x^2)/x^2
        assert gf.numerator == P(1, 1)
        assert gf.denominator == P(0, 1)

    def test_reduction_joint_content_and_sign(self):
        gf = RationalGF(P(0, 2, 2), P(-4, 2))
        c = int_gcd(gf.numerator.content(), gf.denominator.content())
        assert c == 1
        assert next(v for v in gf.denominator.coeffs if v) > 0

    def test_zero_numerator(self):
        gf = RationalGF(Polynomial(), P(3, 1))
        assert gf.is_zero
        assert gf.denominator == P(1)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalGF(P(1), Polynomial())

    @given(
        st.lists(st.integers(-6, 6), min_size=1, max_size=4),
        st.lists(st.integers(-6, 6), min_size=1, max_size=4),
    )
    @settings(max_examples=150, deadline=None)
    def test_canonical_invariants(self, cn, cd):
        den = Polynomial(cd)
        if den.is_zero:
            return
        gf = RationalGF(Polynomial(cn), den)
        if gf.is_zero:
            assert gf.denominator == P(1)
            return
        assert poly_gcd(gf.numerator, gf.denominator).degree == 0
        assert int_gcd(gf.numerator.content(), gf.denominator.content()) == 1
        assert next(v for v in gf.denominator.coeffs if v) > 0

    def test_series_geometric(self):
        assert RationalGF(P(1), P(1, -2)).series(4) == [1, 2, 4, 8, 16]

    def test_series_requires_constant(self):
        gf = RationalGF(P(1, 1), P(0, 1))
        with pytest.raises(ValueError):
            gf.series(3)

    def test_series_can_be_fractional(self):
        vals = RationalGF(P(1), P(2, -1)).series(2)
        assert vals == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]

    def test_arithmetic(self):
        half = RationalGF(P(1), P(1, -1))
        other = RationalGF(P(1), P(1, 1))
        assert half + other == RationalGF(P(2), P(1, 0, -1))
        assert half - half == RationalGF(0, 1)
        assert half * other == RationalGF(P(1), P(1, 0, -1))
        assert half / half == RationalGF(1, 1)

    def test_format(self):
        assert format_gf(RationalGF(P(1, -1, 2), P(1, -3, -1, -2))) == (
            "(1 - x + 2x^2)/(1 - 3x - x^2 - 2x^3)"
        )
        assert format_gf(RationalGF(P(1), P(1, -2))) == "1/(1 - 2x)"
        assert format_gf(RationalGF(P(0, 2), P(1, -2))) == "2x/(1 - 2x)"
        assert format_gf(RationalGF(P(5), P(1))) == "5"
