from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from brownian_areas.symconst import (GAMMA_1_3, GAMMA_2_3, ONE, SQRT_PI, SymbolicConstant, gamma_half_integer,
                                     gamma_third, mul, parse, pow2, to_float)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=60).filter(lambda q: q != 0)
small = st.integers(-12, 12)
monos = st.builds(SymbolicConstant.monomial, fracs, small, small, small, st.integers(-3, 3))
consts = st.lists(monos, min_size=0, max_size=3).map(lambda ms: sum(ms, SymbolicConstant()))


def test_gamma_two_thirds_is_rewritten():
    with mpmath.workdps(40):
        assert abs(GAMMA_2_3.to_mpf(40) - mpmath.gamma(mpmath.mpf(2) / 3)) < mpmath.mpf(10) ** -35
    assert gamma_third(Fraction(2, 3)) == GAMMA_2_3
    assert GAMMA_1_3 * GAMMA_2_3 == SymbolicConstant.monomial(2, b=-3, c=2)


def test_half_integer_gamma():
    assert gamma_half_integer(Fraction(1, 2)) == SQRT_PI
    assert gamma_half_integer(Fraction(7, 2)) == SQRT_PI * Fraction(15, 8)
    assert gamma_half_integer(4) == SymbolicConstant.rational(6)


def test_lattice_folding():
    # 2^(6/6) is the rational 2
    assert SymbolicConstant.monomial(1, a=6) == SymbolicConstant.rational(2)
    assert pow2(Fraction(1, 2)) * pow2(Fraction(1, 2)) == SymbolicConstant.rational(2)
    assert SymbolicConstant.monomial(3, b=-6).is_rational()


def test_zero_and_reciprocal():
    z = SymbolicConstant.monomial(1, a=1) - SymbolicConstant.monomial(1, a=1)
    assert z.is_zero()
    with pytest.raises(ZeroDivisionError):
        z.reciprocal()
    with pytest.raises(ValueError):
        (ONE + SQRT_PI).reciprocal()


def test_pretty():
    assert SymbolicConstant.monomial(Fraction(71, 8192), a=3, c=1).pretty() == "71/8192*2^(1/2)*pi^(1/2)"
    assert ONE.pretty() == "1"


def test_inverse_excursion_moment_round_trip():
    from brownian_areas.transforms import neg_moment_closed_form
    v = neg_moment_closed_form("Ex", 1)
    assert parse(str(v)) == v
    assert abs(float(v) - 1.693) < 5e-4


@given(consts, consts)
def test_mul_matches_float_product(x, y):
    with mpmath.workdps(40):
        lhs = mul(x, y).to_mpf(40)
        rhs = x.to_mpf(40) * y.to_mpf(40)
        scale = max(abs(x.to_mpf(40)) * abs(y.to_mpf(40)), mpmath.mpf(1))
        assert abs(lhs - rhs) <= scale * mpmath.mpf(10) ** -35


@given(consts)
def test_text_round_trip(x):
    assert parse(str(x)) == x


@given(consts, consts)
def test_canonical_form_unique(x, y):
    assert (x == y) == (x.terms == y.terms)
    assert x + y - y == x


@given(monos)
def test_reciprocal(m):
    assert m * m.reciprocal() == ONE
    assert abs(to_float(m) * to_float(m.reciprocal()) - 1) < 1e-12
