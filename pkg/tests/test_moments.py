from fractions import Fraction
from math import comb, factorial

import mpmath
import pytest
from hypothesis import given, strategies as st

from brownian_areas import moments as mom, reference as ref
from brownian_areas.moments import AreaKind
from brownian_areas.symconst import SymbolicConstant

orders = st.integers(0, 40)


@pytest.mark.parametrize("kind", list(AreaKind))
def test_reference_moments(kind):
    for n, v in enumerate(ref.MOMENTS[kind.value]):
        assert mom.moment(kind, n) == v


def test_aliases():
    assert mom.area_kind("br+") is AreaKind.BrPlus
    assert mom.moment("bm+", 2) == mom.moment(AreaKind.BmPlus, 2)
    with pytest.raises(ValueError):
        mom.area_kind("xx")
    with pytest.raises(ValueError):
        mom.moment("ex", -1)


def _gauss(n, var):
    if n % 2:
        return Fraction(0)
    return Fraction(factorial(n), 2 ** (n // 2) * factorial(n // 2)) * var ** (n // 2)


@pytest.mark.parametrize("kind,var", [("Br", Fraction(1, 12)), ("Bm", Fraction(1, 3))])
@given(n=st.integers(0, 20))
def test_joint_moment_sums(kind, var, n):
    total = sum((comb(n, k) * mom.joint_moment(kind, k, n - k) for k in range(n + 1)), SymbolicConstant())
    assert total == mom.moment(kind, n)
    signed = sum(((-1) ** (n - j) * comb(n, j) * mom.joint_moment(kind, j, n - j) for j in range(n + 1)),
                 SymbolicConstant())
    assert signed == SymbolicConstant.rational(_gauss(n, var))


@given(orders)
def test_double_meander_from_meander(n):
    assert mom.dm_moment_from_meander(n) == mom.moment("Dm", n)


@given(st.integers(1, 50))
def test_spencer_bridge(k):
    assert mom.moment("Ex", k) * Fraction(1, factorial(k)) == mom.wright_rho(k - 1)


@pytest.mark.parametrize("kind", list(AreaKind))
def test_moments_positive_and_log_convex(kind):
    m = [float(mom.moment(kind, n)) for n in range(12)]
    assert all(v > 0 for v in m)
    # Lyapunov: m_n^2 <= m_{n-1} m_{n+1}
    assert all(m[n] ** 2 <= m[n - 1] * m[n + 1] * (1 + 1e-12) for n in range(1, 11))


def test_positive_parts_halve_the_mean():
    assert mom.moment("BrPlus", 1) * 2 == mom.moment("Br", 1)
    assert mom.moment("BmPlus", 1) * 2 == mom.moment("Bm", 1)


def test_cumulants():
    assert mom.cumulant("Ex", 1) == mom.moment("Ex", 1)
    var = mom.moment("Ex", 2) - mom.moment("Ex", 1) ** 2
    assert mom.cumulant("Ex", 2) == var
    assert abs(float(var) - (5 / 12 - mpmath.pi / 8)) < 1e-15


def test_correlation_of_parts():
    r = mom.correlation_pm("Br")
    assert -1 < r < 0


def test_scaled_moments():
    for n, v in enumerate(ref.AIRY_CONSTANT_MOMENTS):
        assert mom.scaled_moment("A", n) == v
    assert mom.scaled_moment("xi", 2) == SymbolicConstant.rational(Fraction(5, 3))
    with pytest.raises(ValueError):
        mom.scaled_moment("zz", 1)


@pytest.mark.parametrize("name", mom.ASYMPTOTIC_IDS)
def test_asymptotic_ratio_trend(name):
    errs = [abs(mom.asymptotic_ratio(name, n) - 1) for n in (40, 80, 160)]
    assert mom.asymptotic_ratio(name, 40) > 0
    assert errs[0] > errs[1] > errs[2]
