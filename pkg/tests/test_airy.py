import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from brownian_areas import airy

xs = st.floats(-10, 10, allow_nan=False)


@given(xs)
def test_differential_equation(x):
    h = 1e-4
    d2 = (airy.ai_prime(x + h) - airy.ai_prime(x - h)) / (2 * h)
    assert abs(d2 - x * airy.ai(x)) < 1e-7


@given(xs)
def test_integral_derivative(x):
    h = 1e-4
    d = (airy.ai_int(x + h) - airy.ai_int(x - h)) / (2 * h)
    assert abs(d + airy.ai(x)) < 1e-7


@pytest.mark.parametrize("x", [-30.0, -8.5, -3.0, 0.0, 1.0, 7.9, 8.1, 20.0])
def test_against_mpmath(x):
    with mpmath.workdps(30):
        assert abs(airy.ai(x) - float(mpmath.airyai(x))) < 1e-13
        assert abs(airy.ai_prime(x) - float(mpmath.airyai(x, 1))) < 1e-12 * max(1, abs(x))


def test_integral_limits():
    assert abs(airy.ai_int(0.0) - 1 / 3) < 1e-14
    assert airy.ai_int(30.0) < 1e-40
    assert abs(airy.ai_int(-200.0) - 1) < 1e-2


def test_series_asymptotic_overlap():
    p = airy.DEFAULT_POLICY
    for x in (p.series_cutoff_radius, -p.series_cutoff_radius):
        a = airy.airy_triple_mp(x - 1e-9, 40)
        b = airy.airy_triple_mp(x + 1e-9, 40)
        assert all(abs(u - v) < 1e-8 for u, v in zip(a, b))


def test_range_guard():
    with pytest.raises(airy.AiryRangeError):
        airy.ai(2e4)


@pytest.mark.parametrize("kind", [airy.ZEROS_OF_AI, airy.ZEROS_OF_AI_PRIME])
def test_zero_guess_improves(kind):
    errs = [abs(airy.zero_guess(kind, j) - airy.zero(kind, j)) for j in (1, 5, 20, 50)]
    assert errs == sorted(errs, reverse=True)
    assert errs[-1] < 1e-9


def test_first_zeros():
    assert abs(airy.zero(airy.ZEROS_OF_AI, 1) - 2.338107410459767) < 1e-14
    assert abs(airy.zero(airy.ZEROS_OF_AI_PRIME, 1) - 1.018792971647471) < 1e-14
    with pytest.raises(IndexError):
        airy.zero(airy.ZEROS_OF_AI, 0)


def test_partial_fractions_at_one():
    a = [airy.zero(airy.ZEROS_OF_AI, j) for j in range(1, 201)]
    lhs = airy.ai_prime(1.0) / airy.ai(1.0) - airy.ai_prime(0.0) / airy.ai(0.0)
    errs = []
    for J in (25, 50, 100, 200):
        s = math.fsum(1 / (1 + aj) - 1 / aj for aj in a[:J])
        errs.append(abs(lhs - s))
    assert errs == sorted(errs, reverse=True)


def test_ratio_expansions():
    for row in airy.log_derivative_expansion_check(4, 40.0):
        assert row["pass"], row


def test_root_zeta_values():
    assert abs(airy.root_zeta(airy.LAMBDA_TILDE, 3) - 1) < 1e-9
    # Lambda(2) from the Taylor route and the sum over zeros
    s = float(airy.root_zeta_sum(airy.LAMBDA, 2))
    assert abs(s - airy.root_zeta(airy.LAMBDA, 2)) < 1e-10


def test_zero_table_csv(tmp_path):
    p = tmp_path / "z.csv"
    airy.write_zero_table_csv(p, 5)
    lines = p.read_text().splitlines()
    assert lines[0] == "j,a_j,a_prime_j,kappa_j,r_j,R_j" and len(lines) == 6


def test_table_ignores_caller_precision():
    with mpmath.workdps(10):
        low = airy.AiryZeroTable(size=3).entry(2)
    high = airy.AiryZeroTable(size=3)
    with mpmath.workdps(60):
        ref = high.entry(2)
    with mpmath.workdps(50):
        assert abs(low.kappa - ref.kappa) < mpmath.mpf(10) ** -40
        assert abs(low.r - ref.r) < mpmath.mpf(10) ** -40
