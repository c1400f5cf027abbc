import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from brownian_areas import distributions as dist
from brownian_areas.moments import area_kind

SERIES = ["Ex", "Br", "Bm", "Me", "Dm"]


@pytest.mark.parametrize("x", [0.2, 0.5, 1.0, 2.5, 6.0])
def test_stable_density_routes(x):
    a = dist.stable_density(x, route="series")
    b = dist.stable_density(x, route="u")
    assert abs(a - b) <= 1e-12 * max(a, 1e-300)


@pytest.mark.parametrize("x", [0.5, 3.0, 40.0])
def test_hyper_u_routes(x):
    a = dist.hyper_u(1 / 6, 4 / 3, x, route="kummer")
    b = dist.hyper_u(1 / 6, 4 / 3, x, route="integral")
    assert abs(a - b) <= 1e-12 * abs(a)


def test_stable_laplace_transform():
    # int e^{-t x} f(x) dx = exp(-t^(2/3)) at t = 1, checked on a coarse quadrature
    from scipy.integrate import quad
    v = quad(lambda x: math.exp(-x) * dist.stable_density(x), 0, 60, limit=200)[0]
    assert abs(v - math.exp(-1)) < 1e-7


@given(st.floats(0.3, 1.5))
def test_excursion_cdf_routes(x):
    assert abs(dist.cdf("Ex", x) - dist.cdf("Ex", x, route="stable")) < 1e-8


@pytest.mark.parametrize("kind", ["Ex", "Br", "Me"])
def test_cdf_monotone(kind):
    xs = np.geomspace(0.05, 3.0, 200)
    F = [dist.cdf(kind, float(x)) for x in xs]
    assert all(0 <= v <= 1 for v in F)
    assert all(b >= a - 1e-15 for a, b in zip(F, F[1:]))


@pytest.mark.parametrize("kind", SERIES)
def test_pdf_nonnegative(kind):
    for x in np.geomspace(0.01, 12.0, 60):
        assert dist.pdf(kind, float(x)) >= 0


@pytest.mark.parametrize("kind", ["Ex", "Br", "Me"])
def test_cdf_is_integral_of_pdf(kind):
    from scipy.integrate import quad
    a, b = 0.6, 1.1
    area = quad(lambda x: dist.pdf(kind, x), a, b, epsrel=1e-11)[0]
    assert abs(area - (dist.cdf(kind, b) - dist.cdf(kind, a))) < 1e-9


@pytest.mark.parametrize("kind", ["Ex", "Br", "Me"])
def test_sf_complements_cdf(kind):
    for x in (0.4, 0.9):
        assert abs(dist.sf(kind, x) + dist.cdf(kind, x) - 1) < 1e-13


@pytest.mark.parametrize("kind,x", [("Ex", 1.5), ("Br", 2.0), ("Me", 3.0)])
def test_large_x_tail_sandwich(kind, x):
    tt = dist.tail_terms(kind, "largeX", "sf", x)
    assert abs(dist.sf(kind, x) - tt.value) <= abs(tt.terms[-1])


@pytest.mark.parametrize("kind", SERIES)
def test_small_x_pdf_matches_series(kind):
    # just above the switch point both forms describe the same density
    x = 1.05 * dist._FLOORS[area_kind(kind)]
    full = dist.pdf_detail(kind, x, small_x_floor=0.0).value
    small = dist.tail(kind, "smallX", "pdf", x)
    assert abs(full - small) <= 1e-6 * full


@pytest.mark.parametrize("kind", SERIES)
def test_large_x_switch_is_continuous(kind):
    c = dist._ceiling(area_kind(kind))
    below = dist.pdf_detail(kind, c * (1 - 1e-9))
    above = dist.pdf_detail(kind, c * (1 + 1e-9))
    assert below.rule == "tolerance" and above.rule == "large-x expansion"
    last = dist.tail_terms(kind, "largeX", "pdf", c).terms[-1]
    assert abs(below.value - above.value) <= abs(last)


def test_log_sf_rate():
    assert dist.tail("Ex", "largeX", "log_sf", 2.0) == pytest.approx(24.0)


def test_unsupported():
    with pytest.raises(dist.UnsupportedError):
        dist.pdf("BrPlus", 1.0)
    with pytest.raises(dist.UnsupportedError):
        dist.cdf("Bm", 1.0)
    with pytest.raises(ValueError):
        dist.pdf("Ex", -1.0)


def test_generic_cdf_for_motion():
    F = dist.cdf_generic("Bm", 0.5)
    assert abs(F + dist.sf_generic("Bm", 0.5) - 1) < 1e-9


def test_grid_csv(tmp_path):
    p = tmp_path / "g.csv"
    dist.grid_csv("Ex", [0.5, 1.0], p)
    assert len(p.read_text().splitlines()) == 3
