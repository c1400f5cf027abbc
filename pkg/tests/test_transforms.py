import math

import pytest
from hypothesis import given, strategies as st

from brownian_areas import reference as ref, transforms as tr

SPECTRAL = ["Ex", "Br", "Bm", "Me", "Dm"]
ALL = SPECTRAL + ["BrPlus", "BmPlus"]


@pytest.mark.parametrize("kind", ALL)
def test_psi_at_zero_and_decreasing(kind):
    assert tr.psi(kind, 0.0) == 1.0
    vals = [tr.psi(kind, t) for t in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 29.0)]
    assert all(0 < b < a for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("kind", SPECTRAL)
@given(t=st.floats(0.2, 10.0))
def test_psi_two_routes(kind, t):
    assert abs(tr.psi_moments(kind, t) - tr.psi_spectral(kind, t)) < 1e-9


@pytest.mark.parametrize("kind", ["BrPlus", "BmPlus"])
def test_plus_kinds_kernel(kind):
    for t in (0.5, 1.5, 3.0):
        assert abs(tr.psi_moments(kind, t) - tr.psi_route(kind, t, "kernel")) < 1e-9


@pytest.mark.parametrize("kind", ["Br", "Bm"])
def test_joint_kernel_diagonal(kind):
    for t in (1.0, 4.0):
        assert abs(tr.psi_route(kind, t, "kernel") - tr.psi(kind, t)) < 1e-9


def test_joint_moment_series_vs_spectrum():
    for kind in ("Br", "Bm"):
        for a, b in ((0.5, 1.0), (1.0, 0.3)):
            assert abs(tr.psi_joint_moments(kind, a, b) - tr.psi_joint(kind, a, b)) < 1e-9


@pytest.mark.parametrize("iid", list(tr.DOUBLE_LAPLACE))
def test_double_laplace(iid):
    c = tr.verify_double_laplace(iid, 1.0, 0.5, 1.0)
    assert c.ok, c


@pytest.mark.parametrize("kind,s,rounded", ref.NEGATIVE, ids=lambda v: str(v))
def test_negative_moments(kind, s, rounded):
    if rounded is None:
        with pytest.raises(tr.InfiniteMomentError):
            tr.neg_moment_closed_form(kind, s)
        assert math.isinf(tr.neg_moment_quadrature(kind, float(s)))
    else:
        v = float(tr.neg_moment_closed_form(kind, s))
        assert abs(v - rounded) < 5e-4
        assert abs(tr.neg_moment_quadrature(kind, float(s)) - v) < 1e-6 * v


@pytest.mark.parametrize("s", [0.25, 0.1, -0.75, -0.6])
def test_mellin(s):
    assert tr.mellin_airy_check(s).ok


@pytest.mark.parametrize("N", [1, 3, 6])
def test_excursion_transform_decay(N):
    v = tr.psi_decay_trend("Ex", N)
    assert all(b < a for a, b in zip(v, v[1:]))
    assert v[-1] < 1e-30


def test_errors():
    with pytest.raises(ValueError):
        tr.psi("Ex", -1.0)
    with pytest.raises(ValueError):
        tr.psi_spectral("Ex", 0.01)
    with pytest.raises(ValueError):
        tr.psi_route("Me", 2.0, "kernel")


def test_report_json():
    import json
    checks = tr.double_laplace_report(xs=(1.0,))
    data = json.loads(tr.report_json(checks))
    assert len(data) == len(checks) and all(d["ok"] for d in data)
