"""Densities, distribution functions and tail expansions.

The series below run over the zeros of Ai or Ai' and converge like
exp(-c j^2 / x^2).  For large x the terms are O(1) while the answer is
exponentially small, so evaluation is done in mpmath with extra digits
proportional to x^2.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Tuple

import mpmath
import numpy as np

from . import airy
from .moments import AreaKind, area_kind

mpf = mpmath.mpf


@dataclass(frozen=True)
class SeriesControl:
    max_terms: int = 200
    abs_tol: float = 1e-16


DEFAULT_CONTROL = SeriesControl()


class SeriesResult(NamedTuple):
    value: float
    terms: int
    bound: float
    rule: str  # "tolerance", "max_terms", "small-x expansion" or "large-x expansion"


class UnsupportedError(ValueError):
    pass


class TruncationError(RuntimeError):
    pass


def _check_x(x):
    if not x > 0:
        raise ValueError("x must be positive")


def _extra_digits(x, rate):
    # answer ~ exp(-rate x^2) while terms are O(1)
    return int(rate * float(x) ** 2 / math.log(10)) + 5


# ---------------------------------------------------------------------------
# confluent hypergeometric U for the two parameter sets used here

_SUPPORTED_U = {(Fraction(1, 6), Fraction(4, 3)), (Fraction(-5, 6), Fraction(4, 3)),
                (Fraction(7, 6), Fraction(4, 3))}


def _u_params(a, b):
    key = (Fraction(a).limit_denominator(12), Fraction(b).limit_denominator(12))
    if key not in _SUPPORTED_U:
        raise UnsupportedError(f"U({a}, {b}, .) is not supported")
    return key


def _hyperu_kummer_mp(a: Fraction, b: Fraction, z, dps):
    """U through Kummer's connection formula with M = 1F1."""
    with mpmath.workdps(dps + int(float(z) / math.log(10)) + 15):
        A, B, z = mpf(a.numerator) / a.denominator, mpf(b.numerator) / b.denominator, mpf(z)
        t1 = mpmath.gamma(1 - B) / mpmath.gamma(A - B + 1) * mpmath.hyp1f1(A, B, z)
        t2 = mpmath.gamma(B - 1) / mpmath.gamma(A) * z ** (1 - B) * mpmath.hyp1f1(A - B + 1, 2 - B, z)
        return t1 + t2


def _hyperu_integral_mp(a: Fraction, b: Fraction, z, dps):
    """U(a,b,z) = Gamma(a)^-1 int_0^oo e^{-zt} t^{a-1} (1+t)^{b-a-1} dt, a > 0.

    The substitution t = u^6 removes the t^{-5/6} endpoint singularity for
    a = 1/6.  a = -5/6 is reached by the contiguous relation
    U(a-1) = (z - b + 2a) U(a) - a(a-b+1) U(a+1).
    """
    with mpmath.workdps(dps + 10):
        z = mpf(z)
        if a < 0:
            u0 = _hyperu_integral_mp(a + 1, b, z, dps)
            u1 = _hyperu_integral_mp(a + 2, b, z, dps)
            A, B = mpf(a.numerator) / a.denominator + 1, mpf(b.numerator) / b.denominator
            return (z - B + 2 * A) * u0 - A * (A - B + 1) * u1
        A, B = mpf(a.numerator) / a.denominator, mpf(b.numerator) / b.denominator
        p = 6 * A - 1  # t^{a-1} dt = 6 u^{6a-1} du

        def f(u):
            t = u ** 6
            return 6 * u ** p * mpmath.exp(-z * t) * (1 + t) ** (B - A - 1)

        scale = z ** (-mpf(1) / 6)
        pts = [0, scale / 2, scale, 2 * scale, 4 * scale, mpmath.inf]
        return mpmath.quad(f, pts) / mpmath.gamma(A)


def _hyperu_asymptotic_mp(a: Fraction, b: Fraction, z, dps):
    """z^-a sum_k (a)_k (a-b+1)_k / k! (-z)^-k, summed to the smallest term.

    Returns None when the smallest term is not below 10^-dps."""
    with mpmath.workdps(dps + 10):
        z = mpf(z)
        A, B = mpf(a.numerator) / a.denominator, mpf(b.numerator) / b.denominator
        t = mpf(1)
        tot = mpf(1)
        eps = mpf(10) ** (-dps - 3)
        k = 0
        while True:
            nt = t * (A + k) * (A - B + 1 + k) / ((k + 1) * -z)
            if abs(nt) >= abs(t) and k > 0:
                return None
            k += 1
            t = nt
            tot += t
            if abs(t) < eps:
                return tot * z ** (-A)


def hyper_u_mp(a, b, x, route: str = "auto", dps: int = 30):
    a, b = _u_params(a, b)
    if not x > 0:
        raise ValueError("x must be positive")
    if route == "auto":
        if x > 40:
            v = _hyperu_asymptotic_mp(a, b, x, dps)
            if v is not None:
                return v
        route = "kummer" if x <= 150 else "integral"
    if route == "asymptotic":
        v = _hyperu_asymptotic_mp(a, b, x, dps)
        if v is None:
            raise ValueError(f"asymptotic series for U is not accurate at x={x}")
        return v
    if route == "kummer":
        return _hyperu_kummer_mp(a, b, x, dps)
    if route == "integral":
        return _hyperu_integral_mp(a, b, x, dps)
    raise ValueError(f"unknown route {route!r}")


def hyper_u(a, b, x, route: str = "auto") -> float:
    """Confluent hypergeometric U(a, b, x) for (a, b) in {(1/6, 4/3), (-5/6, 4/3)}.

    route: 'kummer' (1F1 connection formula), 'integral' (Laplace integral),
    'asymptotic' (large x) or 'auto'.
    """
    return float(hyper_u_mp(a, b, x, route))


# ---------------------------------------------------------------------------
# stable density with Laplace transform exp(-t^(2/3))

def _stable_series_mp(x, dps):
    with mpmath.workdps(dps + 10):
        x = mpf(x)
        y = x ** (-mpf(2) / 3)
        tot = mpf(0)
        k = 0
        eps = mpf(10) ** (-dps - 5)
        while True:
            k += 1
            if k % 3 == 0:  # sin(2 k pi / 3) = 0
                continue
            t = (-1) ** (k - 1) * mpmath.sinpi(mpf(2 * k) / 3) * mpmath.gamma(mpf(2 * k) / 3 + 1) \
                / mpmath.factorial(k) * y ** k
            tot += t
            if k > 3 and abs(t) < eps * max(abs(tot), eps):
                break
            if k > 5000:
                raise TruncationError("stable series did not converge")
        return tot / (mpmath.pi * x)


def _stable_u_mp(x, dps):
    with mpmath.workdps(dps + 10):
        x = mpf(x)
        v = 4 / (27 * x ** 2)
        pref = mpmath.power(2, mpf(4) / 3) / (mpmath.power(3, mpf(1.5)) * mpmath.sqrt(mpmath.pi))
        return pref * x ** (-mpf(7) / 3) * mpmath.exp(-v) * hyper_u_mp(Fraction(1, 6), Fraction(4, 3), v, dps=dps)


def stable_density_mp(x, route: str = "auto", dps: int = 30):
    _check_x(x)
    if route == "auto":
        route = "series" if x >= 1 else "u"
    if route == "series":
        return _stable_series_mp(x, dps)
    if route == "u":
        return _stable_u_mp(x, dps)
    raise ValueError(f"unknown route {route!r}")


def stable_density(x: float, route: str = "auto") -> float:
    """Density of the positive 2/3-stable law with Laplace transform exp(-t^(2/3))."""
    return float(stable_density_mp(x, route))


# ---------------------------------------------------------------------------
# Airy zero series

_FLOORS = {AreaKind.Ex: 0.12, AreaKind.Me: 0.12, AreaKind.Dm: 0.12,
           AreaKind.Br: 0.035, AreaKind.Bm: 0.035}
# exponent of the large-x decay exp(-rate x^2)
_RATE = {AreaKind.Ex: 6, AreaKind.Br: 6, AreaKind.BrPlus: 6,
         AreaKind.Bm: 1.5, AreaKind.Me: 1.5, AreaKind.Dm: 1.5, AreaKind.BmPlus: 1.5}


def _sum_series(term: Callable[[int], object], ctl: SeriesControl, decay: Callable[[int], object]):
    """Sum term(j), j = 1, 2, ... until the Gaussian-type factor decay(j) makes
    further terms negligible.  Returns (sum, terms used, bound, rule)."""
    tot = mpf(0)
    last = mpf(0)
    for j in range(1, ctl.max_terms + 1):
        if j > airy.TABLE_SIZE:
            break
        t = term(j)
        tot += t
        last = abs(t)
        if j >= 2 and decay(j) < ctl.abs_tol * 1e-6 and last <= ctl.abs_tol * max(1, abs(tot)):
            return tot, j, last, "tolerance"
    if last > ctl.abs_tol * max(1, abs(tot)):
        raise TruncationError(f"series not converged after {j} terms (last term {float(last):.3g})")
    return tot, j, last, "max_terms"


def _zero(kind, j):
    return airy.zero_mp(kind, j)


def _ex_pdf(x, ctl, dps):
    a32 = lambda j: _zero(airy.ZEROS_OF_AI, j) ** 3
    v = lambda j: 2 * a32(j) / (27 * x ** 2)
    c = Fraction(-5, 6), Fraction(4, 3)

    def term(j):
        vj = v(j)
        return vj ** (mpf(2) / 3) * mpmath.exp(-vj) * _hyperu_kummer_or_int(c, vj, dps)

    s, n, b, rule = _sum_series(term, ctl, lambda j: mpmath.exp(-v(j)))
    f = 2 * mpmath.sqrt(6) / x ** 2
    return f * s, n, f * b, rule


def _hyperu_kummer_or_int(ab, v, dps):
    # the caller multiplies by exp(-v), so fewer relative digits are needed
    return hyper_u_mp(ab[0], ab[1], v, dps=max(18, dps - int(float(v) / math.log(10))))


def _ex_cdf_u(x, ctl, dps):
    v = lambda j: 2 * _zero(airy.ZEROS_OF_AI, j) ** 3 / (27 * x ** 2)
    c = Fraction(1, 6), Fraction(4, 3)

    def term(j):
        vj = v(j)
        return vj ** (mpf(2) / 3) * mpmath.exp(-vj) * _hyperu_kummer_or_int(c, vj, dps)

    s, n, b, rule = _sum_series(term, ctl, lambda j: mpmath.exp(-v(j)))
    f = mpmath.sqrt(6) / x
    return f * s, n, f * b, rule


def _ex_cdf_stable(x, ctl, dps):
    def y(j):
        return mpmath.sqrt(2) * _zero(airy.ZEROS_OF_AI, j) ** (-mpf(1.5)) * x

    def term(j):
        aj = _zero(airy.ZEROS_OF_AI, j)
        return aj ** (-mpf(1.5)) * stable_density_mp(y(j), dps=dps)

    s, n, b, rule = _sum_series(term, ctl, lambda j: mpmath.exp(-4 / (27 * y(j) ** 2)))
    f = 2 * mpmath.sqrt(mpmath.pi)
    return f * s, n, f * b, rule


def _airy_cdf_terms(zkind, weight):
    """Shared form of the bridge and meander distribution functions:

        F(x) = C x^(-1/3) sum_j w_j exp(-|z_j|^3/(27 x^2)) Ai(18^(-2/3) z_j^2 x^(-4/3))

    with C = 2^(-1/6) 3^(2/3) sqrt(pi).  Returns callables giving the j-th
    term of F and of its derivative.
    """
    C = mpmath.power(2, -mpf(1) / 6) * mpmath.power(3, mpf(2) / 3) * mpmath.sqrt(mpmath.pi)
    k18 = mpmath.power(18, -mpf(2) / 3)

    def parts(j, x, dps):
        z = _zero(zkind, j)
        cexp = z ** 3 / 27
        b = k18 * z ** 2
        arg = b * x ** (-mpf(4) / 3)
        # only Ai and Ai' are needed here; mpmath's evaluator skips the integral
        a, ap = mpmath.airyai(arg), mpmath.airyai(arg, 1)
        e = mpmath.exp(-cexp / x ** 2)
        w = weight(j)
        g = C * w * x ** (-mpf(1) / 3) * e * a
        dg = g * (-1 / (3 * x) + 2 * cexp / x ** 3) \
            + C * w * x ** (-mpf(1) / 3) * e * ap * (-mpf(4) / 3) * b * x ** (-mpf(7) / 3)
        return g, dg, e

    return parts


def _br_parts():
    return _airy_cdf_terms(airy.ZEROS_OF_AI_PRIME, lambda j: 1 / _zero(airy.ZEROS_OF_AI_PRIME, j))


def _me_parts():
    return _airy_cdf_terms(airy.ZEROS_OF_AI, lambda j: airy.residue_mp("r", j))


def _airy_cdf(parts, x, ctl, dps, which):
    cache = {}

    def get(j):
        if j not in cache:
            cache[j] = parts(j, x, dps)
        return cache[j]

    idx = 0 if which == "cdf" else 1
    return _sum_series(lambda j: get(j)[idx], ctl, lambda j: get(j)[2])


def _bm_pdf(x, ctl, dps):
    v = lambda j: 2 * _zero(airy.ZEROS_OF_AI_PRIME, j) ** 3 / (27 * x ** 2)
    c = Fraction(1, 6), Fraction(4, 3)

    def term(j):
        vj = v(j)
        return airy.residue_mp("kappa", j) * vj ** (mpf(2) / 3) * mpmath.exp(-vj) * _hyperu_kummer_or_int(c, vj, dps)

    s, n, b, rule = _sum_series(term, ctl, lambda j: mpmath.exp(-v(j)))
    f = mpmath.sqrt(3) / (mpmath.sqrt(mpmath.pi) * x)
    return f * s, n, f * b, rule


def _dm_pdf(x, ctl, dps):
    v = lambda j: 2 * _zero(airy.ZEROS_OF_AI, j) ** 3 / (27 * x ** 2)
    c1 = Fraction(1, 6), Fraction(4, 3)
    c2 = Fraction(-5, 6), Fraction(4, 3)

    def term(j):
        vj = v(j)
        r = airy.residue_mp("r", j)
        return (_zero(airy.ZEROS_OF_AI, j) * r * r * mpmath.exp(-vj)
                * (_hyperu_kummer_or_int(c1, vj, dps) + 2 * _hyperu_kummer_or_int(c2, vj, dps)))

    s, n, b, rule = _sum_series(term, ctl, lambda j: mpmath.exp(-v(j)))
    f = mpmath.power(2, -mpf(1) / 3) / mpmath.sqrt(3 * mpmath.pi) * x ** (-mpf(7) / 3)
    return f * s, n, f * b, rule


_PDF = {AreaKind.Ex: _ex_pdf, AreaKind.Bm: _bm_pdf, AreaKind.Dm: _dm_pdf,
        AreaKind.Br: lambda x, ctl, dps: _airy_cdf(_br_parts(), x, ctl, dps, "pdf"),
        AreaKind.Me: lambda x, ctl, dps: _airy_cdf(_me_parts(), x, ctl, dps, "pdf")}
_CDF = {AreaKind.Ex: _ex_cdf_u,
        AreaKind.Br: lambda x, ctl, dps: _airy_cdf(_br_parts(), x, ctl, dps, "cdf"),
        AreaKind.Me: lambda x, ctl, dps: _airy_cdf(_me_parts(), x, ctl, dps, "cdf")}


def _ceiling(kind):
    # beyond this the answer is under ~1e-24 and the alternating zero series
    # runs into the 45-digit zero table; the large-x expansion takes over
    return math.sqrt(24 * math.log(10) / _RATE[kind])


def _relative_control(kind, x, ctl):
    # the answer is O(exp(-rate x^2)) for large x; an absolute stopping rule
    # would leave truncation noise far above it, so shrink the tolerance
    scale = math.exp(-_RATE[kind] * float(x) ** 2)
    if scale >= 1e-2:
        return ctl
    return SeriesControl(ctl.max_terms, ctl.abs_tol * scale * 1e-2)


def _dps_for(kind, x):
    return min(30 + _extra_digits(x, _RATE[kind]), 80)


def pdf_detail(kind, x: float, ctl: SeriesControl = DEFAULT_CONTROL, small_x_floor=None) -> SeriesResult:
    kind = area_kind(kind)
    _check_x(x)
    if kind not in _PDF:
        raise UnsupportedError(f"no density series for {kind.value}")
    floor = _FLOORS[kind] if small_x_floor is None else small_x_floor
    if x < floor:
        t = tail(kind, "smallX", "pdf", x)
        return SeriesResult(max(t, 0.0), 1, abs(t), "small-x expansion")
    if x > _ceiling(kind):
        tt = tail_terms(kind, "largeX", "pdf", x)
        return SeriesResult(tt.value, len(tt.terms), abs(tt.terms[-1]), "large-x expansion")
    dps = _dps_for(kind, x)
    with mpmath.workdps(dps):
        v, n, b, rule = _PDF[kind](mpf(x), _relative_control(kind, x, ctl), dps)
    return SeriesResult(float(v), n, float(b), rule)


def pdf(kind, x: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    return pdf_detail(kind, x, ctl).value


def cdf_detail(kind, x: float, ctl: SeriesControl = DEFAULT_CONTROL, route: str = "auto",
               small_x_floor=None) -> SeriesResult:
    kind = area_kind(kind)
    _check_x(x)
    if kind not in _CDF:
        raise UnsupportedError(f"no distribution series for {kind.value}; use cdf_generic")
    floor = _FLOORS[kind] if small_x_floor is None else small_x_floor
    if x < floor:
        t = tail(kind, "smallX", "cdf", x)
        return SeriesResult(max(t, 0.0), 1, abs(t), "small-x expansion")
    dps = _dps_for(kind, x)
    with mpmath.workdps(dps):
        if kind is AreaKind.Ex and route == "stable":
            v, n, b, rule = _ex_cdf_stable(mpf(x), ctl, dps)
        else:
            v, n, b, rule = _CDF[kind](mpf(x), ctl, dps)
    return SeriesResult(float(v), n, float(b), rule)


def cdf(kind, x: float, ctl: SeriesControl = DEFAULT_CONTROL, route: str = "auto") -> float:
    """Distribution function for Ex, Br, Me.  For Ex, route 'stable' uses the
    stable-density form instead of the U form."""
    return cdf_detail(kind, x, ctl, route).value


def _quad_pdf(kind, a, b, ctl):
    from scipy.integrate import quad
    f = lambda t: pdf(kind, t, ctl)
    return quad(f, a, b, epsabs=0, epsrel=1e-10, limit=100)[0]


def _upper_limit(kind, x):
    # exp(-rate t^2) has dropped by e^-45 relative to t = x beyond this point
    x0 = max(x, 1.0)
    return x0 + 45 / (2 * _RATE[kind] * x0)


def sf_generic(kind, x: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """P(X > x) by quadrature of the density over [x, oo)."""
    kind = area_kind(kind)
    _check_x(x)
    return _quad_pdf(kind, x, _upper_limit(kind, x), ctl)


def cdf_generic(kind, x: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Distribution function by quadrature of the density (any kind with a density)."""
    kind = area_kind(kind)
    _check_x(x)
    lo = _FLOORS[kind] / 4
    if x <= 1.0:
        return _quad_pdf(kind, lo, x, ctl) if x > lo else 0.0
    return 1.0 - sf_generic(kind, x, ctl)


def density_moments(kind, orders=(0, 1, 2), panel: float = 0.2, order: int = 20,
                    ctl: SeriesControl = DEFAULT_CONTROL):
    """int x^k f(x) dx for each k in orders, by composite Gauss-Legendre on
    [0, L] with the density evaluated once per node; L is where the
    Gaussian-type upper tail has fallen below e^-45."""
    kind = area_kind(kind)
    hi = math.sqrt(45.0 / _RATE[kind]) + 0.5
    n_panels = int(math.ceil(hi / panel))
    xg, wg = np.polynomial.legendre.leggauss(order)
    total = {k: 0.0 for k in orders}
    for i in range(n_panels):
        a, b = i * panel, (i + 1) * panel
        xs = 0.5 * (a + b) + 0.5 * (b - a) * xg
        fs = np.array([pdf(kind, float(x), ctl) for x in xs])
        for k in orders:
            total[k] += 0.5 * (b - a) * float(np.sum(wg * fs * xs ** k))
    return total


def sf(kind, x: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Survival function 1 - F(x), computed without cancellation."""
    kind = area_kind(kind)
    if kind in _CDF:
        return float(survival_mp(kind, x, ctl))
    return sf_generic(kind, x, ctl)


# ---------------------------------------------------------------------------
# tail expansions

class TailResult(NamedTuple):
    value: float
    terms: Tuple[float, ...]


def _q(a, b=1):
    return mpf(a) / b


def _tail_table():
    a1 = lambda: airy.zero_mp(airy.ZEROS_OF_AI, 1)
    ap1 = lambda: airy.zero_mp(airy.ZEROS_OF_AI_PRIME, 1)
    k1 = lambda: airy.residue_mp("kappa", 1)
    r1 = lambda: airy.residue_mp("r", 1)
    sq, pi, ex = mpmath.sqrt, mpmath.pi, mpmath.exp
    h = mpf(1) / 2

    def small(zero, pref_extra, items):
        # items: list of (coef, power of |zero|, power of x)
        def f(x):
            x = mpf(x)
            z = zero()
            base = pref_extra() * ex(-2 * z ** 3 / (27 * x ** 2))
            return [base * c * z ** zp * x ** xp for c, zp, xp in items]
        return f

    def large(pref, rate, xpow, coefs):
        def f(x):
            x = mpf(x)
            base = pref * x ** xpow * ex(-rate * x ** 2)
            return [base * c * x ** (-2 * i) for i, c in enumerate(coefs)]
        return f

    one = lambda: mpf(1)
    E, B, M, Me, Dm, Bp, Mp = (AreaKind.Ex, AreaKind.Br, AreaKind.Bm, AreaKind.Me,
                                AreaKind.Dm, AreaKind.BrPlus, AreaKind.BmPlus)
    return {
        (E, "smallX", "pdf"): small(a1, one, [(_q(8, 81), 4.5, -5), (-_q(35, 27), 1.5, -3), (-_q(35, 144), -1.5, -1)]),
        (E, "smallX", "cdf"): small(a1, one, [(_q(2, 3), 1.5, -2), (_q(1, 4), -1.5, 0), (-_q(105, 64), -4.5, 2)]),
        (E, "largeX", "pdf"): large(72 * sq(6) / sq(pi), 6, 2, [1, -_q(1, 9), -_q(5, 1296), -_q(25, 46656)]),
        (E, "largeX", "sf"): large(6 * sq(6) / sq(pi), 6, 1, [1, -_q(1, 36), -_q(1, 648), -_q(7, 46656)]),
        (B, "smallX", "pdf"): small(ap1, one, [(_q(2, 9), 1.5, -3), (-_q(5, 12), -1.5, -1), (_q(25, 64), -4.5, 1)]),
        (B, "smallX", "cdf"): small(ap1, one, [(_q(3, 2), -1.5, 0), (-_q(45, 16), -4.5, 2), (_q(10395, 256), -7.5, 4)]),
        (B, "largeX", "pdf"): large(2 * sq(6) / sq(pi), 6, 0, [1, _q(1, 18), _q(1, 432)]),
        (B, "largeX", "sf"): large(1 / sq(6 * pi), 6, -1, [1, -_q(1, 36), _q(1, 108)]),
        (M, "smallX", "pdf"): small(ap1, lambda: k1() / sq(2 * pi),
                                    [(_q(2, 3), 1.5, -2), (_q(1, 4), -1.5, 0), (-_q(105, 64), -4.5, 2)]),
        (M, "smallX", "cdf"): small(ap1, lambda: k1() / sq(2 * pi),
                                    [(_q(9, 2), -1.5, 1), (-_q(459, 16), -4.5, 3), (_q(145881, 256), -7.5, 5)]),
        (M, "largeX", "pdf"): large(sq(6) / sq(pi), 1.5, 0, [1, _q(1, 18), -_q(1, 162)]),
        (M, "largeX", "sf"): large(sq(2) / sq(3 * pi), 1.5, -1, [1, -_q(5, 18), _q(22, 81)]),
        (Me, "smallX", "pdf"): small(a1, r1, [(_q(2, 9), 2.5, -3), (-_q(5, 12), -0.5, -1), (_q(25, 64), -3.5, 1)]),
        (Me, "smallX", "cdf"): small(a1, r1, [(_q(3, 2), -0.5, 0), (-_q(45, 16), -3.5, 2), (_q(10395, 256), -6.5, 4)]),
        (Me, "largeX", "pdf"): large(3 * sq(3), 1.5, 1, [1, -_q(1, 18), -_q(1, 162)]),
        (Me, "largeX", "sf"): large(sq(3), 1.5, 0, [1, -_q(1, 18), _q(5, 162)]),
        (Dm, "smallX", "pdf"): small(a1, lambda: sq(2 / pi) * r1() ** 2,
                                     [(_q(2, 27), 3.5, -4), (-_q(17, 36), 0.5, -2), (_q(1, 192), -2.5, 0)]),
        (Dm, "smallX", "cdf"): small(a1, lambda: sq(2 / pi) * r1() ** 2,
                                     [(h, 0.5, -1), (_q(3, 16), -2.5, 1), (-_q(315, 256), -5.5, 3)]),
        (Dm, "largeX", "pdf"): large(2 * sq(6) / sq(pi), 1.5, 0, [1, _q(1, 6), _q(1, 18)]),
        (Dm, "largeX", "sf"): large(2 * sq(2) / sq(3 * pi), 1.5, -1, [1, -_q(1, 6), _q(2, 9)]),
        (Bp, "largeX", "pdf"): large(sq(6) / sq(pi), 6, 0, [1, _q(1, 36), -_q(7, 5184)]),
        (Bp, "largeX", "sf"): large(1 / (2 * sq(6 * pi)), 6, -1, [1, -_q(1, 18), _q(65, 5184)]),
        (Mp, "largeX", "pdf"): large(sq(3) / sq(2 * pi), 1.5, 0, [1, _q(1, 36), -_q(5, 648)]),
        (Mp, "largeX", "sf"): large(1 / sq(6 * pi), 1.5, -1, [1, -_q(11, 36), _q(193, 648)]),
    }


_TAILS = None


def tail_terms(kind, side: str, target: str, x: float) -> TailResult:
    """Truncated tail expansion and its individual terms.

    side is 'smallX' or 'largeX'.  target is 'pdf' or 'cdf'; on the large-x
    side the expansions are for the survival function, so 'cdf' returns
    1 - (sum) and 'sf' returns the sum itself.  'log_sf' gives the leading
    logarithmic rate -ln P(X > x) ~ c x^2.
    """
    global _TAILS
    kind = area_kind(kind)
    _check_x(x)
    if side not in ("smallX", "largeX"):
        raise ValueError(f"unknown side {side!r}")
    if target == "log_sf":
        if side != "largeX":
            raise UnsupportedError("log_sf is a large-x statement")
        v = _RATE[kind] * x * x
        return TailResult(float(v), (float(v),))
    if _TAILS is None:
        with mpmath.workdps(30):
            _TAILS = _tail_table()
    key_target = "sf" if (side == "largeX" and target in ("cdf", "sf")) else target
    fn = _TAILS.get((kind, side, key_target))
    if fn is None:
        raise UnsupportedError(f"no {side} {target} expansion for {kind.value}")
    with mpmath.workdps(30):
        parts = fn(x)
        val = mpmath.fsum(parts)
        if side == "largeX" and target == "cdf":
            val = 1 - val
        return TailResult(float(val), tuple(float(p) for p in parts))


def tail(kind, side: str, target: str, x: float) -> float:
    return tail_terms(kind, side, target, x).value


def survival_mp(kind, x, ctl: SeriesControl = DEFAULT_CONTROL):
    """1 - F(x) from the full series, with the subtraction done in high precision."""
    kind = area_kind(kind)
    if x > _ceiling(kind):
        return mpf(tail(kind, "largeX", "sf", x))
    dps = _dps_for(kind, x)
    with mpmath.workdps(dps):
        v, *_ = _CDF[kind](mpf(x), _relative_control(kind, x, ctl), dps)
        return 1 - v


def pdf_mp(kind, x, ctl: SeriesControl = DEFAULT_CONTROL):
    kind = area_kind(kind)
    dps = _dps_for(kind, x)
    with mpmath.workdps(dps):
        return _PDF[kind](mpf(x), _relative_control(kind, x, ctl), dps)[0]


# ---------------------------------------------------------------------------
# export

def grid_csv(kind, xs, path, ctl: SeriesControl = DEFAULT_CONTROL):
    kind = area_kind(kind)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "pdf", "cdf", "pdf_bound"])
        for x in xs:
            p = pdf_detail(kind, x, ctl)
            c = cdf(kind, x, ctl) if kind in _CDF else cdf_generic(kind, x, ctl)
            w.writerow([repr(float(x)), repr(p.value), repr(c), repr(p.bound)])
