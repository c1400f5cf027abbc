"""Exact moments of the seven Brownian areas."""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath

from . import sequences as seq
from .symconst import (SQRT_PI, SymbolicConstant, gamma_half_integer, pow2,
                       pow_pi)

F = Fraction


class AreaKind(str, Enum):
    Ex = "Ex"
    Br = "Br"
    Bm = "Bm"
    Me = "Me"
    Dm = "Dm"
    BrPlus = "BrPlus"
    BmPlus = "BmPlus"


_ALIASES = {
    "ex": AreaKind.Ex, "br": AreaKind.Br, "bm": AreaKind.Bm, "me": AreaKind.Me,
    "dm": AreaKind.Dm, "br+": AreaKind.BrPlus, "bm+": AreaKind.BmPlus,
    "brplus": AreaKind.BrPlus, "bmplus": AreaKind.BmPlus,
}


def area_kind(x) -> AreaKind:
    """Accept an AreaKind, its value, or a CLI alias such as ``br+``."""
    if isinstance(x, AreaKind):
        return x
    try:
        return AreaKind(x)
    except ValueError:
        pass
    try:
        return _ALIASES[str(x).lower()]
    except KeyError:
        raise ValueError(f"unknown area kind {x!r}") from None


# kinds whose moment prefactor has sqrt(pi) and Gamma((3n+1)/2)
_BRIDGE_TYPE = {
    AreaKind.Br: seq.D,
    AreaKind.Me: seq.Q,
    AreaKind.BrPlus: seq.Dplus,
}
# kinds with Gamma((3n+2)/2) and no sqrt(pi)
_MOTION_TYPE = {
    AreaKind.Bm: seq.L,
    AreaKind.Dm: seq.W,
    AreaKind.BmPlus: seq.Lplus,
}


def kind_sequence(kind):
    """The rational sequence behind the moments of ``kind``."""
    kind = area_kind(kind)
    if kind is AreaKind.Ex:
        return seq.K
    return _BRIDGE_TYPE.get(kind) or _MOTION_TYPE[kind]


@lru_cache(maxsize=None)
def _moment(kind: AreaKind, n: int) -> SymbolicConstant:
    if kind is AreaKind.Ex:
        return (4 * SQRT_PI * pow2(F(-n, 2)) * factorial(n)
                / gamma_half_integer(F(3 * n - 1, 2)) * seq.K(n))
    if kind in _BRIDGE_TYPE:
        return (SQRT_PI * pow2(F(-n, 2)) * factorial(n)
                / gamma_half_integer(F(3 * n + 1, 2)) * _BRIDGE_TYPE[kind](n))
    return (pow2(F(-n, 2)) * factorial(n)
            / gamma_half_integer(F(3 * n + 2, 2)) * _MOTION_TYPE[kind](n))


def moment(kind, n: int) -> SymbolicConstant:
    """E X^n for the area ``kind``, exact."""
    if n < 0:
        raise ValueError("moment order must be non-negative")
    return _moment(area_kind(kind), n)


def scaled_moment(scaling: str, n: int) -> SymbolicConstant:
    """Moments of xi = 2 B_ex or A = 2^(3/2) B_ex."""
    if scaling == "xi":
        return moment(AreaKind.Ex, n) * 2 ** n
    if scaling == "A":
        return moment(AreaKind.Ex, n) * pow2(F(3 * n, 2))
    raise ValueError(f"unknown scaling {scaling!r}")


def moment_ratio(kind) -> SymbolicConstant:
    """E X^2 / (E X)^2."""
    return moment(kind, 2) / moment(kind, 1) ** 2


def dm_moment_from_meander(n: int) -> SymbolicConstant:
    """Double meander moment as a Beta-weighted convolution of meander moments."""
    tot = SymbolicConstant()
    denom = gamma_half_integer(F(3 * n + 2, 2))
    for m in range(n + 1):
        beta = gamma_half_integer(F(3 * m + 1, 2)) * gamma_half_integer(F(3 * (n - m) + 1, 2)) / denom
        tot = tot + comb(n, m) * beta * moment(AreaKind.Me, m) * moment(AreaKind.Me, n - m)
    return tot * pow_pi(-1)


@lru_cache(maxsize=None)
def joint_moment(kind, k: int, l: int) -> SymbolicConstant:
    """E (X+)^k (X-)^l for the bridge or motion area split into signed parts."""
    kind = area_kind(kind)
    if k < 0 or l < 0:
        raise ValueError("orders must be non-negative")
    n = k + l
    if kind is AreaKind.Br:
        return (pow2(F(-n, 2)) * SQRT_PI * factorial(k) * factorial(l)
                / gamma_half_integer(F(3 * n + 1, 2)) * seq.joint_table("DplusMinus", k, l))
    if kind is AreaKind.Bm:
        return (pow2(F(-n, 2)) * factorial(k) * factorial(l)
                / gamma_half_integer(F(3 * n, 2) + 1) * seq.joint_table("LplusMinus", k, l))
    raise ValueError("joint moments exist only for Br and Bm")


def covariance_pm(kind) -> SymbolicConstant:
    m1 = joint_moment(kind, 1, 0)
    return joint_moment(kind, 1, 1) - m1 * m1


def correlation_pm(kind) -> float:
    var = joint_moment(kind, 2, 0) - joint_moment(kind, 1, 0) ** 2
    with mpmath.workdps(30):
        return float(covariance_pm(kind).to_mpf(30) / var.to_mpf(30))


def cumulant(kind, n: int) -> SymbolicConstant:
    """n-th semi-invariant, from the moments by the standard recursion."""
    if n < 1:
        raise ValueError("cumulant order must be >= 1")
    return _cumulant(area_kind(kind), n)


@lru_cache(maxsize=None)
def _cumulant(kind, n):
    out = moment(kind, n)
    for k in range(1, n):
        out = out - comb(n - 1, k) * moment(kind, k) * _cumulant(kind, n - k)
    return out


# ---------------------------------------------------------------------------
# Wright's constants

@lru_cache(maxsize=None)
def wright_rho(k: int) -> SymbolicConstant:
    """rho_k from sigma_k, k >= -1."""
    if k < -1:
        raise ValueError("rho is defined for k >= -1")
    return (pow2(F(1 - 3 * k, 2)) * SQRT_PI * seq.sigma(k)
            / gamma_half_integer(F(3 * k, 2) + 1))


def _mpq(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def wright_w(k: int, dps: int = 30):
    """Wright's normalized constant w_k (tends to 1); contains e^(k/2) so it is a float."""
    if k < 1:
        raise ValueError("w_k is defined for k >= 1")
    with mpmath.workdps(dps):
        return (mpmath.sqrt(mpmath.mpf(8) / 3) * mpmath.pi * mpmath.factorial(k - 1)
                / mpmath.gamma(mpmath.mpf(3 * k) / 2)
                * (27 * mpmath.mpf(k) / (8 * mpmath.e)) ** (mpmath.mpf(k) / 2)
                * _mpq(seq.d_wright(k)))


# ---------------------------------------------------------------------------
# asymptotics

def _asym_table():
    e, pi, sqrt = mpmath.e, mpmath.pi, mpmath.sqrt
    fac = mpmath.factorial
    return {
        # name: (approximation, exact value)
        "excursion_moment": (lambda k: 3 * sqrt(2) * k * (k / (12 * e)) ** (k / 2),
                             lambda k: moment(AreaKind.Ex, k)),
        "airy_constant_moment": (lambda k: sqrt(2) * 3 * k * (2 * k / (3 * e)) ** (k / 2),
                                 lambda k: scaled_moment("A", k)),
        "xi_moment": (lambda k: sqrt(2) * 3 * k * (k / (3 * e)) ** (k / 2),
                      lambda k: scaled_moment("xi", k)),
        "rho": (lambda k: sqrt(3) / (2 * sqrt(pi)) * (e / (12 * k)) ** (k / 2),
                lambda k: wright_rho(k)),
        "d": (lambda k: 1 / (2 * pi), lambda k: seq.d_wright(k)),
        "w": (lambda k: mpmath.mpf(1), lambda k: wright_w(k)),
        "c": (lambda k: mpmath.mpf(1.5) ** k * fac(k - 1) / (2 * pi), lambda k: seq.c_wright(k)),
        "sigma": (lambda k: mpmath.mpf(1.5) ** (k + 1) * fac(k) / (2 * pi), lambda k: seq.sigma(k)),
        "K": (lambda k: mpmath.mpf(0.75) ** k * fac(k - 1) / (2 * pi), lambda k: seq.K(k)),
        "omegaStar": (lambda k: mpmath.mpf(6) ** k * fac(k - 1) / (2 * pi), lambda k: seq.omega_star(k)),
        "omega": (lambda k: mpmath.mpf(1.5) ** k * fac(k - 1) / pi, lambda k: seq.omega(k)),
        "Omega": (lambda k: mpmath.mpf(1.5) ** k * fac(k) ** 2 / (pi * k), lambda k: seq.Omega(k)),
        "D": (lambda n: mpmath.mpf(0.75) ** n * fac(n - 1) / pi, lambda n: seq.D(n)),
        "D_stirling": (lambda n: sqrt(2 / (pi * n)) * (3 * n / (4 * e)) ** n, lambda n: seq.D(n)),
        "bridge_moment": (lambda n: sqrt(2) * (n / (12 * e)) ** (n / 2), lambda n: moment(AreaKind.Br, n)),
        "motion_moment": (lambda n: sqrt(2) * (n / (3 * e)) ** (n / 2), lambda n: moment(AreaKind.Bm, n)),
        "L": (lambda n: sqrt(3) * (3 * n / (2 * e)) ** n, lambda n: seq.L(n)),
        "meander_moment": (lambda n: sqrt(3 * pi * n) * (n / (3 * e)) ** (n / 2),
                           lambda n: moment(AreaKind.Me, n)),
        "Q": (lambda n: sqrt(3) * (3 * n / (2 * e)) ** n, lambda n: seq.Q(n)),
        "W": (lambda n: 2 * sqrt(3) * (3 * n / (2 * e)) ** n, lambda n: seq.W(n)),
        "double_meander_moment": (lambda n: 2 * sqrt(2) * (n / (3 * e)) ** (n / 2),
                                  lambda n: moment(AreaKind.Dm, n)),
        "bridge_plus_moment": (lambda n: (n / (12 * e)) ** (n / 2) / sqrt(2),
                               lambda n: moment(AreaKind.BrPlus, n)),
        "Dplus": (lambda n: mpmath.mpf(0.75) ** n * fac(n - 1) / (2 * pi), lambda n: seq.Dplus(n)),
        "Dplus_stirling": (lambda n: (3 * n / (4 * e)) ** n / sqrt(2 * pi * n), lambda n: seq.Dplus(n)),
        "motion_plus_moment": (lambda n: (n / (3 * e)) ** (n / 2) / sqrt(2),
                               lambda n: moment(AreaKind.BmPlus, n)),
        "Lplus": (lambda n: sqrt(3) / 2 * (3 * n / (2 * e)) ** n, lambda n: seq.Lplus(n)),
    }


ASYMPTOTIC_IDS = tuple(_asym_table())


def _to_mpf(v, dps):
    if isinstance(v, Fraction):
        return _mpq(v)
    if isinstance(v, SymbolicConstant):
        return v.to_mpf(dps)
    return mpmath.mpf(v)


def asymptotic_approx(name: str, n: int, dps: int = 30):
    """Value of the named large-n approximation at n (an mpmath float)."""
    table = _asym_table()
    if name not in table:
        raise KeyError(f"unknown asymptotic {name!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    with mpmath.workdps(dps):
        return +table[name][0](mpmath.mpf(n))


def asymptotic_ratio(name: str, n: int, dps: int = 30):
    """exact / approximation at n."""
    table = _asym_table()
    with mpmath.workdps(dps):
        approx = table[name][0](mpmath.mpf(n))
        return _to_mpf(table[name][1](n), dps) / approx
