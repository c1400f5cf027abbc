"""Laplace transforms psi(t) = E exp(-t X) of the seven areas.

Routes:
  * moment series  sum E X^k (-t)^k / k!  (entire; used for small t),
  * spectral series over the Airy zeros (Ex, Br, Bm, Me, Dm),
  * Feynman-Kac spectral representations for the one-sided and split
    potentials (BrPlus, BmPlus and the joint transforms of B+ and B-).

The last route is independent of the Airy-ratio identities it is used to
check: it expands the heat kernel of -1/2 d^2/dx^2 + V over generalized
eigenfunctions of V(x) = a x^+ (continuous spectrum) or V(x) = a x^+ + b x^-
(discrete spectrum).
"""
from __future__ import annotations

import json
import math
import threading
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence

import mpmath
import numpy as np
from scipy import integrate, optimize, special

from . import airy
from .moments import AreaKind, area_kind, joint_moment, moment
from .symconst import SymbolicConstant, gamma_third, pow2

F = Fraction

# psi(s) switches from the moment series to the spectral routes above this
# argument; s = sqrt(2) t^(3/2) puts the switch at t = 1 in the identities
S_SPLIT = math.sqrt(2.0)
T_MIN = 0.05


class TruncationError(RuntimeError):
    pass


class InfiniteMomentError(ValueError):
    """The requested negative moment is infinite."""


class UnsupportedOrder(ValueError):
    pass


# ---------------------------------------------------------------------------
# moment series

_MOM_DPS = 60


@lru_cache(maxsize=None)
def _moment_mp(kind: AreaKind, k: int):
    return moment(kind, k).to_mpf(_MOM_DPS)


@lru_cache(maxsize=None)
def _moment_floats(kind: AreaKind, n: int = 60) -> np.ndarray:
    """M_k / k! as floats, k < n."""
    return np.array([float(_moment_mp(kind, k) / mpmath.factorial(k)) for k in range(n)])


def _psi_moments_float(kind: AreaKind, s: float) -> float:
    c = _moment_floats(kind)
    return float(np.polynomial.polynomial.polyval(-s, c))


def psi_moments(kind, t: float, n_terms: int = 400, tol: float = 1e-12) -> float:
    """Partial sum of sum_k E X^k (-t)^k / k!, stopped once the terms are
    decreasing and below tol (for an alternating tail this bounds the error)."""
    kind = area_kind(kind)
    if t == 0:
        return 1.0
    t = mpmath.mpf(t)
    # digits lost to cancellation: largest term magnitude
    with mpmath.workdps(_MOM_DPS - 5):
        tot = mpmath.mpf(0)
        prev = None
        tk = mpmath.mpf(1)
        peak = mpmath.mpf(1)
        for k in range(n_terms):
            if k:
                tk = tk * (-t) / k
            term = _moment_mp(kind, k) * tk
            tot += term
            a = abs(term)
            peak = max(peak, a)
            if prev is not None and a < prev and a < tol:
                if peak > mpmath.mpf(10) ** (_MOM_DPS - 25):
                    raise TruncationError("moment series lost too many digits to cancellation")
                return float(tot)
            prev = a
    raise TruncationError(f"moment series did not reach tolerance {tol} within {n_terms} terms")


# ---------------------------------------------------------------------------
# spectral series

N_SPECTRAL = 1500
_spec_lock = threading.Lock()
_spec_cache: Dict[str, np.ndarray] = {}


def _spectral_arrays():
    """|a_j|, |a'_j|, kappa_j, r_j for j <= N_SPECTRAL as float arrays.

    The first airy.TABLE_SIZE come from the refined table; beyond it the
    asymptotic zero expansions are accurate far beyond double precision and
    the residues are evaluated at those points."""
    with _spec_lock:
        if _spec_cache:
            return _spec_cache
        a, ap, kap, r = [], [], [], []
        for e in airy.zero_table().entries():
            a.append(float(e.a)), ap.append(float(e.a_prime))
            kap.append(float(e.kappa)), r.append(float(e.r))
        with mpmath.workdps(20):
            for j in range(airy.TABLE_SIZE + 1, N_SPECTRAL + 1):
                zj = mpmath.mpf(airy.zero_guess(airy.ZEROS_OF_AI, j))
                zpj = mpmath.mpf(airy.zero_guess(airy.ZEROS_OF_AI_PRIME, j))
                a.append(float(zj)), ap.append(float(zpj))
                kap.append(float(airy.ai_int_mp(-zpj, 20) / (zpj * mpmath.airyai(-zpj))))
                r.append(float(airy.ai_int_mp(-zj, 20) / mpmath.airyai(-zj, 1)))
        _spec_cache.update(a=np.array(a), ap=np.array(ap), kappa=np.array(kap), r=np.array(r))
        return _spec_cache


@dataclass
class SpectralValue:
    value: float
    terms: int
    bound: float


_C13 = 2.0 ** (-1.0 / 3.0)


def psi_spectral_detail(kind, t: float) -> SpectralValue:
    kind = area_kind(kind)
    if not t > 0:
        raise ValueError("t must be positive")
    if t < T_MIN:
        raise ValueError(f"spectral series is not used below t = {T_MIN}; use psi_moments")
    A = _spectral_arrays()
    t23 = t ** (2.0 / 3.0)
    if kind is AreaKind.Ex:
        e = np.exp(-_C13 * A["a"] * t23)
        terms = math.sqrt(2 * math.pi) * t * e
    elif kind is AreaKind.Br:
        e = np.exp(-_C13 * A["ap"] * t23)
        terms = 2 ** (-1 / 6) * math.sqrt(math.pi) * t ** (1 / 3) * e / A["ap"]
    elif kind is AreaKind.Bm:
        e = np.exp(-_C13 * A["ap"] * t23)
        terms = A["kappa"] * e
    elif kind is AreaKind.Me:
        e = np.exp(-_C13 * A["a"] * t23)
        terms = 2 ** (-1 / 6) * math.sqrt(math.pi) * t ** (1 / 3) * A["r"] * e
    elif kind is AreaKind.Dm:
        e = np.exp(-_C13 * A["a"] * t23)
        terms = 2 ** (-1 / 3) * t23 * A["r"] ** 2 * e
    else:
        raise ValueError(f"no spectral series for {kind.value}")
    mags = np.abs(terms)
    # keep terms down to 1e-18 of the first one
    keep = int(np.searchsorted(-mags, -1e-18 * mags[0]))
    if keep >= len(terms):
        raise TruncationError("spectral series needs more zeros at this t")
    val = math.fsum(terms[:keep])
    return SpectralValue(val, keep, float(mags[keep]) * (len(terms) - keep))


def psi_spectral(kind, t: float) -> float:
    """psi(t) from the series over the zeros of Ai or Ai'."""
    return psi_spectral_detail(kind, t).value


# ---------------------------------------------------------------------------
# one-sided potential a x^+ : continuous spectrum

def _gl_composite(a, b, panels, order=16):
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    mid = (edges[1:] + edges[:-1]) / 2
    half = (edges[1:] - edges[:-1]) / 2
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


_K_MAX = math.sqrt(2 * 48.0)  # exp(-k^2/2) < e^-48 beyond
_K_NODES, _K_WEIGHTS = _gl_composite(0.0, _K_MAX, 200)
_GL8_X, _GL8_W = np.polynomial.legendre.leggauss(8)


def _ai_int_decreasing(z: np.ndarray) -> np.ndarray:
    """AI(z) = 1/3 + int_z^0 Ai for an array of non-positive, decreasing z,
    by Gauss-Legendre on consecutive gaps (Ai is entire, so 8 points per short
    gap are exact to rounding)."""
    pts = np.concatenate(([0.0], z))
    lo, hi = pts[1:], pts[:-1]
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    u = mid[:, None] + half[:, None] * _GL8_X[None, :]
    ai = special.airy(u)[0]
    seg = half * (ai * _GL8_W[None, :]).sum(axis=1)
    return 1.0 / 3.0 + np.cumsum(seg)


def _plus_psi(kind: AreaKind, a: float) -> float:
    """E exp(-a B+) by the eigenfunction expansion of -1/2 d^2 + a x^+.

    Generalized eigenfunctions (energy lam = k^2/2): Ai(c (x - lam/a)) on
    x > 0, a sinusoid of amplitude A(k) on x < 0; the spectral measure is
    (2/pi) dk / A(k)^2.  Integrating the kernel over y (motion) uses the
    Abel-regularized half-line integral of the sinusoid.
    """
    k, w = _K_NODES, _K_WEIGHTS
    c3 = (2.0 * a) ** (1.0 / 3.0)
    z = -c3 * k * k / (2.0 * a)
    ai, aip = special.airy(z)[:2]
    c = c3 * aip
    den = k * k * ai * ai + c * c
    damp = np.exp(-k * k / 2.0)
    if kind is AreaKind.BrPlus:
        K = (2 / math.pi) * np.sum(w * damp * k * k * ai * ai / den)
        return math.sqrt(2 * math.pi) * K
    if kind is AreaKind.BmPlus:
        AI = _ai_int_decreasing(z)
        return (2 / math.pi) * float(np.sum(w * damp * ai * (k * k * AI / c3 - c) / den))
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# split potential xi x^+ + eta x^- : discrete spectrum

class JointSpectrum:
    """Eigen-data of H = -1/2 d^2/dx^2 + xi x^+ + eta x^- up to lam_max.

    With alpha = (2 xi)^(1/3), z1 = -alpha lam / xi (and beta, z2 likewise)
    the eigenfunction is Ai(z2) Ai(alpha x + z1) on x > 0 and
    Ai(z1) Ai(-beta x + z2) on x < 0; continuity of the derivative gives
    G(lam) = alpha Ai(z2) Ai'(z1) + beta Ai(z1) Ai'(z2) = 0.
    """

    def __init__(self, xi: float, eta: float, lam_max: float = 40.0):
        if not (xi > 0 and eta > 0):
            raise ValueError("xi and eta must be positive")
        self.xi, self.eta = float(xi), float(eta)
        self.alpha = (2 * self.xi) ** (1 / 3)
        self.beta = (2 * self.eta) ** (1 / 3)
        self.lam = self._eigenvalues(lam_max)
        self._weights()

    def _z(self, lam):
        return -self.alpha * lam / self.xi, -self.beta * lam / self.eta

    def _G(self, lam):
        z1, z2 = self._z(lam)
        a1, ap1 = special.airy(z1)[:2]
        a2, ap2 = special.airy(z2)[:2]
        return self.alpha * a2 * ap1 + self.beta * a1 * ap2

    def _eigenvalues(self, lam_max):
        # phase of Ai(z1) grows like sqrt(2 lam)/xi per unit lam
        rate = lambda l: math.sqrt(2 * max(l, 1e-3)) * (1 / self.xi + 1 / self.eta)
        grid = [0.0]
        while grid[-1] < lam_max:
            grid.append(grid[-1] + min(0.05, 0.05 / rate(grid[-1])))
        grid = np.array(grid)
        g = self._G(grid)
        out = []
        for i in np.nonzero(np.sign(g[1:]) * np.sign(g[:-1]) < 0)[0]:
            out.append(optimize.brentq(self._G, grid[i], grid[i + 1], xtol=1e-15, rtol=1e-15))
        return np.array(out)

    def _weights(self):
        lam = self.lam
        z1, z2 = self._z(lam)
        a1, ap1 = special.airy(z1)[:2]
        a2, ap2 = special.airy(z2)[:2]
        with mpmath.workdps(20):
            I1 = np.array([float(airy.ai_int_mp(float(v), 20)) for v in z1])
            I2 = np.array([float(airy.ai_int_mp(float(v), 20)) for v in z2])
        norm = (a2 ** 2 * (ap1 ** 2 - z1 * a1 ** 2) / self.alpha
                + a1 ** 2 * (ap2 ** 2 - z2 * a2 ** 2) / self.beta)
        phi0 = a1 * a2
        self.w_bridge = phi0 ** 2 / norm
        self.w_motion = phi0 * (a2 * I1 / self.alpha + a1 * I2 / self.beta) / norm

    def psi(self, kind: AreaKind, s: float) -> float:
        """E exp(-s xi B+ - s eta B-) for the bridge or motion."""
        T = s ** (2 / 3)
        if self.lam[-1] * T < 40:
            raise TruncationError("eigenvalue range too small for this s")
        e = np.exp(-self.lam * T)
        if kind is AreaKind.Br:
            return math.sqrt(2 * math.pi * T) * math.fsum(e * self.w_bridge)
        if kind is AreaKind.Bm:
            return math.fsum(e * self.w_motion)
        raise ValueError("joint transforms exist for Br and Bm only")


@lru_cache(maxsize=32)
def joint_spectrum(xi: float, eta: float) -> JointSpectrum:
    return JointSpectrum(xi, eta, lam_max=45.0 / (S_SPLIT * min(xi, eta)) ** (2 / 3) + 5)


@lru_cache(maxsize=None)
def _joint_coeffs(kind: AreaKind, n: int):
    """c[k][l] = E (X+)^k (X-)^l / (k! l!) as floats, k + l < n."""
    out = np.zeros((n, n))
    for k in range(n):
        for l in range(n - k):
            out[k, l] = float(joint_moment(kind, k, l).to_mpf(30)
                              / (mpmath.factorial(k) * mpmath.factorial(l)))
    return out


def psi_joint_moments(kind, a: float, b: float, n: int = 40) -> float:
    kind = area_kind(kind)
    c = _joint_coeffs(kind, n)
    return float(np.polynomial.polynomial.polyval2d(-a, -b, c))


def psi_joint(kind, a: float, b: float) -> float:
    """E exp(-a X+ - b X-) for kind Br or Bm."""
    kind = area_kind(kind)
    if a < 0 or b < 0:
        raise ValueError("arguments must be non-negative")
    s = max(a, b)
    if s <= S_SPLIT or min(a, b) == 0:
        if min(a, b) == 0 and s > S_SPLIT:
            plus = AreaKind.BrPlus if kind is AreaKind.Br else AreaKind.BmPlus
            return psi(plus, s)
        return psi_joint_moments(kind, a, b)
    sp = joint_spectrum(a / s, b / s)
    return sp.psi(kind, s)


# ---------------------------------------------------------------------------
# dispatcher

def psi(kind, s: float) -> float:
    """E exp(-s X) by the best available route."""
    kind = area_kind(kind)
    if s < 0:
        raise ValueError("s must be non-negative")
    if s <= S_SPLIT:
        return _psi_moments_float(kind, s)
    if kind in (AreaKind.BrPlus, AreaKind.BmPlus):
        return _plus_psi(kind, s)
    return psi_spectral(kind, s)


def psi_route(kind, s: float, route: str) -> float:
    """psi by an explicitly chosen route: 'moments', 'spectral' or 'kernel'
    (Feynman-Kac kernel: plus kinds, or the split potential at xi = eta)."""
    kind = area_kind(kind)
    if route == "moments":
        return psi_moments(kind, s)
    if route == "spectral":
        return psi_spectral(kind, s)
    if route == "kernel":
        if kind in (AreaKind.BrPlus, AreaKind.BmPlus):
            return _plus_psi(kind, s)
        if kind in (AreaKind.Br, AreaKind.Bm):
            return joint_spectrum(1.0, 1.0).psi(kind, s)
    raise ValueError(f"route {route!r} not available for {kind.value}")


# ---------------------------------------------------------------------------
# double Laplace identities

def _airy3(x):
    return airy.airy_triple_mp(x, 30)


def _rhs_ex(x):
    a, ap, _ = _airy3(x)
    return 2 * (ap / a) ** 2 - 2 * x


def _rhs_br(x):
    a, ap, _ = _airy3(x)
    return -mpmath.sqrt(mpmath.pi) * a / ap


def _rhs_bm(x):
    a, ap, AI = _airy3(x)
    return -AI / ap


def _rhs_me(x):
    a, ap, AI = _airy3(x)
    return AI / a


def _rhs_dm(x):
    a, ap, AI = _airy3(x)
    return (AI / a) ** 2


def _rhs_brplus(x):
    a, ap, _ = _airy3(x)
    return 2 * a / (mpmath.sqrt(x) * a - ap)


def _rhs_bmplus(x):
    a, ap, AI = _airy3(x)
    return (a / mpmath.sqrt(x) + AI) / (mpmath.sqrt(x) * a - ap)


def _ratio_at(xi, lam):
    z = mpmath.mpf(xi) ** (-mpmath.mpf(2) / 3) * lam
    return _airy3(z)


def _rhs_joint_bm(lam, xi, eta):
    a1, ap1, I1 = _ratio_at(xi, lam)
    a2, ap2, I2 = _ratio_at(eta, lam)
    c1, c2 = mpmath.cbrt(xi), mpmath.cbrt(eta)
    num = I1 / (c1 * a1) + I2 / (c2 * a2)
    den = -c1 * ap1 / a1 - c2 * ap2 / a2
    return num / den


def _rhs_joint_br(lam, xi, eta):
    a1, ap1, _ = _ratio_at(xi, lam)
    a2, ap2, _ = _ratio_at(eta, lam)
    c1, c2 = mpmath.cbrt(xi), mpmath.cbrt(eta)
    return mpmath.sqrt(2) / (-c1 * ap1 / a1 - c2 * ap2 / a2)


def _rhs_bridge_scaled(lam, xi):
    a, ap, _ = _ratio_at(xi, lam)
    return -a / (mpmath.cbrt(xi) * ap)


@dataclass(frozen=True)
class DoubleLaplaceIdentity:
    """int_0^oo e^{-x t} psi(sqrt(2) t^(3/2)) t^(nu-1) c dt = rhs(x).

    c is the constant in front of the weight (1/sqrt(pi), 1/sqrt(2 pi) or 1);
    joint identities take the pair (xi, eta) as well."""
    id: str
    kind: str
    nu: Fraction
    const: str
    rhs: str


_WEIGHT_CONST = {"1": 1.0, "1/sqrt(pi)": 1 / math.sqrt(math.pi), "1/sqrt(2 pi)": 1 / math.sqrt(2 * math.pi)}

DOUBLE_LAPLACE: Dict[str, DoubleLaplaceIdentity] = {i.id: i for i in [
    DoubleLaplaceIdentity("excursion", "Ex", F(1, 2), "1/sqrt(pi)", "2 (Ai'(x)/Ai(x))^2 - 2x"),
    DoubleLaplaceIdentity("bridge", "Br", F(1, 2), "1", "-sqrt(pi) Ai(x)/Ai'(x)"),
    DoubleLaplaceIdentity("motion", "Bm", F(1), "1", "-AI(x)/Ai'(x)"),
    DoubleLaplaceIdentity("meander", "Me", F(1, 2), "1/sqrt(pi)", "AI(x)/Ai(x)"),
    DoubleLaplaceIdentity("double_meander", "Dm", F(1), "1", "(AI(x)/Ai(x))^2"),
    DoubleLaplaceIdentity("bridge_plus", "BrPlus", F(1, 2), "1/sqrt(pi)", "2 Ai(x)/(x^(1/2) Ai(x) - Ai'(x))"),
    DoubleLaplaceIdentity("motion_plus", "BmPlus", F(1), "1", "(x^(-1/2) Ai(x) + AI(x))/(x^(1/2) Ai(x) - Ai'(x))"),
    DoubleLaplaceIdentity("motion_joint", "Bm+-", F(1), "1",
                          "(AI(u)/(xi^(1/3) Ai(u)) + AI(v)/(eta^(1/3) Ai(v))) / "
                          "(-xi^(1/3) Ai'(u)/Ai(u) - eta^(1/3) Ai'(v)/Ai(v)), u = xi^(-2/3) x, v = eta^(-2/3) x"),
    DoubleLaplaceIdentity("bridge_joint", "Br+-", F(1, 2), "1/sqrt(2 pi)",
                          "sqrt(2) / (-xi^(1/3) Ai'(u)/Ai(u) - eta^(1/3) Ai'(v)/Ai(v))"),
    DoubleLaplaceIdentity("bridge_scaled", "Br", F(1, 2), "1/sqrt(pi)",
                          "-Ai(xi^(-2/3) x)/(xi^(1/3) Ai'(xi^(-2/3) x))"),
]}

_RHS = {"excursion": _rhs_ex, "bridge": _rhs_br, "motion": _rhs_bm, "meander": _rhs_me,
        "double_meander": _rhs_dm, "bridge_plus": _rhs_brplus, "motion_plus": _rhs_bmplus}


@dataclass
class LaplaceCheck:
    id: str
    x: float
    xi: Optional[float]
    eta: Optional[float]
    lhs: float
    rhs: float
    diff: float
    ok: bool


def _lhs(psi_of_s: Callable[[float], float], x: float, nu: Fraction, const: float) -> float:
    """const * int_0^oo e^{-xt} psi(sqrt2 t^1.5) t^(nu-1) dt, split at t = 1."""
    opts = dict(epsabs=1e-13, epsrel=1e-11, limit=200)
    if nu == F(1, 2):
        # t = u^2 removes the t^(-1/2) endpoint singularity
        f = lambda u: 2.0 * math.exp(-x * u * u) * psi_of_s(S_SPLIT * u ** 3)
        lo = integrate.quad(f, 0.0, 1.0, **opts)[0]
        hi = integrate.quad(f, 1.0, math.sqrt(60.0 / x) + 1.0, **opts)[0]
    else:
        f = lambda t: math.exp(-x * t) * psi_of_s(S_SPLIT * t ** 1.5)
        lo = integrate.quad(f, 0.0, 1.0, **opts)[0]
        hi = integrate.quad(f, 1.0, 60.0 / x + 1.0, **opts)[0]
    return const * (lo + hi)


def verify_double_laplace(identity, x: float, xi: float = None, eta: float = None,
                          tol: float = 1e-7) -> LaplaceCheck:
    ident = DOUBLE_LAPLACE[identity] if isinstance(identity, str) else identity
    if not x > 0:
        raise ValueError("x must be positive")
    const = _WEIGHT_CONST[ident.const]
    if ident.id in _RHS:
        kind = area_kind(ident.kind)
        lhs = _lhs(lambda s: psi(kind, s), x, ident.nu, const)
        with mpmath.workdps(30):
            rhs = float(_RHS[ident.id](mpmath.mpf(x)))
    elif ident.id == "bridge_scaled":
        xi = 1.0 if xi is None else xi
        lhs = _lhs(lambda s: psi(AreaKind.Br, s * xi), x, ident.nu, const)
        with mpmath.workdps(30):
            rhs = float(_rhs_bridge_scaled(mpmath.mpf(x), mpmath.mpf(xi)))
    else:
        if xi is None or eta is None:
            raise ValueError("joint identities need xi and eta")
        kind = AreaKind.Bm if ident.id == "motion_joint" else AreaKind.Br
        lhs = _lhs(lambda s: psi_joint(kind, s * xi, s * eta), x, ident.nu, const)
        fn = _rhs_joint_bm if kind is AreaKind.Bm else _rhs_joint_br
        with mpmath.workdps(30):
            rhs = float(fn(mpmath.mpf(x), mpmath.mpf(xi), mpmath.mpf(eta)))
    diff = abs(lhs - rhs)
    return LaplaceCheck(ident.id, x, xi, eta, lhs, rhs, diff, diff <= tol)


JOINT_PARAMS = [(0.5, 0.5), (0.5, 1.0), (1.0, 0.5), (1.0, 1.0)]


def double_laplace_report(xs: Sequence[float] = (0.5, 1.0, 2.0), tol: float = 1e-7) -> List[LaplaceCheck]:
    out = []
    for iid in DOUBLE_LAPLACE:
        for x in xs:
            if iid in ("motion_joint", "bridge_joint"):
                for xi, eta in JOINT_PARAMS:
                    out.append(verify_double_laplace(iid, x, xi, eta, tol))
            elif iid == "bridge_scaled":
                out.append(verify_double_laplace(iid, x, 0.5, None, tol))
            else:
                out.append(verify_double_laplace(iid, x, tol=tol))
    return out


def report_json(checks: Sequence[LaplaceCheck]) -> str:
    return json.dumps([asdict(c) for c in checks], indent=2)


# ---------------------------------------------------------------------------
# negative moments by Mellin quadrature

def _finite_threshold(kind: AreaKind):
    return {AreaKind.BrPlus: F(2, 3), AreaKind.BmPlus: F(1, 3)}.get(kind)


def neg_moment_quadrature(kind, s: float) -> float:
    """E X^-s = Gamma(s)^-1 int_0^oo t^(s-1) psi(t) dt.

    Returns math.inf when the integral diverges, detected from the growth of
    the integral over successive decades of t."""
    kind = area_kind(kind)
    if not s > 0:
        raise ValueError("s must be positive")
    opts = dict(epsabs=1e-14, epsrel=1e-11, limit=200)
    head = integrate.quad(lambda t: _psi_moments_float(kind, t), 0.0, 1.0,
                          weight="alg", wvar=(s - 1.0, 0.0), **opts)[0]
    if kind not in (AreaKind.BrPlus, AreaKind.BmPlus):
        g = lambda t: t ** (s - 1) * psi_spectral(kind, t)
        body = integrate.quad(g, 1.0, 20.0, **opts)[0] + integrate.quad(g, 20.0, 2000.0, **opts)[0]
        return (head + body) / math.gamma(s)
    # algebraic decay: integrate in log t over decades
    g = lambda v: math.exp(s * v) * _plus_psi(kind, math.exp(v))
    edges = [0.0] + [math.log(10.0) * k for k in range(2, 30, 2)]
    parts = [integrate.quad(g, lo, hi, **opts)[0] for lo, hi in zip(edges, edges[1:])]
    if parts[-1] > 0.5 * parts[-2]:
        return math.inf
    # remaining tail from psi ~ c R^-p with p estimated at the last edge
    R = math.exp(edges[-1])
    p = -math.log(_plus_psi(kind, 2 * R) / _plus_psi(kind, R)) / math.log(2)
    tail = _plus_psi(kind, R) * R ** s / (p - s)
    return (head + math.fsum(parts) + tail) / math.gamma(s)


# closed forms through the Taylor coefficients of Ai, Ai', AI at 0

AI0 = gamma_third(F(1, 3)) * SymbolicConstant.monomial(F(1, 2), b=-1, c=-2)  # 3^(-1/6) Gamma(1/3) / (2 pi)
AIP0 = -SymbolicConstant.monomial(1, b=-2) / gamma_third(F(1, 3))             # -3^(-1/3) / Gamma(1/3)
AI_INT0 = SymbolicConstant.rational(F(1, 3))


def _taylor_airy(n: int):
    """Coefficients of Ai, Ai' and AI at 0 up to x^(n-1)."""
    p = [AI0, AIP0, SymbolicConstant()]
    while len(p) < n + 2:
        m = len(p) - 2  # p[m+2] (m+2)(m+1) = p[m-1]
        p.append(p[m - 1] * F(1, (m + 2) * (m + 1)))
    ai = p[:n]
    aip = [p[j + 1] * (j + 1) for j in range(n)]
    AI = [AI_INT0] + [-p[j - 1] * F(1, j) for j in range(1, n)]
    return ai, aip, AI


def _smul(a, b, n):
    out = []
    for k in range(n):
        acc = SymbolicConstant()
        for j in range(k + 1):
            if j < len(a) and k - j < len(b) and not a[j].is_zero() and not b[k - j].is_zero():
                acc = acc + a[j] * b[k - j]
        out.append(acc)
    return out


def _sdiv(a, b, n):
    """a / b as power series; b[0] must be a single monomial."""
    inv0 = b[0].reciprocal()
    q = []
    for k in range(n):
        acc = a[k] if k < len(a) else SymbolicConstant()
        for j in range(1, k + 1):
            if j < len(b) and not b[j].is_zero():
                acc = acc - b[j] * q[k - j]
        q.append(acc * inv0)
    return q


def _in_sqrt(series, n):
    """Substitute x = y^2: coefficients in y up to y^(n-1)."""
    out = [SymbolicConstant() for _ in range(n)]
    for k, c in enumerate(series):
        if 2 * k < n:
            out[2 * k] = c
    return out


_NU = {AreaKind.Ex: F(1, 2), AreaKind.Br: F(1, 2), AreaKind.Me: F(1, 2), AreaKind.BrPlus: F(1, 2),
       AreaKind.Bm: F(1), AreaKind.Dm: F(1), AreaKind.BmPlus: F(1)}
_SQRT_PI = SymbolicConstant.monomial(c=1)


def _psi_series_y(kind: AreaKind, n: int):
    """Coefficients c_k of the right hand side Psi (weight t^(nu-1) dt, no
    constant in front) as a series in y = x^(1/2), k = -1 .. n-2 (returned
    with offset 1: list index i is the power y^(i-1))."""
    ai, aip, AI = _taylor_airy(n)
    m = n
    if kind is AreaKind.Ex:
        r = _sdiv(aip, ai, m)
        ps = [c * 2 for c in _smul(r, r, m)]
        ps[1] = ps[1] - 2
        ps = [c * _SQRT_PI for c in ps]
    elif kind is AreaKind.Br:
        ps = [-c * _SQRT_PI for c in _sdiv(ai, aip, m)]
    elif kind is AreaKind.Bm:
        ps = [-c for c in _sdiv(AI, aip, m)]
    elif kind is AreaKind.Me:
        ps = [c * _SQRT_PI for c in _sdiv(AI, ai, m)]
    elif kind is AreaKind.Dm:
        r = _sdiv(AI, ai, m)
        ps = _smul(r, r, m)
    else:
        n2 = 2 * n
        Y = lambda s: _in_sqrt(s, n2)
        yai = [SymbolicConstant()] + Y(ai)[:-1]
        den = [a - b for a, b in zip(yai, Y(aip))]
        if kind is AreaKind.BrPlus:
            ps = [c * 2 * _SQRT_PI for c in _sdiv(Y(ai), den, n2)]
            return [SymbolicConstant()] + ps
        # BmPlus: y Psi = (Ai + y AI)/(y Ai - Ai')
        yAI = [SymbolicConstant()] + Y(AI)[:-1]
        num = [a + b for a, b in zip(Y(ai), yAI)]
        return _sdiv(num, den, n2)
    return [SymbolicConstant()] + _in_sqrt(ps, 2 * n)


def neg_moment_closed_form(kind, s) -> SymbolicConstant:
    """E X^-s for s = 2(m + nu)/3, from (-1)^m Psi^(m)(0)."""
    kind = area_kind(kind)
    s = F(s)
    nu = _NU[kind]
    m = s * F(3, 2) - nu
    if m.denominator != 1 or m < 0:
        raise UnsupportedOrder(f"order {s} is not of the form 2(m + {nu})/3 for {kind.value}")
    m = int(m)
    ys = _psi_series_y(kind, m + 3)  # index i <-> y^(i-1)
    for i in range(0, 2 * m + 1):
        if (i - 1) % 2 == 1 or i == 0:
            if not ys[i].is_zero():
                raise InfiniteMomentError(f"E {kind.value}^-{s} is infinite")
    c = ys[2 * m + 1]  # coefficient of x^m
    deriv = c * math.factorial(m) * (-1) ** m  # (-1)^m Psi^(m)(0)
    sigma = F(2 * (m + nu), 3)
    return deriv * 3 * pow2(F(m + nu, 3) - 1) / gamma_third(sigma)


TABLE11 = [("Ex", F(1, 3)), ("Br", F(1, 3)), ("Me", F(1, 3)), ("BrPlus", F(1, 3)), ("Bm", F(2, 3)),
           ("Dm", F(2, 3)), ("BmPlus", F(2, 3)), ("Ex", F(1)), ("Br", F(1)), ("Me", F(1)),
           ("BrPlus", F(1)), ("Bm", F(4, 3)), ("Dm", F(4, 3)), ("Bm", F(2)), ("Dm", F(2))]


# ---------------------------------------------------------------------------
# Mellin transforms of Airy ratios

@dataclass
class MellinCheck:
    id: str
    s: float
    lhs: float
    rhs: float
    diff: float
    ok: bool


def _ratio_ai_aip(x):
    # exponentially scaled functions avoid underflow for large x
    e = special.airye(x)
    return e[0] / e[1]


def mellin_airy_check(s: float, tol: float = 1e-6) -> MellinCheck:
    """s in (0, 1/2): int x^(s-1) Ai/Ai' dx = -(pi/sin(pi s)) LambdaTilde(2-s).
    s in (-1, -1/2): 2^(1/3) int x^(s-1) (Ai'(cx)/Ai(cx) - Ai'(0)/Ai(0)) dx
    = 2^((1-s)/3) (pi/sin(pi s)) Lambda(1-s), c = 2^(1/3)."""
    opts = dict(epsabs=1e-13, epsrel=1e-11, limit=400)
    if 0 < s < 0.5:
        f = _ratio_ai_aip
        head = integrate.quad(f, 0, 1, weight="alg", wvar=(s - 1, 0), **opts)[0]
        g = lambda x: x ** (s - 1) * f(x)
        body = integrate.quad(g, 1, 1e4, **opts)[0]
        # Ai/Ai' ~ -x^(-1/2) (1 - x^(-3/2)/4 + ...) beyond 1e4
        X = 1e4
        tail = -(X ** (s - 0.5)) / (0.5 - s) + 0.25 * X ** (s - 2) / (2 - s)
        lhs = head + body + tail
        rhs = -(math.pi / math.sin(math.pi * s)) * float(airy.root_zeta_sum(airy.LAMBDA_TILDE, 2 - s))
        cid = "mellin_ai_over_aiprime"
    elif -1 < s < -0.5:
        c = 2 ** (1 / 3)
        r0 = float(airy.ai_prime_mp(0) / airy.ai_mp(0))
        f = lambda x: 1.0 / _ratio_ai_aip(c * x) - r0
        # (Ai'/Ai)(cx) - r0 = -c r0^2 x + O(x^2)
        fx = lambda x: f(x) / x if x > 1e-6 else -c * r0 * r0 + c * c * x
        head = integrate.quad(fx, 0, 1, weight="alg", wvar=(s, 0), **opts)[0]
        g = lambda x: x ** (s - 1) * f(x)
        body = integrate.quad(g, 1, 1e4, **opts)[0]
        # Ai'/Ai (cx) ~ -(cx)^(1/2) - 1/(4 cx) + ...
        X = 1e4
        tail = (-(c ** 0.5) * X ** (s + 0.5) / -(s + 0.5) - r0 * X ** s / -s
                - 0.25 / c * X ** (s - 1) / (1 - s))
        lhs = c * (head + body + tail)
        rhs = 2 ** ((1 - s) / 3) * (math.pi / math.sin(math.pi * s)) * float(
            airy.root_zeta_sum(airy.LAMBDA, 1 - s))
        cid = "mellin_log_derivative"
    else:
        raise ValueError("s must lie in (0, 1/2) or (-1, -1/2)")
    return MellinCheck(cid, s, lhs, rhs, abs(lhs - rhs), abs(lhs - rhs) <= tol * max(1.0, abs(rhs)))


def psi_decay_trend(kind, N: int, ts: Sequence[float] = (10.0, 31.6, 100.0, 316.0, 1000.0)) -> List[float]:
    """t^N psi(t) on a grid; decreasing to 0 when all negative moments exist."""
    return [t ** N * psi(kind, t) for t in ts]
