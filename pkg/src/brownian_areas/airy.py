"""Airy function kernel: Ai, Ai', AI = int_x^oo Ai, zeros, residues, root zeta.

Values are computed in mpmath arithmetic and returned as floats by the plain
functions and as ``mpf`` by the ``*_mp`` variants.  Small |x| uses the
Maclaurin series with enough guard digits to absorb cancellation; large |x|
uses the classical asymptotic expansions, whose coefficients are the exact
sequences alpha, alpha' and beta.
"""
from __future__ import annotations

import csv
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

import mpmath

from . import sequences as seq

MAX_ABS_X = 1e4


@dataclass(frozen=True)
class EvalPolicy:
    series_cutoff_radius: float = 8.0
    asymptotic_terms: int = 60
    target_abs_error: float = 1e-12


DEFAULT_POLICY = EvalPolicy()


class AiryRangeError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def _mpq(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def _ai0():
    return 1 / (mpmath.power(3, mpmath.mpf(2) / 3) * mpmath.gamma(mpmath.mpf(2) / 3))


def _aip0():
    return -1 / (mpmath.power(3, mpmath.mpf(1) / 3) * mpmath.gamma(mpmath.mpf(1) / 3))


def _series(x, dps):
    """(Ai, Ai', AI) from the Maclaurin series; dps is the target precision."""
    ax = abs(float(x))
    guard = int(0.58 * ax ** 1.5) + 10
    with mpmath.workdps(dps + guard):
        x = mpmath.mpf(x)
        a = [_ai0(), _aip0(), mpmath.mpf(0)]
        s_ai = a[0] + a[1] * x
        s_aip = a[1]
        s_int = a[0] * x + a[1] * x * x / 2
        xn = x * x  # x^n for n = 2
        n = 2
        eps = mpmath.mpf(10) ** (-(dps + guard))
        small = 0
        while True:
            n += 1
            a.append(a[n - 3] / (n * (n - 1)))
            xn_prev = xn
            xn = xn * x
            t_ai = a[n] * xn
            s_ai += t_ai
            s_aip += n * a[n] * xn_prev
            s_int += t_ai * x / (n + 1)
            if abs(t_ai) * n < eps and n > ax:
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
        return +s_ai, +s_aip, mpmath.mpf(1) / 3 - s_int


_coef_cache: Dict[str, List] = {}


def _coefs(name: str, n: int):
    lst = _coef_cache.setdefault(name, [])
    src = {"alpha": seq.alpha, "alphaPrime": seq.alpha_prime, "beta": seq.beta}[name]
    while len(lst) < n:
        lst.append(src(len(lst)))
    return lst[:n]


def _asym_sum(coefs, w, dps, parity=None):
    """sum (-1)^k c_k w^k, stopping at the smallest term.

    With parity=0/1 only even/odd indices are used, giving
    sum_k (-1)^k c_{2k+p} w^k.
    """
    tot = mpmath.mpf(0)
    prev = None
    eps = mpmath.mpf(10) ** (-dps - 3)
    idx = range(len(coefs)) if parity is None else range(parity, len(coefs), 2)
    for i, k in enumerate(idx):
        t = (-1) ** i * _mpq(coefs[k]) * w ** i
        at = abs(t)
        if prev is not None and at > prev:
            break
        tot += t
        if at < eps * abs(tot):
            break
        prev = at
    return tot


def _asymptotic_ok(ax, dps):
    # smallest term of the expansions is about exp(-2 zeta)
    zeta = 2.0 / 3.0 * ax ** 1.5
    return 2 * zeta > (dps + 3) * math.log(10)


def _asym(x, dps, nterms):
    with mpmath.workdps(dps + 10):
        x = mpmath.mpf(x)
        if x > 0:
            z = x
            zeta = 2 * z ** mpmath.mpf(1.5) / 3
            w = z ** mpmath.mpf(-1.5)
            pref = mpmath.exp(-zeta) / (2 * mpmath.sqrt(mpmath.pi))
            ai = pref * z ** mpmath.mpf(-0.25) * _asym_sum(_coefs("alpha", nterms), w, dps)
            aip = -pref * z ** mpmath.mpf(0.25) * _asym_sum(_coefs("alphaPrime", nterms), w, dps)
            ai_int = pref * z ** mpmath.mpf(-0.75) * _asym_sum(_coefs("beta", nterms), w, dps)
            return ai, aip, ai_int
        z = -x
        zeta = 2 * z ** mpmath.mpf(1.5) / 3
        w = z ** -3  # alternating index pairs step by z^-3
        ph = zeta + mpmath.pi / 4
        s, c = mpmath.sin(ph), mpmath.cos(ph)
        rp = 1 / mpmath.sqrt(mpmath.pi)
        al = _coefs("alpha", nterms)
        alp = _coefs("alphaPrime", nterms)
        be = _coefs("beta", nterms)
        ai = rp * (s * _asym_sum(al, w, dps, 0) * z ** mpmath.mpf(-0.25)
                   - c * _asym_sum(al, w, dps, 1) * z ** mpmath.mpf(-1.75))
        aip = -rp * (c * _asym_sum(alp, w, dps, 0) * z ** mpmath.mpf(0.25)
                     + s * _asym_sum(alp, w, dps, 1) * z ** mpmath.mpf(-1.25))
        ai_int = 1 - rp * (c * _asym_sum(be, w, dps, 0) * z ** mpmath.mpf(-0.75)
                           + s * _asym_sum(be, w, dps, 1) * z ** mpmath.mpf(-2.25))
        return ai, aip, ai_int


def airy_triple_mp(x, dps: int = 30, policy: EvalPolicy = DEFAULT_POLICY):
    """(Ai(x), Ai'(x), AI(x)) as mpf values good to about ``dps`` digits."""
    ax = abs(float(x))
    if ax > MAX_ABS_X:
        raise AiryRangeError(f"|x| = {ax} beyond supported range {MAX_ABS_X}")
    if ax <= policy.series_cutoff_radius or not _asymptotic_ok(ax, dps):
        return _series(x, dps)
    return _asym(x, dps, policy.asymptotic_terms)


def ai_mp(x, dps: int = 30):
    return airy_triple_mp(x, dps)[0]


def ai_prime_mp(x, dps: int = 30):
    return airy_triple_mp(x, dps)[1]


def ai_int_mp(x, dps: int = 30):
    return airy_triple_mp(x, dps)[2]


def ai(x: float) -> float:
    return float(airy_triple_mp(x, 20)[0])


def ai_prime(x: float) -> float:
    return float(airy_triple_mp(x, 20)[1])


def ai_int(x: float) -> float:
    """AI(x) = int_x^oo Ai(t) dt."""
    return float(airy_triple_mp(x, 20)[2])


# ---------------------------------------------------------------------------
# zeros

ZEROS_OF_AI = "Ai"
ZEROS_OF_AI_PRIME = "AiPrime"
TABLE_SIZE = 200


def _T(t):
    t2 = t ** -2
    return t ** (mpmath.mpf(2) / 3) * (1 + t2 * (mpmath.mpf(5) / 48 + t2 * (-mpmath.mpf(5) / 36
                                           + t2 * (mpmath.mpf(77125) / 82944
                                                   - t2 * mpmath.mpf(108056875) / 6967296))))


def _U(t):
    t2 = t ** -2
    return t ** (mpmath.mpf(2) / 3) * (1 + t2 * (-mpmath.mpf(7) / 48 + t2 * (mpmath.mpf(35) / 288
                                           + t2 * (-mpmath.mpf(181223) / 207360
                                                   + t2 * mpmath.mpf(18683371) / 1244160))))


def zero_guess(kind: str, j: int) -> float:
    """Asymptotic estimate of |a_j| or |a'_j|."""
    with mpmath.workdps(30):
        if kind == ZEROS_OF_AI:
            return float(_T(3 * mpmath.pi * (4 * j - 1) / 8))
        if kind == ZEROS_OF_AI_PRIME:
            if j == 1:
                return 1.0188
            return float(_U(3 * mpmath.pi * (4 * j - 3) / 8))
    raise ValueError(f"unknown zero kind {kind!r}")


def _refine(kind, j, dps=30):
    y = mpmath.mpf(zero_guess(kind, j))
    with mpmath.workdps(dps + 5):
        for _ in range(60):
            a, ap, _i = airy_triple_mp(-y, dps + 5)
            if kind == ZEROS_OF_AI:
                # f(y) = Ai(-y); f' = -Ai'(-y)
                step = a / (-ap)
            else:
                # f(y) = Ai'(-y); f' = -Ai''(-y) = y Ai(-y)
                step = ap / (y * a)
            y -= step
            if abs(step) < mpmath.mpf(10) ** (-dps):
                break
        else:
            raise ConvergenceError(f"zero {kind} #{j} did not converge")
        # bracket check: the function changes sign around y
        h = mpmath.mpf(10) ** (-dps // 2)
        lo = airy_triple_mp(-(y - h), dps)[0 if kind == ZEROS_OF_AI else 1]
        hi = airy_triple_mp(-(y + h), dps)[0 if kind == ZEROS_OF_AI else 1]
        if lo * hi > 0:
            raise ConvergenceError(f"zero {kind} #{j}: no sign change at refined point")
    return +y


@dataclass
class ZeroEntry:
    j: int
    a: object       # |a_j|, mpf
    a_prime: object  # |a'_j|, mpf
    kappa: object
    r: object
    R: object


class AiryZeroTable:
    """Zeros of Ai and Ai' with residue data, built once and shared."""

    def __init__(self, size: int = TABLE_SIZE, dps: int = 45):
        self.size = size
        self.dps = dps
        self._entries: List[ZeroEntry] = []
        self._lock = threading.Lock()

    def _extend(self, n):
        # entries must not depend on the caller's working precision
        with self._lock, mpmath.workdps(self.dps):
            while len(self._entries) < n:
                j = len(self._entries) + 1
                a = _refine(ZEROS_OF_AI, j, self.dps)
                ap = _refine(ZEROS_OF_AI_PRIME, j, self.dps)
                ai_a, aip_a, AI_a = airy_triple_mp(-a, self.dps)
                ai_ap, _, AI_ap = airy_triple_mp(-ap, self.dps)
                kappa = AI_ap / (ap * ai_ap)
                r = AI_a / aip_a
                self._entries.append(ZeroEntry(j, a, ap, kappa, r, a * r))

    def entry(self, j: int) -> ZeroEntry:
        if not 1 <= j <= self.size:
            raise IndexError(f"zero index {j} outside 1..{self.size}")
        if j > len(self._entries):
            self._extend(j)
        return self._entries[j - 1]

    def entries(self, n: Optional[int] = None) -> List[ZeroEntry]:
        n = self.size if n is None else n
        self.entry(n)
        return self._entries[:n]


_TABLE = AiryZeroTable()


def zero_table() -> AiryZeroTable:
    return _TABLE


def zero_mp(kind: str, j: int):
    e = _TABLE.entry(j)
    if kind == ZEROS_OF_AI:
        return e.a
    if kind == ZEROS_OF_AI_PRIME:
        return e.a_prime
    raise ValueError(f"unknown zero kind {kind!r}")


def zero(kind: str, j: int) -> float:
    """|a_j| (kind 'Ai') or |a'_j| (kind 'AiPrime')."""
    return float(zero_mp(kind, j))


def residue_mp(kind: str, j: int):
    e = _TABLE.entry(j)
    return {"kappa": e.kappa, "r": e.r, "R": e.R}[kind]


def residue(kind: str, j: int) -> float:
    """kappa_j = AI(a'_j)/(|a'_j| Ai(a'_j)), r_j = AI(a_j)/Ai'(a_j), R_j = |a_j| r_j."""
    return float(residue_mp(kind, j))


def write_zero_table_csv(path, n: int = TABLE_SIZE):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["j", "a_j", "a_prime_j", "kappa_j", "r_j", "R_j"])
        for e in _TABLE.entries(n):
            w.writerow([e.j] + [mpmath.nstr(v, 17) for v in (e.a, e.a_prime, e.kappa, e.r, e.R)])


# ---------------------------------------------------------------------------
# asymptotic expansions of Airy ratios

def _ratio_expansions():
    K, D, L, Q, W, Dp, Lp = seq.K, seq.D, seq.L, seq.Q, seq.W, seq.Dplus, seq.Lplus

    def r_ex(x):
        a, ap, _ = airy_triple_mp(x, 40)
        return ap / a

    def r_br(x):
        a, ap, _ = airy_triple_mp(x, 40)
        return -a / ap

    def r_bm(x):
        _, ap, i = airy_triple_mp(x, 40)
        return -i / ap

    def r_me(x):
        a, _, i = airy_triple_mp(x, 40)
        return i / a

    def r_dm(x):
        return r_me(x) ** 2

    def r_brp(x):
        a, ap, _ = airy_triple_mp(x, 40)
        return 2 * a / (mpmath.sqrt(x) * a - ap)

    def r_bmp(x):
        a, ap, i = airy_triple_mp(x, 40)
        return (a + mpmath.sqrt(x) * i) / (a - ap / mpmath.sqrt(x)) / x

    def r_ex2(x):
        a, ap, _ = airy_triple_mp(x, 40)
        return 2 * (ap / a) ** 2 - 2 * x

    return {
        # name: (direct evaluator, coefficient k -> value, exponent offset)
        "excursion_log_derivative": (r_ex, lambda k: 2 * K(k), mpmath.mpf(0.5)),
        "bridge_ratio": (r_br, D, mpmath.mpf(-0.5)),
        "motion_ratio": (r_bm, L, mpmath.mpf(-1)),
        "meander_ratio": (r_me, Q, mpmath.mpf(-0.5)),
        "double_meander_ratio": (r_dm, W, mpmath.mpf(-1)),
        "bridge_plus_ratio": (r_brp, Dp, mpmath.mpf(-0.5)),
        "motion_plus_ratio": (r_bmp, Lp, mpmath.mpf(-1)),
        "excursion_second_derivative": (r_ex2, lambda k: (6 * k - 2) * K(k), mpmath.mpf(-0.5)),
    }


def log_derivative_expansion_check(n_terms: int = 4, x: float = 40.0):
    """Compare truncated asymptotic series of Airy ratios with direct values.

    Each series is sum_k (-1)^k c_k x^(offset - 3k/2); the truncation error
    must be below the first omitted term.
    """
    if n_terms > 8:
        raise ValueError("n_terms must be <= 8")
    out = []
    with mpmath.workdps(40):
        X = mpmath.mpf(x)
        for name, (direct_fn, coef, off) in _ratio_expansions().items():
            terms = [(-1) ** k * _mpq(Fraction(coef(k))) * X ** (off - mpmath.mpf(3 * k) / 2)
                     for k in range(n_terms + 1)]
            series = sum(terms[:n_terms])
            direct = direct_fn(X)
            err = abs(direct - series)
            bound = abs(terms[n_terms])
            out.append({"name": name, "x": float(x), "n_terms": n_terms,
                        "direct": float(direct), "series": float(series),
                        "error": float(err), "bound": float(bound), "pass": bool(err < bound)})
    return out


# ---------------------------------------------------------------------------
# root zeta functions

LAMBDA = "Lambda"
LAMBDA_TILDE = "LambdaTilde"


def _maclaurin_coefs(n, dps):
    with mpmath.workdps(dps):
        a = [_ai0(), _aip0(), mpmath.mpf(0)]
        for k in range(3, n + 2):
            a.append(a[k - 3] / (k * (k - 1)))
        return a


def _series_div(num, den, n):
    out = []
    for k in range(n):
        s = num[k] - sum(den[i] * out[k - i] for i in range(1, k + 1))
        out.append(s / den[0])
    return out


def _taylor_route(which, s, dps=40):
    with mpmath.workdps(dps):
        a = _maclaurin_coefs(s + 2, dps)
        ai = a[:s + 1]
        aip = [(k + 1) * a[k + 1] for k in range(s + 1)]
        if which == LAMBDA:
            k = s - 1
            return (-1) ** k * _series_div(aip, ai, k + 1)[k]
        m = s - 2
        return (-1) ** (m + 1) * _series_div(ai, aip, m + 1)[m]


def root_zeta_sum(which: str, s, n_zeros: int = TABLE_SIZE, dps: int = 30):
    """Zero-sum route: explicit zeros up to n_zeros plus an asymptotic tail.

    Works for any real s > 3/2 (the sum converges for s > 3/2).
    """
    kind = ZEROS_OF_AI if which == LAMBDA else ZEROS_OF_AI_PRIME
    with mpmath.workdps(dps):
        s = mpmath.mpf(s)
        head = mpmath.fsum(zero_mp(kind, j) ** -s for j in range(1, n_zeros + 1))
        # leading behaviour c (j - shift)^(-2s/3) summed exactly as a Hurwitz
        # zeta; the remainder decays like j^(-2s/3 - 2) and sums quickly
        shift = mpmath.mpf(1) / 4 if which == LAMBDA else mpmath.mpf(3) / 4
        fz = _T if which == LAMBDA else _U
        c = (3 * mpmath.pi / 2) ** (-2 * s / 3)
        f = lambda j: fz(3 * mpmath.pi * (j - shift) / 2) ** -s - c * (j - shift) ** (-2 * s / 3)
        lead = c * mpmath.zeta(2 * s / 3, n_zeros + 1 - shift)
        tail = mpmath.nsum(f, [n_zeros + 1, mpmath.inf], method="euler-maclaurin")
        return head + lead + tail


def root_zeta(which: str, s: int, tol: float = 1e-8) -> float:
    """Lambda(s) = sum |a_j|^-s or LambdaTilde(s) = sum |a'_j|^-s, integer s >= 2.

    Computed from Taylor coefficients of Ai'/Ai (resp. Ai/Ai') at 0 and
    checked against the direct zero sum.
    """
    if which not in (LAMBDA, LAMBDA_TILDE):
        raise ValueError(f"unknown root zeta {which!r}")
    if int(s) != s or s < 2:
        raise ValueError("s must be an integer >= 2")
    s = int(s)
    taylor = _taylor_route(which, s)
    direct = root_zeta_sum(which, s)
    if abs(taylor - direct) > tol * abs(taylor):
        raise ConvergenceError(f"{which}({s}): routes disagree ({taylor} vs {direct})")
    return float(taylor)
