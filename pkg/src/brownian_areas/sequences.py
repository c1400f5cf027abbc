"""Exact rational sequences behind the Brownian area moments.

Every sequence is defined by its own recursion and memoized.  Identities
between sequences are checked exactly by :func:`verify_identity`; failures are
returned as data rather than raised.
"""
from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, NamedTuple, Tuple

DEFAULT_CAP = 512

F = Fraction
HALF = F(1, 2)


class SequenceId(str, Enum):
    K = "K"
    Omega = "Omega"
    omega = "omega"
    omegaStar = "omegaStar"
    gamma = "gamma"
    sigma = "sigma"
    dW = "dW"
    cW = "cW"
    eW = "eW"
    alpha = "alpha"
    alphaPrime = "alphaPrime"
    betaAI = "betaAI"
    cPrime = "cPrime"
    dPrime = "dPrime"
    D = "D"
    C_cif = "C_cif"
    eBar = "eBar"
    Dstar = "Dstar"
    eBarStar = "eBarStar"
    L = "L"
    Lstar = "Lstar"
    Q = "Q"
    Qstar = "Qstar"
    W = "W"
    Wstar = "Wstar"
    Dplus = "Dplus"
    DplusStar = "DplusStar"
    Lplus = "Lplus"
    LplusStar = "LplusStar"
    rho = "rho"
    wBCM = "wBCM"


class JointTableId(str, Enum):
    DplusMinus = "DplusMinus"
    LplusMinus = "LplusMinus"


class IndexError_(IndexError):
    pass


class _Seq:
    """Lazily extended sequence x_start, x_start+1, ... with a fill lock."""

    def __init__(self, name: str, start: int, rule: Callable[[int], Fraction]):
        self.name = name
        self.start = start
        self.rule = rule
        self.values: List[Fraction] = []
        self.lock = threading.RLock()

    def __call__(self, n: int) -> Fraction:
        i = n - self.start
        if i < 0:
            raise IndexError_(f"{self.name}: index {n} below start {self.start}")
        vals = self.values
        if i < len(vals):
            return vals[i]
        with self.lock:
            while len(self.values) <= i:
                self.values.append(self.rule(self.start + len(self.values)))
        return self.values[i]


_G_cache: Dict[int, Fraction] = {0: F(1)}


def gamma_ratio(j: int) -> Fraction:
    """Gamma(3j + 1/2) / Gamma(j + 1/2) as an exact product of half-integers."""
    if j in _G_cache:
        return _G_cache[j]
    r = F(1)
    for i in range(j, 3 * j):
        r *= F(2 * i + 1, 2)
    _G_cache[j] = r
    return r


def _alpha(j):
    return gamma_ratio(j) / (36 ** j * factorial(j))


def _alpha_prime(j):
    return -F(6 * j + 1, 6 * j - 1) * alpha(j)


def _e(r):
    return 2 ** r * alpha(r)


def _c_prime(k):
    return gamma_ratio(k) / (54 ** k * factorial(k))


def _d_prime(k):
    return -F(6 * k + 1, 6 * k - 1) * c_prime(k)


def _beta(k):
    if k == 0:
        return F(1)
    return alpha(k) + F(3 * (2 * k - 1), 4) * beta(k - 1)


def _K(k):
    if k == 0:
        return -HALF
    s = F(3 * k - 4, 4) * K(k - 1)
    for j in range(1, k):
        s += K(j) * K(k - j)
    return s


def _Omega(k):
    if k == 0:
        return F(-1)
    s = F((3 * k - 4) * k) * Omega(k - 1)
    for j in range(1, k):
        s += comb(k, j) * Omega(j) * Omega(k - j)
    return s / 2


def _omega(k):
    return Omega(k) / factorial(k)


def _omega_star(k):
    if k == 0:
        return -HALF
    s = 2 * (3 * k - 4) * omega_star(k - 1)
    for j in range(1, k):
        s += omega_star(j) * omega_star(k - j)
    return F(s)


def _gamma(r):
    # Louchard's linear recursion
    if r == 0:
        return F(-1)
    s = F(12 * r, 6 * r - 1) * gamma_ratio(r)
    for j in range(1, r):
        s -= comb(r, j) * gamma_ratio(j) * gamma_seq(r - j)
    return s


def _sigma(k):
    if k == -1:
        return -HALF
    if k == 0:
        return F(1, 4)
    if k == 1:
        return F(5, 16)
    m = k - 1
    s = F(3 * (m + 1), 2) * sigma(m)
    for j in range(1, m):
        s += sigma(j) * sigma(m - j)
    return s


def _d(k):
    if k == 0:
        return F(1, 6)
    if k == 1:
        return F(5, 36)
    m = k - 1
    s = d_wright(m)
    for j in range(1, m):
        s += d_wright(j) * d_wright(m - j) / ((m + 1) * comb(m, j))
    return s


def _c(r):
    if r == 1:
        return F(5, 24)
    s = F(r * (3 * r - 3), 2) * c_wright(r - 1)
    for j in range(1, r - 1):
        s += F(3, 2) * j * (r - 1 - j) * c_wright(j) * c_wright(r - 1 - j)
    return s / r


def _D(n):
    if n == 0:
        return F(1)
    s = F(3 * n - 2, 4) * D(n - 1)
    t = F(0)
    for i in range(1, n):
        t += D(i) * D(n - i)
    return s - t / 2


def _C(n):
    # Cifarelli's form: sum C_k z^k = (sum a'_k z^k) / (sum b'_k z^k),
    # a'_k = (-3)^k c'_k, b'_k = (-3)^k d'_k, with b'_0 = 1
    s = F((-3) ** n) * c_prime(n)
    for k in range(1, n + 1):
        s -= F((-3) ** k) * d_prime(k) * C(n - k)
    return s


def _ebar(n):
    # Shepp's linear recursion
    s = gamma_ratio(n)
    for k in range(1, n + 1):
        s += ebar(n - k) * comb(n, k) * F(6 * k + 1, 6 * k - 1) * gamma_ratio(k)
    return s


def _L(n):
    if n == 0:
        return F(1)
    s = F(3 * n - 1, 2) * L(n - 1)
    for j in range(1, n):
        s -= D(n - j) * L(j)
    return s


def _Q(n):
    if n == 0:
        return F(1)
    s = F(3 * n - 2, 2) * Q(n - 1)
    for j in range(1, n + 1):
        s += 2 * K(j) * Q(n - j)
    return s


def _W(n):
    return sum((Q(j) * Q(n - j) for j in range(n + 1)), F(0))


def _Dplus(n):
    s = alpha(n)
    for k in range(1, n + 1):
        s += F(1, 6 * k - 1) * alpha(k) * Dplus(n - k)
    return s


def _Lplus(n):
    s = (alpha(n) + beta(n)) / 2
    for k in range(1, n + 1):
        s += F(1, 6 * k - 1) * alpha(k) * Lplus(n - k)
    return s


alpha = _Seq("alpha", 0, _alpha)
alpha_prime = _Seq("alphaPrime", 0, _alpha_prime)
e_wright = _Seq("eW", 0, _e)
c_prime = _Seq("cPrime", 0, _c_prime)
d_prime = _Seq("dPrime", 0, _d_prime)
beta = _Seq("betaAI", 0, _beta)
K = _Seq("K", 0, _K)
Omega = _Seq("Omega", 0, _Omega)
omega = _Seq("omega", 0, _omega)
omega_star = _Seq("omegaStar", 0, _omega_star)
gamma_seq = _Seq("gamma", 0, _gamma)
sigma = _Seq("sigma", -1, _sigma)
d_wright = _Seq("dW", 0, _d)
c_wright = _Seq("cW", 1, _c)
D = _Seq("D", 0, _D)
C = _Seq("C_cif", 0, _C)
ebar = _Seq("eBar", 0, _ebar)
D_star = _Seq("Dstar", 0, lambda n: 8 ** n * D(n))
ebar_star = _Seq("eBarStar", 0, lambda n: ebar(n) / 9 ** n)
L = _Seq("L", 0, _L)
L_star = _Seq("Lstar", 0, lambda n: 8 ** n * L(n))
Q = _Seq("Q", 0, _Q)
Q_star = _Seq("Qstar", 0, lambda n: 8 ** n * Q(n))
W = _Seq("W", 0, _W)
W_star = _Seq("Wstar", 0, lambda n: 8 ** n * W(n))
Dplus = _Seq("Dplus", 0, _Dplus)
Dplus_star = _Seq("DplusStar", 0, lambda n: 8 ** n * Dplus(n))
Lplus = _Seq("Lplus", 0, _Lplus)
Lplus_star = _Seq("LplusStar", 0, lambda n: 8 ** n * Lplus(n))

_RATIONAL = {
    SequenceId.K: K, SequenceId.Omega: Omega, SequenceId.omega: omega,
    SequenceId.omegaStar: omega_star, SequenceId.gamma: gamma_seq,
    SequenceId.sigma: sigma, SequenceId.dW: d_wright, SequenceId.cW: c_wright,
    SequenceId.eW: e_wright, SequenceId.alpha: alpha,
    SequenceId.alphaPrime: alpha_prime, SequenceId.betaAI: beta,
    SequenceId.cPrime: c_prime, SequenceId.dPrime: d_prime, SequenceId.D: D,
    SequenceId.C_cif: C, SequenceId.eBar: ebar, SequenceId.Dstar: D_star,
    SequenceId.eBarStar: ebar_star, SequenceId.L: L, SequenceId.Lstar: L_star,
    SequenceId.Q: Q, SequenceId.Qstar: Q_star, SequenceId.W: W,
    SequenceId.Wstar: W_star, SequenceId.Dplus: Dplus,
    SequenceId.DplusStar: Dplus_star, SequenceId.Lplus: Lplus,
    SequenceId.LplusStar: Lplus_star,
}


def start_index(sid) -> int:
    sid = SequenceId(sid)
    if sid in (SequenceId.sigma, SequenceId.rho):
        return -1
    if sid in (SequenceId.cW, SequenceId.wBCM):
        return 1
    return 0


def _check_index(sid: SequenceId, n: int, cap: int):
    if not isinstance(n, int):
        raise TypeError("index must be an int")
    lo = start_index(sid)
    if n < lo or n > cap:
        raise IndexError_(f"{sid.value}: index {n} outside [{lo}, {cap}]")


def sequence(sid, n: int, cap: int = DEFAULT_CAP):
    """Exact value of a named sequence.

    ``rho`` (Wright's constants) carries a sqrt(pi) factor for even k and is
    returned as a SymbolicConstant; ``wBCM`` contains e^(k/2) and is a float.
    Both delegate to :mod:`brownian_areas.moments`.
    """
    sid = SequenceId(sid)
    _check_index(sid, n, cap)
    if sid is SequenceId.rho:
        from . import moments
        return moments.wright_rho(n)
    if sid is SequenceId.wBCM:
        from . import moments
        return moments.wright_w(n)
    return _RATIONAL[sid](n)


# ---------------------------------------------------------------------------
# joint tables for positive/negative parts

_joint_cache: Dict[Tuple[str, int, int], Fraction] = {}
_joint_lock = threading.RLock()


def _joint_fill(tag: str, n: int):
    """Fill all entries with k + l <= n, in order of increasing total degree."""
    with _joint_lock:
        done = _joint_cache.get((tag, -1, -1), F(-1))
        for tot in range(int(done) + 1, n + 1):
            for k in range(tot + 1):
                l = tot - k
                if k == 0 and l == 0:
                    v = F(1)
                else:
                    v = F(0)
                    for j in range(1, k + 1):
                        v += K(j) * _joint_cache[(tag, k - j, l)]
                    for j in range(1, l + 1):
                        v += K(j) * _joint_cache[(tag, k, l - j)]
                    if tag == "LplusMinus":
                        if l == 0:
                            v += Q(k) / 2
                        if k == 0:
                            v += Q(l) / 2
                _joint_cache[(tag, k, l)] = v
            _joint_cache[(tag, -1, -1)] = F(tot)


def joint_table(tid, k: int, l: int, cap: int = DEFAULT_CAP) -> Fraction:
    """D±_{k,l} or L±_{k,l}."""
    tag = JointTableId(tid).value
    if k < 0 or l < 0 or k + l > cap:
        raise IndexError_(f"{tag}: ({k}, {l}) out of range")
    key = (tag, k, l)
    if key not in _joint_cache:
        _joint_fill(tag, k + l)
    return _joint_cache[key]


# ---------------------------------------------------------------------------
# formal power series helpers (coefficient lists of Fractions)

def conv(a: Callable[[int], Fraction], b: Callable[[int], Fraction], n: int) -> Fraction:
    return sum((a(i) * b(n - i) for i in range(n + 1)), F(0))


def _series_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    m = min(len(a), len(b))
    return [sum((a[i] * b[k - i] for i in range(k + 1)), F(0)) for k in range(m)]


def _series_inv(a: List[Fraction]) -> List[Fraction]:
    out = [1 / a[0]]
    for k in range(1, len(a)):
        s = sum((a[i] * out[k - i] for i in range(1, k + 1)), F(0))
        out.append(-s / a[0])
    return out


# Polynomials in n are held as their values on a lattice n0, n0+1, ..., n0+L-1.
# A polynomial of degree < L is determined by L values, so shifting by one
# needs only a single extrapolated point.

def _extrapolate(vals):
    L = len(vals)
    return sum(((-1) ** (L - 1 - j) * comb(L, j) * v for j, v in enumerate(vals)), F(0))


def _shifted(vals):
    """Values of p(n + 1) on the same lattice."""
    return vals[1:] + [_extrapolate(vals)]


def _solve_sum_shift(r, deg):
    """Values of the polynomial p with p(n) + p(n+1) = r(n), deg p = deg.

    p = (2 + Delta)^{-1} r, a finite sum because Delta^{deg+1} r = 0.
    """
    diffs = list(r[:deg + 1])
    p0 = F(0)
    for i in range(deg + 1):
        p0 += (-1) ** i * diffs[0] / 2 ** (i + 1)
        diffs = [diffs[j + 1] - diffs[j] for j in range(len(diffs) - 1)]
    out = [p0]
    for v in r[:-1]:
        out.append(v - out[-1])
    return out


class InsufficientDepth(ValueError):
    pass


_cf_best: List[Fraction] = []
_cf_lock = threading.Lock()


def continued_fraction_coefficients(depth: int, m: int) -> List[Fraction]:
    """First ``m`` power-series coefficients of T_0 for the continued fraction

        T_n = (6n + 2) z + 1 / T_{n+1}.

    Cutting the fraction off naively does not give a power series at z = 0
    (every level contributes at every order), so the tail T_depth is closed by
    its own asymptotic solution: the unique expansion T_n = sum tau_k(n) z^k
    with tau_0 = 1 and each tau_k a polynomial of degree k in n.  The
    ``depth`` explicit levels above the tail are then unrolled in exact series
    arithmetic.  The result does not depend on ``depth`` once depth >= m.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if depth < m:
        raise InsufficientDepth(f"depth {depth} cannot resolve {m} coefficients")
    if m == 0:
        return []
    if len(_cf_best) >= m:
        return list(_cf_best[:m])
    L = m + 1
    lattice = [depth + i for i in range(L)]
    c_vals = [F(6 * n + 2) for n in lattice]
    taus = [[F(1)] * L]
    shifted = [[F(1)] * L]
    for k in range(1, m):
        # sum_{i+j=k} tau_i(n) tau_j(n+1) = (6n+2) tau_{k-1}(n+1)
        rhs = [c_vals[t] * shifted[k - 1][t] for t in range(L)]
        for i in range(1, k):
            a, b = taus[i], shifted[k - i]
            rhs = [rhs[t] - a[t] * b[t] for t in range(L)]
        tk = _solve_sum_shift(rhs, k)
        taus.append(tk)
        shifted.append(_shifted(tk))
    T = [t[0] for t in taus]
    for n in range(depth - 1, -1, -1):
        T = _series_inv(T)
        if m > 1:
            T[1] += 6 * n + 2
    with _cf_lock:
        if len(T) > len(_cf_best):
            _cf_best[:] = T
    return T


# ---------------------------------------------------------------------------
# identity catalogue

class IdentityResult(NamedTuple):
    n: int
    ok: bool
    lhs: object
    rhs: object


def _sc(x):
    from .symconst import SymbolicConstant
    return SymbolicConstant.coerce(x)


def _rising(a: Fraction, k: int) -> Fraction:
    r = F(1)
    for i in range(k):
        r *= a + i
    return r


def _jc(j):
    return F(1, 6) if j == 0 else j * c_wright(j)


def _b_nguyen(r):
    if r == 0:
        return F(1)
    if r not in _b_cache:
        s = F(3 * r - 2, 2) * _b_nguyen(r - 1)
        for i in range(1, r):
            s -= _b_nguyen(i) * _b_nguyen(r - i) / 2
        _b_cache[r] = s
    return _b_cache[r]


_b_cache: Dict[int, Fraction] = {}


def _cf_check(n):
    # grow the cached expansion geometrically instead of once per n
    m = n + 1 if len(_cf_best) > n else max(n + 1, 2 * len(_cf_best), 8)
    return continued_fraction_coefficients(m, m)[n], -omega(n)


def _delta(n):
    return F(1 if n == 0 else 0)


def _even_pm(n, tid, value_even):
    tot = sum(((-1) ** (n - j) * joint_table(tid, j, n - j) for j in range(n + 1)), F(0))
    return tot, (value_even(n // 2) if n % 2 == 0 else F(0))


def _gauss_br(m):
    return F(factorial(6 * m), 2 ** (8 * m) * 3 ** m * factorial(3 * m) * factorial(m))


def _gauss_bm(m):
    return F(factorial(3 * m), 3 ** m * factorial(m))


def _moment_forms(name):
    def check(n):
        from . import moments
        from .symconst import SQRT_PI, gamma_half_integer, pow2
        M = moments.moment("Ex", n)
        if name == "excursion_gamma_form":
            lhs = M
            rhs = (pow2(F(-n, 2)) * F(1, 36 ** n) * 2 * SQRT_PI
                   / gamma_half_integer(F(3 * n - 1, 2)) * gamma_seq(n))
        elif name == "airy_constant_moments":
            lhs = moments.scaled_moment("A", n)
            rhs = 2 * SQRT_PI / gamma_half_integer(F(3 * n - 1, 2)) * Omega(n)
        elif name == "xi_moments_omegaStar":
            lhs = moments.scaled_moment("xi", n)
            rhs = (pow2(F(4 - 5 * n, 2)) * SQRT_PI * factorial(n)
                   / gamma_half_integer(F(3 * n - 1, 2)) * omega_star(n))
        elif name == "xi_moments_c":
            if n < 2:
                return F(0), F(0)
            lhs = moments.scaled_moment("xi", n)
            rhs = (pow2(F(4 - n, 2)) * SQRT_PI * factorial(n)
                   / gamma_half_integer(F(3 * (n - 1), 2)) * c_wright(n - 1))
        else:
            raise KeyError(name)
        return lhs, rhs
    return check


def _rho_forms(n):
    """Wright's constants via the sigma, d and c forms must coincide."""
    from . import moments
    from .symconst import SQRT_PI, gamma_half_integer, pow2, pow3
    k = n
    base = moments.wright_rho(k)
    alts = []
    if k >= 0:
        alts.append(pow2(F(-(5 * k + 1), 2)) * 3 ** (k + 1) * SQRT_PI * factorial(k)
                    / gamma_half_integer(F(3 * k, 2) + 1) * d_wright(k))
    if k >= 1:
        alts.append(pow2(F(1 - 5 * k, 2)) * pow3(k) * SQRT_PI * factorial(k - 1)
                    / gamma_half_integer(F(3 * k, 2)) * d_wright(k))
        alts.append(pow2(F(1 - 3 * k, 2)) * SQRT_PI / gamma_half_integer(F(3 * k, 2)) * c_wright(k))
    kk = k + 1  # shifted forms for rho_{kk-1}
    alts.append(pow2(F(4 - 7 * kk, 2)) * SQRT_PI / gamma_half_integer(F(3 * kk - 1, 2)) * omega_star(kk))
    ok = all(a == base for a in alts)
    return base, (base if ok else alts)


def _br_moment_nguyen(n):
    from . import moments
    from .symconst import SQRT_PI, gamma_half_integer, pow2
    lhs = moments.moment("Br", n)
    rhs = SQRT_PI * pow2(F(-3 * n, 2)) * factorial(n) / gamma_half_integer(F(3 * n + 1, 2)) * _b_nguyen(n)
    return lhs, rhs


def _dm_beta_convolution(n):
    from . import moments
    return moments.moment("Dm", n), moments.dm_moment_from_meander(n)


def _joint_gf(tid, n):
    """Coefficient check of the joint generating function at total degree n.

    For D±: sum D± (1 - sum_{k>=1} K_k (x^k + y^k)) = 1.
    For L±: -2 sum L± sum_{k>=0} K_k (x^k + y^k) = sum Q_k (x^k + y^k).
    Returns the list of failing (k, l) pairs, empty if all hold.
    """
    bad = []
    for k in range(n + 1):
        l = n - k
        T = lambda a, b: joint_table(tid, a, b)
        s = sum((K(j) * T(k - j, l) for j in range(1, k + 1)), F(0)) + \
            sum((K(j) * T(k, l - j) for j in range(1, l + 1)), F(0))
        if tid == "DplusMinus":
            lhs = T(k, l) - s
            rhs = F(1 if n == 0 else 0)
        else:
            lhs = -2 * (2 * K(0) * T(k, l) + s)
            rhs = (Q(k) if l == 0 else 0) + (Q(l) if k == 0 else 0)
        if lhs != rhs:
            bad.append((k, l))
    return bad


def _even_gf_check(n, gauss, scale):
    if n % 2:
        return F(0), F(0)
    m = n // 2
    if scale == "br":
        # g * (1 - 2 sum_{m>=1} K_{2m} x^{2m}) = 1
        lhs = gauss(m) - 2 * sum((K(2 * i) * gauss(m - i) for i in range(1, m + 1)), F(0))
        return lhs, _delta(m)
    # g * (-2 sum_{m>=0} K_{2m} x^{2m}) = sum Q_{2m} x^{2m}
    lhs = -2 * sum((K(2 * i) * gauss(m - i) for i in range(0, m + 1)), F(0))
    return lhs, Q(2 * m)


IDENTITIES: Dict[str, Tuple[int, Callable[[int], Tuple[object, object]]]] = {
    # excursion constants
    "K_from_Omega": (0, lambda n: (K(n), Omega(n) / (2 ** (n + 1) * factorial(n)))),
    "omega_from_K": (0, lambda n: (omega(n), 2 ** (n + 1) * K(n))),
    "omegaStar_from_K": (0, lambda n: (omega_star(n), 2 ** (3 * n) * K(n))),
    "omegaStar_from_omega": (0, lambda n: (omega_star(n), F(2) ** (2 * n - 1) * omega(n))),
    "gamma_from_Omega": (0, lambda n: (gamma_seq(n), 18 ** n * Omega(n))),
    "gamma_linear_full_sum": (0, lambda n: (gamma_seq(n), F(6 * n + 1, 6 * n - 1) * gamma_ratio(n)
                                            - sum((comb(n, j) * gamma_ratio(j) * gamma_seq(n - j)
                                                   for j in range(1, n + 1)), F(0)))),
    "excursion_gamma_form": (0, _moment_forms("excursion_gamma_form")),
    "airy_constant_moments": (0, _moment_forms("airy_constant_moments")),
    "xi_moments_omegaStar": (0, _moment_forms("xi_moments_omegaStar")),
    "xi_moments_c": (0, _moment_forms("xi_moments_c")),
    # Wright constants
    "sigma_alt_recursion": (-1, lambda k: (sigma(k + 1), F(3 * k + 2, 2) * sigma(k)
                                           + sum((sigma(j) * sigma(k - j) for j in range(0, k + 1)), F(0)))),
    "sigma_from_d": (0, lambda k: (sigma(k), F(3, 2) ** (k + 1) * factorial(k) * d_wright(k))),
    "c_from_d": (1, lambda k: (c_wright(k), F(3, 2) ** k * factorial(k - 1) * d_wright(k))),
    "c_full_recursion": (1, lambda r: (3 * r * c_wright(r), F(3 * r - 1, 2) * 3 * _jc(r - 1)
                                       + F(9, 2) * sum((_jc(j) * _jc(r - 1 - j) for j in range(r)), F(0)))),
    "sigma_from_c": (1, lambda k: (sigma(k), F(3, 2) * k * c_wright(k))),
    "rho_forms_agree": (0, _rho_forms),
    "sigma_from_K": (0, lambda k: (sigma(k - 1), 2 ** k * K(k))),
    "Omega_from_sigma": (0, lambda k: (Omega(k), 2 * factorial(k) * sigma(k - 1))),
    "omegaStar_from_sigma": (0, lambda k: (omega_star(k), 4 ** k * sigma(k - 1))),
    "omega_from_sigma": (0, lambda k: (omega(k), 2 * sigma(k - 1))),
    "Omega_from_c": (2, lambda k: (Omega(k), 3 * (k - 1) * factorial(k) * c_wright(k - 1))),
    "omegaStar_from_c": (2, lambda k: (omega_star(k), 2 ** (2 * k - 1) * 3 * (k - 1) * c_wright(k - 1))),
    "omega_from_c": (2, lambda k: (omega(k), 3 * (k - 1) * c_wright(k - 1))),
    "d_from_K": (1, lambda k: (d_wright(k - 1), F(4, 3) ** k * K(k) / factorial(k - 1))),
    "omega_from_d": (1, lambda k: (omega(k), 2 * F(3, 2) ** k * factorial(k - 1) * d_wright(k - 1))),
    # power series and linear recursions
    "c_from_e_linear": (1, lambda r: (c_wright(r), e_wright(r) - F(1, r) * sum(
        (j * c_wright(j) * e_wright(r - j) for j in range(1, r)), F(0)))),
    "e_closed_form": (0, lambda r: (e_wright(r), F(factorial(6 * r), 2 ** (5 * r) * 3 ** (2 * r)
                                                    * factorial(3 * r) * factorial(2 * r)))),
    "Omega_linear": (1, lambda r: (18 ** r * Omega(r), F(12 * r, 6 * r - 1) * gamma_ratio(r) - sum(
        (comb(r, j) * gamma_ratio(j) * 18 ** (r - j) * Omega(r - j) for j in range(1, r)), F(0)))),
    "K_linear": (1, lambda r: (K(r), F(6 * r + 1, 2 * (6 * r - 1)) * alpha(r) - sum(
        (alpha(j) * K(r - j) for j in range(1, r + 1)), F(0)))),
    "alpha_from_e": (0, lambda j: (alpha(j), e_wright(j) / 2 ** j)),
    "cPrime_from_e": (0, lambda k: (3 ** k * c_prime(k), e_wright(k))),
    "cPrime_from_alpha": (0, lambda k: (F(3, 2) ** k * c_prime(k), alpha(k))),
    "dPrime_from_alphaPrime": (0, lambda k: (F(3, 2) ** k * d_prime(k), alpha_prime(k))),
    "K_airy_ratio": (0, lambda n: (conv(lambda i: 2 * K(i), alpha, n), -alpha_prime(n))),
    "cPrime_hypergeometric": (0, lambda k: (c_prime(k), _rising(F(5, 6), k) * _rising(F(1, 6), k)
                                            / (factorial(k) * 2 ** k))),
    "dPrime_hypergeometric": (0, lambda k: (d_prime(k), _rising(F(7, 6), k) * _rising(F(-1, 6), k)
                                            / (factorial(k) * 2 ** k))),
    "K_quadratic_series": (0, lambda n: ((3 * (n - 1) - 1) * K(n - 1) if n >= 1 else F(0),
                                         _delta(n) - 4 * conv(K, K, n))),
    "continued_fraction": (0, _cf_check),
    "A_from_K_sigma": (0, lambda r: (2 ** r * K(r), sigma(r - 1))),
    # bridge
    "D_airy_ratio": (0, lambda n: (conv(D, alpha_prime, n), alpha(n))),
    "D_linear": (0, lambda n: (D(n), alpha(n) + sum((F(6 * i + 1, 6 * i - 1) * alpha(i) * D(n - i)
                                                     for i in range(1, n + 1)), F(0)))),
    "C_from_D": (0, lambda k: (C(k), (-2) ** k * D(k))),
    "eBar_from_D": (0, lambda n: (ebar(n), 36 ** n * factorial(n) * D(n))),
    "eBar_from_C": (0, lambda n: (ebar(n), (-18) ** n * factorial(n) * C(n))),
    "D_quadratic_series": (0, lambda n: (_delta(n) + (F(3 * (n - 1) + 1, 2) * D(n - 1) if n >= 1 else 0),
                                         conv(D, D, n))),
    "D_K_orthogonal": (1, lambda k: (conv(D, K, k), F(0))),
    "D_from_K": (1, lambda n: (D(n), 2 * sum((D(i) * K(n - i) for i in range(n)), F(0)))),
    "bridge_nguyen_B": (0, lambda r: (_b_nguyen(r), 2 ** r * D(r))),
    "bridge_nguyen_moment": (0, _br_moment_nguyen),
    "bridge_nguyen_AB": (1, lambda r: (sum((2 ** i * K(i) * _b_nguyen(r - i) for i in range(r + 1)), F(0)),
                                       F(0))),
    # motion
    "L_airy_ratio": (0, lambda n: (conv(L, alpha_prime, n), beta(n))),
    "L_linear": (0, lambda n: (L(n), beta(n) + sum((F(6 * j + 1, 6 * j - 1) * alpha(j) * L(n - j)
                                                    for j in range(1, n + 1)), F(0)))),
    "L_D_convolution": (1, lambda n: (F(3 * n - 1, 2) * L(n - 1),
                                      sum((D(n - j) * L(j) for j in range(1, n + 1)), F(0)))),
    # meander
    "Q_airy_ratio": (0, lambda n: (conv(Q, alpha, n), beta(n))),
    "Q_quadratic_series": (0, lambda n: ((F(3 * (n - 1) + 1, 2) * Q(n - 1) if n >= 1 else F(0)),
                                         -_delta(n) - 2 * conv(K, Q, n))),
    "Q_differential": (0, lambda n: ((3 * (n - 1) * Q(n - 1) + Q(n - 1) if n >= 1 else F(0))
                                     + 4 * conv(K, Q, n), -2 * _delta(n))),
    "Q_linear": (0, lambda n: (Q(n), beta(n) - sum((alpha(j) * Q(n - j) for j in range(1, n + 1)), F(0)))),
    "Q_from_K_L": (0, lambda n: (Q(n), -2 * conv(K, L, n))),
    "L_from_D_Q": (0, lambda n: (L(n), conv(D, Q, n))),
    # double meander
    "W_alpha_beta": (0, lambda n: (conv(lambda i: conv(alpha, alpha, i), W, n), conv(beta, beta, n))),
    "Dm_beta_convolution": (0, _dm_beta_convolution),
    # positive part of bridge
    "Dplus_airy_ratio": (0, lambda n: (conv(Dplus, lambda k: F(1, 1 - 6 * k) * alpha(k), n), alpha(n))),
    "Dplus_from_K_series": (0, lambda n: (Dplus(n) - 2 * conv(K, Dplus, n), 2 * _delta(n))),
    "Dplus_K_recursion": (1, lambda n: (Dplus(n), sum((K(k) * Dplus(n - k) for k in range(1, n + 1)), F(0)))),
    "Dplus_from_D": (0, lambda n: (Dplus(n), D(n) - sum((D(k) * Dplus(n - k) for k in range(1, n + 1)), F(0)) / 2)),
    "Dplus_D_series": (0, lambda n: (Dplus(n) + conv(D, Dplus, n), 2 * D(n))),
    # joint bridge
    "DplusMinus_generating_function": (0, lambda n: (_joint_gf("DplusMinus", n), [])),
    "DplusMinus_row_sums": (0, lambda n: (sum((joint_table("DplusMinus", k, n - k) for k in range(n + 1)), F(0)),
                                          D(n))),
    "DplusMinus_signed_sums": (0, lambda n: _even_pm(n, "DplusMinus", _gauss_br)),
    "DplusMinus_even_series": (0, lambda n: _even_gf_check(n, _gauss_br, "br")),
    "DplusMinus_boundary": (0, lambda n: (joint_table("DplusMinus", n, 0), Dplus(n))),
    # positive part of motion
    "Lplus_airy_ratio": (0, lambda n: (conv(Lplus, lambda k: alpha(k) + alpha_prime(k), n),
                                       alpha(n) + beta(n))),
    "alpha_sum_form": (0, lambda k: (alpha(k) + alpha_prime(k), F(2, 1 - 6 * k) * alpha(k))),
    # joint motion
    "LplusMinus_generating_function": (0, lambda n: (_joint_gf("LplusMinus", n), [])),
    "LplusMinus_row_sums": (0, lambda n: (sum((joint_table("LplusMinus", k, n - k) for k in range(n + 1)), F(0)),
                                          L(n))),
    "LplusMinus_signed_sums": (0, lambda n: _even_pm(n, "LplusMinus", _gauss_bm)),
    "LplusMinus_even_series": (0, lambda n: _even_gf_check(n, _gauss_bm, "bm")),
    "LplusMinus_boundary": (0, lambda n: (joint_table("LplusMinus", n, 0), Lplus(n))),
    # convolution catalogue
    "conv_alpha_K": (0, lambda n: (-2 * conv(alpha, K, n), alpha_prime(n))),
    "conv_alphaPrime_D": (0, lambda n: (conv(alpha_prime, D, n), alpha(n))),
    "conv_K_D": (0, lambda n: (-2 * conv(K, D, n), _delta(n))),
    "conv_alphaPrime_L": (0, lambda n: (conv(alpha_prime, L, n), beta(n))),
    "conv_alpha_Q": (0, lambda n: (conv(alpha, Q, n), beta(n))),
    "conv_K_L": (0, lambda n: (-2 * conv(K, L, n), Q(n))),
    "conv_D_Q": (0, lambda n: (conv(D, Q, n), L(n))),
    "conv_Q_Q": (0, lambda n: (conv(Q, Q, n), W(n))),
    "conv_alpha_alpha_W": (0, lambda n: (conv(lambda i: conv(alpha, alpha, i), W, n), conv(beta, beta, n))),
    "conv_alphasum_Dplus": (0, lambda n: (conv(lambda k: alpha(k) + alpha_prime(k), Dplus, n), 2 * alpha(n))),
    "conv_K_Dplus": (0, lambda n: (Dplus(n) - 2 * conv(K, Dplus, n), 2 * _delta(n))),
    "conv_D_Dplus": (0, lambda n: (Dplus(n) + conv(D, Dplus, n), 2 * D(n))),
    "conv_alphasum_Lplus": (0, lambda n: (conv(lambda k: alpha(k) + alpha_prime(k), Lplus, n),
                                          alpha(n) + beta(n))),
    "conv_Dplus_Q": (0, lambda n: (conv(Dplus, Q, n) + Dplus(n), 2 * Lplus(n))),
}


def identity_ids() -> List[str]:
    return list(IDENTITIES)


def verify_identity(iid: str, n_max: int, cap: int = DEFAULT_CAP) -> List[IdentityResult]:
    """Check an identity for all admissible n up to ``n_max``."""
    if n_max > cap:
        raise IndexError_(f"n_max {n_max} exceeds cap {cap}")
    start, fn = IDENTITIES[iid]
    out = []
    for n in range(start, n_max + 1):
        lhs, rhs = fn(n)
        out.append(IdentityResult(n, lhs == rhs, lhs, rhs))
    return out


def integer_sequences() -> Tuple[SequenceId, ...]:
    """Sequences whose values are integers (omegaStar from index 1)."""
    return (SequenceId.omegaStar, SequenceId.gamma, SequenceId.Dstar, SequenceId.eBarStar,
            SequenceId.Lstar, SequenceId.Qstar, SequenceId.Wstar, SequenceId.DplusStar,
            SequenceId.LplusStar, SequenceId.eBar)
