"""Simulation of the seven areas from discretized Brownian paths.

One batch of Brownian paths on a uniform grid feeds every kind:

  Bm, BmPlus   |B|, B^+
  Br, BrPlus   b = B - t B(1), then |b|, b^+
  Ex           Vervaat: the cyclic shift of b at its minimum is an
               excursion, so its area is int b - min b
  Dm           int B - min B
  Me           rescaled path after the last zero g of B

Minima are sampled exactly between grid points (the minimum of a Brownian
bridge over one step has a closed-form inverse cdf), which removes the
O(sqrt(h)) bias of the grid minimum.  The last zero is located by exact
inverse cdf sampling of the last zero of the interpolating bridges.
"""
from __future__ import annotations

import hashlib
import json
import math
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
from scipy import special, stats

from . import sequences as seq
from .moments import AreaKind, area_kind, moment

KINDS = [AreaKind.Ex, AreaKind.Br, AreaKind.Bm, AreaKind.Me, AreaKind.Dm, AreaKind.BrPlus, AreaKind.BmPlus]
CHUNK = 512
N_BATCHES = 50
Z_DRAWS = 16


@dataclass(frozen=True)
class PathConfig:
    grid_points: int = 2 ** 14
    replications: int = 100_000
    seed: int = 20240601
    scheme: str = "gaussianIncrements"
    workers: int = 1

    def __post_init__(self):
        g = self.grid_points
        if g < 2 or g & (g - 1):
            raise ValueError("grid_points must be a power of two")
        if self.replications < N_BATCHES:
            raise ValueError(f"need at least {N_BATCHES} replications")
        if self.scheme != "gaussianIncrements":
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def digest(self) -> str:
        d = {k: v for k, v in asdict(self).items() if k != "workers"}
        return hashlib.sha256(json.dumps(d, sort_keys=True).encode()).hexdigest()


def _exact_min(B: np.ndarray, h: float, rng: np.random.Generator) -> np.ndarray:
    """Minimum over [0,1] of the Brownian paths interpolated between grid
    values by independent bridges."""
    gmin = B.min(axis=1)
    lo = np.minimum(B[:, :-1], B[:, 1:])
    # a bridge starting d above the grid minimum undercuts it with
    # probability below exp(-2 d^2 / h); d = 5 sqrt(h) leaves e^-50
    rows, cols = np.nonzero(lo < gmin[:, None] + 5.0 * math.sqrt(h))
    a, b = B[rows, cols], B[rows, cols + 1]
    u = rng.random(len(rows))
    m = 0.5 * (a + b - np.sqrt((a - b) ** 2 - 2.0 * h * np.log1p(-u)))
    out = gmin.copy()
    np.minimum.at(out, rows, m)
    return out


def _trapz(Y: np.ndarray, h: float) -> np.ndarray:
    return h * (Y.sum(axis=1) - 0.5 * (Y[:, 0] + Y[:, -1]))


def _bridge_hit_sf(t, x, y, h):
    """P(first zero of a bridge from x > 0 to -y <= 0 over [0, h] is after t)."""
    v = t * (h - t) / h
    sv = np.sqrt(v)
    m = x - (x + y) * t / h
    first = special.ndtr(m / sv)
    second = np.exp(2 * x * y / h + special.log_ndtr((-x + (x - y) * t / h) / sv))
    return first - second


_GL_X, _GL_W = np.polynomial.legendre.leggauss(8)
_GL_U, _GL_W = 0.5 * (_GL_X + 1.0), 0.5 * _GL_W


def _positive_part_mean(mu, sd):
    """E[N(mu, sd^2)^+]."""
    k = mu / sd
    return mu * special.ndtr(k) + sd * np.exp(-0.5 * k * k) / math.sqrt(2 * math.pi)


def _no_hit_area(a, b, h):
    """E[int_0^h X | X bridge from a > 0 to b > 0 stays positive]."""
    u = _GL_U[None, :]
    s = u * h
    sd = np.sqrt(s * (h - s) / h)
    a_, b_ = a[:, None], b[:, None]
    p = np.exp(-2 * a_ * b_ / h)
    direct = _positive_part_mean(a_ + (b_ - a_) * u, sd)
    mirror = _positive_part_mean(-a_ + (b_ + a_) * u, sd)
    return h * ((direct - p * mirror) / (1 - p) * _GL_W[None, :]).sum(axis=1)


def _bessel_bridge_area(x, d):
    """E[int_0^d R] for a 3-dimensional Bessel bridge from 0 to x over d."""
    u = _GL_U[None, :]
    mu = x[:, None] * u
    sd = np.sqrt(d[:, None] * u * (1 - u))
    k = mu / sd
    small = k < 1e-6
    ks = np.where(small, 1.0, k)
    g = np.where(small, 2 * math.sqrt(2 / math.pi),
                 math.sqrt(2 / math.pi) * np.exp(-0.5 * ks * ks) + (ks + 1 / ks) * special.erf(ks / math.sqrt(2)))
    return d * (sd * g * _GL_W[None, :]).sum(axis=1)


def _last_zero(B: np.ndarray, h: float, rng: np.random.Generator):
    """Last zero of the path interpolated by independent bridges.

    Returns (J, g, rows, cols): the step holding the zero, its time, and the
    same-sign steps that were close enough to zero to be tested.  A step
    whose end values have the same sign holds a zero with probability
    exp(-2ab/h); a sign change always does.  Inside the step, the last zero
    is the end time minus the first passage time of the time-reversed
    bridge, whose survival function is explicit; the reflection principle
    makes the conditioned same-sign case identical to the crossing case."""
    n = B.shape[1] - 1
    a, b = B[:, :-1], B[:, 1:]
    prod = a * b
    hit = prod <= 0
    rows, cols = np.nonzero((prod > 0) & (prod < 20 * h))
    u = rng.random(len(rows))
    sel = u < np.exp(-2 * prod[rows, cols] / h)
    hit[rows[sel], cols[sel]] = True
    J = n - 1 - np.argmax(hit[:, ::-1], axis=1)
    idx = np.arange(B.shape[0])
    x = np.abs(B[idx, J + 1])
    y = np.abs(B[idx, J])
    target = rng.random(len(J))  # survival level
    lo, hi = np.zeros_like(x), np.full_like(x, h)
    for _ in range(48):
        mid = 0.5 * (lo + hi)
        with np.errstate(over="ignore", invalid="ignore"):
            sf = _bridge_hit_sf(mid, x, y, h)
        above = sf > target
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    tau = 0.5 * (lo + hi)
    tau = np.where(x == 0, 0.0, tau)
    keep = ~sel
    return J, (J + 1) * h - tau, rows[keep], cols[keep]


def _meander_area(B: np.ndarray, h: float, rng: np.random.Generator) -> np.ndarray:
    """Area of the rescaled excursion straddling 1.

    The trapezoid rule is replaced by conditional expectations on the steps
    where the conditioning matters: the first step after g (a Bessel bridge
    from 0) and later steps near zero (bridges conditioned to avoid 0)."""
    n = B.shape[1] - 1
    J, g, rows, cols = _last_zero(B, h, rng)
    idx = np.arange(B.shape[0])
    A = np.abs(B)
    seg = 0.5 * h * (A[:, :-1] + A[:, 1:])
    suffix = np.cumsum(seg[:, ::-1], axis=1)[:, ::-1]
    after = np.where(J + 1 < n, suffix[idx, np.minimum(J + 1, n - 1)], 0.0)
    late = cols > J[rows]
    r, c = rows[late], cols[late]
    if len(r):
        fix = _no_hit_area(A[r, c], A[r, c + 1], h) - seg[r, c]
        after = after + np.bincount(r, weights=fix, minlength=len(after))
    first = _bessel_bridge_area(A[idx, J + 1], (J + 1) * h - g)
    return (first + after) / (1 - g) ** 1.5


def _chunk(cfg: PathConfig, ss: np.random.SeedSequence, size: int, extras: bool):
    rng = np.random.Generator(np.random.PCG64(ss))
    n = cfg.grid_points
    h = 1.0 / n
    dW = rng.standard_normal((size, n))
    dW *= math.sqrt(h)
    B = np.empty((size, n + 1))
    B[:, 0] = 0.0
    np.cumsum(dW, axis=1, out=B[:, 1:])
    del dW
    t = np.linspace(0.0, 1.0, n + 1)
    out = {}
    out[AreaKind.Bm] = _trapz(np.abs(B), h)
    out[AreaKind.BmPlus] = _trapz(np.maximum(B, 0.0), h)
    intB = _trapz(B, h)
    out[AreaKind.Dm] = intB - _exact_min(B, h, rng)
    out[AreaKind.Me] = _meander_area(B, h, rng)
    if extras:
        tau = np.argmin(B, axis=1) * h
        b0 = B - intB[:, None]
        i3, i8 = int(0.3 * n), int(0.8 * n)
        out["b0"] = np.stack([b0[:, i3], b0[:, i8]], axis=1)
        out["tau"] = tau
        del b0
    B -= t[None, :] * B[:, -1:]
    intb = _trapz(B, h)
    out[AreaKind.Br] = _trapz(np.abs(B), h)
    out[AreaKind.BrPlus] = _trapz(np.maximum(B, 0.0), h)
    out["BrMinus"] = _trapz(np.maximum(-B, 0.0), h)
    out[AreaKind.Ex] = intb - _exact_min(B, h, rng)
    if extras:
        out["maxY"] = -_exact_min(-B, h, rng) - intb
        i2, i7 = int(0.2 * n), int(0.7 * n)
        out["Y"] = np.stack([B[:, i2] - intb, B[:, i7] - intb], axis=1)
    return out


def simulate(cfg: PathConfig, extras: bool = False) -> Dict[object, np.ndarray]:
    """Area samples for all kinds (plus auxiliary statistics with extras)."""
    n_chunks = -(-cfg.replications // CHUNK)
    seqs = np.random.SeedSequence(cfg.seed).spawn(n_chunks)
    sizes = [min(CHUNK, cfg.replications - i * CHUNK) for i in range(n_chunks)]
    jobs = list(zip(seqs, sizes))
    if cfg.workers > 1:
        with ThreadPoolExecutor(cfg.workers) as ex:
            parts = list(ex.map(lambda j: _chunk(cfg, j[0], j[1], extras), jobs))
    else:
        parts = [_chunk(cfg, s, m, extras) for s, m in jobs]
    return {k: np.concatenate([p[k] for p in parts]) for k in parts[0]}


def sample_area(kind, cfg: PathConfig) -> np.ndarray:
    return simulate(cfg)[area_kind(kind)]


def batch_se(x: np.ndarray, n_batches: int = N_BATCHES) -> float:
    """Standard error of the mean of x from batch means."""
    m = len(x) // n_batches
    means = x[: m * n_batches].reshape(n_batches, m).mean(axis=1)
    return float(means.std(ddof=1) / math.sqrt(n_batches))


@dataclass
class MomentEstimate:
    order: int
    estimate: float
    se: float
    exact: float

    @property
    def z(self) -> float:
        return (self.estimate - self.exact) / self.se

    @property
    def ok(self) -> bool:
        return abs(self.z) <= 3.0


@dataclass
class AreaSampleSummary:
    kind: str
    count: int
    mean: float
    variance: float
    moments: List[MomentEstimate]
    cdf_grid: List[float]
    cdf: List[float]
    tail_levels: List[float]
    tail_exceedance: List[float]


def summarize(kind, x: np.ndarray, orders: Sequence[int] = (1, 2, 3)) -> AreaSampleSummary:
    kind = area_kind(kind)
    ms = []
    for k in orders:
        xk = x ** k
        ms.append(MomentEstimate(k, float(xk.mean()), batch_se(xk), float(moment(kind, k))))
    grid = np.quantile(x, np.linspace(0.05, 0.95, 19))
    ecdf = [float(np.mean(x <= g)) for g in grid]
    levels = [float(np.mean(x) + c * np.std(x)) for c in (2, 3, 4)]
    exceed = [float(np.mean(x > v)) for v in levels]
    return AreaSampleSummary(kind.value, len(x), float(x.mean()), float(x.var(ddof=1)), ms,
                             [float(g) for g in grid], ecdf, levels, exceed)


def summary_json(summaries: Iterable[AreaSampleSummary], cfg: PathConfig) -> str:
    return json.dumps({"config": asdict(cfg), "config_hash": cfg.digest(),
                       "summaries": [asdict(s) for s in summaries]}, indent=2, sort_keys=True)


_MAGIC = b"BAREA001"


def write_samples(path, samples: np.ndarray, cfg: PathConfig):
    """Raw samples: magic, 32-byte config hash, count (u64), float64 LE."""
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(bytes.fromhex(cfg.digest()))
        fh.write(struct.pack("<Q", len(samples)))
        fh.write(np.asarray(samples, dtype="<f8").tobytes())


def read_samples(path):
    with open(path, "rb") as fh:
        if fh.read(8) != _MAGIC:
            raise ValueError("not a sample stream")
        digest = fh.read(32).hex()
        (n,) = struct.unpack("<Q", fh.read(8))
        data = np.frombuffer(fh.read(8 * n), dtype="<f8")
    return digest, data


# ---------------------------------------------------------------------------
# checks

@dataclass
class CheckResult:
    id: str
    estimate: float
    expected: float
    se: float
    ok: bool
    note: str = ""


def _mean_check(cid, x, expected, note=""):
    est, se = float(np.mean(x)), batch_se(x)
    return CheckResult(cid, est, float(expected), se, abs(est - expected) <= 3 * se, note)


def representation_checks(cfg: PathConfig, samples: Optional[dict] = None) -> List[CheckResult]:
    s = samples if samples is not None else simulate(cfg, extras=True)
    out = []
    Y = s["Y"]
    out.append(_mean_check("cov_Y_0.2_0.7", Y[:, 0] * Y[:, 1], -1 / 24, "zero-mean process"))
    b0 = s["b0"]
    st = (0.3, 0.8)
    exp_b0 = 1 / 3 - max(st) + 0.5 * (st[0] ** 2 + st[1] ** 2)
    out.append(_mean_check("cov_centered_motion_0.3_0.8", b0[:, 0] * b0[:, 1], exp_b0))
    # max-of-Y route against the Vervaat route on disjoint halves of the paths
    half = len(s["maxY"]) // 2
    ks = stats.ks_2samp(s[AreaKind.Ex][:half], s["maxY"][half:])
    out.append(CheckResult("excursion_area_vs_max_Y", float(ks.statistic), 0.0, float(ks.pvalue),
                           bool(ks.pvalue > 1e-3), "two-sample KS statistic; se column holds the p-value"))
    arc = stats.kstest(s["tau"], lambda t: 2 / math.pi * np.arcsin(np.sqrt(np.clip(t, 0, 1))))
    out.append(CheckResult("argmin_arcsine", float(arc.statistic), 0.0, float(arc.pvalue),
                           bool(arc.pvalue > 1e-3), "KS statistic; se column holds the p-value"))
    split = np.max(np.abs(s[AreaKind.BrPlus] + s["BrMinus"] - s[AreaKind.Br]))
    out.append(CheckResult("bridge_positive_plus_negative", float(split), 0.0, 0.0, bool(split < 1e-12)))
    return out


_STOPPED = {
    # kind: (Gamma shape of Z, exact sequence n -> value)
    AreaKind.Bm: (1.0, seq.L),
    AreaKind.Dm: (1.0, seq.W),
    AreaKind.BmPlus: (1.0, seq.Lplus),
    AreaKind.Br: (0.5, seq.D),
    AreaKind.Me: (0.5, seq.Q),
    AreaKind.BrPlus: (0.5, seq.Dplus),
    AreaKind.Ex: (0.5, lambda n: (6 * n - 2) * seq.K(n)),
}


def stopped_time_checks(cfg: PathConfig, samples: Optional[dict] = None, n_max: int = 4) -> List[CheckResult]:
    """E (sqrt2 X(Z))^n / n! with X(Z) = Z^(3/2) X(1), Z ~ Gamma(shape)."""
    s = samples if samples is not None else simulate(cfg)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([cfg.seed, 27])))
    out = []
    for kind, (shape, exact) in _STOPPED.items():
        x = s[kind]
        # several independent Z per path tame the heavy tail of Z^(3n/2)
        z = rng.gamma(shape, 1.0, size=(len(x), Z_DRAWS))
        v = math.sqrt(2) * z ** 1.5 * x[:, None]
        for n in range(0, n_max + 1):
            y = (v ** n).mean(axis=1) / factorial(n)
            exp = float(Fraction(exact(n))) if n else 1.0
            if n == 0:
                out.append(CheckResult(f"stopped_{kind.value}_0", float(y.mean()), 1.0, 0.0, y.mean() == 1.0))
            else:
                out.append(_mean_check(f"stopped_{kind.value}_{n}", y, exp))
    return out


def moment_checks(cfg: PathConfig, samples: Optional[dict] = None) -> List[CheckResult]:
    s = samples if samples is not None else simulate(cfg)
    out = []
    for kind in KINDS:
        for m in summarize(kind, s[kind]).moments:
            out.append(CheckResult(f"moment_{kind.value}_{m.order}", m.estimate, m.exact, m.se, m.ok))
    return out
