"""Verification suites shared by the command line and the acceptance tests."""
from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional

import mpmath

from . import airy, distributions as dist, graphs, moments as mom, reference as ref
from . import sequences as seq, transforms as tr


@dataclass
class Case:
    id: str
    inputs: dict
    expected: object
    actual: object
    tolerance: Optional[float]
    ok: bool


@dataclass
class VerificationReport:
    suite: str
    cases: List[Case] = field(default_factory=list)
    config: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def summary(self) -> dict:
        n_ok = sum(c.ok for c in self.cases)
        return {"total": len(self.cases), "passed": n_ok, "failed": len(self.cases) - n_ok}

    def to_dict(self) -> dict:
        return {"suite": self.suite, "config": self.config, "summary": self.summary(),
                "seconds": round(self.seconds, 3), "cases": [_jsonable(asdict(c)) for c in self.cases]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return x if math.isfinite(x) else str(x)
    try:
        return float(x)
    except (TypeError, ValueError):
        return str(x)


def _exact(cid, inputs, expected, actual):
    return Case(cid, inputs, str(expected), str(actual), None, expected == actual)


def _close(cid, inputs, expected, actual, tol, relative=False):
    scale = max(abs(expected), 1e-300) if relative else 1.0
    ok = math.isfinite(actual) and abs(actual - expected) <= tol * scale
    return Case(cid, inputs, expected, actual, tol, bool(ok))


# ---------------------------------------------------------------------------
# exact tables

def table_cases() -> List[Case]:
    out = []
    for name, vals in ref.SEQUENCES.items():
        for n, v in vals.items():
            out.append(_exact(f"sequence_{name}", {"n": n}, Fraction(v), seq.sequence(name, n)))
    for kind, vals in ref.MOMENTS.items():
        for n, v in enumerate(vals):
            out.append(_exact(f"moment_{kind}", {"n": n}, v, mom.moment(kind, n)))
    for name, t in ref.JOINT.items():
        for k in range(4):
            for l in range(4):
                out.append(_exact(f"joint_{name}", {"k": k, "l": l}, Fraction(t[k][l]), seq.joint_table(name, k, l)))
    for kind, t in ref.JOINT_MOMENTS.items():
        for k in range(4):
            for l in range(4):
                out.append(_exact(f"joint_moment_{kind}", {"k": k, "l": l}, t[k][l], mom.joint_moment(kind, k, l)))
    for n, v in enumerate(ref.AIRY_CONSTANT_MOMENTS):
        out.append(_exact("airy_constant_moment", {"n": n}, v, mom.scaled_moment("A", n)))
    for n, v in enumerate(ref.CIFARELLI_M):
        out.append(_exact("bridge_m_n", {"n": n}, v, mom.moment("Br", n) * mom.pow2(Fraction(3 * n, 2))))
    for k, v in ref.RHO.items():
        out.append(_exact("wright_rho", {"k": k}, v, mom.wright_rho(k)))
    return out


def first_two_moment_cases() -> List[Case]:
    out = []
    for kind, (m1, m2, ratio) in ref.FIRST_TWO.items():
        e1 = float(mom.moment(kind, 1))
        out.append(_close(f"mean_{kind}", {}, m1, e1, 1e-9))
        out.append(_exact(f"second_moment_{kind}", {}, m2, mom.moment(kind, 2).as_fraction()))
        r = float(mom.moment_ratio(kind))
        out.append(_close(f"moment_ratio_{kind}", {}, ratio, round(r, 5), 1e-12))
    return out


def asymptotic_cases(ns=(50, 100, 200)) -> List[Case]:
    out = []
    for name in mom.ASYMPTOTIC_IDS:
        errs = [abs(float(mom.asymptotic_ratio(name, n)) - 1) for n in ns]
        ok = all(a > b for a, b in zip(errs, errs[1:]))
        out.append(Case(f"asymptotic_{name}", {"n": list(ns)}, "strictly decreasing", errs, None, ok))
    return out


def identity_cases(n_max: int = 50) -> List[Case]:
    out = []
    for iid in seq.identity_ids():
        res = seq.verify_identity(iid, n_max)
        bad = [r.n for r in res if not r.ok]
        out.append(Case(f"identity_{iid}", {"n_max": n_max}, "all equal", bad or "all equal", None, not bad))
    return out


# ---------------------------------------------------------------------------
# Airy

def airy_cases(n_zeros: int = 50) -> List[Case]:
    from .symconst import SymbolicConstant, gamma_third
    out = []
    ai0 = SymbolicConstant.monomial(1, b=-4) / gamma_third(Fraction(2, 3))
    aip0 = -SymbolicConstant.monomial(1, b=-2) / gamma_third(Fraction(1, 3))
    out.append(_close("ai_at_0", {}, float(ai0), airy.ai(0.0), 1e-12))
    out.append(_close("ai_prime_at_0", {}, float(aip0), airy.ai_prime(0.0), 1e-12))
    out.append(_close("ai_integral_at_0", {}, 1 / 3, airy.ai_int(0.0), 1e-13))
    worst = 0.0
    interlaced = True
    prev = 0.0
    for j in range(1, n_zeros + 1):
        a = airy.zero_mp(airy.ZEROS_OF_AI, j)
        ap = airy.zero_mp(airy.ZEROS_OF_AI_PRIME, j)
        with mpmath.workdps(40):
            worst = max(worst, float(abs(mpmath.airyai(-a))), float(abs(mpmath.airyai(-ap, 1))))
        interlaced &= prev < ap < a
        prev = a
    out.append(Case("zero_residuals", {"n": n_zeros}, 0.0, worst, 1e-12, worst < 1e-12))
    out.append(Case("zero_interlacing", {"n": n_zeros}, True, interlaced, None, interlaced))
    out.append(_close("root_zeta_tilde_3", {}, 1.0, airy.root_zeta(airy.LAMBDA_TILDE, 3), 1e-9))
    return out


# ---------------------------------------------------------------------------
# distributions

SERIES_KINDS = ("Ex", "Br", "Bm", "Me", "Dm")
TAIL_POINTS = {"Ex": (1.5, 2.0), "Br": (1.5, 2.0), "Bm": (3.0, 4.0), "Me": (3.0, 4.0), "Dm": (3.0, 4.0)}


def distribution_cases() -> List[Case]:
    out = []
    for kind in SERIES_KINDS:
        m = dist.density_moments(kind, (0, 1, 2))
        out.append(_close(f"pdf_normalization_{kind}", {}, 1.0, m[0], 1e-7))
        out.append(_close(f"pdf_mean_{kind}", {}, float(mom.moment(kind, 1)), m[1], 1e-6, relative=True))
        out.append(_close(f"pdf_second_moment_{kind}", {}, float(mom.moment(kind, 2)), m[2], 1e-6, relative=True))
    for x in (0.3, 0.6, 1.0, 1.5):
        out.append(_close("excursion_cdf_two_routes", {"x": x}, dist.cdf("Ex", x),
                          dist.cdf("Ex", x, route="stable"), 1e-8))
    for kind in SERIES_KINDS:
        for x in TAIL_POINTS[kind]:
            full = dist.sf(kind, x)
            tt = dist.tail_terms(kind, "largeX", "sf", x)
            gap, last = abs(full - tt.value), abs(tt.terms[-1])
            out.append(Case(f"tail_sandwich_{kind}", {"x": x}, full, tt.value, last, gap <= last))
    return out


# ---------------------------------------------------------------------------
# transforms

def double_laplace_cases(tol: float = 1e-7) -> List[Case]:
    out = []
    for c in tr.double_laplace_report(tol=tol):
        inputs = {"x": c.x}
        if c.xi is not None:
            inputs["xi"] = c.xi
        if c.eta is not None:
            inputs["eta"] = c.eta
        out.append(Case(f"double_laplace_{c.id}", inputs, c.rhs, c.lhs, tol, c.ok))
    return out


def negative_moment_cases(tol: float = 1e-6) -> List[Case]:
    out = []
    for kind, s, rounded in ref.NEGATIVE:
        q = tr.neg_moment_quadrature(kind, float(s))
        if rounded is None:
            try:
                tr.neg_moment_closed_form(kind, s)
                closed_inf = False
            except tr.InfiniteMomentError:
                closed_inf = True
            ok = closed_inf and math.isinf(q)
            out.append(Case(f"negative_moment_{kind}", {"s": str(s)}, "inf", q, None, ok))
            continue
        cf = float(tr.neg_moment_closed_form(kind, s))
        c = _close(f"negative_moment_{kind}", {"s": str(s)}, cf, q, tol, relative=True)
        c.ok = c.ok and abs(cf - rounded) < 5e-4
        out.append(c)
    return out


def transform_cases(tol: float = 1e-7) -> List[Case]:
    out = []
    for kind in ("Ex", "Br", "Bm", "Me", "Dm"):
        for t in (0.2, 1.0, 4.0, 10.0):
            out.append(_close(f"psi_two_routes_{kind}", {"t": t}, tr.psi_moments(kind, t),
                              tr.psi_spectral(kind, t), 1e-9))
    for kind in ("BrPlus", "BmPlus"):
        for t in (1.0, 3.0):
            out.append(_close(f"psi_two_routes_{kind}", {"t": t}, tr.psi_moments(kind, t),
                              tr.psi_route(kind, t, "kernel"), 1e-9))
    out += double_laplace_cases(tol)
    for s in (0.25, -0.75):
        m = tr.mellin_airy_check(s)
        out.append(Case(m.id, {"s": s}, m.rhs, m.lhs, 1e-6, m.ok))
    out += negative_moment_cases()
    return out


# ---------------------------------------------------------------------------
# graphs

def graph_cases() -> List[Case]:
    out = []
    for n in range(1, 7):
        bf = graphs.brute_force_connected(n)
        rec = [graphs.count_connected(n, q) for q in range(len(bf))]
        out.append(Case("connected_brute_force", {"n": n}, bf, rec, None, bf == rec))
    for n in range(1, 13):
        out.append(_exact("cayley", {"n": n}, n ** (n - 2) if n > 1 else 1, graphs.count_connected(n, n - 1)))
    tot = graphs.total_from_connected(10)
    for n, row in tot.items():
        exp = [comb(n * (n - 1) // 2, q) for q in range(len(row))]
        out.append(Case("graphs_from_connected", {"n": n}, "binomial row", "match" if row == exp else row,
                        None, row == exp))
    sp = graphs.spencer_bridge_check(50)
    out.append(Case("spencer_bridge", {"k_max": 50}, [], sp.failures, None, sp.ok))
    for k in (0, 1, 2):
        ns = (10, 20, 30, 40)
        out.append(Case("wright_trend", {"k": k, "n": list(ns)}, "monotone toward 1",
                        [graphs.wright_ratio(k, n) for n in ns], None, graphs.wright_trend_monotone(k, ns)))
    return out


# ---------------------------------------------------------------------------
# Monte Carlo

def mc_cases(cfg=None) -> List[Case]:
    from . import montecarlo as mc
    cfg = cfg or mc.PathConfig()
    s = mc.simulate(cfg, extras=True)
    out = []
    for group in (mc.moment_checks(cfg, s), mc.stopped_time_checks(cfg, s), mc.representation_checks(cfg, s)):
        for r in group:
            out.append(Case(r.id, {"se": r.se}, r.expected, r.estimate, 3 * r.se if r.se else None, bool(r.ok)))
    return out


SUITES: Dict[str, Callable[..., List[Case]]] = {
    "sequences": lambda **kw: table_cases() + first_two_moment_cases() + asymptotic_cases(),
    "identities": lambda **kw: identity_cases(),
    "airy": lambda **kw: airy_cases(),
    "distributions": lambda **kw: distribution_cases(),
    "transforms": lambda **kw: transform_cases(kw.get("tol") or 1e-7),
    "graphs": lambda **kw: graph_cases(),
    "mc": lambda **kw: mc_cases(kw.get("mc_config")),
}


def run_suite(name: str, **kw) -> VerificationReport:
    names = list(SUITES) if name == "all" else [name]
    rep = VerificationReport(name, config={k: str(v) for k, v in kw.items() if v is not None})
    t0 = time.perf_counter()
    for n in names:
        rep.cases += SUITES[n](**kw)
    rep.seconds = time.perf_counter() - t0
    return rep
