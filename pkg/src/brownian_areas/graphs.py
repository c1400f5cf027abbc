"""Connected labeled graphs C(n, q) and Wright's asymptotic constants."""
from __future__ import annotations

import csv
import itertools
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Sequence

import mpmath

from .moments import AreaKind, moment, wright_rho

N_MAX = 40


def _edges(n: int) -> int:
    return n * (n - 1) // 2


class _Table:
    """Rows C(n, 0..qcap) for n <= N_MAX, filled by one writer."""

    def __init__(self):
        self.qcap = -1
        self.rows: Dict[int, List[int]] = {}
        self.lock = threading.Lock()

    def ensure(self, qcap: int):
        if qcap <= self.qcap:
            return
        with self.lock:
            if qcap <= self.qcap:
                return
            # G(n, .) truncated at qcap
            G = {n: [comb(_edges(n), q) for q in range(qcap + 1)] for n in range(N_MAX + 1)}
            rows = {}
            for n in range(1, N_MAX + 1):
                row = G[n][:]
                for m in range(1, n):
                    cm, gr, w = rows[m], G[n - m], comb(n - 1, m - 1)
                    for j in range(m - 1, min(_edges(m), qcap) + 1):
                        c = cm[j]
                        if not c:
                            continue
                        cw = c * w
                        for q in range(j, qcap + 1):
                            g = gr[q - j]
                            if g == 0 and q - j > _edges(n - m):
                                break
                            row[q] -= cw * g
                rows[n] = row
            self.rows, self.qcap = rows, qcap


_TABLE = _Table()


def count_connected(n: int, q: int) -> int:
    """Number of connected labeled graphs on n vertices with q edges."""
    if not 1 <= n <= N_MAX:
        raise ValueError(f"n must lie in 1..{N_MAX}")
    if not 0 <= q <= _edges(n):
        raise ValueError(f"q must lie in 0..{_edges(n)}")
    if q < n - 1:
        return 0
    _TABLE.ensure(max(q, 2 * N_MAX))
    return _TABLE.rows[n][q]


def brute_force_connected(n: int) -> List[int]:
    """Counts by q from all edge subsets of K_n (small n only)."""
    if n > 6:
        raise ValueError("brute force is limited to n <= 6")
    edges = list(itertools.combinations(range(n), 2))
    out = [0] * (len(edges) + 1)
    for mask in range(1 << len(edges)):
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps, q = n, 0
        for i, (a, b) in enumerate(edges):
            if mask >> i & 1:
                q += 1
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    comps -= 1
        if comps == 1:
            out[q] += 1
    return out


def total_from_connected(n_max: int) -> Dict[int, List[int]]:
    """All-graph counts rebuilt from connected counts by the exponential
    formula: sum_n G_n(x) z^n/n! = exp(sum_n C_n(x) z^n/n!)."""
    qcap = _edges(n_max)
    _TABLE.ensure(qcap)
    # a_n(x) = C_n(x)/n!, polynomials in x with Fraction coefficients
    a = {n: [Fraction(c, factorial(n)) for c in _TABLE.rows[n][:qcap + 1]] for n in range(1, n_max + 1)}
    # b = exp(a): n b_n = sum_k k a_k b_{n-k}
    b = {0: [Fraction(1)] + [Fraction(0)] * qcap}
    for n in range(1, n_max + 1):
        acc = [Fraction(0)] * (qcap + 1)
        for k in range(1, n + 1):
            ak, bnk = a[k], b[n - k]
            for i, x in enumerate(ak):
                if x:
                    for j in range(qcap + 1 - i):
                        if bnk[j]:
                            acc[i + j] += k * x * bnk[j]
        b[n] = [v / n for v in acc]
    out = {}
    for n in range(1, n_max + 1):
        row = [v * factorial(n) for v in b[n][:_edges(n) + 1]]
        assert all(v.denominator == 1 for v in row)
        out[n] = [int(v) for v in row]
    return out


def wright_ratio(k: int, n: int) -> float:
    """C(n, n+k) / (rho_k n^(n + (3k-1)/2))."""
    if k < -1:
        raise ValueError("k must be >= -1")
    if n + k > _edges(n) or n + k < 0:
        raise ValueError("n + k exceeds the edge bound")
    c = count_connected(n, n + k)
    with mpmath.workdps(40):
        logr = (mpmath.log(c) - mpmath.log(wright_rho(k).to_mpf(40))
                - (n + mpmath.mpf(3 * k - 1) / 2) * mpmath.log(n))
        return float(mpmath.exp(logr))


@dataclass
class SpencerReport:
    k_max: int
    failures: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def spencer_bridge_check(k_max: int = 50) -> SpencerReport:
    """Exact check of rho_{k-1} = E B_ex^k / k! for 1 <= k <= k_max."""
    if k_max > 50:
        raise ValueError("k_max is capped at 50")
    rep = SpencerReport(k_max)
    for k in range(1, k_max + 1):
        if moment(AreaKind.Ex, k) * Fraction(1, factorial(k)) != wright_rho(k - 1):
            rep.failures.append(k)
    return rep


def wright_rows(n_values: Sequence[int], k_values: Sequence[int]):
    """(n, k, C(n, n+k), ratio) rows."""
    rows = []
    for n in n_values:
        for k in k_values:
            if 0 <= n + k <= _edges(n) and n + k >= n - 1:
                rows.append((n, k, count_connected(n, n + k), wright_ratio(k, n)))
    return rows


def write_wright_csv(path, n_values: Sequence[int], k_values: Sequence[int]):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "k", "C", "ratio"])
        for n, k, c, r in wright_rows(n_values, k_values):
            w.writerow([n, k, c, repr(r)])


def wright_trend_monotone(k: int, n_values: Sequence[int] = (10, 20, 30, 40)) -> bool:
    """|ratio - 1| strictly decreasing and ratio - 1 of one sign."""
    r = [wright_ratio(k, n) - 1 for n in n_values]
    same_side = all(x > 0 for x in r) or all(x < 0 for x in r)
    return same_side and all(abs(b) < abs(a) for a, b in zip(r, r[1:]))
