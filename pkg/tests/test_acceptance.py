"""Acceptance criteria 1-10.

Each criterion prints one ``PASS``/``FAIL`` line; under pytest the lines are
collected into an "acceptance criteria" section of the terminal summary.
The file also runs as a script: ``python3 tests/test_acceptance.py``.
The Monte Carlo criterion simulates 10^5 paths on a 2^14 grid (a few minutes).
"""
import sys
import time

import pytest

from brownian_areas import verification as v
from brownian_areas.montecarlo import PathConfig

RESULTS = {}


def _report(num, title, cases, seconds, budget=None):
    ok = all(c.ok for c in cases) and bool(cases)
    timing = f"{seconds:.2f} s"
    if budget is not None:
        timing += f" (limit {budget} s)"
        ok = ok and seconds < budget
    failed = [c.id for c in cases if not c.ok]
    line = f"{'PASS' if ok else 'FAIL'}  criterion {num:2d}  {title}: {len(cases) - len(failed)}/{len(cases)} cases, {timing}"
    if failed:
        line += f"; failing: {', '.join(sorted(set(failed))[:8])}"
    RESULTS[num] = line
    print(line, flush=True)
    return ok, line


def _timed(fn, *a, **kw):
    t0 = time.perf_counter()
    out = fn(*a, **kw)
    return out, time.perf_counter() - t0


def criterion_1():
    cases, dt = _timed(v.table_cases)
    return _report(1, "exact table reproduction", cases, dt, budget=1)


def criterion_2():
    cases, dt = _timed(v.identity_cases, 50)
    return _report(2, "identity matrix for n <= 50", cases, dt, budget=10)


def criterion_3():
    cases, dt = _timed(v.first_two_moment_cases)
    return _report(3, "first two moments and ratio to 5 dp", cases, dt)


def criterion_4():
    cases, dt = _timed(v.negative_moment_cases, 1e-6)
    return _report(4, "negative moments, closed form vs quadrature", cases, dt)


def criterion_5():
    cases, dt = _timed(v.airy_cases, 50)
    return _report(5, "Airy kernel values, zeros and root zeta", cases, dt)


def criterion_6():
    cases, dt = _timed(v.double_laplace_cases, 1e-7)
    return _report(6, "double-Laplace identities within 1e-7", cases, dt, budget=60)


def criterion_7():
    cases, dt = _timed(v.distribution_cases)
    return _report(7, "distribution layer", cases, dt)


def criterion_8():
    cases, dt = _timed(v.graph_cases)
    return _report(8, "graph layer", cases, dt)


def criterion_9():
    cases, dt = _timed(v.mc_cases, PathConfig(grid_points=2 ** 14, replications=100_000, seed=20240601))
    return _report(9, "Monte Carlo at 10^5 paths, grid 2^14", cases, dt, budget=600)


def criterion_10():
    cases, dt = _timed(v.asymptotic_cases, (50, 100, 200))
    return _report(10, "asymptotic trend suite", cases, dt)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("crit", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(crit):
    ok, line = crit()
    assert ok, line


if __name__ == "__main__":
    results = [c()[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
