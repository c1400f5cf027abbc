import json
import math

import numpy as np
import pytest

from brownian_areas import distributions as dist, montecarlo as mc
from brownian_areas.moments import AreaKind

SMALL = mc.PathConfig(grid_points=2 ** 10, replications=5000, seed=11)


@pytest.fixture(scope="module")
def small_run():
    return mc.simulate(SMALL, extras=True)


def test_config_validation():
    with pytest.raises(ValueError):
        mc.PathConfig(grid_points=1000)
    with pytest.raises(ValueError):
        mc.PathConfig(replications=10)
    with pytest.raises(ValueError):
        mc.PathConfig(scheme="euler")
    with pytest.raises(ValueError):
        mc.PathConfig(seed=-1)


def test_digest_ignores_workers():
    assert SMALL.digest() == mc.PathConfig(2 ** 10, 5000, 11, workers=3).digest()
    assert SMALL.digest() != mc.PathConfig(2 ** 10, 5000, 12).digest()


def test_reproducible_and_worker_independent():
    cfg = mc.PathConfig(2 ** 8, 1200, 5)
    a = mc.simulate(cfg)
    b = mc.simulate(mc.PathConfig(2 ** 8, 1200, 5, workers=2))
    for k in mc.KINDS:
        assert np.array_equal(a[k], b[k])
    s1 = mc.summary_json([mc.summarize(k, a[k]) for k in mc.KINDS], cfg)
    s2 = mc.summary_json([mc.summarize(k, b[k]) for k in mc.KINDS], cfg)
    assert s1 == s2
    json.loads(s1)


def test_all_kinds_positive(small_run):
    for k in mc.KINDS:
        assert len(small_run[k]) == SMALL.replications
        # a grid path can stay below zero, so positive parts may vanish
        floor_ok = small_run[k] >= 0 if k in (AreaKind.BrPlus, AreaKind.BmPlus) else small_run[k] > 0
        assert np.all(floor_ok), k


def test_bridge_parts_add_up(small_run):
    s = small_run
    assert np.allclose(s[AreaKind.BrPlus] + s["BrMinus"], s[AreaKind.Br])


@pytest.mark.parametrize("kind", ["Ex", "Br", "Me"])
def test_cdf_within_dkw_band(small_run, kind):
    x = small_run[AreaKind(kind)]
    eps = math.sqrt(math.log(2 / 0.01) / (2 * len(x)))
    grid = np.quantile(x, np.linspace(0.02, 0.98, 25))
    worst = max(abs(np.mean(x <= g) - dist.cdf(kind, float(g))) for g in grid)
    assert worst < eps


def test_small_run_moments(small_run):
    for r in mc.moment_checks(SMALL, small_run):
        assert abs(r.estimate - r.expected) <= 4 * r.se, r


def test_batch_se_matches_iid_formula():
    rng = np.random.default_rng(0)
    x = rng.standard_normal(100_000)
    assert abs(mc.batch_se(x) / (1 / math.sqrt(len(x))) - 1) < 0.35


def test_sample_file_round_trip(tmp_path, small_run):
    p = tmp_path / "s.bin"
    x = small_run[AreaKind.Ex]
    mc.write_samples(p, x, SMALL)
    digest, y = mc.read_samples(p)
    assert digest == SMALL.digest()
    assert np.array_equal(x, y)
    raw = p.read_bytes()
    assert raw[:8] == b"BAREA001" and len(raw) == 8 + 32 + 8 + 8 * len(x)
    (tmp_path / "bad.bin").write_bytes(b"nope" * 10)
    with pytest.raises(ValueError):
        mc.read_samples(tmp_path / "bad.bin")


def test_exact_minimum_below_grid_minimum():
    rng = np.random.default_rng(3)
    h = 1 / 64
    B = np.concatenate([np.zeros((200, 1)), np.cumsum(rng.standard_normal((200, 64)) * math.sqrt(h), axis=1)],
                       axis=1)
    m = mc._exact_min(B, h, rng)
    assert np.all(m <= B.min(axis=1) + 1e-15)
