from math import comb

import pytest
from hypothesis import given, strategies as st

from brownian_areas import graphs


@pytest.mark.parametrize("n", range(1, 7))
def test_brute_force(n):
    bf = graphs.brute_force_connected(n)
    assert bf == [graphs.count_connected(n, q) for q in range(len(bf))]


def test_spot_values():
    assert graphs.count_connected(5, 4) == 125
    assert graphs.count_connected(4, 4) == 15
    assert graphs.count_connected(3, 1) == 0
    assert graphs.count_connected(1, 0) == 1


@given(st.integers(2, 40))
def test_cayley_and_complete(n):
    assert graphs.count_connected(n, n - 1) == n ** (n - 2)
    e = n * (n - 1) // 2
    assert graphs.count_connected(n, e) == 1


def test_exponential_formula():
    for n, row in graphs.total_from_connected(10).items():
        assert row == [comb(n * (n - 1) // 2, q) for q in range(len(row))]


def test_spencer_bridge():
    assert graphs.spencer_bridge_check(50).ok
    with pytest.raises(ValueError):
        graphs.spencer_bridge_check(51)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_wright_trend(k):
    assert graphs.wright_trend_monotone(k, (10, 20, 30, 40))


def test_trees_ratio_is_one():
    assert graphs.wright_ratio(-1, 17) == pytest.approx(1.0, abs=1e-14)


def test_ranges():
    with pytest.raises(ValueError):
        graphs.count_connected(41, 40)
    with pytest.raises(ValueError):
        graphs.count_connected(4, 7)
    with pytest.raises(ValueError):
        graphs.brute_force_connected(7)


def test_csv(tmp_path):
    p = tmp_path / "w.csv"
    graphs.write_wright_csv(p, [5, 20], [-1, 1])
    lines = p.read_text().splitlines()
    assert lines[0] == "n,k,C,ratio"
    assert lines[1].startswith("5,-1,125,")
    assert len(lines) == 5
