import csv
import io
import json

import pytest
from click.testing import CliRunner

from brownian_areas.cli import main


@pytest.fixture
def run():
    r = CliRunner()
    return lambda *args: r.invoke(main, list(args))


def test_moments_examples(run):
    res = run("moments", "--kind", "ex", "--n", "4", "--only", "--format", "csv")
    assert res.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(res.output)))
    assert rows == [{"kind": "Ex", "n": "4", "exact": "221/1008", "decimal": "0.219246031746"}]
    res = run("moments", "--kind", "dm", "--n", "0", "--only", "--format", "json")
    assert json.loads(res.output)[0]["exact"] == "1"
    res = run("moments", "--kind", "br+", "--n", "3", "--only", "--format", "json")
    # (71/4096) sqrt(pi/2)
    assert json.loads(res.output)[0]["exact"] == "71/8192*2^(1/2)*pi^(1/2)"


def test_moments_table_all_kinds(run):
    res = run("moments", "--n", "2", "--format", "json")
    data = json.loads(res.output)
    assert len(data) == 7 * 3


def test_eval_examples(run):
    res = run("eval", "--kind", "ex", "--target", "cdf", "--x", "0.8", "--format", "json")
    v = json.loads(res.output)[0]["value"]
    assert 0 < v < 1
    res = run("eval", "--kind", "bm", "--target", "psi", "--t", "0", "--format", "json")
    assert json.loads(res.output)[0]["value"] == 1.0
    res = run("eval", "--kind", "br", "--target", "tail", "--side", "large", "--x", "2", "--format", "json")
    row = json.loads(res.output)[0]
    assert row["terms"] == 3 and 4e-12 < row["value"] < 5e-12


def test_eval_grid_csv(run):
    res = run("eval", "--kind", "me", "--target", "pdf", "--grid", "0.5:1.5:3")
    rows = list(csv.DictReader(io.StringIO(res.output)))
    assert [r["point"] for r in rows] == ["0.5", "1", "1.5"]
    assert all(float(r["bound"]) < 1e-12 for r in rows)


def test_eval_unsupported(run):
    res = run("eval", "--kind", "br+", "--target", "pdf", "--x", "1")
    assert res.exit_code == 2
    assert "unsupported" in res.output


def test_usage_errors(run):
    assert run("moments", "--kind", "zz").exit_code == 2
    assert run("eval", "--kind", "ex", "--target", "pdf").exit_code == 2
    assert run("eval", "--kind", "ex", "--target", "pdf", "--x", "-1").exit_code == 2
    assert run("graphs", "--n-max", "41").exit_code == 2
    assert run("mc", "--grid-points", "1000", "--reps", "100").exit_code == 2


def test_graphs_rows(run):
    res = run("graphs", "--n-min", "4", "--n-max", "5", "--k", "-1", "--k", "0", "--format", "json")
    rows = {(r["n"], r["k"]): r for r in json.loads(res.output)}
    assert rows[(5, -1)]["count"] == "125" and rows[(5, -1)]["ratio"] == pytest.approx(1.0)
    assert rows[(4, 0)]["count"] == "15"


def test_verify_json(run, tmp_path):
    out = tmp_path / "r.json"
    res = run("verify", "--suite", "graphs", "--json", str(out))
    assert res.exit_code == 0
    rep = json.loads(out.read_text())
    assert rep["suite"] == "graphs" and rep["summary"]["failed"] == 0
    assert {"id", "inputs", "expected", "actual", "tolerance", "ok"} <= set(rep["cases"][0])


def test_verify_failure_exit_code(run, monkeypatch):
    from brownian_areas import verification
    from brownian_areas.verification import Case
    monkeypatch.setitem(verification.SUITES, "graphs", lambda **kw: [Case("x", {}, 1, 2, 0.0, False)])
    assert run("verify", "--suite", "graphs").exit_code == 1


def test_zeros(run):
    res = run("zeros", "--n", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(res.output)))
    assert len(rows) == 3 and rows[0]["a_j"].startswith("2.33810741045976")


def test_mc_small(run, tmp_path):
    p = tmp_path / "ex.bin"
    args = ("mc", "--kind", "ex", "--seed", "4", "--reps", "600", "--grid-points", "256", "--samples", str(p))
    a, b = run(*args), run(*args)
    assert a.exit_code == 0 and a.output == b.output
    data = json.loads(a.output)
    assert data["config"]["seed"] == 4 and data["summaries"][0]["kind"] == "Ex"
    assert p.stat().st_size == 48 + 8 * 600
