from __future__ import annotations

import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from levy_laplace import RationalOrder, density
from levy_laplace.cli import EXIT_FAIL, EXIT_INFRA, EXIT_OK, EXIT_USAGE, main, parse_grid
from levy_laplace.suites import thread_count


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_density_row(capsys):
    code, out, _ = run(capsys, "density", "--alpha", "1/2", "--grid", "1:1:1", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["x", "g"]
    assert float(rows[1][1]) == pytest.approx(0.21969564473386122, rel=1e-15, abs=0)


def test_alpha_out_of_range(capsys):
    code, _, err = run(capsys, "density", "--alpha", "3/2", "--grid", "1:1:1")
    assert code == EXIT_USAGE
    assert "alpha must satisfy 0 < l/k < 1" in err


def test_alpha_reduced_with_warning(capsys):
    code, out, err = run(capsys, "density", "--alpha", "2/4", "--grid", "1:1:1", "--format", "csv")
    assert code == EXIT_OK
    assert "reduced to 1/2" in err
    assert float(out.splitlines()[1].split(",")[1]) == density(RationalOrder(1, 2), 1.0)


def test_csv_round_trips_bit_exactly(capsys):
    code, out, _ = run(capsys, "density", "--alpha", "2/3", "--grid", "0.01:100:57", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))[1:]
    xs = np.array([float(r[0]) for r in rows])
    gs = np.array([float(r[1]) for r in rows])
    assert np.array_equal(xs, np.geomspace(0.01, 100, 57))
    assert np.array_equal(gs, density(RationalOrder(2, 3), xs))


def test_transform_fixed_point(capsys):
    code, out, _ = run(capsys, "transform", "--kind", "bar", "--alpha", "2/3", "--f", "one",
                       "--grid", "1:10:4", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema"] == 1 and len(doc["rows"]) == 4
    assert all(abs(r["value"] - 1) <= 1e-7 for r in doc["rows"])


def test_transform_tilde_value(capsys):
    code, out, _ = run(capsys, "transform", "--kind", "tilde", "--alpha", "1/2", "--f", "one",
                       "--grid", "1:1:1", "--format", "csv")
    assert code == EXIT_OK
    assert float(out.splitlines()[1].split(",")[1]) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-12, abs=0)


def test_unknown_catalog_name(capsys):
    code, _, err = run(capsys, "transform", "--kind", "tilde", "--alpha", "1/2", "--f", "nosuch", "--grid", "1:1:1")
    assert code == EXIT_USAGE
    assert "one, exp, texp, t, sqrt" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "bogus"],
    ["density", "--alpha", "1/2"],
    ["density", "--alpha", "1/2", "--grid", "1:2"],
    ["density", "--alpha", "1/2", "--grid", "0:2:3"],
    ["density", "--alpha", "1/2", "--grid", "1:2:0"],
    ["density", "--alpha", "1/2", "--grid", "1:2:3:cubic"],
    ["density", "--alpha", "x/y", "--grid", "1:2:3"],
    ["verify", "--suite", "defining", "--tol", "-1"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_grid_spacing():
    np.testing.assert_allclose(parse_grid("1:3:3:lin"), [1, 2, 3])
    np.testing.assert_allclose(parse_grid("1:100:3"), [1, 10, 100])


def test_verify_defining_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "defining", "--tol", "1e-8", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema"] == 1 and len(doc["rows"]) == 25
    for row in doc["rows"]:
        assert {"identity", "params", "observed_error", "tolerance", "pass"} <= row.keys()
        assert row["pass"] and row["tolerance"] == 1e-8


def test_verify_j_cases(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "j-cases")
    assert code == EXIT_OK
    assert "54/54 checks passed" in out


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "defining", "--tol", "1e-20", "--format", "csv")
    assert code == EXIT_FAIL
    assert "False" in out


def test_correlate(capsys):
    code, out, _ = run(capsys, "correlate", "--alpha", "1/2", "--beta", "1/2", "--grid", "1:1:1",
                       "--laplace", "--format", "csv")
    assert code == EXIT_OK and float(out.splitlines()[1].split(",")[1]) == pytest.approx(math.exp(-1))
    code, out, _ = run(capsys, "correlate", "--alpha", "1/2", "--beta", "1/2", "--y", "1",
                       "--grid", "1:1:1", "--format", "csv")
    assert code == EXIT_OK and float(out.splitlines()[1].split(",")[1]) == pytest.approx(0.21248518042954932, rel=1e-10, abs=0)


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "json")
    assert code == EXIT_OK
    assert [r["name"] for r in json.loads(out)["rows"]] == ["one", "exp", "texp", "t", "sqrt"]


def test_output_file_and_infra_error(capsys, tmp_path):
    target = tmp_path / "g.csv"
    assert run(capsys, "density", "--alpha", "1/3", "--grid", "1:2:2", "--format", "csv", "--output", str(target))[0] == 0
    assert target.read_text().startswith("x,g\n")
    assert run(capsys, "catalog", "--output", str(tmp_path))[0] == EXIT_INFRA


def test_thread_env(monkeypatch):
    monkeypatch.setenv("LEVY_LAPLACE_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("LEVY_LAPLACE_THREADS", "0")
    assert thread_count() >= 1


def test_output_order_independent_of_threads(capsys, monkeypatch):
    outs = []
    for n in ("1", "4"):
        monkeypatch.setenv("LEVY_LAPLACE_THREADS", n)
        outs.append(run(capsys, "verify", "--suite", "transitivity", "--format", "csv")[1])
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "levy_laplace", "density", "--alpha", "1/2", "--grid", "1:1:1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "0.2196956447" in proc.stdout
