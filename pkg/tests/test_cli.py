import json
import subprocess
import sys

import pytest

from hilbgw.cli import main
from hilbgw.config import ConfigError, RunConfig, parse_partition_list
from hilbgw.report import validate_report


@pytest.fixture(autouse=True)
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("HILBGW_CACHE_DIR", str(tmp_path))
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    data = json.loads(out)
    validate_report(data)
    return data["result"]


def test_md_matrix(capsys):
    res = report(capsys, "md-matrix", "--n", "2", "--q-order", "3")
    assert res["basis"] == [[2], [1, 1]]
    assert len(res["matrix"]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("eigen", "--n", "2", "--q-order", "3"),
        ("fixed-points", "--n", "3"),
        ("rmatrix", "--n", "2", "--q-order", "3", "--z-order", "2"),
        ("rmatrix", "--n", "2", "--q-order", "3", "--z-order", "2", "--basis", "canonical"),
    ],
)
def test_structural_commands(capsys, argv):
    report(capsys, *argv)


def test_fixed_points_macdonald(capsys):
    res = report(capsys, "fixed-points", "--n", "2", "--macdonald")
    assert res


def test_invariant_with_rational_form(capsys):
    res = report(
        capsys, "invariant", "--n", "2", "--genus", "1", "--insertions", "[[2]]", "--q-order", "8",
        "--reconstruct-rational",
    )
    assert len(res["coefficients"]) == 9
    assert res["rational_form"]["denominator"] == ["1", "-1"]


def test_degree0(capsys):
    res = report(capsys, "degree0", "--n", "2", "--genus", "1", "--insertions", "[[2]]")
    assert res["agree"]


def test_wk_table(capsys):
    res = report(capsys, "wk-table", "--genus", "2", "--max-points", "1")
    assert res["entries"] == [{"exponents": [4], "value": "1/1152"}]


def test_crepant_compare(capsys):
    res = report(capsys, "crepant-compare", "--n", "2", "--genus", "1", "--insertions", "[[2]]", "--q-order", "6")
    assert res["roundtrip"] and res["odd_coefficients_times_i_real"]
    assert not res["pole_at_q_minus_one"]


def test_csv_output(capsys):
    code, out, _ = run(capsys, "wk-table", "--genus", "1", "--max-points", "2", "--out", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "path,value"
    assert any("1/24" in line for line in lines)


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "md-matrix", "--n", "1", "--output", str(target))
    assert code == 0 and out == ""
    validate_report(json.loads(target.read_text()))


def test_repeated_runs_are_byte_identical(capsys):
    argv = ("invariant", "--n", "2", "--genus", "1", "--insertions", "[[2]]", "--q-order", "4")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_console_script_is_deterministic(cache_dir):
    argv = [sys.executable, "-m", "hilbgw.cli", "wk-table", "--genus", "1", "--max-points", "3"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


@pytest.mark.parametrize(
    "argv",
    [
        ("invariant", "--n", "2", "--genus", "1", "--insertions", "[[3]]"),
        ("invariant", "--n", "2", "--genus", "0", "--insertions", "[[2]]"),
        ("invariant", "--n", "2", "--genus", "1", "--insertions", "not json"),
        ("invariant", "--n", "2", "--genus", "4", "--insertions", "[]"),
        ("invariant", "--n", "2", "--genus", "2", "--no-g2-tier"),
        ("md-matrix", "--n", "2", "--q-order", "0"),
        ("degree0", "--n", "2", "--genus", "1"),
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_corrupted_cache_exits_one(capsys, cache_dir):
    assert run(capsys, "wk-table", "--genus", "1", "--max-points", "2", "--write-cache")[0] == 0
    path = cache_dir / "wk_cache.json"
    payload = json.loads(path.read_text())
    payload["checksum"] = "f" * 64
    path.write_text(json.dumps(payload))
    code, _, err = run(capsys, "wk-table", "--genus", "1")
    assert code == 1
    assert "CacheCorruptionError" in err


def test_graph_sum_failure_exits_one(capsys):
    argv = ("invariant", "--n", "2", "--genus", "1", "--insertions", "[[2],[2]]", "--z-order", "1")
    assert run(capsys, *argv)[0] == 1


def test_selftest_reports_failing_criterion(capsys):
    # the divisor criterion as literally stated does not hold, so selftest exits 1
    code, out, err = run(capsys, "selftest", "--n", "1")
    assert code == 1
    data = json.loads(out)
    validate_report(data)
    failed = [c["number"] for c in data["result"]["criteria"] if not c["passed"]]
    assert failed == [8]
    assert "[FAIL] criterion 8" in err


def test_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(n=2, genus=1, insertions=parse_partition_list("[[1]]")).validate()
    with pytest.raises(ConfigError):
        parse_partition_list("[[0, 1]]")
    with pytest.raises(ConfigError):
        RunConfig(output_format="xml").validate()
    cfg = RunConfig(n=2, genus=1, insertions=parse_partition_list("[[2]]")).validate(need_stable=True)
    assert "cache_dir" not in cfg.to_json()
