import json

import pytest

from duha.cli import (
    CSV_COLUMNS,
    PRESETS,
    build_parser,
    main,
    resolve_preset,
)
from duha.pbw import F1, F2_NONROOT, F2_ROOT


def run_main(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_resolve_presets():
    seen = {}
    for name in PRESETS:
        case = resolve_preset(name)
        assert case.preset == name
        seen[name] = case
    assert seen["f1-rational"].family == F1
    assert seen["f2-generic"].family == F2_NONROOT
    for n in (1, 2, 3, 4, 6):
        case = seen["f2-root-%d" % n]
        assert case.family == F2_ROOT and case.n == n
    r4 = seen["f2-root-4"]
    assert r4.alpha.is_zero()
    assert r4.beta == r4.field.from_rational(-1)
    r1c = seen["f2-root-1"]
    assert r1c.alpha == r1c.field.from_rational(2)


def test_unknown_preset_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(["homology", "--preset", "bogus"])
    assert info.value.code == 2
    err = capsys.readouterr().err
    assert "f2-root-6" in err  # the usage error lists the choices


def test_homology_json_exit_zero(capsys):
    code, out, _ = run_main(
        ["homology", "--preset", "f1-rational", "--max-deg", "4"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["window"] == {"min_deg": 0, "max_deg": 4}
    assert payload["case"]["preset"] == "f1-rational"
    assert all(r["match"] for r in payload["comparisons"])


def test_json_output_is_byte_deterministic(capsys):
    argv = ["homology", "--preset", "f2-root-3", "--max-deg", "5"]
    _, first, _ = run_main(argv, capsys)
    _, second, _ = run_main(argv + ["--jobs", "3"], capsys)
    assert first == second
    assert first.endswith("\n")


def test_csv_columns_fixed(capsys):
    code, out, _ = run_main(
        ["homology", "--preset", "f1-rational", "--max-deg", "3", "--output", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert CSV_COLUMNS == ("theory", "i", "deg", "sdeg", "dim", "predicted", "match")
    data_rows = [line.split(",") for line in lines[1:]]
    assert all(len(row) == 7 for row in data_rows)
    # comparison rows carry quantity, degree, computed, predicted, match
    hh0 = [r for r in data_rows if r[0] == "HH_0" and r[2] == "2"]
    assert hh0 and hh0[0][4] == "3" and hh0[0][5] == "3" and hh0[0][6] == "true"


def test_explicit_field_flags(capsys):
    code, out, _ = run_main(
        [
            "homology",
            "--minpoly", "[1,1,1]",
            "--r1", "[0,1]",
            "--r2", "[-1,-1]",
            "--max-deg", "3",
        ],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["case"]["family"] == "F2-root"
    assert payload["case"]["n"] == 3


def test_mutually_exclusive_spec(capsys):
    code, _, err = run_main(
        ["homology", "--preset", "f1-rational", "--r1", "2", "--max-deg", "2"], capsys
    )
    assert code == 2
    assert "mutually exclusive" in err


def test_unsupported_case_is_config_error(capsys):
    # r1^2 r2 = 1 with beta != -1: neither family
    code, _, err = run_main(["homology", "--r1", "2", "--r2", "1/4"], capsys)
    assert code == 2
    assert "configuration error" in err


def test_bad_window(capsys):
    code, _, err = run_main(
        ["homology", "--preset", "f1-rational", "--min-deg", "5", "--max-deg", "2"],
        capsys,
    )
    assert code == 2
    assert "empty window" in err


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "preset": "f2-generic",
                "window": {"max_deg": 3},
                "output": {"format": "json"},
                "jobs": 2,
            }
        )
    )
    code, out, _ = run_main(
        ["homology", "--config", str(cfg), "--max-deg", "5"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["case"]["preset"] == "f2-generic"
    assert payload["window"]["max_deg"] == 5  # the flag wins


def test_env_jobs(monkeypatch, capsys):
    monkeypatch.setenv("DUHA_JOBS", "2")
    code, out, _ = run_main(["dims", "--preset", "f1-rational", "--max-deg", "4"], capsys)
    assert code == 0
    monkeypatch.setenv("DUHA_JOBS", "zero")
    code, _, err = run_main(["dims", "--preset", "f1-rational", "--max-deg", "4"], capsys)
    assert code == 2
    assert "DUHA_JOBS" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_main(
        ["cyclic", "--preset", "f2-root-1", "--max-deg", "4", "--out", str(target)],
        capsys,
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["case"]["preset"] == "f2-root-1"


def test_certify_table_output(capsys):
    code, out, _ = run_main(
        ["certify", "--preset", "f2-root-2", "--max-deg", "6", "--output", "table"],
        capsys,
    )
    assert code == 0
    assert "certified" in out and "result: ok" in out


def test_float_scalar_rejected(capsys):
    code, _, err = run_main(["homology", "--r1", "[0.5,1]", "--r2", "2"], capsys)
    assert code == 2
