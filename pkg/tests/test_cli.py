import json

import pytest

from iwso import reports
from iwso.cli import main
from iwso.core import TraceRecord
from iwso.reports import RegistryRow, ResultRow, SummaryRow


def test_run_writes_rows(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code = main(["run", "--algorithm", "iwso", "--function", "f3", "--runs", "3",
                 "--seed", "7", "--out", str(out), "--t-max", "10"])
    assert code == 0
    rows = reports.read_csv(out, ResultRow)
    assert len(rows) == 3
    assert [r.seed for r in rows] == [7, 8, 9]
    assert all(r.function == "f3" and r.algorithm == "iwso" for r in rows)
    summary = reports.parse_csv(capsys.readouterr().out, SummaryRow)
    assert summary[0].n_runs == 3


def test_run_trace_files(tmp_path):
    out = tmp_path / "res.csv"
    assert main(["run", "--function", "booth", "--runs", "2", "--t-max", "4",
                 "--out", str(out), "--trace"]) == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["res.csv", "res_run0_trace.csv", "res_run1_trace.csv"]
    trace = reports.read_csv(tmp_path / "res_run1_trace.csv", TraceRecord)
    assert [r.iteration for r in trace] == [1, 2, 3, 4]


def test_missing_function_is_usage_error(capsys):
    assert main(["run", "--runs", "1"]) == 2
    err = capsys.readouterr().err
    assert "usage:" in err and "--function" in err


def test_duplicate_algorithms(capsys, tmp_path):
    assert main(["compare", "--function", "f3", "--algorithms", "iwso,ga,iwso",
                 "--out", str(tmp_path / "c.csv")]) == 2
    assert "duplicate" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--function", "f99"],
        ["run", "--function", "f3", "--algorithm", "woa"],
        ["run", "--function", "f3", "--runs", "0"],
        ["run", "--function", "f3", "--pop-size", "1"],
        ["run", "--function", "f3", "--m-min", "0"],
        ["run", "--function", "f3", "--seed", "-1"],
        ["sweep", "--cases", "C7"],
        ["sweep", "--grid", "a,b"],
    ],
)
def test_invalid_settings_exit_2(argv):
    assert main(argv) == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2


def test_compare_and_env_output_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("IWSO_OUTPUT_DIR", str(tmp_path))
    assert main(["compare", "--function", "f21", "--algorithms", "iwso,de,pso",
                 "--runs", "2", "--t-max", "3"]) == 0
    rows = reports.read_csv(tmp_path / "compare.csv", SummaryRow)
    assert [r.algorithm for r in rows] == ["iwso", "de", "pso"]


def test_sweep_row_count(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--param", "tmax", "--functions", "f3,f21", "--runs", "1",
                 "--pop-size", "4", "--out", str(out)]) == 0
    rows = reports.read_csv(out, SummaryRow)
    assert len(rows) == 4 * 2
    assert rows[0].algorithm == "iwso@t_max=125"


def test_list(tmp_path, capsys):
    assert main(["list", "--out", str(tmp_path / "reg.csv")]) == 0
    printed = reports.parse_csv(capsys.readouterr().out, RegistryRow)
    assert len(printed) == 23
    assert reports.read_csv(tmp_path / "reg.csv", RegistryRow) == printed


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"function": "f3", "n_runs": 2, "t_max": 3, "base_seed": 100,
                               "output_path": str(tmp_path / "from_cfg.csv")}))
    assert main(["run", "--config", str(cfg), "--seed", "5"]) == 0
    rows = reports.read_csv(tmp_path / "from_cfg.csv", ResultRow)
    assert [r.seed for r in rows] == [5, 6]
    assert rows[0].evaluations == 30 * 4


@pytest.mark.parametrize(
    "content",
    ['{"function": "f3", "colour": 1}', '[1, 2]', '{not json', '{"t_max": 2.5}', '{"trace": "yes"}'],
)
def test_bad_config_exit_2(tmp_path, content):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(content)
    assert main(["run", "--config", str(cfg), "--function", "f3"]) == 2


def test_missing_config_exit_2(tmp_path):
    assert main(["run", "--config", str(tmp_path / "nope.json"), "--function", "f3"]) == 2


def test_unwritable_output_exit_1(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert main(["run", "--function", "f3", "--runs", "1", "--t-max", "2",
                 "--out", str(blocker / "r.csv")]) == 1
