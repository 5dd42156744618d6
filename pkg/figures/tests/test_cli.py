import subprocess
import sys

import pytest

pytest.importorskip("hofsum_figures")

from hofsum_figures.cli import main


def test_cli_renders_png(write_table, tmp_path, capsys):
    csv_path = write_table([(n, n // 4) for n in range(1, 120)])
    out = tmp_path / "growth.png"
    assert main(["--in", str(csv_path), "--out", str(out)]) == 0
    captured = capsys.readouterr()
    assert f"rows=119 -> {out}" in captured.out
    assert "plot:" in captured.err
    assert out.stat().st_size > 0


def test_cli_missing_input_is_a_runtime_error(tmp_path, capsys):
    assert main(["--in", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "x.png")]) == 3
    assert "hofsum-plot: error:" in capsys.readouterr().err


def test_cli_malformed_table_reports_the_row(write_table, tmp_path, capsys):
    path = write_table([(1, 0), (3, 1)])
    with open(path, "a", encoding="utf-8") as f:
        f.write("2,1,0.7,0.8,0.85,0.9\n")
    assert main(["--in", str(path), "--out", str(tmp_path / "x.png")]) == 3
    assert "row 4" in capsys.readouterr().err


def test_cli_requires_both_flags():
    with pytest.raises(SystemExit) as exc:
        main(["--in", "only.csv"])
    assert exc.value.code == 2


def test_module_entry_point(write_table, tmp_path):
    csv_path = write_table([(n, 2) for n in range(1, 40)])
    out = tmp_path / "entry.svg"
    res = subprocess.run(
        [sys.executable, "-m", "hofsum_figures.cli", "--in", str(csv_path), "--out", str(out)],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert res.returncode == 0, res.stderr
    assert "rows=39" in res.stdout
    assert out.stat().st_size > 0
