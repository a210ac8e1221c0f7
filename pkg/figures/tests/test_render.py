"""Figure-package tests, including the release criterion: every preset CSV
renders without error, fig2 carries exactly 4 series and fig6 one series
per hot-arc acceleration."""

import subprocess
import sys

import pytest

from otto_figures import (
    PRESET_NAMES,
    SchemaError,
    preset_recipe,
    read_series,
    render,
)

pytestmark = pytest.mark.filterwarnings("ignore::DeprecationWarning")


@pytest.fixture(scope="session")
def preset_csvs(tmp_path_factory):
    """Freshly generated preset CSVs, produced through the sweep CLI only."""
    out_dir = tmp_path_factory.mktemp("csv")
    paths = {}
    for name in PRESET_NAMES:
        out = out_dir / f"{name}.csv"
        proc = subprocess.run(
            [
                sys.executable, "-m", "circular_otto", "sweep",
                "--preset", name, "--out", str(out), "--jobs", "2",
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        paths[name] = out
    return paths


def test_criterion_10_all_presets_render(preset_csvs, tmp_path):
    summaries = {}
    for name, csv_path in preset_csvs.items():
        out = tmp_path / f"{name}.pdf"
        summary = render(preset_recipe(name, str(csv_path), str(out)))
        assert out.is_file() and out.stat().st_size > 0
        summaries[name] = summary
    assert summaries["fig2"].series_count == 4
    assert summaries["fig2"].series_labels == ("0", "0.25", "0.5", "0.75")
    assert summaries["fig6"].series_count == 3  # one per a_H value
    assert summaries["fig6"].series_labels == ("30", "50", "100")
    print(
        "\nacceptance criterion 10: PASS  ("
        + "; ".join(
            f"{name}: {s.series_count} series x {s.points_per_series[0]} points"
            for name, s in sorted(summaries.items())
        )
        + ")"
    )


def test_series_grouping(preset_csvs):
    recipe = preset_recipe("fig4", str(preset_csvs["fig4"]), "unused.pdf")
    series = read_series(recipe)
    assert list(series) == ["0.9", "0.99", "0.999"]
    assert all(len(points) == 100 for points in series.values())


def test_rendering_is_read_only_and_repeatable(preset_csvs, tmp_path):
    csv_path = preset_csvs["fig2"]
    before = csv_path.read_bytes()
    out = tmp_path / "fig2.svg"
    first = render(preset_recipe("fig2", str(csv_path), str(out)))
    second = render(preset_recipe("fig2", str(csv_path), str(out)))
    assert csv_path.read_bytes() == before
    assert first == second


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        render(preset_recipe("fig2", str(tmp_path / "nope.csv"), str(tmp_path / "x.pdf")))


def test_missing_column_is_schema_error(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("a_H,p\n1.0,0.0\n")
    with pytest.raises(SchemaError, match="delta_p_H"):
        render(preset_recipe("fig2", str(bad), str(tmp_path / "x.pdf")))


def test_empty_csv_is_schema_error(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("a_H,p,delta_p_H\n")
    with pytest.raises(SchemaError, match="no data rows"):
        render(preset_recipe("fig2", str(empty), str(tmp_path / "x.pdf")))


def test_non_numeric_cell_is_schema_error(tmp_path):
    bad = tmp_path / "nan.csv"
    bad.write_text("a_H,p,delta_p_H\n1.0,0.0,oops\n")
    with pytest.raises(SchemaError, match="bad cell"):
        render(preset_recipe("fig2", str(bad), str(tmp_path / "x.pdf")))


def test_unknown_preset():
    with pytest.raises(SchemaError):
        preset_recipe("fig9", "a.csv", "b.pdf")


class TestCli:
    def test_render_roundtrip(self, preset_csvs, tmp_path):
        out = tmp_path / "fig6.pdf"
        proc = subprocess.run(
            [
                sys.executable, "-m", "otto_figures", "render",
                "--preset", "fig6", "--in", str(preset_csvs["fig6"]),
                "--out", str(out),
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        assert "3 series" in proc.stdout
        assert out.is_file()

    def test_missing_input_exits_nonzero(self, tmp_path):
        proc = subprocess.run(
            [
                sys.executable, "-m", "otto_figures", "render",
                "--preset", "fig2", "--in", str(tmp_path / "nope.csv"),
                "--out", str(tmp_path / "x.pdf"),
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 1

    def test_bad_flags_exit_nonzero(self):
        proc = subprocess.run(
            [sys.executable, "-m", "otto_figures", "render", "--preset", "fig2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 1
