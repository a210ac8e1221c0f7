import math

import numpy as np
import pytest

from circular_otto import (
    ConfigError,
    OracleMismatchError,
    SweepGrid,
    SweepSpec,
    emit_csv,
    lorentz_gamma,
    preset,
    run_sweep,
    transition_probability,
)
from circular_otto.sweep import LEDGER_COLUMNS, PRESET_NAMES


def tiny_spec(**overrides):
    base = dict(
        variable="a_H",
        grid=SweepGrid(15.0, 500.0, 3, "log"),
        v=0.999,
        energy=1.0,
        population=0.0,
        outputs=("delta_p_H",),
    )
    base.update(overrides)
    return SweepSpec(**base)


class TestGrid:
    def test_log_values_ascending(self):
        g = SweepGrid(1.0, 100.0, 5, "log")
        vals = g.values()
        assert vals[0] == pytest.approx(1.0) and vals[-1] == pytest.approx(100.0)
        assert np.all(np.diff(vals) > 0)

    def test_linear(self):
        vals = SweepGrid(0.0, 1.0, 3, "linear").values()
        assert list(vals) == [0.0, 0.5, 1.0]

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(start=1.0, stop=100.0, count=1),
            dict(start=5.0, stop=5.0, count=3),
            dict(start=10.0, stop=1.0, count=3),
            dict(start=1.0, stop=2.0, count=3, spacing="cubic"),
            dict(start=0.0, stop=2.0, count=3, spacing="log"),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            SweepGrid(**kwargs)


class TestSpecValidation:
    def test_unknown_variable(self):
        with pytest.raises(ConfigError):
            tiny_spec(variable="a_C")

    def test_unknown_output(self):
        with pytest.raises(ConfigError):
            tiny_spec(outputs=("delta_p",))

    def test_population_string(self):
        with pytest.raises(ConfigError):
            tiny_spec(population="critical")

    def test_decoupled_duration_rejected_for_cycle_outputs(self):
        with pytest.raises(ConfigError):
            tiny_spec(
                outputs=("W_ext",), a_cold=15.0, e1=1.0, e2=2.0,
                population="cyc", decoupled_duration=1.0,
            )

    def test_columns_include_series_and_ledger(self):
        spec = tiny_spec(
            outputs=("delta_p_H", "ledger"),
            series=("p", (0.0, 0.5)),
            a_cold=5.0, e1=1.0, e2=2.0,
        )
        assert spec.columns == ("a_H", "p", "delta_p_H") + LEDGER_COLUMNS


class TestRunSweep:
    def test_rows_ascending_and_series_major(self):
        spec = tiny_spec(series=("p", (0.0, 0.25)), population=None)
        rows = run_sweep(spec)
        assert len(rows) == 6
        assert [r.values[1] for r in rows] == [0.0, 0.0, 0.0, 0.25, 0.25, 0.25]
        swept = [r.values[0] for r in rows[:3]]
        assert swept == sorted(swept)

    def test_values_match_direct_evaluation(self):
        spec = tiny_spec()
        rows = run_sweep(spec)
        g = lorentz_gamma(0.999)
        for row in rows:
            a = row.values[0]
            duration = math.pi * g * 0.999 / a
            assert row.values[-1] == pytest.approx(
                transition_probability(0.0, 1.0, duration, a), rel=1e-15
            )

    def test_jobs_do_not_change_values(self):
        spec = tiny_spec(series=("p", (0.0, 0.25, 0.5)), population=None,
                         grid=SweepGrid(15.0, 500.0, 20, "log"))
        rows1 = run_sweep(spec, jobs=1)
        rows4 = run_sweep(spec, jobs=4)
        assert rows1 == rows4

    def test_decoupled_duration_holds_window_fixed(self):
        spec = tiny_spec(decoupled_duration=0.8)
        rows = run_sweep(spec)
        for row in rows:
            a = row.values[0]
            assert row.values[-1] == pytest.approx(
                transition_probability(0.0, 1.0, 0.8, a), rel=1e-15
            )

    def test_cycle_invariants_enforced_on_the_grid(self):
        spec = tiny_spec(
            grid=SweepGrid(10.0, 30.0, 5, "linear"),
            outputs=("p_cyc",), a_cold=15.0, e1=1.0, e2=2.0, population="cyc",
            energy=None,
        )
        with pytest.raises(ConfigError):
            run_sweep(spec)

    def test_derived_columns(self):
        spec = tiny_spec(outputs=("delta_p_H", "T_H", "gamma"))
        row = run_sweep(spec)[0]
        data = row.as_dict()
        g = lorentz_gamma(0.999)
        assert data["gamma"] == pytest.approx(g, rel=1e-15)
        assert data["T_H"] == pytest.approx(math.pi * g * 0.999 / data["a_H"], rel=1e-15)

    def test_missing_population_is_a_config_error(self):
        with pytest.raises(ConfigError):
            run_sweep(tiny_spec(population=None))


class TestOracleCheck:
    def test_thinned_grid_annotated(self):
        spec = tiny_spec(
            grid=SweepGrid(20.0, 80.0, 4, "log"),
            oracle_check=True, oracle_stride=2,
        )
        rows = run_sweep(spec)
        assert rows[0].columns[-1] == "oracle_rel_dev"
        devs = [r.values[-1] for r in rows]
        assert devs[0] is not None and devs[2] is not None
        assert devs[1] is None and devs[3] is None
        assert all(d <= 1e-3 for d in devs if d is not None)

    def test_mismatch_raises(self):
        spec = tiny_spec(
            grid=SweepGrid(20.0, 80.0, 2, "log"),
            oracle_check=True, oracle_rtol=1e-12,
        )
        with pytest.raises(OracleMismatchError):
            run_sweep(spec)


class TestEmitCsv(object):
    def test_format_contract(self, tmp_path):
        out = tmp_path / "rows.csv"
        rows = run_sweep(tiny_spec())
        emit_csv(rows, out)
        text = out.read_text(encoding="utf-8")
        lines = text.split("\n")
        assert lines[0] == "a_H,delta_p_H"
        assert len(lines) == 5 and lines[-1] == ""  # 3 data rows, LF-terminated
        first = lines[1].split(",")
        assert float(first[0]) == pytest.approx(15.0, rel=1e-14)
        # 17 significant digits in every cell
        assert len(first[1].replace("-", "").replace(".", "").split("e")[0]) == 17

    def test_round_trip_is_exact(self, tmp_path):
        out = tmp_path / "rows.csv"
        rows = run_sweep(tiny_spec())
        emit_csv(rows, out)
        lines = out.read_text().strip().split("\n")[1:]
        for line, row in zip(lines, rows):
            for cell, value in zip(line.split(","), row.values):
                assert float(cell) == value

    def test_empty_rows_refused(self, tmp_path):
        out = tmp_path / "never.csv"
        with pytest.raises(ConfigError):
            emit_csv([], out)
        assert not out.exists()

    def test_determinism_bytes(self, tmp_path):
        spec = tiny_spec(series=("p", (0.0, 0.75)), population=None)
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        emit_csv(run_sweep(spec, jobs=1), a)
        emit_csv(run_sweep(spec, jobs=3), b)
        assert a.read_bytes() == b.read_bytes()


class TestPresets:
    def test_all_presets_build(self):
        for name in PRESET_NAMES:
            spec = preset(name)
            assert spec.grid.count >= 100

    def test_unknown_preset(self):
        with pytest.raises(ConfigError):
            preset("fig7")

    def test_fig2_shape(self):
        spec = preset("fig2")
        assert spec.variable == "a_H"
        assert (spec.grid.start, spec.grid.stop, spec.grid.count) == (15.0, 500.0, 100)
        assert spec.series == ("p", (0.0, 0.25, 0.5, 0.75))
        assert spec.v == 0.999
        rows = run_sweep(spec)
        assert len(rows) == 400

    def test_fig3_grid_maps_fig2_accelerations(self):
        spec = preset("fig3")
        g2v2 = lorentz_gamma(0.999) ** 2 * 0.999 ** 2
        assert spec.variable == "R_hot"
        assert spec.grid.start == pytest.approx(g2v2 / 500.0, rel=1e-12)
        assert spec.grid.stop == pytest.approx(g2v2 / 15.0, rel=1e-12)

    def test_fig4_fig5_fixed_side(self):
        for name in ("fig4", "fig5"):
            spec = preset(name)
            assert spec.a_cold == 15.0
            assert (spec.e1, spec.e2) == (1.0, 2.0)
            assert spec.series == ("v", (0.9, 0.99, 0.999))

    def test_fig5_grid_inside_engine_regime(self):
        spec = preset("fig5")
        assert spec.grid.start > 30.0  # break-even a_H = a_C e2 / e1

    def test_fig6_shape(self):
        spec = preset("fig6")
        assert spec.variable == "dE"
        assert spec.a_cold == 20.0
        assert spec.series == ("a_H", (30.0, 50.0, 100.0))
        assert spec.grid.count == 200
