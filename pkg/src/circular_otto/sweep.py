"""Declarative parameter sweeps with deterministic CSV output.

A :class:`SweepSpec` names one swept variable (``a_H``, ``R_hot`` or ``dE``),
a grid, the fixed engine parameters, an optional series parameter that
repeats the sweep for several values (``p``, ``v`` or ``a_H``), and an
ordered list of output columns. :func:`run_sweep` evaluates the grid
(optionally in parallel; the row order never depends on scheduling) and
:func:`emit_csv` writes the rows with enough digits to round-trip exactly,
so identical specs produce byte-identical files.

Built-in presets ``fig2`` .. ``fig6`` reproduce the package's standard
sweeps: transition probability against hot-arc acceleration and radius,
cyclic population and work output against hot-arc acceleration for several
speeds, and work output against the gap change for several hot-arc
accelerations. The physical constants (speeds, cold-side accelerations,
gap sets) are fixed per preset; grid ranges are documented choices. The
``fig5`` grid starts above the break-even acceleration
a_H = a_C * e2 / e1 so the whole curve lies in the positive-work regime.

Every sweep couples the window timescale to the swept geometry through
T = pi gamma v / a; pass ``decoupled_duration`` to hold T fixed instead
(bare response exploration only).
"""

from __future__ import annotations

import concurrent.futures
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from .engine import (
    CycleConfig,
    cyclic_population,
    efficiency,
    extracted_work,
    stroke_ledger,
    transition_probability,
)
from .kinematics import lorentz_gamma
from .quadrature import QuadratureSpec, response_extrapolated
from .response import ResponseQuery, response


class ConfigError(ValueError):
    """A sweep or cycle specification violates its invariants."""


class OracleMismatchError(RuntimeError):
    """Closed form and quadrature oracle disagree beyond tolerance."""


SWEEP_VARIABLES = ("a_H", "R_hot", "dE")
SERIES_PARAMETERS = ("p", "v", "a_H")

#: Output column names accepted in SweepSpec.outputs. ``ledger`` expands to
#: the ten stroke columns.
SCALAR_OUTPUTS = ("delta_p_H", "p_cyc", "W_ext", "eta", "T_H", "T_C", "gamma")
LEDGER_COLUMNS = ("Q1", "W1", "Q2", "W2", "Q3", "W3", "Q4", "W4", "W_total", "Q_total")

#: Outputs that require the full two-bath cycle rather than a bare hot contact.
_CYCLE_OUTPUTS = frozenset({"p_cyc", "W_ext", "eta", "ledger", "T_C"})


@dataclass(frozen=True)
class SweepGrid:
    """Ascending evaluation grid: ``count`` points from ``start`` to ``stop``."""

    start: float
    stop: float
    count: int
    spacing: str = "log"

    def __post_init__(self) -> None:
        if self.count < 2:
            raise ConfigError(f"grid count must be at least 2, got {self.count!r}")
        if not self.start < self.stop:
            raise ConfigError(f"grid needs start < stop, got {self.start!r} >= {self.stop!r}")
        if self.spacing not in ("linear", "log"):
            raise ConfigError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        if self.spacing == "log" and self.start <= 0.0:
            raise ConfigError("log spacing requires a positive start")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepSpec:
    """One declarative sweep.

    ``energy`` is the detector gap used by bare ``delta_p_H`` sweeps that
    carry no cycle context (it defaults to ``e2`` when a cycle is given).
    ``population`` may be a number, the string ``"cyc"`` for the cyclic
    value, or None when the series parameter supplies it. ``a_hot`` fixes
    the hot-side acceleration for ``dE`` sweeps without an ``a_H`` series.
    """

    variable: str
    grid: SweepGrid
    v: float
    outputs: tuple[str, ...]
    energy: float | None = None
    a_hot: float | None = None
    a_cold: float | None = None
    r_cold: float | None = None
    e1: float | None = None
    e2: float | None = None
    delta_e: float | None = None
    population: float | str | None = None
    series: tuple[str, tuple[float, ...]] | None = None
    decoupled_duration: float | None = None
    oracle_check: bool = False
    oracle_rtol: float = 1e-3
    oracle_stride: int = 10
    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)

    def __post_init__(self) -> None:
        if self.variable not in SWEEP_VARIABLES:
            raise ConfigError(f"unknown sweep variable {self.variable!r}")
        if not self.outputs:
            raise ConfigError("at least one output column is required")
        for name in self.outputs:
            if name not in SCALAR_OUTPUTS and name != "ledger":
                raise ConfigError(f"unknown output {name!r}")
        if not 0.0 < self.v < 1.0:
            raise ConfigError(f"speed must satisfy 0 < v < 1, got {self.v!r}")
        if self.series is not None:
            name, values = self.series
            if name not in SERIES_PARAMETERS:
                raise ConfigError(f"unknown series parameter {name!r}")
            if len(values) == 0:
                raise ConfigError("series needs at least one value")
        if isinstance(self.population, str):
            if self.population != "cyc":
                raise ConfigError(
                    f"population must be a number or 'cyc', got {self.population!r}"
                )
        elif self.population is not None and not 0.0 <= self.population <= 1.0:
            raise ConfigError(f"population must lie in [0, 1], got {self.population!r}")
        if self.oracle_stride < 1:
            raise ConfigError(f"oracle stride must be positive, got {self.oracle_stride!r}")
        needs_cycle = any(out in _CYCLE_OUTPUTS for out in self.outputs)
        if self.decoupled_duration is not None:
            if needs_cycle:
                raise ConfigError("decoupled duration applies to bare response sweeps only")
            if not self.decoupled_duration > 0.0:
                raise ConfigError("decoupled duration must be positive")

    @property
    def columns(self) -> tuple[str, ...]:
        cols = [self.variable]
        if self.series is not None:
            cols.append(self.series[0])
        for name in self.outputs:
            if name == "ledger":
                cols.extend(LEDGER_COLUMNS)
            else:
                cols.append(name)
        if self.oracle_check:
            cols.append("oracle_rel_dev")
        return tuple(cols)


@dataclass(frozen=True)
class SweepRow:
    """One evaluated grid point: column names and matching values.

    Values are finite floats; the oracle deviation cell is None on rows the
    thinned oracle check skipped.
    """

    columns: tuple[str, ...]
    values: tuple[float | None, ...]

    def as_dict(self) -> dict[str, float | None]:
        return dict(zip(self.columns, self.values))


def _cold_acceleration(spec: SweepSpec, v: float) -> float | None:
    if spec.a_cold is not None:
        return spec.a_cold
    if spec.r_cold is not None:
        g = lorentz_gamma(v)
        return g * g * v * v / spec.r_cold
    return None


def _resolve_gaps(spec: SweepSpec, swept: float) -> tuple[float, float]:
    e1 = spec.e1 if spec.e1 is not None else 1.0
    if spec.variable == "dE":
        return e1, e1 + swept
    if spec.e2 is not None:
        return e1, spec.e2
    if spec.delta_e is not None:
        return e1, e1 + spec.delta_e
    raise ConfigError("cycle outputs need e2 or delta_e (or a dE sweep)")


def _evaluate_point(spec: SweepSpec, series_value: float | None, swept: float) -> SweepRow:
    v = spec.v
    population = spec.population
    a_hot = spec.a_hot
    if spec.series is not None:
        name = spec.series[0]
        if name == "p":
            population = series_value
        elif name == "v":
            v = float(series_value)
        elif name == "a_H":
            a_hot = float(series_value)

    g = lorentz_gamma(v)
    g2v2 = g * g * v * v
    if spec.variable == "a_H":
        a_hot = float(swept)
    elif spec.variable == "R_hot":
        a_hot = g2v2 / float(swept)
    if a_hot is None:
        raise ConfigError("hot-side acceleration is undetermined (set a_hot or sweep a_H/R_hot)")
    if not a_hot > 0.0:
        raise ConfigError(f"hot-side acceleration must be positive, got {a_hot!r}")
    t_hot = (
        spec.decoupled_duration
        if spec.decoupled_duration is not None
        else math.pi * g * v / a_hot
    )

    needs_cycle = any(out in _CYCLE_OUTPUTS for out in spec.outputs)
    config = None
    if needs_cycle:
        a_cold = _cold_acceleration(spec, v)
        if a_cold is None:
            raise ConfigError("cycle outputs need a_C or R_cold")
        e1, e2 = _resolve_gaps(spec, swept)
        try:
            config = CycleConfig.from_accelerations(v, a_hot, a_cold, e1, e2)
        except ValueError as exc:
            raise ConfigError(f"invalid cycle at {spec.variable} = {swept!r}: {exc}") from exc

    p_value: float | None
    if population == "cyc":
        if config is None:
            raise ConfigError("population 'cyc' needs a full cycle configuration")
        p_value = cyclic_population(config)
    else:
        p_value = population  # float or None

    gap = spec.energy
    if gap is None and config is not None:
        gap = config.e2
    elif gap is None and spec.e2 is not None:
        gap = spec.e2

    values: list[float | None] = [float(swept)]
    if spec.series is not None:
        values.append(float(series_value))

    for name in spec.outputs:
        if name == "delta_p_H":
            if p_value is None:
                raise ConfigError("delta_p_H needs a population (fixed, series or 'cyc')")
            if gap is None:
                raise ConfigError("delta_p_H needs a gap: set energy or a cycle")
            try:
                values.append(transition_probability(p_value, gap, t_hot, a_hot))
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
        elif name == "p_cyc":
            values.append(cyclic_population(config))
        elif name == "W_ext":
            values.append(extracted_work(config))
        elif name == "eta":
            values.append(efficiency(config))
        elif name == "T_H":
            values.append(t_hot)
        elif name == "T_C":
            values.append(config.cold_contact[1])
        elif name == "gamma":
            values.append(g)
        elif name == "ledger":
            ledger = stroke_ledger(config, p_value)
            values.extend(
                (
                    ledger.q1, ledger.w1, ledger.q2, ledger.w2,
                    ledger.q3, ledger.w3, ledger.q4, ledger.w4,
                    ledger.w_total, ledger.q_total,
                )
            )

    for val in values:
        if val is not None and not math.isfinite(val):
            raise ConfigError(
                f"non-finite output at {spec.variable} = {swept!r}: {values!r}"
            )
    return SweepRow(spec.columns, tuple(values))


def _oracle_deviation(spec: SweepSpec, row: SweepRow) -> float:
    """Relative deviation closed form vs quadrature oracle at this row's hot contact."""
    data = row.as_dict()
    v = data.get("v", spec.v)
    a_hot = data.get("a_H")
    if a_hot is None:
        if spec.variable == "R_hot":
            g = lorentz_gamma(v)
            a_hot = g * g * v * v / data[spec.variable]
        else:
            a_hot = spec.a_hot
    g = lorentz_gamma(v)
    t_hot = (
        spec.decoupled_duration
        if spec.decoupled_duration is not None
        else math.pi * g * v / a_hot
    )
    gap = spec.energy
    if gap is None:
        _, e2 = _resolve_gaps(spec, data[spec.variable])
        gap = e2
    closed = response(gap, t_hot, a_hot)
    oracle = response_extrapolated(ResponseQuery(gap, t_hot, a_hot), spec.quadrature)
    return abs(closed - oracle.value) / max(abs(closed), 1e-6)


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[SweepRow]:
    """Evaluate the sweep, series-major and ascending in the swept value.

    Grid points are independent, so they may be evaluated with ``jobs``
    worker threads; rows are assembled in grid order either way and the
    result is bit-for-bit independent of ``jobs``. With ``oracle_check``
    every ``oracle_stride``-th row of each series is validated against the
    quadrature oracle and the relative deviation recorded; a deviation above
    ``oracle_rtol`` raises :class:`OracleMismatchError`.
    """
    if jobs < 1:
        raise ConfigError(f"jobs must be positive, got {jobs!r}")
    grid = spec.grid.values()
    series_values: tuple[float | None, ...]
    if spec.series is not None:
        series_values = tuple(spec.series[1])
    else:
        series_values = (None,)
    tasks = [(s, float(x)) for s in series_values for x in grid]

    if jobs == 1:
        rows = [_evaluate_point(spec, s, x) for s, x in tasks]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda t: _evaluate_point(spec, *t), tasks))

    if spec.oracle_check:
        checked: list[SweepRow] = []
        n = len(grid)
        for idx, row in enumerate(rows):
            dev: float | None = None
            if (idx % n) % spec.oracle_stride == 0:
                dev = _oracle_deviation(spec, row)
                if dev > spec.oracle_rtol:
                    raise OracleMismatchError(
                        f"closed form vs oracle deviation {dev:g} exceeds "
                        f"{spec.oracle_rtol:g} at row {idx}"
                    )
            checked.append(SweepRow(row.columns, row.values + (dev,)))
        rows = checked
    return rows


def _format_cell(value: float | None) -> str:
    if value is None:
        return ""
    # 17 significant digits: locale-independent and round-trips any float64
    # exactly.
    return format(float(value), ".16e")


def emit_csv(rows: Iterable[SweepRow], destination) -> None:
    """Write rows as UTF-8 CSV: header, one line per row, LF endings.

    Refuses empty input (no file is created) and mismatched column sets.
    """
    rows = list(rows)
    if not rows:
        raise ConfigError("refusing to write an empty sweep")
    columns = rows[0].columns
    for row in rows:
        if row.columns != columns:
            raise ConfigError("rows carry inconsistent columns")
    path = Path(destination)
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_format_cell(v) for v in row.values))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


# --- presets -----------------------------------------------------------

_FIG_SPEED = 0.999
_POPULATION_SET = (0.0, 0.25, 0.5, 0.75)
_SPEED_SET = (0.9, 0.99, 0.999)


def preset(name: str) -> SweepSpec:
    """Built-in sweep specifications ``fig2`` .. ``fig6``.

    fig2: delta_p_H against a_H in [15, 500] for the population set
          (0, 0.25, 0.5, 0.75) at v = 0.999, gap 1, coupled window.
    fig3: the same study against the hot-arc radius (grid mapped from the
          fig2 acceleration range).
    fig4: cyclic population against a_H in [16, 500] for speeds
          (0.9, 0.99, 0.999), cold side a_C = 15, gaps 1 -> 2.
    fig5: work output for the fig4 configurations, swept over
          a_H in [31, 500]; the start sits just above break-even
          a_H = a_C e2 / e1 = 30 so every point extracts work.
    fig6: work output against the gap change dE in [0.01, 10] for
          a_H in (30, 50, 100), cold side a_C = 20, v = 0.999, e1 = 1.
    """
    v = _FIG_SPEED
    g = lorentz_gamma(v)
    g2v2 = g * g * v * v
    if name == "fig2":
        return SweepSpec(
            variable="a_H",
            grid=SweepGrid(15.0, 500.0, 100, "log"),
            v=v,
            energy=1.0,
            series=("p", _POPULATION_SET),
            outputs=("delta_p_H",),
        )
    if name == "fig3":
        return SweepSpec(
            variable="R_hot",
            grid=SweepGrid(g2v2 / 500.0, g2v2 / 15.0, 100, "log"),
            v=v,
            energy=1.0,
            series=("p", _POPULATION_SET),
            outputs=("delta_p_H",),
        )
    if name == "fig4":
        return SweepSpec(
            variable="a_H",
            grid=SweepGrid(16.0, 500.0, 100, "log"),
            v=v,
            a_cold=15.0,
            e1=1.0,
            e2=2.0,
            population="cyc",
            series=("v", _SPEED_SET),
            outputs=("p_cyc",),
        )
    if name == "fig5":
        return SweepSpec(
            variable="a_H",
            grid=SweepGrid(31.0, 500.0, 100, "log"),
            v=v,
            a_cold=15.0,
            e1=1.0,
            e2=2.0,
            population="cyc",
            series=("v", _SPEED_SET),
            outputs=("W_ext",),
        )
    if name == "fig6":
        return SweepSpec(
            variable="dE",
            grid=SweepGrid(0.01, 10.0, 200, "log"),
            v=v,
            a_cold=20.0,
            e1=1.0,
            population="cyc",
            series=("a_H", (30.0, 50.0, 100.0)),
            outputs=("W_ext",),
        )
    raise ConfigError(f"unknown preset {name!r}")


PRESET_NAMES = ("fig2", "fig3", "fig4", "fig5", "fig6")
