"""Figure recipes over circular-otto sweep CSVs.

Each recipe names the CSV columns to plot (x, y, and the series grouping
column), the axis labels, and the input/output paths. Rendering draws one
line per distinct series value, with a legend keyed by that value, and
writes a single image file; the CSV is never touched. Only the published
CSV schema is consumed here, so this package stays independent of the
sweep library itself.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace
from pathlib import Path

from matplotlib.figure import Figure


class SchemaError(ValueError):
    """The CSV does not carry the columns or rows the recipe expects."""


@dataclass(frozen=True)
class FigureRecipe:
    figure_id: str
    csv_path: str
    output_path: str
    x_column: str
    y_column: str
    series_column: str
    x_label: str
    y_label: str
    log_x: bool = True


@dataclass(frozen=True)
class RenderSummary:
    """What a render produced: series labels in drawing order and sizes."""

    figure_id: str
    output_path: str
    series_labels: tuple[str, ...]
    points_per_series: tuple[int, ...]

    @property
    def series_count(self) -> int:
        return len(self.series_labels)


_PRESETS = {
    "fig2": dict(
        x_column="a_H", y_column="delta_p_H", series_column="p",
        x_label="$a_H$", y_label=r"$\delta p_H / \lambda^2$",
    ),
    "fig3": dict(
        x_column="R_hot", y_column="delta_p_H", series_column="p",
        x_label="$R_1$", y_label=r"$\delta p_H / \lambda^2$",
    ),
    "fig4": dict(
        x_column="a_H", y_column="p_cyc", series_column="v",
        x_label="$a_H$", y_label=r"$p_\mathrm{cyc}$",
    ),
    "fig5": dict(
        x_column="a_H", y_column="W_ext", series_column="v",
        x_label="$a_H$", y_label=r"$\langle W_\mathrm{ext} \rangle / \lambda^2$",
    ),
    "fig6": dict(
        x_column="dE", y_column="W_ext", series_column="a_H",
        x_label=r"$\Delta \mathcal{E}$", y_label=r"$\langle W_\mathrm{ext} \rangle / \lambda^2$",
    ),
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def preset_recipe(figure_id: str, csv_path: str, output_path: str) -> FigureRecipe:
    """Recipe for one of the built-in sweep presets."""
    if figure_id not in _PRESETS:
        raise SchemaError(f"unknown figure id {figure_id!r}")
    return FigureRecipe(figure_id=figure_id, csv_path=csv_path,
                        output_path=output_path, **_PRESETS[figure_id])


def _format_series(value: float) -> str:
    return format(value, "g")


def read_series(recipe: FigureRecipe) -> dict[str, list[tuple[float, float]]]:
    """Parse the recipe's CSV into {series label: [(x, y), ...]}.

    Series keep their order of first appearance; points keep file order.
    Raises :class:`SchemaError` for missing columns, empty data, or cells
    that do not parse as finite numbers.
    """
    path = Path(recipe.csv_path)
    if not path.is_file():
        raise FileNotFoundError(f"no such CSV: {recipe.csv_path}")
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        needed = (recipe.x_column, recipe.series_column, recipe.y_column)
        missing = [c for c in needed if c not in header]
        if missing:
            raise SchemaError(
                f"{recipe.csv_path}: missing columns {missing}, found {header}"
            )
        series: dict[str, list[tuple[float, float]]] = {}
        for lineno, row in enumerate(reader, start=2):
            try:
                x = float(row[recipe.x_column])
                y = float(row[recipe.y_column])
                key = _format_series(float(row[recipe.series_column]))
            except (TypeError, ValueError) as exc:
                raise SchemaError(f"{recipe.csv_path}:{lineno}: bad cell: {exc}") from exc
            if not (math.isfinite(x) and math.isfinite(y)):
                raise SchemaError(f"{recipe.csv_path}:{lineno}: non-finite value")
            series.setdefault(key, []).append((x, y))
    if not series:
        raise SchemaError(f"{recipe.csv_path}: no data rows")
    return series


def render(recipe: FigureRecipe) -> RenderSummary:
    """Draw the recipe and write its image file.

    One line per series value, legend keyed by ``series_column = value``,
    axes labeled per the recipe. Styling follows the series order, so the
    same CSV always yields the same figure. The output format follows the
    file extension (vector formats such as .pdf or .svg recommended).
    """
    series = read_series(recipe)
    fig = Figure(figsize=(6.4, 4.4))
    ax = fig.add_subplot(111)
    for index, (label, points) in enumerate(series.items()):
        points = sorted(points)
        ax.plot(
            [p[0] for p in points],
            [p[1] for p in points],
            color=f"C{index % 10}",
            label=f"{recipe.series_column} = {label}",
        )
    if recipe.log_x:
        ax.set_xscale("log")
    ax.set_xlabel(recipe.x_label)
    ax.set_ylabel(recipe.y_label)
    ax.legend()
    ax.grid(True, alpha=0.3)
    out = Path(recipe.output_path)
    fig.savefig(out)
    return RenderSummary(
        figure_id=recipe.figure_id,
        output_path=str(out),
        series_labels=tuple(series),
        points_per_series=tuple(len(points) for points in series.values()),
    )


def with_paths(recipe: FigureRecipe, csv_path: str, output_path: str) -> FigureRecipe:
    return replace(recipe, csv_path=csv_path, output_path=output_path)
