"""Render circular-otto sweep CSVs into the five standard figures.

This package consumes only the published CSV schema (and, in its tests,
the sweep command line); it never imports the sweep library.
"""

from .recipes import (
    PRESET_NAMES,
    FigureRecipe,
    RenderSummary,
    SchemaError,
    preset_recipe,
    read_series,
    render,
    with_paths,
)

__all__ = [
    "FigureRecipe",
    "PRESET_NAMES",
    "RenderSummary",
    "SchemaError",
    "preset_recipe",
    "read_series",
    "render",
    "with_paths",
]
