"""Small command line around the figure recipes.

    otto-figures render --preset fig2 --in fig2.csv --out fig2.pdf

Exit codes: 0 on success, 1 for missing files, schema mismatches or bad
flags.
"""

from __future__ import annotations

import argparse
import sys

from .recipes import PRESET_NAMES, SchemaError, preset_recipe, render


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="otto-figures")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p_render = sub.add_parser("render", help="render one preset CSV to an image")
    p_render.add_argument("--preset", choices=PRESET_NAMES, required=True)
    p_render.add_argument("--in", dest="csv_path", required=True, help="input CSV")
    p_render.add_argument("--out", dest="output_path", required=True, help="output image")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        summary = render(preset_recipe(args.preset, args.csv_path, args.output_path))
    except (SchemaError, FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(
        f"{summary.figure_id}: {summary.series_count} series "
        f"({', '.join(summary.series_labels)}) -> {summary.output_path}"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
