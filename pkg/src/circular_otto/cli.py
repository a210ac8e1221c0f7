"""Command-line front end: single response evaluations, full cycle ledgers,
and parameter sweeps written as CSV.

Exit codes: 0 on success, 1 for configuration problems (bad flags, invalid
parameter combinations, malformed config files), 2 for numerical failures
(quadrature non-convergence, unstable extrapolation, oracle mismatch).

Config files are flat ``key = value`` text; ``#`` starts a comment. See the
README for the key reference.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .engine import (
    CycleConfig,
    cyclic_population,
    efficiency,
    extracted_work,
    hot_transition,
    stroke_ledger,
)
from .quadrature import (
    ExtrapolationUnstableError,
    QuadratureConvergenceError,
    response_extrapolated,
)
from .response import ResponseQuery, response
from .sweep import (
    PRESET_NAMES,
    ConfigError,
    OracleMismatchError,
    SweepGrid,
    SweepSpec,
    emit_csv,
    preset,
    run_sweep,
)

_NUMERICAL_ERRORS = (
    QuadratureConvergenceError,
    ExtrapolationUnstableError,
    OracleMismatchError,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for numerical failures.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt(value: float) -> str:
    return format(float(value), ".12g")


# --- config files -------------------------------------------------------

def _parse_kv(text: str, source: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        key, value = key.strip(), value.strip()
        if not key or not value:
            raise ConfigError(f"{source}:{lineno}: empty key or value")
        if key in pairs:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        pairs[key] = value
    return pairs


def _read_config(path: str) -> dict[str, str]:
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {path}")
    return _parse_kv(p.read_text(encoding="utf-8"), path)


def _as_float(pairs: dict[str, str], key: str) -> float | None:
    if key not in pairs:
        return None
    try:
        return float(pairs[key])
    except ValueError as exc:
        raise ConfigError(f"key {key!r}: not a number: {pairs[key]!r}") from exc


def _as_population(raw: str | None):
    if raw is None:
        return None
    if raw == "cyc":
        return "cyc"
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"population must be a number or 'cyc', got {raw!r}") from exc


_SWEEP_KEYS = {
    "sweep", "min", "max", "count", "spacing", "v", "energy", "a_H", "a_C",
    "R_cold", "E1", "E2", "dE", "p", "outputs", "series", "oracle_check",
}


def _sweep_spec_from_config(path: str) -> SweepSpec:
    pairs = _read_config(path)
    unknown = set(pairs) - _SWEEP_KEYS
    if unknown:
        raise ConfigError(f"unknown sweep config keys: {sorted(unknown)}")
    for key in ("sweep", "min", "max", "count", "v", "outputs"):
        if key not in pairs:
            raise ConfigError(f"sweep config is missing required key {key!r}")
    try:
        count = int(pairs["count"])
    except ValueError as exc:
        raise ConfigError(f"count must be an integer, got {pairs['count']!r}") from exc
    grid = SweepGrid(
        float(pairs["min"]), float(pairs["max"]), count, pairs.get("spacing", "log")
    )
    series = None
    if "series" in pairs:
        head, _, tail = pairs["series"].partition(":")
        if not tail:
            raise ConfigError("series must look like 'name: v1, v2, ...'")
        try:
            values = tuple(float(tok) for tok in tail.split(","))
        except ValueError as exc:
            raise ConfigError(f"bad series values in {pairs['series']!r}") from exc
        series = (head.strip(), values)
    outputs = tuple(tok.strip() for tok in pairs["outputs"].split(",") if tok.strip())
    oracle_check = pairs.get("oracle_check", "false").lower()
    if oracle_check not in ("true", "false"):
        raise ConfigError(f"oracle_check must be true or false, got {oracle_check!r}")
    if pairs.get("sweep") == "dE" and "dE" in pairs:
        raise ConfigError("dE cannot be both the swept variable and a fixed key")
    return SweepSpec(
        variable=pairs["sweep"],
        grid=grid,
        v=float(pairs["v"]),
        outputs=outputs,
        energy=_as_float(pairs, "energy"),
        a_hot=_as_float(pairs, "a_H"),
        a_cold=_as_float(pairs, "a_C"),
        r_cold=_as_float(pairs, "R_cold"),
        e1=_as_float(pairs, "E1"),
        e2=_as_float(pairs, "E2"),
        delta_e=_as_float(pairs, "dE"),
        population=_as_population(pairs.get("p")),
        series=series,
        oracle_check=oracle_check == "true",
    )


_CYCLE_KEYS = {"v", "a_H", "a_C", "R_hot", "R_cold", "E1", "E2", "dE", "p"}


def _cycle_from_pairs(pairs: dict[str, str]) -> tuple[CycleConfig, float | str | None]:
    unknown = set(pairs) - _CYCLE_KEYS
    if unknown:
        raise ConfigError(f"unknown cycle config keys: {sorted(unknown)}")
    v = _as_float(pairs, "v")
    if v is None:
        raise ConfigError("cycle config is missing required key 'v'")
    e1 = _as_float(pairs, "E1")
    if e1 is None:
        raise ConfigError("cycle config is missing required key 'E1'")
    e2 = _as_float(pairs, "E2")
    if e2 is None:
        de = _as_float(pairs, "dE")
        if de is None:
            raise ConfigError("cycle config needs E2 or dE")
        e2 = e1 + de
    a_hot, a_cold = _as_float(pairs, "a_H"), _as_float(pairs, "a_C")
    r_hot, r_cold = _as_float(pairs, "R_hot"), _as_float(pairs, "R_cold")
    try:
        if a_hot is not None or a_cold is not None:
            if a_hot is None or a_cold is None:
                raise ConfigError("give both a_H and a_C (or both R_hot and R_cold)")
            config = CycleConfig.from_accelerations(v, a_hot, a_cold, e1, e2)
        elif r_hot is not None and r_cold is not None:
            config = CycleConfig(v, r_hot, r_cold, e1, e2)
        else:
            raise ConfigError("cycle config needs a_H/a_C or R_hot/R_cold")
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return config, _as_population(pairs.get("p"))


# --- subcommands --------------------------------------------------------

def _cmd_response(args) -> int:
    query = ResponseQuery(args.energy, args.duration, args.accel)
    closed = response(args.energy, args.duration, args.accel)
    print(f"F = {_fmt(closed)}")
    if args.oracle:
        oracle = response_extrapolated(query)
        dev = abs(closed - oracle.value) / max(abs(closed), 1e-6)
        print(f"oracle = {_fmt(oracle.value)}")
        print(f"oracle_error_estimate = {_fmt(oracle.error)}")
        print(f"rel_deviation = {_fmt(dev)}")
    return 0


def _cmd_cycle(args) -> int:
    if args.config:
        config, population = _cycle_from_pairs(_read_config(args.config))
    else:
        required = (args.speed, args.e1)
        if any(x is None for x in required):
            raise ConfigError("cycle needs --config, or --speed with --e1 and gap/geometry flags")
        e2 = args.e2 if args.e2 is not None else (
            args.e1 + args.delta_e if args.delta_e is not None else None
        )
        if e2 is None:
            raise ConfigError("cycle needs --e2 or --delta-e")
        try:
            if args.a_hot is not None or args.a_cold is not None:
                if args.a_hot is None or args.a_cold is None:
                    raise ConfigError("give both --a-hot and --a-cold")
                config = CycleConfig.from_accelerations(
                    args.speed, args.a_hot, args.a_cold, args.e1, e2
                )
            elif args.r_hot is not None and args.r_cold is not None:
                config = CycleConfig(args.speed, args.r_hot, args.r_cold, args.e1, e2)
            else:
                raise ConfigError("cycle needs --a-hot/--a-cold or --r-hot/--r-cold")
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        population = _as_population(args.population)

    p_cyc = cyclic_population(config)
    p = p_cyc if population in (None, "cyc") else float(population)
    ledger = stroke_ledger(config, p)
    e2_, t_hot, a_hot = config.hot_contact
    e1_, t_cold, a_cold = config.cold_contact
    out = [
        ("v", config.v), ("gamma", config.gamma),
        ("a_H", a_hot), ("a_C", a_cold),
        ("R_hot", config.r_hot), ("R_cold", config.r_cold),
        ("T_H", t_hot), ("T_C", t_cold),
        ("E1", e1_), ("E2", e2_),
        ("p", p), ("p_cyc", p_cyc),
        ("delta_p_H", hot_transition(config, p)),
        ("Q1", ledger.q1), ("W1", ledger.w1),
        ("Q2", ledger.q2), ("W2", ledger.w2),
        ("Q3", ledger.q3), ("W3", ledger.w3),
        ("Q4", ledger.q4), ("W4", ledger.w4),
        ("W_total", ledger.w_total), ("Q_total", ledger.q_total),
        ("W_ext", extracted_work(config)),
        ("eta", efficiency(config)),
    ]
    for key, value in out:
        print(f"{key} = {_fmt(value)}")
    return 0


def _cmd_sweep(args) -> int:
    if (args.preset is None) == (args.config is None):
        raise ConfigError("sweep needs exactly one of --preset or --config")
    spec = preset(args.preset) if args.preset else _sweep_spec_from_config(args.config)
    if args.oracle_check:
        spec = _replace_spec(spec, oracle_check=True)
    if args.decoupled_T is not None:
        spec = _replace_spec(spec, decoupled_duration=args.decoupled_T)
    rows = run_sweep(spec, jobs=args.jobs)
    emit_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def _replace_spec(spec: SweepSpec, **changes) -> SweepSpec:
    import dataclasses

    return dataclasses.replace(spec, **changes)


def _build_parser() -> _Parser:
    parser = _Parser(prog="circular-otto", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_resp = sub.add_parser("response", help="evaluate the closed-form response once")
    p_resp.add_argument("--energy", type=float, required=True, help="signed detector gap")
    p_resp.add_argument("--duration", type=float, required=True, help="window timescale")
    p_resp.add_argument("--accel", type=float, required=True, help="centripetal acceleration")
    p_resp.add_argument(
        "--oracle", action="store_true",
        help="also run the quadrature oracle and report the deviation",
    )
    p_resp.set_defaults(func=_cmd_response)

    p_cyc = sub.add_parser("cycle", help="full stroke ledger for one engine configuration")
    p_cyc.add_argument("--config", help="flat key=value config file")
    p_cyc.add_argument("--speed", type=float, help="detector speed v in (0, 1)")
    p_cyc.add_argument("--a-hot", type=float, dest="a_hot", help="hot-arc acceleration")
    p_cyc.add_argument("--a-cold", type=float, dest="a_cold", help="cold-arc acceleration")
    p_cyc.add_argument("--r-hot", type=float, dest="r_hot", help="hot-arc radius")
    p_cyc.add_argument("--r-cold", type=float, dest="r_cold", help="cold-arc radius")
    p_cyc.add_argument("--e1", type=float, help="small gap")
    p_cyc.add_argument("--e2", type=float, help="large gap")
    p_cyc.add_argument("--delta-e", type=float, dest="delta_e", help="gap change e2 - e1")
    p_cyc.add_argument(
        "--population", default=None,
        help="prepared excited-state population, or 'cyc' (default)",
    )
    p_cyc.set_defaults(func=_cmd_cycle)

    p_sweep = sub.add_parser("sweep", help="run a parameter sweep and write CSV")
    p_sweep.add_argument("--preset", choices=PRESET_NAMES, help="built-in sweep")
    p_sweep.add_argument("--config", help="flat key=value sweep description")
    p_sweep.add_argument("--out", required=True, help="destination CSV path")
    p_sweep.add_argument(
        "--oracle-check", action="store_true", dest="oracle_check",
        help="validate every 10th grid point against the quadrature oracle",
    )
    p_sweep.add_argument("--jobs", type=int, default=1, help="worker threads")
    p_sweep.add_argument(
        "--decoupled-T", type=float, default=None, dest="decoupled_T",
        help="hold the window timescale fixed instead of coupling it to the "
        "swept geometry (bare response sweeps only)",
    )
    p_sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _NUMERICAL_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
