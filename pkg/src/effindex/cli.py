"""Command-line front end.

Subcommands: ``analyze`` (batch-estimate a directory of price CSVs and
write report.csv/report.json), ``rank``/``groups``/``scatter`` (derive
tables and optional SVG charts from an existing report), and ``synth``
(write a synthetic price CSV from a seeded generator).

Exit codes: 0 success (warnings allowed), 1 usage error, 2 data error.
Per-series failures in ``analyze`` are reported to stderr as lines
``WARN <symbol> <reason>`` and the series is skipped.
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from datetime import date, timedelta
from pathlib import Path

import numpy as np

from . import charts
from .entropy import ApEnConfig, approximate_entropy
from .errors import EffindexError, NoInputError
from .fractal import genton, hall_wood
from .index import (
    EfficiencyReport,
    MeasureSet,
    dh_regression,
    efficiency_index,
    group_means,
    rank,
    read_report_csv,
    write_report_csv,
    write_report_json,
)
from .ingest import UNGROUPED, Manifest, load_manifest, load_series, to_log_prices, to_log_returns
from .spectral import DEFAULT_BANDWIDTH_EXPONENT, Bandwidth, gph, local_whittle, periodogram
from .synthgen import GeneratorSpec, generate
from .ingest import LOG_PRICE

# Log paths are scaled before exponentiation so that even long rough paths
# stay inside double range when written as prices.  Every estimator in the
# pipeline is invariant to this scaling.
PRICE_SCALE = 0.01
_START_DATE = date(2000, 1, 3)

_CONFIG_KEYS = frozenset({
    "input", "manifest", "out", "bandwidth-exp", "apen-m", "apen-r", "svg",
    "seed", "kind", "length", "hurst", "phi", "weight", "period", "amplitude",
})
_TRUE_WORDS = frozenset({"1", "true", "yes", "on"})
_FALSE_WORDS = frozenset({"0", "false", "no", "off"})


class UsageError(Exception):
    """Bad flags, bad flag values, or a bad config file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    """Resolved settings for one invocation (flags over config over defaults)."""

    input_dir: Path | None = None
    manifest_path: Path | None = None
    output_dir: Path = Path(".")
    bandwidth_exponent: float = DEFAULT_BANDWIDTH_EXPONENT
    apen_embedding: int = 2
    apen_tolerance: float = 0.2
    emit_svg: bool = False


def _read_config_file(path: Path) -> dict[str, str]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    out: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise UsageError(f"{path}: line {lineno}: expected key=value")
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}: line {lineno}: unknown key {key!r}")
        out[key] = value.strip()
    return out


def _pick(args, attr: str, config: dict[str, str], key: str, cast, default):
    """Flag value if given, else config value, else default."""
    val = getattr(args, attr, None)
    if val is not None:
        return val
    if key in config:
        try:
            return cast(config[key])
        except (ValueError, TypeError) as exc:
            raise UsageError(f"config key {key}: bad value {config[key]!r}") from exc
    return default


def _cast_bool(word: str) -> bool:
    lowered = word.lower()
    if lowered in _TRUE_WORDS:
        return True
    if lowered in _FALSE_WORDS:
        return False
    raise ValueError(word)


def _run_config(args) -> RunConfig:
    config = _read_config_file(args.config) if args.config else {}
    cfg = RunConfig(
        input_dir=_pick(args, "input", config, "input", Path, None),
        manifest_path=_pick(args, "manifest", config, "manifest", Path, None),
        output_dir=_pick(args, "out", config, "out", Path, Path(".")),
        bandwidth_exponent=_pick(args, "bandwidth_exp", config, "bandwidth-exp",
                                 float, DEFAULT_BANDWIDTH_EXPONENT),
        apen_embedding=_pick(args, "apen_m", config, "apen-m", int, 2),
        apen_tolerance=_pick(args, "apen_r", config, "apen-r", float, 0.2),
        emit_svg=bool(_pick(args, "svg", config, "svg", _cast_bool, False)),
    )
    if not 0.0 < cfg.bandwidth_exponent < 1.0:
        raise UsageError(f"--bandwidth-exp {cfg.bandwidth_exponent} not in (0, 1)")
    if cfg.apen_embedding < 1:
        raise UsageError(f"--apen-m {cfg.apen_embedding} must be >= 1")
    if not 0.0 < cfg.apen_tolerance <= 1.0:
        raise UsageError(f"--apen-r {cfg.apen_tolerance} not in (0, 1]")
    return cfg


def measure_series(prices, cfg: RunConfig) -> MeasureSet:
    """Run all five estimators on one price series."""
    log_prices = to_log_prices(prices)
    log_returns = to_log_returns(log_prices)
    d_hw = hall_wood(log_prices)
    d_g = genton(log_prices)
    pgram = periodogram(log_returns)
    bandwidth = Bandwidth.from_length(len(log_returns), cfg.bandwidth_exponent)
    h_lw = local_whittle(pgram, bandwidth)
    h_gph = gph(pgram, bandwidth)
    entropy = approximate_entropy(
        log_returns, ApEnConfig(cfg.apen_embedding, cfg.apen_tolerance))
    return MeasureSet(h_lw=h_lw.value, h_gph=h_gph.value,
                      d_hw=d_hw.value, d_g=d_g.value,
                      apen_rescaled=entropy.rescaled)


def _warn(symbol: str, exc: Exception) -> None:
    reason = str(exc).replace("\n", "; ")
    print(f"WARN {symbol} {reason}", file=sys.stderr)


def analyze_directory(cfg: RunConfig) -> tuple[list[EfficiencyReport], int]:
    """Estimate every ``*.csv`` in the input directory; skip failures.

    Returns the ranked reports and the number of files skipped.
    """
    if cfg.input_dir is None or not cfg.input_dir.is_dir():
        raise NoInputError(f"no input series: {cfg.input_dir} is not a directory")
    manifest = load_manifest(cfg.manifest_path) if cfg.manifest_path else Manifest()
    skip = cfg.manifest_path.resolve() if cfg.manifest_path else None
    files = [p for p in sorted(cfg.input_dir.glob("*.csv"))
             if skip is None or p.resolve() != skip]
    if not files:
        raise NoInputError(f"no input series found in {cfg.input_dir}")
    reports: list[EfficiencyReport] = []
    for path in files:
        symbol = path.stem
        try:
            series = load_series(path, symbol)
            measures = measure_series(series, cfg)
        except EffindexError as exc:
            _warn(symbol, exc)
            continue
        reports.append(efficiency_index(
            measures, symbol=symbol, group=manifest.group_for(symbol)))
    if not reports:
        raise NoInputError(f"no input series survived: all {len(files)} failed")
    return rank(reports), len(files) - len(reports)


def cmd_analyze(cfg: RunConfig) -> int:
    ranked, skipped = analyze_directory(cfg)
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    csv_path = cfg.output_dir / "report.csv"
    write_report_csv(ranked, csv_path)
    write_report_json(ranked, cfg.output_dir / "report.json")
    note = f" ({skipped} skipped)" if skipped else ""
    print(f"wrote {csv_path}: {len(ranked)} series{note}")
    return 0


def cmd_rank(cfg: RunConfig) -> int:
    ranked = rank(read_report_csv(cfg.output_dir / "report.csv"))
    path = cfg.output_dir / "rank.csv"
    write_report_csv(ranked, path)
    if cfg.emit_svg:
        charts.rank_chart(ranked, cfg.output_dir / "rank.svg")
        charts.contribution_chart(ranked, cfg.output_dir / "contributions.svg")
    print(f"wrote {path}: {len(ranked)} series")
    return 0


def cmd_groups(cfg: RunConfig) -> int:
    reports = read_report_csv(cfg.output_dir / "report.csv")
    manifest = load_manifest(cfg.manifest_path) if cfg.manifest_path else None
    means = group_means(reports, manifest)
    path = cfg.output_dir / "groups.csv"
    counts: dict[str, int] = {}
    for r in reports:
        g = (manifest.group_for(r.symbol)
             if manifest is not None and r.symbol in manifest else r.group)
        counts[g] = counts.get(g, 0) + 1
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("group,count,mean_ei\n")
        for group, mean in means:
            fh.write(f"{group},{counts[group]},{mean:.6f}\n")
    if cfg.emit_svg:
        charts.group_chart(means, cfg.output_dir / "groups.svg")
    print(f"wrote {path}: {len(means)} groups")
    return 0


def cmd_scatter(cfg: RunConfig) -> int:
    reports = read_report_csv(cfg.output_dir / "report.csv")
    slope, intercept = dh_regression(reports)
    path = cfg.output_dir / "scatter.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("symbol,h_avg,d_avg\n")
        for r in reports:
            fh.write(f"{r.symbol},{r.measures.h_avg:.6f},{r.measures.d_avg:.6f}\n")
        fh.write(f"fit,{slope:.6f},{intercept:.6f}\n")
    if cfg.emit_svg:
        charts.scatter_chart(reports, slope, intercept,
                             cfg.output_dir / "scatter.svg")
    print(f"wrote {path}: slope {slope:.6f}")
    return 0


def cmd_synth(spec: GeneratorSpec, out: Path) -> int:
    series = generate(spec)
    if series.kind == LOG_PRICE:
        log_path = series.values
    else:
        log_path = np.cumsum(series.values)
    prices = np.exp(PRICE_SCALE * log_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write("date,price\n")
        day = _START_DATE
        for p in prices:
            fh.write(f"{day.isoformat()},{float(p)!r}\n")
            day += timedelta(days=1)
    print(f"wrote {out}: kind={spec.kind} length={spec.length} seed={spec.seed}")
    return 0


def _add_common(sub, *, with_input=False, with_manifest=False, analysis=False):
    sub.add_argument("--config", type=Path, default=None,
                     help="key=value config file; explicit flags win")
    sub.add_argument("--out", type=Path, default=None,
                     help="output directory (default: current directory)")
    if with_input:
        sub.add_argument("--input", type=Path, default=None,
                         help="directory of date,price CSV files")
    if with_manifest:
        sub.add_argument("--manifest", type=Path, default=None,
                         help="symbol,full_name,group CSV")
    if analysis:
        sub.add_argument("--bandwidth-exp", dest="bandwidth_exp", type=float,
                         default=None, help="spectral bandwidth exponent (default 0.6)")
        sub.add_argument("--apen-m", dest="apen_m", type=int, default=None,
                         help="entropy embedding dimension (default 2)")
        sub.add_argument("--apen-r", dest="apen_r", type=float, default=None,
                         help="entropy tolerance in std units (default 0.2)")
    sub.add_argument("--svg", action="store_true", default=None,
                     help="also write SVG charts")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="effindex",
                     description="Market efficiency measures from price CSVs.")
    commands = parser.add_subparsers(dest="command", required=True)

    _add_common(commands.add_parser("analyze", help="estimate every series in a directory"),
                with_input=True, with_manifest=True, analysis=True)
    _add_common(commands.add_parser("rank", help="re-rank an existing report"))
    _add_common(commands.add_parser("groups", help="mean index per group"),
                with_manifest=True)
    _add_common(commands.add_parser("scatter", help="dimension-vs-Hurst fit"))

    synth = commands.add_parser("synth", help="write a synthetic price CSV")
    synth.add_argument("--config", type=Path, default=None)
    synth.add_argument("--out", type=Path, required=True, help="output CSV file")
    synth.add_argument("--kind", default=None,
                       help="fgn | fbm | iid-gaussian | ar1 | sine | mixture")
    synth.add_argument("--length", type=int, default=None)
    synth.add_argument("--seed", type=int, default=None)
    synth.add_argument("--hurst", type=float, default=None)
    synth.add_argument("--phi", type=float, default=None)
    synth.add_argument("--weight", type=float, default=None)
    synth.add_argument("--period", type=float, default=None)
    synth.add_argument("--amplitude", type=float, default=None)
    return parser


def _synth_spec(args) -> GeneratorSpec:
    config = _read_config_file(args.config) if args.config else {}
    kind = _pick(args, "kind", config, "kind", str, None)
    length = _pick(args, "length", config, "length", int, None)
    if kind is None or length is None:
        raise UsageError("synth requires --kind and --length")
    return GeneratorSpec(
        kind=kind,
        length=length,
        seed=_pick(args, "seed", config, "seed", int, 0),
        hurst=_pick(args, "hurst", config, "hurst", float, None),
        phi=_pick(args, "phi", config, "phi", float, None),
        weight=_pick(args, "weight", config, "weight", float, None),
        period=_pick(args, "period", config, "period", float, 16.0),
        amplitude=_pick(args, "amplitude", config, "amplitude", float, 1.0),
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        if args.command == "synth":
            return cmd_synth(_synth_spec(args), args.out)
        cfg = _run_config(args)
        if args.command == "analyze":
            return cmd_analyze(cfg)
        if args.command == "rank":
            return cmd_rank(cfg)
        if args.command == "groups":
            return cmd_groups(cfg)
        return cmd_scatter(cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except EffindexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
