"""Efficiency index: distance of measured dynamics from the random-walk ideal.

Each measure is compared with its value for an ideal efficient market
(Hurst 0.5, fractal dimension 1.5, rescaled entropy 1), normalized by the
width of its admissible range, and the index is the Euclidean norm of the
three deviations.  Zero means indistinguishable from the ideal; larger
values mean stronger structure of some kind.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import (
    DegenerateRegressorError,
    MissingReportError,
    ParseError,
    UnknownSymbolError,
    ValidationError,
)
from .ingest import UNGROUPED, Manifest

REPORT_COLUMNS = (
    "symbol", "group", "h_lw", "h_gph", "h_avg", "d_hw", "d_g", "d_avg",
    "apen", "ei", "rank", "contrib_h", "contrib_d", "contrib_ae",
)


@dataclass(frozen=True)
class MeasureSet:
    """The five raw measures feeding the index for one symbol."""

    h_lw: float
    h_gph: float
    d_hw: float
    d_g: float
    apen_rescaled: float

    @property
    def h_avg(self) -> float:
        return 0.5 * (self.h_lw + self.h_gph)

    @property
    def d_avg(self) -> float:
        return 0.5 * (self.d_hw + self.d_g)


@dataclass(frozen=True)
class IndexBenchmarks:
    """Ideal values and normalizing ranges for the three components."""

    target_h: float = 0.5
    target_d: float = 1.5
    target_ae: float = 1.0
    range_h: float = 1.0
    range_d: float = 1.0
    range_ae: float = 2.0

    def __post_init__(self):
        if min(self.range_h, self.range_d, self.range_ae) <= 0.0:
            raise ValidationError("benchmark ranges must be positive")


@dataclass(frozen=True)
class EfficiencyReport:
    """Index value and its decomposition for one symbol."""

    symbol: str
    group: str
    measures: MeasureSet
    ei: float
    contrib_h: float
    contrib_d: float
    contrib_ae: float
    rank: int | None = None

    @property
    def contribution_shares(self) -> tuple[float, float, float]:
        total = self.contrib_h + self.contrib_d + self.contrib_ae
        if total == 0.0:
            return (0.0, 0.0, 0.0)
        return (self.contrib_h / total, self.contrib_d / total,
                self.contrib_ae / total)


def efficiency_index(measures: MeasureSet,
                     benchmarks: IndexBenchmarks = IndexBenchmarks(),
                     symbol: str = "",
                     group: str = UNGROUPED) -> EfficiencyReport:
    """Compose the three component measures into one index value.

    The contributions are the squared normalized deviations; the index is
    the square root of their sum, so ``ei**2 == contrib_h + contrib_d +
    contrib_ae`` exactly up to rounding.
    """
    ch = ((measures.h_avg - benchmarks.target_h) / benchmarks.range_h) ** 2
    cd = ((measures.d_avg - benchmarks.target_d) / benchmarks.range_d) ** 2
    ca = ((measures.apen_rescaled - benchmarks.target_ae) / benchmarks.range_ae) ** 2
    return EfficiencyReport(
        symbol=symbol,
        group=group,
        measures=measures,
        ei=math.sqrt(ch + cd + ca),
        contrib_h=ch,
        contrib_d=cd,
        contrib_ae=ca,
    )


def rank(reports: list[EfficiencyReport]) -> list[EfficiencyReport]:
    """Ascending by index value (most efficient first), ties by symbol."""
    ordered = sorted(reports, key=lambda r: (r.ei, r.symbol))
    return [replace(r, rank=i) for i, r in enumerate(ordered, start=1)]


def _resolve_group(report: EfficiencyReport, manifest: Manifest | None) -> str:
    if manifest is not None and report.symbol in manifest:
        return manifest.group_for(report.symbol)
    if report.group:
        return report.group
    raise UnknownSymbolError(f"no group for symbol {report.symbol!r}")


def group_means(reports: list[EfficiencyReport],
                manifest: Manifest | None = None) -> list[tuple[str, float]]:
    """Mean index per group, ordered most efficient group first."""
    sums: dict[str, list[float]] = {}
    for r in reports:
        sums.setdefault(_resolve_group(r, manifest), []).append(r.ei)
    means = [(g, sum(v) / len(v)) for g, v in sums.items()]
    means.sort(key=lambda gv: (gv[1], gv[0]))
    return means


def dh_regression(reports: list[EfficiencyReport]) -> tuple[float, float]:
    """OLS of mean fractal dimension on mean Hurst exponent.

    Returns ``(slope, intercept)``.  For exactly self-similar paths the
    population slope is -1; short-memory structure in returns pushes it
    toward zero or above.
    """
    if len(reports) < 3:
        raise ValidationError(f"need at least 3 reports, got {len(reports)}")
    xs = [r.measures.h_avg for r in reports]
    ys = [r.measures.d_avg for r in reports]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0.0:
        raise DegenerateRegressorError("all mean Hurst values identical")
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    return slope, my - slope * mx


def _row(report: EfficiencyReport) -> list[str]:
    m = report.measures
    nums = (m.h_lw, m.h_gph, m.h_avg, m.d_hw, m.d_g, m.d_avg,
            m.apen_rescaled, report.ei)
    contribs = (report.contrib_h, report.contrib_d, report.contrib_ae)
    return (
        [report.symbol, report.group]
        + [f"{v:.6f}" for v in nums]
        + ["" if report.rank is None else str(report.rank)]
        + [f"{v:.6f}" for v in contribs]
    )


def write_report_csv(reports: list[EfficiencyReport], path) -> None:
    """Fixed-schema CSV, floats at six decimals, one row per report."""
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for r in reports:
            writer.writerow(_row(r))


def write_report_json(reports: list[EfficiencyReport], path) -> None:
    """Same content as the CSV but nested and at full precision."""
    payload = []
    for r in reports:
        m = r.measures
        payload.append({
            "symbol": r.symbol,
            "group": r.group,
            "measures": {
                "h_lw": m.h_lw, "h_gph": m.h_gph, "h_avg": m.h_avg,
                "d_hw": m.d_hw, "d_g": m.d_g, "d_avg": m.d_avg,
                "apen": m.apen_rescaled,
            },
            "ei": r.ei,
            "rank": r.rank,
            "contributions": {
                "h": r.contrib_h, "d": r.contrib_d, "ae": r.contrib_ae,
            },
        })
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def read_report_csv(path) -> list[EfficiencyReport]:
    """Load a report CSV written by :func:`write_report_csv`."""
    path = Path(path)
    if not path.exists():
        raise MissingReportError(f"{path}: no such report")
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != REPORT_COLUMNS:
        raise ParseError(f"{path}: not a report file (bad header)")
    reports = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(REPORT_COLUMNS):
            raise ParseError(f"{path}: line {lineno}: wrong field count")
        try:
            measures = MeasureSet(
                h_lw=float(row[2]), h_gph=float(row[3]),
                d_hw=float(row[5]), d_g=float(row[6]),
                apen_rescaled=float(row[8]),
            )
            reports.append(EfficiencyReport(
                symbol=row[0], group=row[1], measures=measures,
                ei=float(row[9]),
                rank=int(row[10]) if row[10] else None,
                contrib_h=float(row[11]), contrib_d=float(row[12]),
                contrib_ae=float(row[13]),
            ))
        except ValueError as exc:
            raise ParseError(f"{path}: line {lineno}: {exc}") from exc
    return reports
