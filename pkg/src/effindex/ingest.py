"""Loading of price histories and conversion to log scales.

Input files are two-column CSV (``date,price``) with ISO dates in strictly
increasing order and strictly positive prices.  An optional manifest CSV
(``symbol,full_name,group``) maps symbols to display names and groups.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, replace
from datetime import date
from pathlib import Path

import numpy as np

from .errors import (
    ParseError,
    TooShortError,
    ValidationError,
    WrongKindError,
)

MIN_SERIES_LENGTH = 64
LOG_PRICE = "log-price"
LOG_RETURN = "log-return"
UNGROUPED = "ungrouped"

_HEADER = ("date", "price")
_MANIFEST_HEADER = ("symbol", "full_name", "group")


@dataclass(frozen=True)
class PriceSeries:
    """A dated price history for one symbol."""

    symbol: str
    group: str
    dates: tuple[date, ...]
    prices: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "prices", np.asarray(self.prices, dtype=float))
        if len(self.dates) != self.prices.shape[0]:
            raise ValidationError(
                f"{self.symbol}: {len(self.dates)} dates but "
                f"{self.prices.shape[0]} prices"
            )
        if not np.all(np.isfinite(self.prices)):
            raise ValidationError(f"{self.symbol}: non-finite price")
        if self.prices.size and self.prices.min() <= 0.0:
            raise ValidationError(f"{self.symbol}: non-positive price")
        for i in range(1, len(self.dates)):
            if self.dates[i] <= self.dates[i - 1]:
                raise ValidationError(
                    f"{self.symbol}: dates not strictly increasing at "
                    f"{self.dates[i].isoformat()}"
                )

    def __len__(self) -> int:
        return self.prices.shape[0]

    def with_group(self, group: str) -> "PriceSeries":
        return replace(self, group=group)


@dataclass(frozen=True)
class LogSeries:
    """A log-scale series tagged with what its values mean.

    ``kind`` is either ``"log-price"`` (levels, e.g. cumulated returns) or
    ``"log-return"`` (first differences of log prices).  Estimators check
    the tag so that a path statistic is never run on increments and vice
    versa.
    """

    symbol: str
    values: np.ndarray
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if self.kind not in (LOG_PRICE, LOG_RETURN):
            raise ValidationError(f"unknown series kind {self.kind!r}")
        if not np.all(np.isfinite(self.values)):
            raise ValidationError(f"{self.symbol}: non-finite value")

    def __len__(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class ManifestEntry:
    symbol: str
    full_name: str
    group: str


@dataclass(frozen=True)
class Manifest:
    """Symbol metadata keyed by symbol."""

    entries: dict[str, ManifestEntry] = field(default_factory=dict)

    def group_for(self, symbol: str) -> str:
        entry = self.entries.get(symbol)
        return entry.group if entry is not None else UNGROUPED

    def name_for(self, symbol: str) -> str:
        entry = self.entries.get(symbol)
        return entry.full_name if entry is not None else symbol

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.entries


def _read_rows(path: Path) -> list[list[str]]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            return list(csv.reader(fh))
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8 ({exc})") from exc


def load_series(path, symbol: str | None = None) -> PriceSeries:
    """Parse one ``date,price`` CSV into a :class:`PriceSeries`.

    Parameters
    ----------
    path : path-like
        CSV file with header ``date,price``, ISO dates, positive prices.
    symbol : str, optional
        Symbol to attach; defaults to the file stem.

    Raises
    ------
    ParseError
        Malformed header, wrong field count, or unparseable literal.  The
        message names the offending line.
    ValidationError
        Non-positive, missing, or non-finite price; dates out of order or
        duplicated.  The message names the offending line.
    TooShortError
        Fewer than ``MIN_SERIES_LENGTH`` data rows.
    """
    path = Path(path)
    if symbol is None:
        symbol = path.stem
    rows = _read_rows(path)
    if not rows:
        raise ParseError(f"{path}: empty file")
    header = tuple(c.strip().lower() for c in rows[0])
    if header != _HEADER:
        raise ParseError(f"{path}: line 1: expected header 'date,price'")

    dates: list[date] = []
    prices: list[float] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue  # blank trailing line
        if len(row) != 2:
            raise ParseError(f"{path}: line {lineno}: expected 2 fields, got {len(row)}")
        raw_date, raw_price = row[0].strip(), row[1].strip()
        try:
            d = date.fromisoformat(raw_date)
        except ValueError as exc:
            raise ParseError(f"{path}: line {lineno}: bad date {raw_date!r}") from exc
        if not raw_price:
            raise ValidationError(f"{path}: line {lineno}: missing price")
        try:
            p = float(raw_price)
        except ValueError as exc:
            raise ParseError(f"{path}: line {lineno}: bad price {raw_price!r}") from exc
        if not math.isfinite(p):
            raise ValidationError(f"{path}: line {lineno}: non-finite price")
        if p <= 0.0:
            raise ValidationError(f"{path}: line {lineno}: non-positive price {p}")
        if dates and d <= dates[-1]:
            raise ValidationError(
                f"{path}: line {lineno}: date {d.isoformat()} not after "
                f"{dates[-1].isoformat()}"
            )
        dates.append(d)
        prices.append(p)

    if len(prices) < MIN_SERIES_LENGTH:
        raise TooShortError(
            f"{path}: {len(prices)} rows, need at least {MIN_SERIES_LENGTH}"
        )
    return PriceSeries(symbol=symbol, group=UNGROUPED, dates=tuple(dates),
                       prices=np.asarray(prices))


def load_manifest(path) -> Manifest:
    """Parse a ``symbol,full_name,group`` CSV.  Duplicate symbols are an error."""
    path = Path(path)
    rows = _read_rows(path)
    if not rows:
        raise ParseError(f"{path}: empty file")
    header = tuple(c.strip().lower() for c in rows[0])
    if header != _MANIFEST_HEADER:
        raise ParseError(f"{path}: line 1: expected header 'symbol,full_name,group'")
    entries: dict[str, ManifestEntry] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 3:
            raise ParseError(f"{path}: line {lineno}: expected 3 fields, got {len(row)}")
        sym, name, group = (c.strip() for c in row)
        if not sym:
            raise ValidationError(f"{path}: line {lineno}: empty symbol")
        if sym in entries:
            raise ValidationError(f"{path}: line {lineno}: duplicate symbol {sym!r}")
        entries[sym] = ManifestEntry(sym, name, group or UNGROUPED)
    return Manifest(entries)


def to_log_prices(series: PriceSeries) -> LogSeries:
    """Natural log of the price path, same length as the input."""
    return LogSeries(series.symbol, np.log(series.prices), LOG_PRICE)


def to_log_returns(series: LogSeries) -> LogSeries:
    """First differences of a log-price series (length shrinks by one)."""
    if series.kind != LOG_PRICE:
        raise WrongKindError(
            f"{series.symbol}: need {LOG_PRICE!r}, got {series.kind!r}"
        )
    if len(series) < 2:
        raise TooShortError(f"{series.symbol}: need at least 2 log prices")
    return LogSeries(series.symbol, np.diff(series.values), LOG_RETURN)
