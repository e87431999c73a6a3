"""
Monthly data workflow: CSV ingestion, small-trend decomposition and
pairwise independence tests on the residual series.

CSV schema: UTF-8 text with header ``year,month,value``, one row per month,
months 1-12 in strictly consecutive order, decimal point, no missing values.

The package ships three synthetic monthly series (``rhine``, ``amazon``,
``jutai``; 96 months from January 2000) in which the last two share a
common long-memory driver and the first is independent of both.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple

import numpy as np

from .fgn import HurstSpec, SeedLike, child_seeds, sample_fgn
from .subsampling import SubsamplingConfig, TestReport, independence_test

PERIOD = 12
FIXTURE_NAMES = ("rhine", "amazon", "jutai")


class IngestError(ValueError):
    """Malformed monthly CSV input; ``row`` is the 1-based file line."""

    def __init__(self, message: str, row: int | None = None):
        self.row = row
        super().__init__(f"row {row}: {message}" if row is not None else message)


@dataclass(frozen=True)
class MonthlySeries:
    """Consecutive monthly values starting at ``start = (year, month)``."""

    values: np.ndarray
    start: tuple = (2000, 1)
    name: str = ""
    period: int = PERIOD

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float).ravel()
        if values.size == 0:
            raise ValueError("a monthly series needs at least one value")
        if not np.all(np.isfinite(values)):
            raise ValueError("missing or non-finite values are not supported")
        year, month = self.start
        if not 1 <= int(month) <= 12:
            raise ValueError(f"start month must lie in 1..12, got {month}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "start", (int(year), int(month)))

    def __len__(self):
        return self.values.size

    def months(self):
        """``(year, month)`` of every observation."""
        year, month = self.start
        idx = np.arange(len(self)) + (month - 1)
        return [(year + int(i) // 12, int(i) % 12 + 1) for i in idx]


class Decomposition(NamedTuple):
    trend: np.ndarray      # one level per cycle
    seasonal: np.ndarray   # one effect per position in the cycle, summing to 0
    residual: np.ndarray   # same length as the input


def ingest_csv(path) -> MonthlySeries:
    """Read a ``year,month,value`` file into a :class:`MonthlySeries`."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    rows = [(i + 1, r) for i, r in enumerate(rows) if any(c.strip() for c in r)]
    if not rows:
        raise IngestError("empty file")
    line, header = rows[0]
    if [c.strip().lower() for c in header] != ["year", "month", "value"]:
        raise IngestError(f"expected header 'year,month,value', got {','.join(header)!r}",
                          line)
    if len(rows) == 1:
        raise IngestError("file has a header but no data rows")
    values, prev, start = [], None, None
    for line, row in rows[1:]:
        if len(row) != 3:
            raise IngestError(f"expected 3 fields, got {len(row)}", line)
        try:
            year, month = int(row[0]), int(row[1])
        except ValueError:
            raise IngestError(f"year and month must be integers, got {row[0]!r}, {row[1]!r}",
                              line) from None
        if not 1 <= month <= 12:
            raise IngestError(f"month {month} outside 1..12", line)
        try:
            val = float(row[2])
        except ValueError:
            raise IngestError(f"non-numeric value {row[2]!r}", line) from None
        if not math.isfinite(val):
            raise IngestError(f"non-finite value {row[2]!r}", line)
        if prev is None:
            start = (year, month)
        else:
            expect = (prev[0] + prev[1] // 12, prev[1] % 12 + 1)
            if (year, month) != expect:
                raise IngestError(f"chronology gap: expected {expect[0]}-{expect[1]:02d} "
                                  f"after {prev[0]}-{prev[1]:02d}, got {year}-{month:02d}",
                                  line)
        prev = (year, month)
        values.append(val)
    name = os.path.splitext(os.path.basename(os.fspath(path)))[0]
    return MonthlySeries(np.array(values), start, name)


def write_csv(series: MonthlySeries, path) -> None:
    """Write ``series`` in the ``year,month,value`` schema."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["year", "month", "value"])
        for (year, month), val in zip(series.months(), series.values):
            writer.writerow([year, month, repr(float(val))])


def small_trend_decompose(series: MonthlySeries) -> Decomposition:
    """Yearly-mean trend, averaged seasonal deviations and residuals.

    The series is cut into J consecutive cycles of ``period`` values
    (counted from its first observation). Then ``trend_j`` is the mean of
    cycle j, ``seasonal_k`` the mean over cycles of ``x_jk - trend_j`` and
    ``residual_jk = x_jk - trend_j - seasonal_k``.
    """
    values = series.values if isinstance(series, MonthlySeries) else np.asarray(series, float)
    period = getattr(series, "period", PERIOD)
    n = values.size
    if n % period:
        raise ValueError(f"length {n} is not a whole number of {period}-month "
                         f"cycles ({n % period} trailing values)")
    cycles = n // period
    if cycles < 2:
        raise ValueError("decomposition needs at least two full cycles")
    grid = values.reshape(cycles, period)
    trend = grid.mean(axis=1)
    dev = grid - trend[:, None]
    seasonal = dev.mean(axis=0)
    residual = (dev - seasonal[None, :]).ravel()
    return Decomposition(trend, seasonal, residual)


def reconstruct(dec: Decomposition) -> np.ndarray:
    """``trend + seasonal + residual`` laid out as the original series."""
    cycles, period = dec.trend.size, dec.seasonal.size
    base = dec.trend[:, None] + dec.seasonal[None, :]
    return base.ravel() + dec.residual.reshape(cycles * period)


def default_config(n: int, **kwargs) -> SubsamplingConfig:
    """Block length ``floor(sqrt(n))`` and lag ``floor(n/10)``."""
    return SubsamplingConfig.default(n, 0.5, **kwargs)


def pairwise_tests(series, cfg: SubsamplingConfig | None = None,
                   deseasonalize: bool = True):
    """Independence test for every pair of series, diagonal included.

    Returns a symmetric list-of-lists of :class:`TestReport`; entry
    ``(i, j)`` and ``(j, i)`` are the same report, computed with the
    earlier series in the X role.
    """
    series = list(series)
    if not series:
        raise ValueError("need at least one series")
    data = [small_trend_decompose(s).residual if deseasonalize
            else np.asarray(getattr(s, "values", s), float) for s in series]
    lengths = {d.size for d in data}
    if len(lengths) != 1:
        raise ValueError(f"series lengths differ: {sorted(lengths)}")
    if cfg is None:
        cfg = default_config(data[0].size)
    k = len(data)
    out = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            rep = independence_test(data[i], data[j], cfg)
            out[i][j] = out[j][i] = rep
    return out


def shared_driver_pair(n: int, hurst: float, loading: float, seed: SeedLike):
    """Two FGN-based series ``a Z0 + sqrt(1 - a^2) Z_i``, i = 1, 2.

    ``loading`` a = 0 gives independent series; the lag-0 correlation is
    ``a^2``.
    """
    if not 0.0 <= loading <= 1.0:
        raise ValueError("loading must lie in [0, 1]")
    HurstSpec(hurst, n)
    seeds = child_seeds(seed, 3)
    z = [sample_fgn(n, hurst, np.random.default_rng(s)) for s in seeds]
    rest = math.sqrt(1.0 - loading ** 2)
    return loading * z[0] + rest * z[1], loading * z[0] + rest * z[2]


def _seasonal_profile(amplitude, phase):
    k = np.arange(PERIOD)
    return amplitude * np.cos(2.0 * math.pi * (k - phase) / PERIOD)


def synthetic_fixture(seed: SeedLike = 2000, n: int = 96, hurst: float = 0.7,
                      loading: float = 0.8):
    """Synthetic monthly discharge-like series keyed by fixture name.

    ``amazon`` and ``jutai`` share a long-memory driver with the given
    ``loading``; ``rhine`` is independent of both. Each series adds a
    yearly level, a seasonal cycle and a positive offset to its noise.
    """
    if n % PERIOD:
        raise ValueError("fixture length must be a whole number of years")
    ss_pair, ss_rhine = child_seeds(seed, 2)
    amazon, jutai = shared_driver_pair(n, hurst, loading, ss_pair)
    rhine = sample_fgn(n, hurst, np.random.default_rng(ss_rhine))
    years = n // PERIOD
    shapes = {"rhine": (rhine, 2300.0, 600.0, 1.5, 400.0),
              "amazon": (amazon, 180000.0, 50000.0, 5.0, 15000.0),
              "jutai": (jutai, 3000.0, 1500.0, 4.0, 400.0)}
    out = {}
    for name, (noise, level, amp, phase, scale) in shapes.items():
        drift = level * (1.0 + 0.01 * np.arange(years))
        base = drift[:, None] + _seasonal_profile(amp, phase)[None, :]
        out[name] = MonthlySeries(base.ravel() + scale * noise, (2000, 1), name)
    return out


def fixture_path(name: str):
    """Path of a shipped fixture CSV."""
    if name not in FIXTURE_NAMES:
        raise ValueError(f"unknown fixture {name!r}; expected one of {FIXTURE_NAMES}")
    return resources.files("lrdcor") / "data" / f"{name}.csv"


def load_fixture(name: str) -> MonthlySeries:
    with resources.as_file(fixture_path(name)) as path:
        return ingest_csv(path)
