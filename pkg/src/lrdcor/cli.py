"""
Command line interface: ``lrdcor {gen,test,mc,diag}``.

Exit codes: 0 success (for ``test``: independence not rejected), 3 the
test rejected, 2 invalid input or any other error. JSON documents carry
``"schema_version": 1``; files are written atomically.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__
from .asymptotics import (c_param, gamma_param, iid_autocov, reduction_profile,
                          sigma_sq_cov)
from .fgn import EmbeddingError, HurstSpec, child_seeds, fgn_autocov, generate_fgn
from .fgn import generate_correlated_pair
from .montecarlo import KINDS, TABLES, Scenario, rejection_rate, reproduce_table
from .montecarlo import simulate_scenario
from .pipeline import IngestError, MonthlySeries, ingest_csv, small_trend_decompose
from .reference_rates import PARAMS
from .subordination import (transform_parabolic, transform_rotation,
                            transform_uniform, transform_wavy)
from .subsampling import STATISTICS, SubsamplingConfig, independence_test

SCHEMA_VERSION = 1
EXIT_OK, EXIT_ERROR, EXIT_REJECT = 0, 2, 3


class CliError(Exception):
    """User-facing failure; reported on stderr with exit code 2."""


# ---------------------------------------------------------------- validation

def _ranged(kind, lo=None, hi=None, lo_open=False, hi_open=False):
    def parse(text):
        try:
            val = kind(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {kind.__name__}, got {text!r}")
        if isinstance(val, float) and not math.isfinite(val):
            raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
        bad_lo = lo is not None and (val <= lo if lo_open else val < lo)
        bad_hi = hi is not None and (val >= hi if hi_open else val > hi)
        if bad_lo or bad_hi:
            left = "(" if lo_open else "["
            right = ")" if hi_open else "]"
            span = f"{left}{'-inf' if lo is None else lo}, {'inf' if hi is None else hi}{right}"
            raise argparse.ArgumentTypeError(f"{text} is outside {span}")
        return val
    return parse


def _list_of(parse):
    def inner(text):
        return [parse(part) for part in text.split(",") if part.strip()]
    return inner


HURST = _ranged(float, 0.0, 1.0, lo_open=True, hi_open=True)
UNIT_OPEN = _ranged(float, 0.0, 1.0, lo_open=True, hi_open=True)
POS_INT = _ranged(int, 1)
NONNEG_INT = _ranged(int, 0)
LENGTH = _ranged(int, 2)
SEED = _ranged(int, 0, 2 ** 64 - 1)


# ---------------------------------------------------------------- output

def atomic_write(path: str, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    target = os.path.abspath(path)
    folder = os.path.dirname(target)
    fd, tmp = tempfile.mkstemp(prefix=".lrdcor-", dir=folder)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        atomic_write(path, text)


def _json_text(doc: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2,
                      sort_keys=False, default=_json_default) + "\n"


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serialisable: {type(obj).__name__}")


def _csv_text(header, rows, comment: dict | None = None) -> str:
    buf = io.StringIO()
    if comment is not None:
        buf.write("# " + json.dumps({"schema_version": SCHEMA_VERSION, **comment},
                                    sort_keys=True) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else (repr(v) if isinstance(v, float) else v)
                         for v in row])
    return buf.getvalue()


# ---------------------------------------------------------------- gen

def cmd_gen(args) -> int:
    spec = HurstSpec(args.hurst, args.n)
    config = {"command": "gen", "hurst": args.hurst, "n": args.n, "seed": args.seed,
              "cross_corr": args.cross_corr, "transform": args.transform, "v": args.v}
    if args.transform in ("parabolic", "wavy", "rotation") and args.v is None:
        raise CliError(f"--transform {args.transform} requires --v")
    if args.transform in ("parabolic", "wavy", "rotation") and args.cross_corr is not None:
        raise CliError(f"--cross-corr cannot be combined with --transform {args.transform}")
    ss_main, ss_other = child_seeds(args.seed, 2)
    if args.transform in ("parabolic", "wavy"):
        x = transform_uniform(generate_fgn(spec, ss_main).values)
        fn = transform_parabolic if args.transform == "parabolic" else transform_wavy
        try:
            cols = {"x": x, "y": fn(x, args.v, ss_other)}
        except ValueError as exc:
            raise CliError(f"--v: {exc}") from None
    elif args.transform == "rotation":
        xi = transform_uniform(generate_fgn(spec, ss_main).values)
        eta = transform_uniform(generate_fgn(spec, ss_other).values)
        x, y = transform_rotation(xi, eta, args.v)
        cols = {"x": x, "y": y}
    elif args.cross_corr is not None:
        z, zt = generate_correlated_pair(spec, args.cross_corr, ss_main)
        cols = {"x": z.values, "y": zt.values}
    else:
        cols = {"value": generate_fgn(spec, ss_main).values}
    if args.transform == "uniform":
        cols = {k: transform_uniform(v) for k, v in cols.items()}

    if args.monthly:
        if len(cols) != 1:
            raise CliError("--monthly writes a single series; drop --cross-corr/--transform pairs")
        series = MonthlySeries(cols["value"], args.start)
        rows = [(y, m, float(v)) for (y, m), v in zip(series.months(), series.values)]
        text = _csv_text(["year", "month", "value"], rows)
    else:
        names = list(cols)
        rows = [tuple(float(cols[k][i]) for k in names) for i in range(args.n)]
        text = _csv_text(names, rows, comment=config)
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------- test

def read_paired_csv(path):
    """Columns ``x`` and ``y`` of a CSV file; ``#`` lines are skipped."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            lines = [(i + 1, ln) for i, ln in enumerate(fh)
                     if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    if not lines:
        raise CliError(f"{path}: empty file")
    header = [c.strip() for c in next(csv.reader([lines[0][1]]))]
    if "x" not in header or "y" not in header:
        raise CliError(f"{path}: header must contain columns x and y, got {header}")
    ix, iy = header.index("x"), header.index("y")
    xs, ys = [], []
    for (row_no, text) in lines[1:]:
        row = next(csv.reader([text]))
        if len(row) != len(header):
            raise CliError(f"{path}: row {row_no}: expected {len(header)} fields, got {len(row)}")
        try:
            xv, yv = float(row[ix]), float(row[iy])
        except ValueError:
            raise CliError(f"{path}: row {row_no}: non-numeric value") from None
        if not (math.isfinite(xv) and math.isfinite(yv)):
            raise CliError(f"{path}: row {row_no}: non-finite value")
        xs.append(xv)
        ys.append(yv)
    return np.array(xs), np.array(ys)


def _monthly_values(path, deseasonalize):
    series = ingest_csv(path)
    if deseasonalize:
        return small_trend_decompose(series).residual
    return series.values


def cmd_test(args) -> int:
    if args.pair is not None:
        if args.x is not None or args.y is not None:
            raise CliError("use either --pair or --x/--y, not both")
        if args.deseasonalize:
            raise CliError("--deseasonalize applies to monthly --x/--y files only")
        x, y = read_paired_csv(args.pair)
        source = {"pair": args.pair}
    elif args.x is not None and args.y is not None:
        x = _monthly_values(args.x, args.deseasonalize)
        y = _monthly_values(args.y, args.deseasonalize)
        if x.size != y.size:
            raise CliError(f"series lengths differ: {x.size} vs {y.size}")
        source = {"x": args.x, "y": args.y, "deseasonalize": args.deseasonalize}
    else:
        raise CliError("provide --pair FILE or both --x FILE and --y FILE")
    n = x.size
    if n < 3:
        raise CliError(f"need at least 3 observations, got {n}")
    block_len = args.block_len if args.block_len is not None else math.isqrt(n)
    lag = args.lag if args.lag is not None else n // 10
    try:
        cfg = SubsamplingConfig(block_len, lag, args.statistic, args.level, args.lrd_param)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if cfg.blocks(n) < 1:
        raise CliError(f"--block-len {block_len} and --lag {lag} leave no blocks for n={n}")
    report = independence_test(x, y, cfg)
    doc = report.to_dict()
    doc["input"] = source
    _emit(_json_text(doc), args.out)
    return EXIT_REJECT if report.reject else EXIT_OK


# ---------------------------------------------------------------- mc

MC_COLUMNS = ["table", "kind", "statistic", "gamma", "n", "H", "param", "reps",
              "rate", "paper_value", "abs_diff"]


def cmd_mc(args) -> int:
    if (args.table is None) == (args.kind is None):
        raise CliError("provide exactly one of --table or --kind")
    if args.table is not None:
        table, kind = args.table, TABLES[args.table][0]
        family = TABLES[args.table][1]
    else:
        table, kind, family = None, args.kind, args.family
        if args.params is None:
            raise CliError("--kind requires --params")
    sizes = args.ns if args.ns is not None else [100, 300, 500, 1000]
    hursts = args.hursts if args.hursts is not None else [0.6, 0.7, 0.8, 0.9]
    params = args.params if args.params is not None else list(PARAMS[table])
    for p in params:
        try:
            Scenario(kind, p, hursts[0], max(sizes))
        except ValueError as exc:
            raise CliError(f"--params: {exc}") from None

    def progress(res):
        if args.verbose:
            print(f"n={res.scenario.n} H={res.scenario.hurst} param={res.scenario.param} "
                  f"rate={res.rejection_rate:.3f}", file=sys.stderr)

    if table is not None:
        results = reproduce_table(table, args.reps, args.gamma, args.seed, args.threads,
                                  sizes=sizes, hursts=hursts, params=params,
                                  progress=progress)
    else:
        results = []
        for n in sizes:
            for h in hursts:
                cfg = SubsamplingConfig.for_hurst(n, h, args.gamma, statistic=family)
                for p in params:
                    res = rejection_rate(Scenario(kind, p, h, n), cfg, args.reps,
                                         args.seed, args.threads)
                    progress(res)
                    results.append(res)

    rows = []
    for res in results:
        sc = res.scenario
        rows.append([table, sc.kind, res.config.statistic, args.gamma, sc.n, sc.hurst,
                     sc.param, res.replications, res.rejection_rate, res.reference,
                     res.abs_diff])
    meta = {"command": "mc", "table": table, "kind": kind, "reps": args.reps,
            "gamma": args.gamma, "seed": args.seed}
    if args.format == "json":
        text = _json_text({**meta, "rows": [dict(zip(MC_COLUMNS, r)) for r in rows]})
    else:
        text = _csv_text(MC_COLUMNS, rows)
    _emit(text, args.out)

    if args.scatter_out:
        srows = []
        n_sc = args.scatter_n
        for h in hursts:
            for p in params:
                sample = simulate_scenario(Scenario(kind, p, h, n_sc), args.seed)
                srows += [(h, p, i, float(a), float(b))
                          for i, (a, b) in enumerate(zip(sample.x, sample.y))]
        atomic_write(args.scatter_out, _csv_text(["H", "param", "i", "x", "y"], srows))
    return EXIT_OK


# ---------------------------------------------------------------- diag

def _autocov_pair(args):
    if args.iid:
        return iid_autocov, iid_autocov, {"model": "iid"}
    if args.hurst is None:
        raise CliError("provide --hurst (and optionally --hurst-y) or --iid")
    hy = args.hurst_y if args.hurst_y is not None else args.hurst
    return ((lambda k: fgn_autocov(k, args.hurst)), (lambda k: fgn_autocov(k, hy)),
            {"model": "fgn", "hurst": args.hurst, "hurst_y": hy})


def cmd_diag(args) -> int:
    doc = {"command": "diag", "diagnostic": args.name}
    if args.name == "reduction":
        if args.iid or args.hurst is None:
            raise CliError("diag reduction needs --hurst in (0.5, 1)")
        medians, decreasing = reduction_profile(args.hurst, args.ns, args.reps, args.seed)
        doc.update({"hurst": args.hurst, "lrd_param": 2.0 - 2.0 * args.hurst,
                    "ns": args.ns, "reps": args.reps, "seed": args.seed,
                    "scaled_medians": medians, "monotone_decreasing": decreasing,
                    "status": "pass" if decreasing else "fail"})
    else:
        rho_x, rho_y, model = _autocov_pair(args)
        doc.update(model)
        doc["kmax"] = args.kmax
        if args.name == "sigma":
            value, tail = sigma_sq_cov(rho_x, rho_y, args.kmax, full_output=True)
        else:
            fn = gamma_param if args.name == "gamma" else c_param
            value, tail = fn(args.s, args.t, rho_x, rho_y, args.kmax, full_output=True)
            doc.update({"s": args.s, "t": args.t})
        doc.update({"value": value, "tail_estimate": tail})
    _emit(_json_text(doc), args.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrdcor",
        description="Distance-covariance independence tests for long-memory time series.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate FGN series or scenario pairs as CSV")
    g.add_argument("--hurst", type=HURST, required=True, help="Hurst parameter, in (0, 1)")
    g.add_argument("--n", type=LENGTH, required=True, help="series length, integer >= 2")
    g.add_argument("--seed", type=SEED, required=True, help="seed, integer in [0, 2^64)")
    g.add_argument("--cross-corr", type=_ranged(float, -1.0, 1.0), default=None,
                   help="emit a correlated pair with this cross correlation, in [-1, 1]")
    g.add_argument("--transform", choices=["uniform", "parabolic", "wavy", "rotation"],
                   default=None, help="marginal/dependence transform")
    g.add_argument("--v", type=_ranged(float), default=None,
                   help="transform strength; |v| <= sqrt(15)/2 (parabolic), "
                        "<= sqrt(4725/242) (wavy), any real (rotation)")
    g.add_argument("--monthly", action="store_true",
                   help="write a single series in the year,month,value schema")
    g.add_argument("--start", type=_parse_month, default=(2000, 1),
                   help="first month for --monthly, YYYY-MM (default 2000-01)")
    g.add_argument("--out", default=None, help="output file (default stdout)")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("test", help="subsampling independence test; exit 3 on rejection")
    t.add_argument("--pair", default=None, help="CSV with columns x,y")
    t.add_argument("--x", default=None, help="monthly CSV (year,month,value) for X")
    t.add_argument("--y", default=None, help="monthly CSV (year,month,value) for Y")
    t.add_argument("--deseasonalize", action="store_true",
                   help="test small-trend residuals of the monthly inputs")
    t.add_argument("--block-len", type=POS_INT, default=None,
                   help="block length l >= 1 (default floor(sqrt(n)))")
    t.add_argument("--lag", type=NONNEG_INT, default=None,
                   help="lag d >= 0 between X and Y blocks (default floor(n/10))")
    t.add_argument("--statistic", choices=STATISTICS, default="dcov_sqrt_n",
                   help="test statistic (default dcov_sqrt_n)")
    t.add_argument("--lrd-param", type=_ranged(float, 0.0, 0.5, True, True), default=None,
                   help="D in (0, 1/2) for the *_n_pow_D statistics")
    t.add_argument("--level", type=UNIT_OPEN, default=0.05,
                   help="significance level in (0, 1) (default 0.05)")
    t.add_argument("--out", default=None, help="report file (default stdout)")
    t.set_defaults(func=cmd_test)

    m = sub.add_parser("mc", help="Monte Carlo rejection rates")
    m.add_argument("--table", type=_table_id, default=None, help="published table id, 1..8")
    m.add_argument("--kind", choices=KINDS, default=None,
                   help="scenario kind for a custom grid (instead of --table)")
    m.add_argument("--family", choices=["dcov", "pearson"], default="dcov",
                   help="statistic family for --kind (default dcov)")
    m.add_argument("--reps", type=POS_INT, default=500, help="replications per cell, >= 1")
    m.add_argument("--gamma", type=UNIT_OPEN, default=0.5,
                   help="block length exponent in (0, 1): l = floor(n^gamma)")
    m.add_argument("--seed", type=SEED, default=0, help="master seed, integer in [0, 2^64)")
    m.add_argument("--ns", type=_list_of(_ranged(int, 10)), default=None,
                   help="comma list of sample sizes >= 10 (default 100,300,500,1000)")
    m.add_argument("--hursts", type=_list_of(HURST), default=None,
                   help="comma list of Hurst parameters in (0, 1) (default 0.6,0.7,0.8,0.9)")
    m.add_argument("--params", type=_list_of(_ranged(float)), default=None,
                   help="comma list of r or v values (default: the table's)")
    m.add_argument("--threads", type=POS_INT, default=1, help="worker threads, >= 1")
    m.add_argument("--format", choices=["csv", "json"], default="csv", help="output format")
    m.add_argument("--scatter-out", default=None,
                   help="also write one sample per (H, param) as x,y scatter data")
    m.add_argument("--scatter-n", type=_ranged(int, 10), default=500,
                   help="sample size of the scatter data, >= 10 (default 500)")
    m.add_argument("--verbose", action="store_true", help="report progress on stderr")
    m.add_argument("--out", default=None, help="output file (default stdout)")
    m.set_defaults(func=cmd_mc)

    d = sub.add_parser("diag", help="limit-theory diagnostics as JSON")
    d.add_argument("name", choices=["reduction", "gamma", "cparam", "sigma"])
    d.add_argument("--iid", action="store_true", help="white-noise autocovariances")
    d.add_argument("--hurst", type=HURST, default=None, help="Hurst parameter of X, in (0, 1)")
    d.add_argument("--hurst-y", type=HURST, default=None,
                   help="Hurst parameter of Y, in (0, 1) (default: --hurst)")
    d.add_argument("--s", type=_ranged(float), default=1.0, help="frequency s (default 1)")
    d.add_argument("--t", type=_ranged(float), default=1.0, help="frequency t (default 1)")
    d.add_argument("--kmax", type=NONNEG_INT, default=100_000,
                   help="series truncation lag >= 0 (default 100000)")
    d.add_argument("--ns", type=_list_of(_ranged(int, 16)), default=[256, 1024, 4096],
                   help="comma list of sample sizes >= 16 for reduction")
    d.add_argument("--reps", type=POS_INT, default=20, help="replications per size, >= 1")
    d.add_argument("--seed", type=SEED, default=0, help="master seed, integer in [0, 2^64)")
    d.add_argument("--out", default=None, help="output file (default stdout)")
    d.set_defaults(func=cmd_diag)
    return parser


def _parse_month(text):
    try:
        year, month = (int(p) for p in text.split("-"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected YYYY-MM, got {text!r}")
    if not 1 <= month <= 12:
        raise argparse.ArgumentTypeError(f"month {month} outside 1..12")
    return year, month


def _table_id(text):
    val = _ranged(int)(text)
    if val not in TABLES:
        raise argparse.ArgumentTypeError(f"table id must be one of 1..8, got {val}")
    return val


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, IngestError, EmbeddingError, ValueError, OSError) as exc:
        print(f"lrdcor {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
