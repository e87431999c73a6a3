"""
Simulation scenarios and rejection-rate experiments.

Four ways of coupling two series with uniform marginals on [-1, 1]:

* ``linear``: ``2 Phi(Z) - 1`` applied to a cross-correlated FGN pair.
* ``parabolic`` and ``wavy``: X is ``2 Phi(Z) - 1`` for one FGN, Y a noisy
  even function of X.
* ``rectangular``: two independent uniform-marginal FGN transforms, rotated
  jointly by ``pi v / 12``.

Replication i of an experiment always draws from the seed stream
``derive_seed(master_seed, i)``, so results do not depend on the order in
which replications run or on the number of worker threads.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .dcov import PairedSample
from .fgn import (HurstSpec, SeedLike, child_seeds, derive_seed,
                  generate_correlated_pair, generate_fgn)
from .reference_rates import (HURSTS, PARAMS, REFERENCE_RATES,
                              SAMPLE_SIZES, SUSPECT_CELLS)
from .subordination import (transform_parabolic, transform_rotation,
                            transform_uniform, transform_wavy)
from .subsampling import SubsamplingConfig, independence_test

KINDS = ("linear", "parabolic", "wavy", "rectangular")

#: scenario kind and statistic family behind each published table; the
#: scaling within a family follows the Hurst parameter
TABLES = {
    1: ("linear", "dcov"),
    2: ("linear", "pearson"),
    3: ("parabolic", "dcov"),
    4: ("parabolic", "pearson"),
    5: ("wavy", "dcov"),
    6: ("wavy", "pearson"),
    7: ("rectangular", "dcov"),
    8: ("rectangular", "pearson"),
}


@dataclass(frozen=True)
class Scenario:
    """Dependence model ``kind`` with parameter ``param`` (r or v)."""

    kind: str
    param: float
    hurst: float
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown scenario kind {self.kind!r}; expected one of {KINDS}")
        HurstSpec(self.hurst, self.n)  # validates hurst and n
        p = float(self.param)
        if self.kind == "linear" and not -1.0 <= p <= 1.0:
            raise ValueError(f"cross correlation r must lie in [-1, 1], got {p}")
        if self.kind == "parabolic" and p * p > 15.0 / 4.0 + 1e-12:
            raise ValueError(f"|v| must not exceed sqrt(15)/2, got {p}")
        if self.kind == "wavy" and p * p > 4725.0 / 242.0 + 1e-12:
            raise ValueError(f"|v| must not exceed sqrt(4725/242), got {p}")
        object.__setattr__(self, "param", p)
        object.__setattr__(self, "n", int(self.n))

    @property
    def spec(self) -> HurstSpec:
        return HurstSpec(self.hurst, self.n)


@dataclass
class ExperimentResult:
    """Rejection count of one scenario under one test configuration."""

    scenario: Scenario
    config: SubsamplingConfig
    replications: int
    rejections: int
    master_seed: int
    wall_time: float = 0.0
    reference: float | None = None
    p_values: np.ndarray | None = field(default=None, repr=False)

    @property
    def rejection_rate(self) -> float:
        return self.rejections / self.replications

    @property
    def abs_diff(self) -> float | None:
        if self.reference is None:
            return None
        return abs(self.rejection_rate - self.reference)

    def to_dict(self) -> dict:
        return {"kind": self.scenario.kind, "param": self.scenario.param,
                "hurst": self.scenario.hurst, "n": self.scenario.n,
                "statistic": self.config.statistic,
                "block_len": self.config.block_len, "lag": self.config.lag,
                "level": self.config.level, "replications": self.replications,
                "rejections": self.rejections, "rate": self.rejection_rate,
                "paper_value": self.reference, "abs_diff": self.abs_diff,
                "master_seed": self.master_seed, "wall_time": self.wall_time}


def simulate_scenario(sc: Scenario, seed: SeedLike) -> PairedSample:
    """One paired sample of length ``sc.n`` from the scenario."""
    spec = sc.spec
    ss_gauss, ss_other = child_seeds(seed, 2)
    if sc.kind == "linear":
        z, z_tilde = generate_correlated_pair(spec, sc.param, ss_gauss)
        return PairedSample(transform_uniform(z.values),
                            transform_uniform(z_tilde.values))
    x = transform_uniform(generate_fgn(spec, ss_gauss).values)
    if sc.kind == "parabolic":
        return PairedSample(x, transform_parabolic(x, sc.param, ss_other))
    if sc.kind == "wavy":
        return PairedSample(x, transform_wavy(x, sc.param, ss_other))
    eta = transform_uniform(generate_fgn(spec, ss_other).values)
    return PairedSample(*transform_rotation(x, eta, sc.param))


def _one_replication(sc, cfg, master_seed, index):
    sample = simulate_scenario(sc, derive_seed(master_seed, index))
    report = independence_test(sample.x, sample.y, cfg)
    return report.reject, report.p_analogue


def rejection_rate(sc: Scenario, cfg: SubsamplingConfig, replications: int,
                   master_seed: int, threads: int = 1,
                   keep_p_values: bool = False) -> ExperimentResult:
    """Share of ``replications`` independent samples on which the test rejects.

    ``threads > 1`` spreads replications over a thread pool; the outcome is
    identical to the serial run.
    """
    if int(replications) != replications or replications < 1:
        raise ValueError("replications must be a positive integer")
    if threads < 1:
        raise ValueError("threads must be at least 1")
    if cfg.blocks(sc.n) < 1:
        raise ValueError(f"n={sc.n} is too short for block length "
                         f"{cfg.block_len} and lag {cfg.lag}")
    start = time.perf_counter()
    indices = range(int(replications))

    def run(i):
        return _one_replication(sc, cfg, master_seed, i)

    if threads == 1:
        outcomes = [run(i) for i in indices]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(run, indices))
    rejects = sum(1 for r, _ in outcomes if r)
    p_vals = np.array([p for _, p in outcomes]) if keep_p_values else None
    return ExperimentResult(sc, cfg, int(replications), rejects, int(master_seed),
                            time.perf_counter() - start, p_values=p_vals)


def reference_rate(table_id: int, gamma: float, n: int, hurst: float,
                   param: float) -> float | None:
    """Published rate of one table cell; ``None`` if absent or flagged."""
    key = (table_id, float(gamma), int(n), float(hurst), float(param))
    if key in SUSPECT_CELLS:
        return None
    return REFERENCE_RATES.get(key)


def table_config(table_id: int, n: int, hurst: float, gamma: float = 0.5,
                 level: float = 0.05) -> SubsamplingConfig:
    """Test configuration of one table cell.

    For ``H <= 3/4`` the statistics are ``sqrt(n) V_n`` and
    ``n^{-1/2} |sum (x - mean x)(y - mean y)|``; above, with ``D = 2 - 2H``,
    ``n^D V_n`` and ``n^{D-1} |sum ...|``.
    """
    _, statistic = _table(table_id)
    return SubsamplingConfig.for_hurst(n, hurst, gamma, statistic=statistic,
                                       level=level)


def _table(table_id):
    if table_id not in TABLES:
        raise ValueError(f"table id must be one of 1..8, got {table_id}")
    return TABLES[table_id]


def reproduce_table(table_id: int, replications: int = 500, gamma: float = 0.5,
                    master_seed: int = 0, threads: int = 1, sizes=None,
                    hursts=None, params=None, progress=None):
    """Rerun the grid of one table and pair each cell with its published rate.

    ``sizes``, ``hursts`` and ``params`` restrict the grid (defaults: the
    full published grid). All cells share ``master_seed``, i.e. cells with
    equal n reuse the same underlying random streams. ``progress`` is
    called with each finished :class:`ExperimentResult`.
    """
    kind, _ = _table(table_id)
    sizes = SAMPLE_SIZES if sizes is None else sizes
    hursts = HURSTS if hursts is None else hursts
    params = PARAMS[table_id] if params is None else params
    results = []
    for n in sizes:
        for h in hursts:
            cfg = table_config(table_id, n, h, gamma)
            for p in params:
                sc = Scenario(kind, p, h, n)
                res = rejection_rate(sc, cfg, replications, master_seed, threads)
                res.reference = reference_rate(table_id, gamma, n, h, p)
                results.append(res)
                if progress is not None:
                    progress(res)
    return results


def binomial_se(rate: float, replications: int) -> float:
    """Standard error of a rejection rate estimated from ``replications`` draws."""
    return math.sqrt(max(rate * (1.0 - rate), 0.0) / replications)
