"""
Sampling-window (block subsampling) approximation of the null distribution
of an independence statistic, and the resulting test.

For a paired series of length n, block length l and lag d, the block
statistics are

    T_{l,k} = T_l(X_k..X_{k+l-1}, Y_{k+d}..Y_{k+d+l-1}),   k = 1..m,

with m = n - l - d. Shifting Y by d decouples the two coordinates of each
block, so the blocks mimic the statistic's law under independence. The
test rejects when the full-sample statistic exceeds the empirical
``(1 - level)``-quantile of the block values.

The distance-covariance statistics are built on ``V_n = sqrt(V_n^2)``:
``sqrt(n) V_n`` when both LRD parameters exceed 1/2 and ``n^D V_n`` when
``D < 1/2``. These are the scalings under which the statistic has a
non-degenerate limit, which the subsampling approximation needs; scaling
``V_n^2`` by ``sqrt(n)`` instead (``dcov_sq_sqrt_n``) drives the null
rejection rate towards 0.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .dcov import dcov_squared_blocks, dcov_squared_pairwise, normalization_factor

STATISTICS = ("dcov_sqrt_n", "dcov_n_pow_D", "pearson_abs_cov",
              "pearson_cov_n_pow_D", "dcov_sq_sqrt_n")
_PEARSON = ("pearson_abs_cov", "pearson_cov_n_pow_D")

# block matrices of about this many entries are handled per batch
_BATCH_ELEMS = 1 << 21


@dataclass(frozen=True)
class SubsamplingConfig:
    """Block geometry, statistic and level of the subsampling test.

    ``statistic`` is one of ``dcov_sqrt_n`` (``sqrt(l) V_l``),
    ``dcov_n_pow_D`` (``l^D V_l``, needs ``lrd_param``),
    ``pearson_abs_cov`` (``l^{-1/2} |sum (x - mean x)(y - mean y)|``),
    ``pearson_cov_n_pow_D`` (``l^{D-1} |sum (x - mean x)(y - mean y)|``,
    needs ``lrd_param``) or ``dcov_sq_sqrt_n`` (``sqrt(l) V_l^2``). The
    full-sample statistic uses n in place of l.
    """

    block_len: int
    lag: int
    statistic: str = "dcov_sqrt_n"
    level: float = 0.05
    lrd_param: float | None = None

    def __post_init__(self):
        if int(self.block_len) != self.block_len or self.block_len < 1:
            raise ValueError(f"block_len must be a positive integer, got {self.block_len}")
        if int(self.lag) != self.lag or self.lag < 0:
            raise ValueError(f"lag must be a non-negative integer, got {self.lag}")
        if self.statistic not in STATISTICS:
            raise ValueError(f"unknown statistic {self.statistic!r}; "
                             f"expected one of {STATISTICS}")
        if not 0.0 < self.level < 1.0:
            raise ValueError(f"level must lie in (0, 1), got {self.level}")
        if self.statistic in ("dcov_n_pow_D", "pearson_cov_n_pow_D"):
            normalization_factor(2, "n_pow_D", self.lrd_param)
        object.__setattr__(self, "block_len", int(self.block_len))
        object.__setattr__(self, "lag", int(self.lag))

    @classmethod
    def default(cls, n: int, gamma: float = 0.5, **kwargs):
        """``l = floor(n^gamma)`` and ``d = floor(n / 10)``."""
        if n < 3:
            raise ValueError("need n >= 3 for any block geometry")
        block_len = max(int(math.floor(n ** gamma + 1e-9)), 1)
        return cls(block_len=block_len, lag=n // 10, **kwargs)

    @classmethod
    def for_hurst(cls, n: int, hurst: float, gamma: float = 0.5,
                  statistic: str = "dcov", **kwargs):
        """Default geometry with the scaling matched to ``D = 2 - 2H``.

        ``statistic="dcov"`` selects ``dcov_sqrt_n`` for ``D >= 1/2`` and
        ``dcov_n_pow_D`` otherwise; ``statistic="pearson"`` likewise picks
        between ``pearson_abs_cov`` and ``pearson_cov_n_pow_D``. Any other
        value is passed through unchanged.
        """
        choices = {"dcov": ("dcov_sqrt_n", "dcov_n_pow_D"),
                   "pearson": ("pearson_abs_cov", "pearson_cov_n_pow_D")}
        if statistic in choices:
            lrd = 2.0 - 2.0 * hurst
            short, long_ = choices[statistic]
            if lrd < 0.5:
                kwargs["lrd_param"] = lrd
                statistic = long_
            else:
                statistic = short
        return cls.default(n, gamma, statistic=statistic, **kwargs)

    def blocks(self, n: int) -> int:
        """Number of blocks ``m = n - l - d`` for a series of length n."""
        return n - self.block_len - self.lag

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SubsamplingDistribution:
    """Block statistics ``T_{l,k}``, k = 1..m, in block order."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float).ravel()
        if values.size < 1:
            raise ValueError("a subsampling distribution needs at least one block")
        if not np.all(np.isfinite(values)):
            raise ValueError("block statistics must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def m(self) -> int:
        return self.values.size

    def sorted(self) -> np.ndarray:
        return np.sort(self.values)


@dataclass(frozen=True)
class TestReport:
    """Outcome of :func:`independence_test`."""

    statistic: float
    threshold: float
    p_analogue: float
    reject: bool
    config: SubsamplingConfig
    n: int
    m: int

    __test__ = False

    def to_dict(self) -> dict:
        return {"statistic": self.statistic, "threshold": self.threshold,
                "p_analogue": self.p_analogue, "reject": self.reject,
                "n": self.n, "m": self.m, "config": self.config.to_dict()}


def _pair(x, y):
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.shape != y.shape:
        raise ValueError(f"x and y must have equal length, got {x.size} and {y.size}")
    return x, y


def _from_dcov_sq(v2, length, cfg):
    """Scaled statistic from ``V^2`` (scalar or array)."""
    if cfg.statistic == "dcov_sq_sqrt_n":
        return math.sqrt(length) * v2
    if cfg.statistic == "dcov_n_pow_D":
        factor = normalization_factor(length, "n_pow_D", cfg.lrd_param)
    else:
        factor = math.sqrt(length)
    return factor * np.sqrt(v2)


def _cov_factor(length, cfg):
    if cfg.statistic == "pearson_cov_n_pow_D":
        return float(length) ** (cfg.lrd_param - 1.0)
    return 1.0 / math.sqrt(length)


def statistic_value(x, y, cfg: SubsamplingConfig) -> float:
    """The configured statistic on one paired sample of any length."""
    x, y = _pair(x, y)
    n = x.size
    if cfg.statistic in _PEARSON:
        return _cov_factor(n, cfg) * abs(float(np.dot(x - x.mean(), y - y.mean())))
    return float(_from_dcov_sq(dcov_squared_pairwise(x, y), n, cfg))


def _block_values(xb, yb, cfg):
    l = xb.shape[1]
    if cfg.statistic in _PEARSON:
        xc = xb - xb.mean(axis=1, keepdims=True)
        yc = yb - yb.mean(axis=1, keepdims=True)
        return _cov_factor(l, cfg) * np.abs(np.einsum("ki,ki->k", xc, yc))
    return _from_dcov_sq(dcov_squared_blocks(xb, yb), l, cfg)


def block_statistics(x, y, cfg: SubsamplingConfig) -> SubsamplingDistribution:
    """Statistics of the ``m = n - l - d`` lagged block pairs.

    Block k (0-based here) pairs ``x[k:k+l]`` with ``y[k+d:k+d+l]``.
    """
    x, y = _pair(x, y)
    n, l, d = x.size, cfg.block_len, cfg.lag
    m = cfg.blocks(n)
    if m < 1:
        raise ValueError(f"series of length {n} is too short for block length "
                         f"{l} and lag {d} (need n >= l + d + 1)")
    xw = sliding_window_view(x, l)[:m]
    yw = sliding_window_view(y, l)[d:d + m]
    out = np.empty(m)
    step = max(_BATCH_ELEMS // (l * l), 1)
    for lo in range(0, m, step):
        out[lo:lo + step] = _block_values(xw[lo:lo + step], yw[lo:lo + step], cfg)
    return SubsamplingDistribution(out)


def empirical_cdf(dist: SubsamplingDistribution, t: float) -> float:
    """``(1/m) #{k : T_{l,k} <= t}``."""
    return float(np.count_nonzero(dist.values <= t)) / dist.m


def quantile(dist: SubsamplingDistribution, p: float) -> float:
    """Order statistic number ``ceil(p m)`` (1-based) of the block values.

    Values of ``p * m`` within 1e-9 of an integer are rounded to it first so
    that e.g. ``0.95 * 100`` selects the 95th value.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    m = dist.m
    pm = p * m
    idx = round(pm) if abs(pm - round(pm)) < 1e-9 else math.ceil(pm)
    idx = min(max(int(idx), 1), m)
    return float(np.partition(dist.values, idx - 1)[idx - 1])


def p_analogue(dist: SubsamplingDistribution, statistic: float) -> float:
    """Share of block statistics at least as large as ``statistic``."""
    return float(np.count_nonzero(dist.values >= statistic)) / dist.m


def independence_test(x, y, cfg: SubsamplingConfig) -> TestReport:
    """Subsampling test of independence between the series x and y.

    Rejects iff the full-sample statistic strictly exceeds the
    ``(1 - level)``-quantile of the block statistics.
    """
    x, y = _pair(x, y)
    dist = block_statistics(x, y, cfg)
    stat = statistic_value(x, y, cfg)
    thr = quantile(dist, 1.0 - cfg.level)
    return TestReport(statistic=stat, threshold=thr,
                      p_analogue=p_analogue(dist, stat), reject=bool(stat > thr),
                      config=cfg, n=x.size, m=dist.m)


def check_blocklength_condition(n: int, block_len: int, lrd_x: float,
                                lrd_y: float, eps: float) -> bool:
    """``l <= n^{(1 + min(D_X, D_Y)) / 2 - eps}``."""
    for name, val in (("lrd_x", lrd_x), ("lrd_y", lrd_y)):
        if not 0.0 < val < 1.0:
            raise ValueError(f"{name} must lie in (0, 1), got {val}")
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    exponent = 0.5 * (1.0 + min(lrd_x, lrd_y)) - eps
    return block_len <= n ** exponent
