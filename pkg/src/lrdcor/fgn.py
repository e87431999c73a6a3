"""
Fractional Gaussian noise and cross-correlated Gaussian pairs.

Sample paths are drawn by circulant embedding of the Toeplitz covariance
(Davies & Harte, 1987; Wood & Chan, 1994), which reproduces the target
autocovariance exactly at O(n log n) cost.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Any, Optional, Union

import numpy as np

SeedLike = Union[int, np.random.SeedSequence]

#: circulant eigenvalues below ``-EIGEN_TOL`` are treated as an embedding failure
EIGEN_TOL = 1e-9


class EmbeddingError(RuntimeError):
    """The circulant embedding produced a significantly negative eigenvalue."""


@dataclass(frozen=True)
class HurstSpec:
    """Hurst parameter and sample length of an FGN path."""

    hurst: float
    length: int

    def __post_init__(self):
        if not 0.0 < self.hurst < 1.0:
            raise ValueError(f"hurst must lie in (0, 1), got {self.hurst}")
        if int(self.length) != self.length or self.length < 2:
            raise ValueError(f"length must be an integer >= 2, got {self.length}")
        object.__setattr__(self, "length", int(self.length))

    @property
    def lrd_param(self) -> float:
        """Long-range dependence parameter ``D = 2 - 2H``."""
        return 2.0 - 2.0 * self.hurst

    @property
    def is_lrd(self) -> bool:
        return 0.5 < self.hurst < 1.0


@dataclass
class TimeSeries:
    """A real-valued sample path plus the metadata it was generated from."""

    values: np.ndarray
    spec: Optional[HurstSpec] = None
    seed: Any = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 1:
            raise ValueError("a TimeSeries holds a one-dimensional vector")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("TimeSeries values must be finite")

    def __len__(self):
        return self.values.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.values
        return self.values.astype(dtype)


def as_seed_sequence(seed: SeedLike) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(int(seed))


def child_seeds(seed: SeedLike, count: int):
    """``count`` independent child seeds of ``seed``.

    Unlike ``SeedSequence.spawn`` this does not mutate ``seed``, so calling
    it twice on the same object gives the same children.
    """
    ss = as_seed_sequence(seed)
    return [np.random.SeedSequence(ss.entropy, spawn_key=ss.spawn_key + (j,))
            for j in range(count)]


def derive_seed(master_seed: int, index: int) -> np.random.SeedSequence:
    """Seed of the ``index``-th independent stream under ``master_seed``.

    This is numpy's ``SeedSequence`` hash of the pair ``(master_seed, index)``
    (identical to ``SeedSequence(master_seed).spawn(index + 1)[index]``), so
    replication ``index`` gets the same stream whether it is run first, last,
    serially or on another worker.
    """
    if index < 0:
        raise ValueError("stream index must be non-negative")
    return np.random.SeedSequence(int(master_seed), spawn_key=(int(index),))


def fgn_autocov(k, hurst: float):
    """Autocovariance of unit-variance fractional Gaussian noise at lag ``k``.

    ``rho(k) = (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}) / 2``. Works
    elementwise on arrays of lags.
    """
    if not 0.0 < hurst < 1.0:
        raise ValueError(f"hurst must lie in (0, 1), got {hurst}")
    k = np.abs(np.asarray(k, dtype=float))
    two_h = 2.0 * hurst
    out = 0.5 * (np.abs(k + 1.0) ** two_h - 2.0 * k ** two_h
                 + np.abs(k - 1.0) ** two_h)
    if out.ndim == 0:
        return float(out)
    return out


@functools.lru_cache(maxsize=64)
def _embedding_eigenvalues(n: int, hurst: float) -> np.ndarray:
    # first row of the 2n x 2n circulant: rho(0..n), rho(n-1..1)
    lags = np.arange(n + 1)
    rho = fgn_autocov(lags, hurst)
    row = np.concatenate([rho, rho[-2:0:-1]])
    eig = np.fft.fft(row).real
    eig.setflags(write=False)
    return eig


def circulant_eigenvalues(n: int, hurst: float) -> np.ndarray:
    """Eigenvalues of the circulant matrix embedding the n x n FGN covariance."""
    return _embedding_eigenvalues(int(n), float(hurst)).copy()


def _checked_sqrt_eigenvalues(n, hurst):
    eig = _embedding_eigenvalues(n, hurst)
    lo = eig.min()
    if lo < -EIGEN_TOL:
        raise EmbeddingError(
            f"circulant embedding for n={n}, H={hurst} has eigenvalue {lo:.3e}")
    return np.sqrt(np.clip(eig, 0.0, None) / eig.shape[0])


def sample_fgn(n: int, hurst: float, rng: np.random.Generator, size=None):
    """Draw FGN paths from an existing generator.

    Returns an array of shape ``(n,)``, or ``(size, n)`` when ``size`` is
    given. Each path uses the real part of one complex circulant draw.
    """
    n = int(n)
    root = _checked_sqrt_eigenvalues(n, float(hurst))
    m = root.shape[0]
    shape = (m,) if size is None else (int(size), m)
    noise = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    paths = np.fft.fft(root * noise, axis=-1).real
    return paths[..., :n]


def generate_fgn(spec: HurstSpec, seed: SeedLike) -> TimeSeries:
    """Zero-mean, unit-variance FGN path of length ``spec.length``.

    The same ``(spec, seed)`` always yields the same vector.
    """
    rng = np.random.default_rng(as_seed_sequence(seed))
    values = sample_fgn(spec.length, spec.hurst, rng)
    return TimeSeries(values, spec=spec, seed=seed)


def generate_correlated_pair(spec: HurstSpec, cross_corr: float,
                             seed: SeedLike):
    """Two FGN paths with cross covariance ``r * rho(|i - j|)``.

    The second path is ``r Z + sqrt(1 - r^2) Z'`` with ``Z'`` an independent
    FGN, which reproduces the block covariance
    ``[[Sigma, r Sigma], [r Sigma, Sigma]]`` exactly. ``Z`` and ``Z'`` come
    from two independent child streams of ``seed``.
    """
    r = float(cross_corr)
    if not -1.0 <= r <= 1.0:
        raise ValueError(f"cross correlation must lie in [-1, 1], got {r}")
    ss_z, ss_other = child_seeds(seed, 2)
    z = sample_fgn(spec.length, spec.hurst, np.random.default_rng(ss_z))
    other = sample_fgn(spec.length, spec.hurst,
                       np.random.default_rng(ss_other))
    z_tilde = r * z + np.sqrt(1.0 - r * r) * other
    meta = {"cross_corr": r}
    return (TimeSeries(z, spec=spec, seed=seed, meta=meta),
            TimeSeries(z_tilde, spec=spec, seed=seed, meta=meta))
