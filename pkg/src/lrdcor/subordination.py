"""
Hermite expansions of transforms of a standard normal variable, and the
marginal/dependence transforms used to build the simulation scenarios.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import hermite_e
from scipy.special import ndtr

from .fgn import SeedLike, as_seed_sequence

MAX_HERMITE_ORDER = 60
QUADRATURE_NODES = 128
RANK_TOL = 1e-8

PARABOLIC_VMAX = math.sqrt(15.0 / 4.0)
WAVY_VMAX = math.sqrt(4725.0 / 242.0)


class RankNotFound(ValueError):
    """No nonzero Hermite coefficient of order 1..qmax."""


def hermite_poly(q: int, x):
    """Probabilists' Hermite polynomial ``He_q(x)``.

    Evaluated with the three-term recurrence
    ``He_{q+1}(x) = x He_q(x) - q He_{q-1}(x)``.
    """
    if int(q) != q or q < 0:
        raise ValueError(f"order must be a non-negative integer, got {q}")
    if q > MAX_HERMITE_ORDER:
        raise ValueError(f"order {q} exceeds the overflow guard {MAX_HERMITE_ORDER}")
    x = np.asarray(x, dtype=float)
    prev, cur = np.ones_like(x), x.copy()
    if q == 0:
        out = prev
    else:
        for j in range(1, q):
            prev, cur = cur, x * cur - j * prev
        out = cur
    return float(out) if out.ndim == 0 else out


@functools.lru_cache(maxsize=8)
def _gauss_hermite(nodes: int):
    # weights normalised so that sum(w * f(x)) ~ E f(X), X ~ N(0, 1)
    x, w = hermite_e.hermegauss(nodes)
    w = w / math.sqrt(2.0 * math.pi)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gaussian_expectation(func, nodes: int = QUADRATURE_NODES) -> float:
    """``E func(X)`` for standard normal ``X`` by Gauss-Hermite quadrature."""
    x, w = _gauss_hermite(nodes)
    val = float(np.sum(w * np.asarray(func(x), dtype=float)))
    if not math.isfinite(val):
        raise FloatingPointError("non-finite quadrature sum")
    return val


def hermite_coefficient(func, q: int, nodes: int = QUADRATURE_NODES) -> float:
    """Hermite coefficient ``J_q(G) = E[G(X) He_q(X)]``."""
    return gaussian_expectation(lambda x: func(x) * hermite_poly(q, x), nodes)


@dataclass(frozen=True)
class HermiteExpansion:
    """Hermite coefficients ``J_0..J_qmax`` of a transform ``G``.

    ``rank`` is ``None`` when no coefficient of order ``1..qmax`` exceeds
    ``rank_tol``. ``second_moment`` is ``E G(X)^2`` and bounds the
    truncated tail through Parseval's identity.
    """

    coefficients: np.ndarray
    rank: int | None
    rank_tol: float
    second_moment: float

    @property
    def qmax(self) -> int:
        return len(self.coefficients) - 1

    def variance_terms(self) -> np.ndarray:
        """``J_q^2 / q!`` for q = 0..qmax."""
        q = np.arange(len(self.coefficients))
        fact = np.array([math.factorial(int(j)) for j in q], dtype=float)
        return self.coefficients ** 2 / fact

    def unexplained_variance(self) -> float:
        """``E G^2 - sum_q J_q^2 / q!``, the mass beyond order qmax."""
        return max(self.second_moment - float(self.variance_terms().sum()), 0.0)

    def tail_bound(self, rho: float) -> float:
        """Bound on the autocovariance terms of order > qmax at correlation rho."""
        return abs(rho) ** (self.qmax + 1) * self.unexplained_variance()


def hermite_expansion(func, qmax: int = 30, rank_tol: float = RANK_TOL,
                      nodes: int = QUADRATURE_NODES) -> HermiteExpansion:
    coeffs = np.array([hermite_coefficient(func, q, nodes)
                       for q in range(qmax + 1)])
    nonzero = np.flatnonzero(np.abs(coeffs[1:]) > rank_tol)
    rank = int(nonzero[0]) + 1 if nonzero.size else None
    second = gaussian_expectation(lambda x: np.asarray(func(x), float) ** 2, nodes)
    return HermiteExpansion(coeffs, rank, rank_tol, second)


def hermite_rank(func, qmax: int = 10, rank_tol: float = RANK_TOL) -> int:
    """Smallest ``q >= 1`` with ``|J_q(G)| > rank_tol``."""
    if qmax < 1:
        raise ValueError("qmax must be at least 1")
    for q in range(1, qmax + 1):
        if abs(hermite_coefficient(func, q)) > rank_tol:
            return q
    raise RankNotFound(f"Hermite rank undetected up to order {qmax}")


def subordinated_autocov(expansion: HermiteExpansion, rho: float) -> float:
    """``Cov(G(xi_1), G(xi_{k+1})) = sum_{q>=1} J_q^2 / q! * rho(k)^q``.

    The series is truncated at ``expansion.qmax``; see
    :meth:`HermiteExpansion.tail_bound` for the neglected remainder.
    """
    if abs(rho) > 1.0:
        raise ValueError("correlation must lie in [-1, 1]")
    terms = expansion.variance_terms()[1:]
    powers = float(rho) ** np.arange(1, len(terms) + 1)
    return float(np.sum(terms * powers))


def transform_uniform(z):
    """``2 Phi(z) - 1``; maps standard normal marginals to U[-1, 1]."""
    return 2.0 * ndtr(np.asarray(z, dtype=float)) - 1.0


def _uniform_noise(n, seed):
    rng = np.random.default_rng(as_seed_sequence(seed))
    return rng.uniform(-1.0, 1.0, size=n)


def transform_parabolic(x, v: float, seed: SeedLike):
    """``Y = v (X^2 - 1/3) + w xi`` with ``w = sqrt(1 - 4 v^2 / 15)``.

    ``xi`` is i.i.d. U[-1, 1] noise drawn from ``seed``. For X ~ U[-1, 1]
    the output has mean 0 and variance 1/3.
    """
    if v * v > 15.0 / 4.0 + 1e-12:
        raise ValueError(f"|v| must not exceed sqrt(15)/2, got {v}")
    x = np.asarray(x, dtype=float)
    w = math.sqrt(max(1.0 - 4.0 * v * v / 15.0, 0.0))
    return v * (x * x - 1.0 / 3.0) + w * _uniform_noise(x.shape[0], seed)


def transform_wavy(x, v: float, seed: SeedLike):
    """``Y = v ((X^2 - 1/3)^2 - 3/45) + w xi``, ``w = sqrt(1 - 242 v^2 / 4725)``.

    Constants are used as published. With X ~ U[-1, 1] this gives
    ``E Y = v / 45`` and ``Var Y = 128 v^2 / 14175 + w^2 / 3``, i.e. neither
    exactly centred nor of variance 1/3 unless ``v = 0``.
    """
    if v * v > 4725.0 / 242.0 + 1e-12:
        raise ValueError(f"|v| must not exceed sqrt(4725/242), got {v}")
    x = np.asarray(x, dtype=float)
    w = math.sqrt(max(1.0 - 242.0 * v * v / 4725.0, 0.0))
    t = (x * x - 1.0 / 3.0) ** 2 - 3.0 / 45.0
    return v * t + w * _uniform_noise(x.shape[0], seed)


def transform_rotation(x, y, v: float):
    """Rotate the rows ``(x_i, y_i)`` by ``theta = pi v / 12``.

    Row-vector convention: ``(x, y) @ [[cos, -sin], [sin, cos]]``, i.e.
    ``(x cos + y sin, -x sin + y cos)``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    theta = math.pi * v / 12.0
    c, s = math.cos(theta), math.sin(theta)
    return x * c + y * s, -x * s + y * c
