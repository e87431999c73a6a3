"""
Empirical characteristic functions, weighted L2 norms and the limit
parameters of the distance covariance under long-range dependence.

Integrals over ``R`` against ``ds / (pi s^2)`` are approximated on a
:class:`QuadratureGrid`: composite Gauss-Legendre panels on ``(0, upper]``,
mirrored to the negative axis through the conjugate symmetry of
characteristic functions. The part of the integral beyond ``upper`` is
handled by the caller through ``tail_mean`` (the non-oscillating limit of
``|f|^2``), which contributes exactly ``2 tail_mean / (pi upper)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

# complex entries per chunk when forming exp(i s x) matrices
_CHUNK = 1 << 21


@dataclass(frozen=True)
class QuadratureGrid:
    """Positive quadrature nodes for ``int_0^upper g(s) ds``.

    ``nodes`` never contain 0; ``weights`` are the plain Lebesgue weights
    (the ``1 / (pi s^2)`` factor is applied by the consumers).
    """

    nodes: np.ndarray
    weights: np.ndarray
    upper: float

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.ndim != 1 or nodes.shape != weights.shape:
            raise ValueError("nodes and weights must be matching vectors")
        if nodes.size == 0 or nodes[0] <= 0.0 or np.any(np.diff(nodes) <= 0):
            raise ValueError("nodes must be positive and strictly increasing")
        if np.any(weights <= 0.0):
            raise ValueError("weights must be positive")
        if nodes[-1] > self.upper:
            raise ValueError("nodes extend beyond the declared upper limit")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def panels(cls, upper: float, panel_width: float, order: int = 8):
        """Composite Gauss-Legendre rule on ``(0, upper]``."""
        if upper <= 0 or panel_width <= 0:
            raise ValueError("upper and panel_width must be positive")
        count = max(int(math.ceil(upper / panel_width)), 1)
        edges = np.linspace(0.0, upper, count + 1)
        x, w = np.polynomial.legendre.leggauss(order)
        half = 0.5 * np.diff(edges)
        mid = 0.5 * (edges[1:] + edges[:-1])
        nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
        weights = (half[:, None] * w[None, :]).ravel()
        return cls(nodes, weights, float(upper))

    def __len__(self):
        return self.nodes.shape[0]

    @property
    def inverse_square_weights(self) -> np.ndarray:
        """Weights for ``int_R |f(s)|^2 / (pi s^2) ds`` on the positive nodes."""
        return 2.0 * self.weights / (math.pi * self.nodes ** 2)


def default_grid(spread: float, upper: float = 100.0, order: int = 8,
                 phase_per_panel: float = 2.0) -> QuadratureGrid:
    """Grid resolving ``exp(i s d)`` for all ``|d| <= spread`` up to ``upper``.

    The panel width keeps the phase change of the fastest oscillation below
    ``phase_per_panel`` radians, where an 8-point rule is accurate to
    roughly machine precision.
    """
    spread = float(spread)
    width = phase_per_panel / spread if spread > 0 else upper
    width = min(width, 0.5)
    return QuadratureGrid.panels(upper, width, order)


def _as_vector(x):
    return np.asarray(x, dtype=float).ravel()


def ecf(x, s):
    """Empirical characteristic function ``(1/n) sum_j exp(i s x_j)``.

    ``s`` may be a scalar or an array; the result has the shape of ``s``.
    """
    x = _as_vector(x)
    s_arr = np.asarray(s, dtype=float)
    flat = s_arr.ravel()
    out = np.empty(flat.shape, dtype=complex)
    step = max(_CHUNK // max(x.size, 1), 1)
    for lo in range(0, flat.size, step):
        block = flat[lo:lo + step]
        out[lo:lo + step] = np.exp(1j * np.outer(block, x)).mean(axis=1)
    out = out.reshape(s_arr.shape)
    return complex(out) if out.ndim == 0 else out


def joint_ecf(x, y, u, v):
    """Joint empirical characteristic function ``(1/n) sum exp(i(u x_j + v y_j))``."""
    x, y = _as_vector(x), _as_vector(y)
    if x.shape != y.shape:
        raise ValueError("x and y must have equal length")
    u_arr, v_arr = np.broadcast_arrays(np.asarray(u, float), np.asarray(v, float))
    fu, fv = u_arr.ravel(), v_arr.ravel()
    out = np.empty(fu.shape, dtype=complex)
    step = max(_CHUNK // max(x.size, 1), 1)
    for lo in range(0, fu.size, step):
        phase = np.outer(fu[lo:lo + step], x) + np.outer(fv[lo:lo + step], y)
        out[lo:lo + step] = np.exp(1j * phase).mean(axis=1)
    out = out.reshape(u_arr.shape)
    return complex(out) if out.ndim == 0 else out


def weighted_l2_norm_sq(values, grid: QuadratureGrid, tail_mean: float = 0.0):
    """``int_R |f(s)|^2 / (pi s^2) ds`` from samples of ``f`` on ``grid.nodes``.

    ``f`` is assumed to satisfy ``|f(-s)| = |f(s)|`` (true for differences
    of characteristic functions of real data). ``tail_mean`` is the mean
    level of ``|f|^2`` beyond ``grid.upper``.
    """
    values = np.asarray(values)
    if values.shape != grid.nodes.shape:
        raise ValueError("values must be sampled on the grid nodes")
    body = float(np.sum(grid.inverse_square_weights * np.abs(values) ** 2))
    return body + 2.0 * tail_mean / (math.pi * grid.upper)


def weighted_l2_norm_sq_2d(upper_half, lower_half, grid_s: QuadratureGrid,
                           grid_t: QuadratureGrid) -> float:
    """``int int |f(s,t)|^2 / (pi^2 s^2 t^2) ds dt`` on a tensor grid.

    ``upper_half[a, b] = f(s_a, t_b)`` and ``lower_half[a, b] = f(s_a, -t_b)``
    for positive nodes; the two remaining quadrants follow from
    ``f(-s, -t) = conj f(s, t)``. No tail term is added.
    """
    ws = grid_s.inverse_square_weights
    wt = grid_t.inverse_square_weights
    mass = np.abs(upper_half) ** 2 + np.abs(lower_half) ** 2
    # inverse_square_weights already carry a factor 2 per axis, which
    # counts each of the two stored quadrants twice
    return float(ws @ mass @ wt) / 2.0


def ecf_difference_2d(x, y, grid_s: QuadratureGrid, grid_t: QuadratureGrid):
    """``phi_XY(s,t) - phi_X(s) phi_Y(t)`` on the two stored quadrants."""
    x, y = _as_vector(x), _as_vector(y)
    n = x.size
    ex = np.exp(1j * np.outer(grid_s.nodes, x))
    ey = np.exp(1j * np.outer(y, grid_t.nodes))
    phx, phy = ex.mean(axis=1), ey.mean(axis=0)
    upper = ex @ ey / n - np.outer(phx, phy)
    lower = ex @ ey.conj() / n - np.outer(phx, phy.conj())
    return upper, lower


def tie_mass(x) -> float:
    """Non-oscillating level of ``|phi_n(s)|^2``: ``sum_b m_b / n^2``.

    ``m_b`` counts the observations equal to ``x_b``; for distinct data
    this is ``1/n``.
    """
    x = _as_vector(x)
    _, counts = np.unique(x, return_counts=True)
    return float(np.sum(counts.astype(float) ** 2)) / x.size ** 2


def reduction_residual(x, grid: QuadratureGrid | None = None) -> float:
    """``|| (phi_n(s) - phi(s)) - J1(s) mean(x) ||_2`` for standard normal data.

    ``phi(s) = exp(-s^2/2)`` and ``J1(s) = i s exp(-s^2/2)``. Under long-range
    dependence with parameter D the residual is ``o(n^{-D/2})``.
    """
    x = _as_vector(x)
    if grid is None:
        spread = float(np.ptp(x)) if x.size > 1 else 0.0
        grid = default_grid(spread, upper=100.0)
    s = grid.nodes
    gauss = np.exp(-0.5 * s * s)
    resid = ecf(x, s) - gauss - 1j * s * gauss * x.mean()
    return math.sqrt(weighted_l2_norm_sq(resid, grid, tail_mean=tie_mass(x)))


def iid_autocov(k):
    """Autocovariance of white noise: 1 at lag 0, else 0."""
    k = np.asarray(k)
    out = (k == 0).astype(float)
    return float(out) if out.ndim == 0 else out


def _symmetric_series(term, kmax, extrapolate, full_output):
    """``sum_{|k| <= kmax} term(|k|)`` with an optional power-law tail."""
    kmax = int(kmax)
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    k = np.arange(kmax + 1)
    a = np.asarray(term(k), dtype=float)
    total = float(a[0] + 2.0 * np.sum(a[1:]))
    tail = 0.0
    if kmax >= 4:
        a_half, a_end = a[kmax // 2], a[kmax]
        if a_end != 0.0 and a_half != 0.0 and np.sign(a_half) == np.sign(a_end):
            decay = math.log(a_half / a_end) / math.log(kmax / (kmax // 2))
            if decay > 1.0:
                tail = 2.0 * a_end * kmax / (decay - 1.0)
            else:
                warnings.warn("series terms decay no faster than 1/k; "
                              "the sum does not converge", RuntimeWarning)
                tail = math.copysign(math.inf, a_end)
        elif a_end != 0.0:
            tail = 2.0 * abs(a_end) * kmax
    value = total + tail if extrapolate and math.isfinite(tail) else total
    if full_output:
        return value, abs(tail)
    return value


def gamma_param(s, t, rho_x, rho_y, kmax: int = 100_000,
                extrapolate: bool = True, full_output: bool = False):
    """Covariance parameter of the complex Gaussian limit.

    ``sum_k (exp(-s^2 (1 - rho_X(k))) - exp(-s^2))
           (exp(-t^2 (1 - rho_Y(k))) - exp(-t^2))``

    summed over ``|k| <= kmax``; ``rho_x`` and ``rho_y`` map arrays of lags
    to autocovariances. With ``extrapolate`` a power-law tail fitted to the
    last terms is added. ``full_output=True`` also returns the size of the
    tail estimate.
    """
    s2, t2 = float(s) ** 2, float(t) ** 2

    def term(k):
        fx = math.exp(-s2) * np.expm1(s2 * np.asarray(rho_x(k), float))
        fy = math.exp(-t2) * np.expm1(t2 * np.asarray(rho_y(k), float))
        return fx * fy

    return _symmetric_series(term, kmax, extrapolate, full_output)


def c_param(s, t, rho_x, rho_y, kmax: int = 100_000,
            extrapolate: bool = True, full_output: bool = False):
    """Relation parameter of the complex Gaussian limit.

    Same as :func:`gamma_param` with ``1 + rho`` in place of ``1 - rho``.
    """
    s2, t2 = float(s) ** 2, float(t) ** 2

    def term(k):
        fx = math.exp(-s2) * np.expm1(-s2 * np.asarray(rho_x(k), float))
        fy = math.exp(-t2) * np.expm1(-t2 * np.asarray(rho_y(k), float))
        return fx * fy

    return _symmetric_series(term, kmax, extrapolate, full_output)


def sigma_sq_cov(rho_x, rho_y, kmax: int = 100_000, extrapolate: bool = True,
                 full_output: bool = False):
    """``sum_k rho_X(k) rho_Y(k)``, the limit variance of the scaled sample covariance.

    Converges when ``D_X + D_Y > 1``.
    """
    def term(k):
        return np.asarray(rho_x(k), float) * np.asarray(rho_y(k), float)

    return _symmetric_series(term, kmax, extrapolate, full_output)


def complex_gaussian_moments(gamma: float, relation: float):
    """Variances of the real and imaginary parts of CN(0, gamma, relation).

    For real ``relation``: ``Var Re = (gamma + relation) / 2`` and
    ``Var Im = (gamma - relation) / 2``.
    """
    return 0.5 * (gamma + relation), 0.5 * (gamma - relation)


def reduction_profile(hurst: float, sizes=(256, 1024, 4096), reps: int = 20,
                      master_seed: int = 0, grid_upper: float = 100.0):
    """Median of ``n^{D/2} * reduction_residual`` over ``reps`` FGN paths per n.

    ``D = 2 - 2H``. Replication i at size n uses the stream
    ``derive_seed(master_seed, i)``. Returns ``(medians, decreasing)`` where
    ``decreasing`` says whether the medians fall strictly along ``sizes``.
    """
    from .fgn import derive_seed, sample_fgn

    lrd = 2.0 - 2.0 * hurst
    medians = []
    for n in sizes:
        vals = []
        for i in range(reps):
            x = sample_fgn(n, hurst, np.random.default_rng(derive_seed(master_seed, i)))
            spread = float(np.ptp(x))
            vals.append(reduction_residual(x, default_grid(spread, upper=grid_upper)))
        medians.append(float(np.median(vals)) * n ** (lrd / 2.0))
    decreasing = all(a > b for a, b in zip(medians, medians[1:]))
    return medians, decreasing
