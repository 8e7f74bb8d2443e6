"""Spectrum accumulation: truncated sums of lambda |psi|^2 over (n, k, i).

Summing the concentration-weighted energies of all CPSWFs at a point x
gives K_c(0) = c^m |B(1)|, independent of x.  The sum over the basis
index i collapses through the zonal trace sum_i |Y_k^i(w)|^2
= d_k / |S^(m-1)|, so the truncated sum is a function of t = |x|^2:

    G(t) = sum_k w_k t^k sum_N [ lambda_2N P_N(t)^2 + lambda_2N+1 t Q_N(t)^2 ]

with w_k = d_k / |S^(m-1)|.  Partial sums increase monotonically to the
limit because every term is nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .monogenics import dim_monogenic
from .prolate import make_cpswf
from .special import ball_volume, sphere_area


@dataclass(frozen=True)
class AccumulationSum:
    m: int
    c: float
    K: int
    N: int
    t_grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t_grid", np.asarray(self.t_grid, dtype=float))
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))


def zonal_trace(m: int, k: int) -> float:
    """sum_i |Y_k^i(w)|^2 = d_k / |S^(m-1)| (constant on the sphere)."""
    return dim_monogenic(m, k) / sphere_area(m)


def limit_value(m: int, c: float) -> float:
    """The accumulation limit K_c(0) = c^m |B(1)|."""
    return float(c ** m * ball_volume(m))


def partial_sum(m: int, c: float, K: int, N: int, t_grid,
                tol: float | None = None) -> AccumulationSum:
    """Truncated accumulation sum over k <= K and radial order N' <= N
    for both parities, evaluated at the given t = |x|^2 grid points."""
    if K < 0 or N < 0 or c <= 0:
        raise ValueError("require K >= 0, N >= 0, c > 0")
    t = np.atleast_1d(np.asarray(t_grid, dtype=float))
    if np.any(t < 0) or np.any(t > 1):
        raise ValueError("t grid must lie in [0, 1]")
    total = np.zeros_like(t)
    for k in range(K + 1):
        wk = zonal_trace(m, k)
        acc = np.zeros_like(t)
        for n_half in range(N + 1):
            even = make_cpswf(2 * n_half, k, m, c, tol)
            odd = make_cpswf(2 * n_half + 1, k, m, c, tol)
            acc += even.lam * even.radial_poly_values(t) ** 2
            acc += odd.lam * t * odd.radial_poly_values(t) ** 2
        total += wk * t ** k * acc
    return AccumulationSum(m, float(c), K, N, t, total)
