"""Numba-accelerated hot kernels with a pure-numpy fallback.

The two inner loops that dominate runtime are the Monte Carlo reheating
propagation and the per-frequency complex circuit solves. Both have a
numba ``@njit`` implementation and a vectorized numpy one; the arithmetic
is ordered identically so the two paths agree bit-for-bit.

Set ``LEVINOISE_PURE_NUMPY=1`` to force the numpy path (e.g. on platforms
without a working numba install). ``scripts/bench_backends.py`` compares
the two.
"""

from __future__ import annotations

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("LEVINOISE_PURE_NUMPY", "").strip().lower() in {
    "1", "true", "yes", "on",
}

try:
    if _FORCE_NUMPY:
        raise ImportError("pure-numpy backend forced by LEVINOISE_PURE_NUMPY")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    njit = None
    HAVE_NUMBA = False


def backend_name():
    return "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# Kernel 1: exact discrete-time propagation of damped-oscillator trajectories.
# prop is the 2x2 one-step transition matrix, chol the lower Cholesky factor
# of the one-step noise covariance; normals has shape (n_traj, n_steps, 2).

def _propagate_numpy(prop, chol, normals):
    n_traj, n_steps, _ = normals.shape
    a, b = prop[0, 0], prop[0, 1]
    c, d = prop[1, 0], prop[1, 1]
    l00, l10, l11 = chol[0, 0], chol[1, 0], chol[1, 1]
    x = np.zeros(n_traj)
    v = np.zeros(n_traj)
    for s in range(n_steps):
        z1 = normals[:, s, 0]
        z2 = normals[:, s, 1]
        xn = a * x + b * v + l00 * z1
        vn = c * x + d * v + l10 * z1 + l11 * z2
        x, v = xn, vn
    out = np.empty((n_traj, 2))
    out[:, 0] = x
    out[:, 1] = v
    return out


if HAVE_NUMBA:

    @njit(cache=True)
    def _propagate_numba(prop, chol, normals):  # pragma: no cover - jitted
        n_traj, n_steps, _ = normals.shape
        a, b = prop[0, 0], prop[0, 1]
        c, d = prop[1, 0], prop[1, 1]
        l00, l10, l11 = chol[0, 0], chol[1, 0], chol[1, 1]
        out = np.empty((n_traj, 2))
        for i in range(n_traj):
            x = 0.0
            v = 0.0
            for s in range(n_steps):
                z1 = normals[i, s, 0]
                z2 = normals[i, s, 1]
                xn = a * x + b * v + l00 * z1
                vn = c * x + d * v + l10 * z1 + l11 * z2
                x = xn
                v = vn
            out[i, 0] = x
            out[i, 1] = v
        return out


def propagate_trajectories(prop, chol, normals):
    """Final (x, v) of each trajectory after stepping through ``normals``."""
    prop = np.ascontiguousarray(prop, dtype=np.float64)
    chol = np.ascontiguousarray(chol, dtype=np.float64)
    normals = np.ascontiguousarray(normals, dtype=np.float64)
    if HAVE_NUMBA:
        return _propagate_numba(prop, chol, normals)
    return _propagate_numpy(prop, chol, normals)


# ---------------------------------------------------------------------------
# Kernel 2: stacked small complex linear solves A[i] @ X[i] = B[i].

def _solve_stacked_numpy(a, b):
    return np.linalg.solve(a, b)


if HAVE_NUMBA:

    @njit(cache=True)
    def _solve_stacked_numba(a, b):  # pragma: no cover - jitted
        n = a.shape[0]
        out = np.empty_like(b)
        for i in range(n):
            out[i] = np.linalg.solve(a[i], b[i])
        return out


def solve_stacked(a, b):
    """Solve a stack of dense complex systems, one per frequency point."""
    a = np.ascontiguousarray(a, dtype=np.complex128)
    b = np.ascontiguousarray(b, dtype=np.complex128)
    if HAVE_NUMBA:
        return _solve_stacked_numba(a, b)
    return _solve_stacked_numpy(a, b)


__all__ = [
    "HAVE_NUMBA", "backend_name", "propagate_trajectories", "solve_stacked",
]
