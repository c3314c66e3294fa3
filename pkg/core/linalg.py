# core/linalg.py
"""
Linear algebra kernels: power iteration, fixed points, pseudo-inverse
"""
import logging

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import ArpackNoConvergence, eigs

from config import settings
from core.exceptions import ArgumentError, NumericalError

logger = logging.getLogger(__name__)


def _as_square(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ArgumentError(f"Expected a non-empty square matrix, got shape {m.shape}")
    return m


def power_iteration_radius(
    matrix,
    tol: float = settings.SPECTRAL_TOLERANCE,
    max_iter: int = settings.SPECTRAL_MAX_ITER,
) -> float:
    """
    Largest eigenvalue magnitude by power iteration.

    The growth factor |Mv| of the normalized iterate converges to the
    spectral radius whenever a single real eigenvalue (or a +/- pair)
    dominates. Raises NumericalError when it does not settle.
    """
    m = _as_square(matrix)
    n = m.shape[0]
    if not np.any(m):
        return 0.0

    # Fixed start vector keeps results reproducible
    v = np.random.default_rng(0).standard_normal(n)
    v /= np.linalg.norm(v)

    estimate = 0.0
    for iteration in range(1, max_iter + 1):
        w = m @ v
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            return 0.0
        if abs(norm - estimate) <= tol * max(1.0, norm):
            logger.debug(f"Power iteration converged after {iteration} steps: {norm}")
            return norm
        estimate = norm
        v = w / norm

    raise NumericalError(
        "Power iteration did not converge",
        diagnostics={"iterations": max_iter, "last_estimate": estimate, "size": n},
    )


def spectral_radius(
    matrix,
    tol: float = settings.SPECTRAL_TOLERANCE,
    max_iter: int = settings.SPECTRAL_MAX_ITER,
) -> float:
    """Spectral radius, falling back to Arnoldi iteration for complex dominant pairs"""
    m = _as_square(matrix)
    try:
        return power_iteration_radius(m, tol=tol, max_iter=max_iter)
    except NumericalError as e:
        logger.debug(f"Falling back to Arnoldi iteration: {e}")

    if m.shape[0] <= 2:
        return float(np.max(np.abs(np.linalg.eigvals(m))))

    try:
        values = eigs(m, k=1, which="LM", tol=tol, maxiter=max_iter, return_eigenvectors=False)
    except ArpackNoConvergence as e:
        raise NumericalError(
            "Spectral radius did not converge",
            diagnostics={"iterations": max_iter, "size": m.shape[0]},
        ) from e
    return float(np.abs(values[0]))


def left_fixed_point(
    transition,
    tol: float = settings.STATIONARY_TOLERANCE,
    max_iter: int = settings.STATIONARY_MAX_ITER,
) -> np.ndarray:
    """
    Stationary distribution pi = pi T of a row-stochastic matrix.

    Iterates the lazy chain (I + T) / 2 from the uniform vector; the lazy
    chain shares T's fixed point and is aperiodic.
    """
    t = _as_square(transition)
    n = t.shape[0]
    lazy = 0.5 * (np.eye(n) + t)

    p = np.full(n, 1.0 / n)
    residual = np.inf
    for _ in range(max_iter):
        nxt = p @ lazy
        nxt /= nxt.sum()
        residual = float(np.max(np.abs(nxt - p)))
        p = nxt
        if residual < tol:
            return p

    raise NumericalError(
        "Stationary distribution did not converge",
        diagnostics={"iterations": max_iter, "residual": residual, "states": n},
    )


def pseudo_inverse(matrix, rtol: float = settings.PINV_RTOL) -> np.ndarray:
    """Moore-Penrose pseudo-inverse via SVD with a relative singular value cutoff"""
    return scipy.linalg.pinv(np.asarray(matrix, dtype=float), atol=0.0, rtol=rtol)
