"""Shifted power iteration for the Perron vector of H + kappa 1."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np

from ..errors import ConvergenceError, DomainError


def power_iteration(matrix, kappa=1.0, tol=1e-13, max_iterations=10**6,
                    start=None, deflate=None, log=None):
    """Dominant eigenpair of ``matrix + kappa * 1``.

    Stops when the eigen-residual max|H x - lambda x| of the normalized
    iterate drops below ``tol``, with lambda the Rayleigh quotient.

    Parameters
    ----------
    matrix : ndarray
        Real symmetric matrix H.
    kappa : float
        Diagonal shift; kappa >= 1 makes H + kappa 1 non-negative for the
        Harper operator.
    start : ndarray, optional
        Start vector, all-ones by default.
    deflate : ndarray, optional
        Unit vector projected out of every iterate, which turns the method
        into a search for the next eigenvalue.

    Returns
    -------
    value : float
        Eigenvalue of ``matrix`` (the shift removed).
    vector : ndarray
        Normalized eigenvector.
    iterations : int
    """
    if kappa < 1.0:
        raise DomainError("kappa must be >= 1, got %r" % kappa)
    n = matrix.shape[0]
    shifted = matrix + kappa * np.eye(n)
    x = np.ones(n) if start is None else np.array(start, dtype=float)
    if deflate is not None:
        x = x - (deflate @ x) * deflate
    x = x / np.linalg.norm(x)

    for iteration in range(1, max_iterations + 1):
        y = shifted @ x
        hx = y - kappa * x
        value = float(x @ hx)
        residual = float(np.max(np.abs(hx - value * x)))
        if residual < tol:
            if log:
                log.debug("power iteration converged after %i steps (residual %.3g)",
                          iteration, residual)
            return value, x, iteration
        if deflate is not None:
            y = y - (deflate @ y) * deflate
        x = y / np.linalg.norm(y)
    raise ConvergenceError(
        "power iteration did not converge in %i iterations (residual %.3g)"
        % (max_iterations, residual))
