"""Cyclic Jacobi eigenvalue algorithm for dense real symmetric matrices.

Rotations follow a round-robin ordering: every sweep visits each (p, q) pair
once, and the n/2 disjoint pairs of one round are rotated together with
vectorized row and column updates.
"""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np

from ..errors import ConvergenceError, DimensionError, DomainError


def _round_robin(n):
    """Disjoint (p, q) pairings covering every pair of range(n) once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        # the padding player n sits out
        pairs = [tuple(sorted(pair)) for pair in pairs if n not in pair]
        if pairs:
            p, q = zip(*pairs)
            rounds.append((np.array(p), np.array(q)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def off_diagonal_norm(a):
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a, v, p, q):
    apq = a[p, q]
    active = apq != 0.0
    if not active.any():
        return
    p, q, apq = p[active], q[active], apq[active]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    sign = np.where(theta >= 0.0, 1.0, -1.0)
    t = sign / (np.abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    ap, aq = a[:, p], a[:, q]
    a[:, p] = ap * c - aq * s
    a[:, q] = ap * s + aq * c
    ap, aq = a[p, :], a[q, :]
    a[p, :] = c[:, None] * ap - s[:, None] * aq
    a[q, :] = s[:, None] * ap + c[:, None] * aq
    a[p, q] = 0.0
    a[q, p] = 0.0

    vp, vq = v[:, p], v[:, q]
    v[:, p] = vp * c - vq * s
    v[:, q] = vp * s + vq * c


def jacobi_eigh(matrix, tol=1e-14, max_sweeps=100, log=None):
    """Eigen-decomposition of a real symmetric matrix by Jacobi rotations.

    Parameters
    ----------
    matrix : array_like
        Real symmetric (n, n) matrix.
    tol : float
        Sweeps stop once the off-diagonal Frobenius norm is below
        ``tol`` times the Frobenius norm of the input.
    max_sweeps : int
        Cap on the number of full sweeps.

    Returns
    -------
    values : ndarray
        Eigenvalues in descending order.
    vectors : ndarray
        Orthonormal eigenvectors as columns, matching ``values``.
    sweeps : int
        Number of sweeps performed.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError("expected a square matrix, got shape %s" % (a.shape,))
    n = a.shape[0]
    scale = float(np.linalg.norm(a))
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-12 * max(1.0, scale):
        raise DomainError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    v = np.eye(n)
    schedule = _round_robin(n)

    sweeps = 0
    off = off_diagonal_norm(a)
    while off > tol * scale:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                "Jacobi did not converge in %i sweeps (off-diagonal norm %.3g)"
                % (max_sweeps, off))
        for p, q in schedule:
            _rotate(a, v, p, q)
        sweeps += 1
        off = off_diagonal_norm(a)
        if log:
            log.debug("Jacobi sweep %i: off-diagonal norm %.3g", sweeps, off)

    values = np.diag(a).copy()
    order = np.argsort(-values, kind='stable')
    return values[order], v[:, order], sweeps
