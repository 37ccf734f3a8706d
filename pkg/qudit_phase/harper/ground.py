"""The ground pair (h, |Gamma>) of the Harper operator."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import math

import numpy as np
from traitlets import Float, HasTraits, Instance, Integer, Unicode

from ..errors import DegenerateSpectrumError, PositivityError
from ..utils import max_abs
from .jacobi import jacobi_eigh
from .operator import QUARTER_PI
from .power import power_iteration

GAP_TOL = 1e-12
POSITIVITY_FLOOR = 1e-10


class GroundPair(HasTraits):
    """Greatest eigenvalue h and the positive eigenvector Gamma of H_theta."""

    h = Float(help="Greatest eigenvalue.")
    gamma = Instance(np.ndarray, help="Position components of |Gamma>.")
    gap = Float(help="h minus the second eigenvalue, +inf for d = 1.")
    theta = Float(QUARTER_PI)
    method = Unicode('jacobi')
    iterations = Integer(0, help="Sweeps (Jacobi) or steps (power iteration).")

    @property
    def d(self):
        return self.gamma.shape[0]

    @property
    def second_eigenvalue(self):
        return self.h - self.gap

    def __repr__(self):
        return "<GroundPair d=%i h=%.12g method=%s>" % (self.d, self.h, self.method)


def _fix_sign(vector):
    return vector * np.sign(vector[np.argmax(np.abs(vector))])


def _perron_polish(matrix, vector, kappa=1.0, steps=2):
    # H + kappa 1 is non-negative, so multiplying a non-negative vector keeps
    # every component >= 0 without cancellation.
    shifted = matrix + kappa * np.eye(matrix.shape[0])
    x = np.abs(vector)
    for _ in range(steps):
        x = shifted @ x
        x /= np.linalg.norm(x)
    return x


def _pair_from_spectrum(matrix, values, vectors, theta, method, iterations):
    gap = float(values[0] - values[1]) if len(values) > 1 else math.inf
    if gap <= GAP_TOL:
        raise DegenerateSpectrumError("top eigenvalue is degenerate (gap %.3g)" % gap)
    top = _fix_sign(vectors[:, 0])
    if top.min() < -POSITIVITY_FLOOR:
        raise PositivityError(
            "top eigenvector has component %.3g, contradicting Perron positivity"
            % top.min())
    return GroundPair(h=float(values[0]), gamma=_perron_polish(matrix, top), gap=gap,
                      theta=theta, method=method, iterations=iterations)


def ground_pair_dense(matrix, theta=QUARTER_PI, tol=1e-14, max_sweeps=100, log=None):
    """Full spectrum by cyclic Jacobi rotations; return the top pair."""
    values, vectors, sweeps = jacobi_eigh(matrix, tol=tol, max_sweeps=max_sweeps, log=log)
    return _pair_from_spectrum(matrix, values, vectors, theta, 'jacobi', sweeps)


def ground_pair_lapack(matrix, theta=QUARTER_PI, log=None):
    """Same contract as :func:`ground_pair_dense` using LAPACK's syevd."""
    values, vectors = np.linalg.eigh(matrix)
    return _pair_from_spectrum(matrix, values[::-1], vectors[:, ::-1], theta, 'lapack', 0)


def ground_pair_power(matrix, kappa=1.0, tol=1e-13, max_iterations=10**6,
                      theta=QUARTER_PI, log=None):
    """Perron vector by power iteration on H + kappa 1 from the all-ones vector.

    The gap comes from a second, deflated power iteration started from a ramp
    vector with Gamma projected out.
    """
    h, gamma, iterations = power_iteration(
        matrix, kappa=kappa, tol=tol, max_iterations=max_iterations, log=log)
    n = matrix.shape[0]
    if n > 1:
        second, _, _ = power_iteration(
            matrix, kappa=kappa, tol=math.sqrt(tol), max_iterations=max_iterations,
            start=np.arange(1.0, n + 1.0), deflate=gamma, log=log)
        gap = h - second
    else:
        gap = math.inf
    if gap <= GAP_TOL:
        raise DegenerateSpectrumError("top eigenvalue is degenerate (gap %.3g)" % gap)
    if gamma.min() < 0.0:
        raise PositivityError("power iterate lost positivity (%.3g)" % gamma.min())
    return GroundPair(h=h, gamma=gamma, gap=gap, theta=theta, method='power',
                      iterations=iterations)


def harper_spectrum(matrix, tol=1e-14):
    """All eigenvalues in descending order via Jacobi."""
    return jacobi_eigh(matrix, tol=tol)[0]


def eigen_residual(matrix, pair):
    """max|H Gamma - h Gamma|."""
    return max_abs(matrix @ pair.gamma - pair.h * pair.gamma)


def verify_gamma_symmetries(pair, ctx):
    """Residuals of the symmetries of Gamma.

    Returns a dict with the 2-norms of F Gamma - Gamma and T Gamma - Gamma and
    the largest deviation of <Q>, <Q^dagger>, <P>, <P^dagger> from h. The
    expectation relation is specific to theta = pi/4.
    """
    gamma = ctx.check_vector(pair.gamma, name="gamma")
    q = np.dot(gamma ** 2, ctx.omega_powers)
    p = np.dot(np.roll(gamma, -1), gamma)
    values = np.array([q, np.conj(q), p, np.conj(p)])
    return {
        'fourier': float(np.linalg.norm(ctx.F @ gamma - gamma)),
        'reflection': float(np.linalg.norm(ctx.T @ gamma - gamma)),
        'expectation': float(np.max(np.abs(values - pair.h))),
    }
