"""Configurable front end to the Harper eigensolvers."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np
from traitlets import Enum, Float, Integer, TraitError, validate
from traitlets.config import LoggingConfigurable

from ..prometheus.metrics import EIGENSOLVE_DURATION_SECONDS
from .ground import (
    ground_pair_dense,
    ground_pair_lapack,
    ground_pair_power,
    harper_spectrum,
)
from .operator import QUARTER_PI, build_harper, theta_harper


class HarperSolver(LoggingConfigurable):
    """Solve for the ground pair of the Harper operator.

    ``auto`` uses the Jacobi solver up to ``jacobi_max_dimension`` and
    LAPACK beyond it.
    """

    method = Enum(['auto', 'jacobi', 'power', 'lapack'], default_value='auto',
        config=True, help="Eigensolver used for the ground pair.")

    kappa = Float(1.0, config=True,
        help="Diagonal shift for power iteration; must be at least 1.")

    power_tolerance = Float(1e-13, config=True,
        help="Eigen-residual at which power iteration stops.")

    max_iterations = Integer(10**6, config=True,
        help="Iteration cap for power iteration.")

    jacobi_tolerance = Float(1e-14, config=True,
        help="Relative off-diagonal norm at which Jacobi sweeps stop.")

    max_sweeps = Integer(100, config=True, help="Sweep cap for Jacobi.")

    jacobi_max_dimension = Integer(512, config=True,
        help="Largest dimension the 'auto' method hands to Jacobi.")

    @validate('kappa')
    def _valid_kappa(self, proposal):
        if proposal['value'] < 1.0:
            raise TraitError("kappa must be >= 1, got %r" % proposal['value'])
        return proposal['value']

    @validate('power_tolerance', 'jacobi_tolerance')
    def _valid_tolerance(self, proposal):
        if not proposal['value'] > 0.0:
            raise TraitError("%s must be positive" % proposal['trait'].name)
        return proposal['value']

    def resolve_method(self, d):
        if self.method != 'auto':
            return self.method
        return 'jacobi' if d <= self.jacobi_max_dimension else 'lapack'

    def solve_matrix(self, matrix, theta=QUARTER_PI, method=None):
        method = method or self.resolve_method(matrix.shape[0])
        with EIGENSOLVE_DURATION_SECONDS.labels(method=method).time():
            if method == 'jacobi':
                pair = ground_pair_dense(matrix, theta=theta, tol=self.jacobi_tolerance,
                                         max_sweeps=self.max_sweeps, log=self.log)
            elif method == 'power':
                pair = ground_pair_power(matrix, kappa=self.kappa, tol=self.power_tolerance,
                                         max_iterations=self.max_iterations, theta=theta,
                                         log=self.log)
            else:
                pair = ground_pair_lapack(matrix, theta=theta, log=self.log)
        self.log.debug("d=%i theta=%.6g %s: h=%.17g gap=%.3g (%i iterations)",
                       pair.d, theta, method, pair.h, pair.gap, pair.iterations)
        return pair

    def solve(self, ctx, theta=QUARTER_PI, method=None):
        """Ground pair of build_harper(ctx, theta)."""
        return self.solve_matrix(build_harper(ctx, theta), theta=theta, method=method)

    def spectrum(self, ctx, theta=QUARTER_PI):
        """All eigenvalues in descending order."""
        matrix = build_harper(ctx, theta)
        if self.resolve_method(ctx.d) == 'lapack':
            return np.linalg.eigvalsh(matrix)[::-1]
        return harper_spectrum(matrix, tol=self.jacobi_tolerance)

    def theta_sweep(self, ctx, thetas):
        """h_theta over a grid of angles, always with the H_theta normalization."""
        return [self.solve_matrix(theta_harper(ctx, t), theta=t).h for t in thetas]
