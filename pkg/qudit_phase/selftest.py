"""The invariant suite run by ``qudit-phase selftest``."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import math

import numpy as np
from traitlets import Bool, Instance, Integer, List, default
from traitlets.config import LoggingConfigurable

from .asymptotics import (
    ContinuumScheme,
    continuum_expansion_check,
    deviation_ratios,
    excited_level_check,
    gaussian_state,
    mathieu_residual,
)
from .completeness import (
    MAX_BLOCK_DIMENSION,
    MAX_REDUCTION_DIMENSION,
    block_spectrum_check,
    coeff_table,
    expected_zero_set,
    symmetric_reduction_check,
    zero_set,
)
from .harper import HarperSolver, build_harper, eigen_residual, verify_gamma_symmetries
from .quasiprob import (
    MAX_GRID_DIMENSION,
    convolution_residual,
    fourier_covariance_residual,
    optimality_gap,
    phase_points,
    quasi_distribution,
    reconstruct_state,
    sharpness,
    translational_covariance_residual,
    verify_weyl_identity,
    wigner_orthogonality_residual,
)
from .qudit import build_context
from .qudit.sampling import default_rng, ginibre_densities, haar_states
from .qudit.vectors import DensityMatrix, batch_expectations
from .uncertainty import (
    CertaintyOptimizer,
    batch_certainty,
    batch_density_certainty,
    minimum_uncertainty_grid,
    nearest_minimum_uncertainty_state,
    resolution_of_identity_residual,
    theta_ground_pair,
    theta_min_uncertainty_state,
)
from .utils import run_in_workers

# From d = 23 off-pattern |f_mn| drops below the zero tolerance.
ZERO_SET_ASSERTED_MAX_D = 22
# Above this the smallest g_mn is within rounding of zero.
G_POSITIVE_ASSERTED_MAX_D = 31
WEYL_MAX_D = 8
OPTIMIZER_MAX_D = 16
THETAS = (math.pi / 8, 3 * math.pi / 8)


def _covariance_checks(prefix, pps, ctx):
    d = ctx.d
    shifts = ((1 % d, 0), (0, 1 % d))
    residual = max(translational_covariance_residual(pps, ctx, a, b) for a, b in shifts)
    yield prefix + '_translational_covariance', residual, 1e-10
    yield prefix + '_fourier_covariance', fourier_covariance_residual(pps, ctx), 1e-10


def _marginal_residual(pps, ctx):
    residual = 0.0
    for axis, basis in (('position', np.eye(ctx.d)), ('momentum', ctx.F)):
        projectors = np.einsum('ik,jk->kij', basis, basis.conj())
        residual = max(residual, float(np.max(np.abs(pps.marginal_operators(axis) - projectors))))
    return residual


class InvariantSuite(LoggingConfigurable):
    """Named numerical checks for every d in [min_d, max_d].

    Each check yields a row (check, d, value, tolerance, passed,
    informational). Only failed non-informational rows fail the suite.
    The large-d asymptotics rows are appended once, after the sweep.
    """

    min_d = Integer(1, config=True, help="Smallest dimension checked.")
    max_d = Integer(16, config=True, help="Largest dimension checked.")

    samples = Integer(500, config=True, help="Haar-random pure states per d.")
    density_samples = Integer(100, config=True,
        help="Ginibre-random density matrices per d.")

    optimizer_seeds = Integer(32, config=True,
        help="Random starts of the certainty optimizer, run for 2 <= d <= %i."
        % OPTIMIZER_MAX_D)

    asymptotics = Bool(True, config=True,
        help="Append the deviation-ratio, excited-level and continuum rows.")
    ratio_dimensions = List(Integer(), default_value=[16, 32, 64, 128], config=True,
        help="Doubling sequence for the deviation ratios.")
    continuum_d = Integer(101, config=True,
        help="Dimension of the excited-level and continuum checks.")

    seed = Integer(42, config=True, help="Seed of every random stream.")

    solver = Instance(HarperSolver)

    @default('solver')
    def _default_solver(self):
        return HarperSolver(parent=self)

    def _checks(self, d):
        ctx = build_context(d)
        pair = self.solver.solve(ctx)
        rng = default_rng(self.seed, d)
        h2 = pair.h ** 2

        yield 'harper_eigen_residual', eigen_residual(build_harper(ctx), pair), 1e-10
        yield 'gamma_positive', -float(pair.gamma.min()), 0.0, -float(pair.gamma.min()) < 0.0
        for name, value in verify_gamma_symmetries(pair, ctx).items():
            yield 'gamma_' + name, value, 1e-10
        yield 'mathieu_residual', mathieu_residual(pair, ctx), 1e-10

        states = haar_states(rng, d, self.samples)
        yield 'certainty_bound', float(batch_certainty(states, ctx).max()) - h2, 1e-10
        densities = ginibre_densities(rng, d, self.density_samples)
        yield ('mixed_certainty_bound',
               float(batch_density_certainty(densities, ctx).max()) - h2, 1e-10)
        grid = minimum_uncertainty_grid(pair, ctx).reshape(d * d, d)
        yield ('min_uncertainty_saturation',
               float(np.max(np.abs(batch_certainty(grid, ctx) - h2))), 1e-10)
        yield 'resolution_of_identity', resolution_of_identity_residual(pair, ctx), 1e-10

        gaps = [optimality_gap(rho, pair, ctx) for rho in densities]
        yield 'optimality_gap', -min(gaps), 1e-10
        gamma = DensityMatrix.pure(pair.gamma.astype(complex))
        yield 'optimality_gap_attained', abs(optimality_gap(gamma, pair, ctx)), 1e-10

        if 2 <= d <= OPTIMIZER_MAX_D:
            optimizer = CertaintyOptimizer(parent=self, seeds=self.optimizer_seeds)
            value, state = optimizer.maximize(ctx, seed=self.seed)
            yield 'optimizer_value', abs(value - h2), 1e-9
            fidelity = nearest_minimum_uncertainty_state(state, pair, ctx)[2]
            yield 'optimizer_fidelity', 1.0 - fidelity, 1e-9

        if d >= 2:
            q, p = np.abs(batch_expectations(states, ctx))
            for theta in THETAS:
                h_theta = theta_ground_pair(ctx, theta).h
                lhs = math.cos(theta) * q + math.sin(theta) * p
                yield 'theta_bound', float(lhs.max()) - h_theta, 1e-10
                q0, p0 = np.abs(batch_expectations(
                    theta_min_uncertainty_state(1, 1, theta, ctx).amplitudes[None, :], ctx))
                saturated = math.cos(theta) * q0[0] + math.sin(theta) * p0[0]
                yield 'theta_saturation', abs(saturated - h_theta), 1e-8

        table = coeff_table(pair, ctx)
        yield 'coefficient_symmetry', max(table.symmetry_residuals().values()), 1e-10
        matches = zero_set(table) == expected_zero_set(d)
        yield ('zero_set', float(not matches), 0.0, matches,
               d > ZERO_SET_ASSERTED_MAX_D)

        if d <= MAX_BLOCK_DIMENSION:
            report = block_spectrum_check(ctx, pair)
            yield 'block_spectrum', report['block_spectrum'], 1e-9
            yield 'block_eigen_residual', report['eigen_residual'], 1e-9
            yield 'block_projector_residual', report['projector_residual'], 1e-9

        if d <= MAX_GRID_DIMENSION:
            husimi = phase_points('husimi', pair, ctx)
            yield 'husimi_sharpness', max(abs(s - pair.h) for s in sharpness(husimi, ctx)), 1e-10
            for row in _covariance_checks('husimi', husimi, ctx):
                yield row
            values = np.stack([quasi_distribution(rho, husimi).values for rho in densities[:10]])
            yield 'husimi_nonnegative', -float(values.min()), 1e-12
            if d <= WEYL_MAX_D:
                omega = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
                yield 'weyl_identity', verify_weyl_identity(omega, 1 % d, 1 % d, ctx), 1e-10

        if d % 2 == 1:
            min_g = float(table.g.min())
            yield 'g_positive', -min_g, 0.0, min_g > 0.0, d > G_POSITIVE_ASSERTED_MAX_D
            if d <= MAX_REDUCTION_DIMENSION:
                report = symmetric_reduction_check(pair, ctx)
                yield 'reduced_eigen_residual', report['eigen_residual'], 1e-9
                yield ('perron_power_positive', -report['min_power_entry'], 0.0,
                       report['min_power_entry'] > 0.0)
                if report['conjugation_residual'] is not None:
                    yield 'conjugation_residual', report['conjugation_residual'], 1e-10
            if d <= MAX_GRID_DIMENSION:
                wigner = phase_points('wigner', pair, ctx)
                yield 'wigner_orthogonality', wigner_orthogonality_residual(wigner), 1e-10
                yield ('wigner_sharpness',
                       max(abs(s - 1.0) for s in sharpness(wigner, ctx)), 1e-10)
                yield 'wigner_marginals', _marginal_residual(wigner, ctx), 1e-10
                for row in _covariance_checks('wigner', wigner, ctx):
                    yield row
                yield 'convolution', convolution_residual(pair, ctx), 1e-10
                rho = densities[0]
                dist = quasi_distribution(rho, husimi)
                error = float(np.max(np.abs(reconstruct_state(dist, pair, ctx).entries - rho)))
                yield 'reconstruction_round_trip', error, 1e-8

    def _asymptotic_checks(self):
        ratios = deviation_ratios(self.ratio_dimensions, solver=self.solver)
        for d, ratio in zip(self.ratio_dimensions[1:], ratios):
            yield d, ('deviation_ratio', ratio, 4.0, 3.0 <= ratio <= 5.0)
        ctx = build_context(self.continuum_d)
        pair = self.solver.solve(ctx)
        level = excited_level_check(pair, ctx)
        yield ctx.d, ('excited_level', level['residual'], level['tolerance'], level['passed'])
        yield ctx.d, ('continuum_mathieu_residual', mathieu_residual(pair, ctx), 1e-10)
        scheme = ContinuumScheme(ctx.d)
        for label, state in (('gamma', pair.gamma), ('gaussian', gaussian_state(scheme, ctx))):
            expansion = continuum_expansion_check(state, scheme, ctx)
            yield ctx.d, (label + '_continuum', expansion['position_residual'],
                          expansion['expansion_tolerance'], expansion['passed'])

    @staticmethod
    def _row(item, d):
        name, value, tolerance = item[:3]
        passed = item[3] if len(item) > 3 else value <= tolerance
        informational = item[4] if len(item) > 4 else False
        return (name, d, float(value), tolerance, bool(passed), informational)

    def check_dimension(self, d):
        """All rows for one dimension."""
        rows = [self._row(item, d) for item in self._checks(d)]
        self.log.debug("d=%i: %i checks, %i failed", d, len(rows),
                       sum(not row[4] for row in rows))
        return rows

    def check_asymptotics(self):
        """Rows of the large-d checks, each tagged with the d it was evaluated at."""
        return [self._row(item, d) for d, item in self._asymptotic_checks()]

    def run(self, ds=None):
        """Rows for every dimension, in order of d, then the asymptotics rows."""
        ds = range(self.min_d, self.max_d + 1) if ds is None else ds
        rows = [row for rows in run_in_workers(self.check_dimension, ds) for row in rows]
        if self.asymptotics:
            rows.extend(self.check_asymptotics())
        return rows
