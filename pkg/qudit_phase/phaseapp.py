# coding: utf-8
"""The qudit-phase command line application."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import logging
import math
import os
import sys
import time

import numpy as np
from jupyter_core.application import JupyterApp
from tornado.log import LogFormatter
from traitlets import (
    Bool, Dict, Enum, Float, Integer, List, TraitError, Unicode, default, validate,
)
from traitlets.config.loader import ArgumentError, KVArgParseConfigLoader

from ._version import __version__
from .asymptotics import (
    ContinuumScheme,
    continuum_expansion_check,
    deviation_ratios,
    excited_level_check,
    gamma_table,
    gaussian_state,
    h_table,
    mathieu_residual,
)
from .completeness import (
    MAX_BLOCK_DIMENSION,
    MAX_REDUCTION_DIMENSION,
    block_spectrum_check,
    coeff_table,
    expected_zero_set,
    fourier_phase_point_residual,
    qubit_real_completeness_rank,
    symmetric_reduction_check,
    zero_set,
)
from .errors import QuditPhaseError
from .fileio import FORMATS, add_check, add_table, new_report, write_distribution, write_report
from .harper import HarperSolver, QUARTER_PI, build_harper, check_theta, eigen_residual
from .harper.ground import verify_gamma_symmetries
from .log import INVARIANT_VIOLATED, log_outcome
from .plotting import PLOT_KINDS, emit_plot_script
from .prometheus.metrics import write_metrics
from .quasiprob import (
    MAX_GRID_DIMENSION,
    kernel_sharpness,
    marginals,
    phase_points,
    quasi_distribution,
    quasi_distribution_direct,
    reconstruct_state,
    sharpness,
    smeared_diagonal,
)
from .quasiprob.phasepoints import kind_kernel
from .qudit import DensityMatrix, build_context
from .qudit.sampling import default_rng, ginibre_density, haar_state, haar_states
from .selftest import G_POSITIVE_ASSERTED_MAX_D, ZERO_SET_ASSERTED_MAX_D, InvariantSuite
from .uncertainty import (
    CertaintyOptimizer,
    batch_certainty,
    batch_density_certainty,
    minimum_uncertainty_grid,
    nearest_minimum_uncertainty_state,
    resolution_of_identity_residual,
)
from .utils import centered_indices

MAX_DIMENSION = 4096
SEED_LIMIT = 2 ** 64

#-----------------------------------------------------------------------------
# Aliases and Flags
#-----------------------------------------------------------------------------

_base_flags = {}
_base_flags.update(JupyterApp.flags)
_base_flags.pop("y", None)

_base_aliases = {}
_base_aliases.update(JupyterApp.aliases)
_base_aliases.update({
    'd': 'PhaseCommandApp.d',
    'theta': 'PhaseCommandApp.theta',
    'seed': 'PhaseCommandApp.seed',
    'format': 'PhaseCommandApp.output_format',
    'output': 'PhaseCommandApp.output_dir',
    'metrics-file': 'PhaseCommandApp.metrics_file',
})

#-----------------------------------------------------------------------------
# Command line parsing
#-----------------------------------------------------------------------------

class _StrictArgParser(KVArgParseConfigLoader.parser_class):

    def error(self, message):
        raise ArgumentError(message)


class StrictArgParseConfigLoader(KVArgParseConfigLoader):
    """Loader that rejects unknown options instead of warning about them.

    Errors surface as ArgumentError, which ``catch_config_error`` turns
    into exit status 1.
    """
    parser_class = _StrictArgParser

    def _handle_unrecognized_alias(self, arg):
        raise ArgumentError("unrecognized option: --%s" % arg)


class StrictArgumentsMixin:

    def _create_loader(self, argv, aliases, flags, classes):
        return StrictArgParseConfigLoader(
            argv, aliases, flags, classes=classes, log=self.log, subcommands=self.subcommands
        )


#-----------------------------------------------------------------------------
# Base command
#-----------------------------------------------------------------------------

class PhaseCommandApp(StrictArgumentsMixin, JupyterApp):
    """Shared configuration and report writing of every subcommand"""

    version = __version__
    _log_formatter_cls = LogFormatter

    flags = Dict(_base_flags)
    aliases = Dict(_base_aliases)
    classes = [HarperSolver]

    command = 'command'

    d = Integer(5, config=True, help="Dimension of the state space.")
    theta = Float(QUARTER_PI, config=True,
        help="Angle of the weighted Harper operator, strictly inside (0, pi/2).")
    seed = Integer(42, config=True, help="Seed of every random stream.")
    output_format = Enum(list(FORMATS), default_value='csv', config=True,
        help="Write one JSON report or one CSV file per table.")
    output_dir = Unicode('.', config=True, help="Directory the result files go to.")
    metrics_file = Unicode('', config=True,
        help="If set, write Prometheus metrics in text format to this file.")

    @default('log_level')
    def _default_log_level(self):
        return logging.INFO

    @default('log_format')
    def _default_log_format(self):
        """override default log format to include date & time"""
        return u"%(color)s[%(levelname)1.1s %(asctime)s.%(msecs).03d %(name)s]%(end_color)s %(message)s"

    @default('config_file_name')
    def _default_config_file_name(self):
        return 'qudit_phase_config'

    @validate('d')
    def _valid_d(self, proposal):
        value = proposal['value']
        if not 1 <= value <= MAX_DIMENSION:
            raise TraitError("d must lie in [1, %i], got %r" % (MAX_DIMENSION, value))
        return value

    @validate('theta')
    def _valid_theta(self, proposal):
        try:
            return check_theta(proposal['value'])
        except QuditPhaseError as e:
            raise TraitError(str(e)) from e

    @validate('seed')
    def _valid_seed(self, proposal):
        value = proposal['value']
        if not 0 <= value < SEED_LIMIT:
            raise TraitError("seed must lie in [0, 2**64), got %r" % value)
        return value

    @property
    def quarter_turn(self):
        return math.isclose(self.theta, QUARTER_PI, rel_tol=0.0, abs_tol=1e-15)

    def new_report(self, **metadata):
        head = {'seed': self.seed, 'd': self.d, 'theta': self.theta}
        head.update(metadata)
        return new_report(self.command, head)

    def solve(self):
        ctx = build_context(self.d)
        solver = HarperSolver(parent=self)
        return ctx, solver.solve(ctx, theta=self.theta)

    def build_report(self):
        raise NotImplementedError()

    def extra_outputs(self, report):
        """Files written besides the report."""
        return []

    def _finish(self):
        if self.metrics_file:
            write_metrics(self.metrics_file)

    def start(self):
        """Build the report, write it and exit with the outcome"""
        super().start()
        started = time.perf_counter()
        try:
            report = self.build_report()
            paths = write_report(report, self.output_dir, self.command,
                                 self.output_format, log=self.log)
            paths.extend(self.extra_outputs(report))
        except QuditPhaseError as e:
            self.log.critical("%s failed: %s", self.command, e)
            self._finish()
            self.exit(e.exit_status)
        status = log_outcome(self.log, report, paths, time.perf_counter() - started)
        self._finish()
        if status == INVARIANT_VIOLATED:
            self.exit(2)


#-----------------------------------------------------------------------------
# Subcommands
#-----------------------------------------------------------------------------

class HarperApp(PhaseCommandApp):
    """Ground pair (h, Gamma), gap and symmetry residuals of the Harper operator"""

    name = "qudit-phase harper"
    description = __doc__
    command = 'harper'

    spectrum_max_dimension = Integer(512, config=True,
        help="Largest d for which the full spectrum table is written.")

    def build_report(self):
        ctx = build_context(self.d)
        solver = HarperSolver(parent=self)
        matrix = build_harper(ctx, self.theta)
        pair = solver.solve_matrix(matrix, theta=self.theta)
        report = self.new_report(method=pair.method)
        report['summary'].update(
            h=pair.h,
            second_eigenvalue=pair.second_eigenvalue,
            gap=pair.gap,
            iterations=pair.iterations,
            trace=float(np.trace(matrix)),
            min_gamma=float(pair.gamma.min()),
        )
        add_table(report, 'gamma', ['a', 'gamma'], enumerate(pair.gamma))
        if self.d <= self.spectrum_max_dimension:
            add_table(report, 'spectrum', ['index', 'eigenvalue'],
                      enumerate(solver.spectrum(ctx, self.theta)))

        residual = eigen_residual(matrix, pair)
        add_check(report, 'eigen_residual', residual, 1e-10, residual <= 1e-10, d=self.d)
        add_check(report, 'gamma_nonnegative', float(pair.gamma.min()), 0.0,
                  pair.gamma.min() >= 0.0, d=self.d)
        # tails underflow for large d
        add_check(report, 'gamma_positive', float(pair.gamma.min()), 0.0,
                  pair.gamma.min() > 0.0, d=self.d, informational=True)
        symmetries = verify_gamma_symmetries(pair, ctx)
        names = ['reflection']
        if self.quarter_turn:
            names += ['fourier', 'expectation']
            residual = mathieu_residual(pair, ctx)
            add_check(report, 'mathieu_residual', residual, 1e-10, residual <= 1e-10, d=self.d)
        for name in names:
            add_check(report, 'gamma_' + name, symmetries[name], 1e-10,
                      symmetries[name] <= 1e-10, d=self.d)
        if self.d >= 2:
            trace = abs(report['summary']['trace'])
            add_check(report, 'traceless', trace, 1e-12, trace <= 1e-12, d=self.d)
        return report


class StatesApp(PhaseCommandApp):
    """Certainty of minimum-uncertainty and random states, and the numerical maximizer"""

    name = "qudit-phase states"
    description = __doc__
    command = 'states'
    classes = [HarperSolver, CertaintyOptimizer]

    samples = Integer(1000, config=True, help="Haar-random pure states checked.")
    density_samples = Integer(100, config=True, help="Ginibre-random density matrices checked.")
    grid_max_dimension = Integer(64, config=True,
        help="Largest d for which the (alpha, beta) certainty table is written.")
    optimize_max_dimension = Integer(16, config=True,
        help="Largest d for which the certainty optimizer runs.")

    def build_report(self):
        ctx, pair = self.solve()
        d, h2 = self.d, pair.h ** 2
        report = self.new_report(samples=self.samples, density_samples=self.density_samples)
        report['summary'].update(h=pair.h, h_squared=h2)

        if d <= self.grid_max_dimension:
            grid = minimum_uncertainty_grid(pair, ctx).reshape(d * d, d)
            values = batch_certainty(grid, ctx)
            add_table(report, 'minimum_uncertainty', ['alpha', 'beta', 'certainty'],
                      ((i // d, i % d, c) for i, c in enumerate(values)))
            saturation = float(np.max(np.abs(values - h2)))
            add_check(report, 'saturation', saturation, 1e-10, saturation <= 1e-10, d=d)
            residual = resolution_of_identity_residual(pair, ctx)
            add_check(report, 'resolution_of_identity', residual, 1e-10, residual <= 1e-10, d=d)

        states = haar_states(default_rng(self.seed, 0), d, self.samples)
        values = batch_certainty(states, ctx)
        add_table(report, 'random', ['index', 'certainty'], enumerate(values))
        excess = float(values.max()) - h2
        add_check(report, 'certainty_bound', excess, 1e-10, excess <= 1e-10, d=d)
        densities = np.stack([ginibre_density(default_rng(self.seed, 1, i), d)
                              for i in range(self.density_samples)])
        excess = float(batch_density_certainty(densities, ctx).max()) - h2
        add_check(report, 'mixed_certainty_bound', excess, 1e-10, excess <= 1e-10, d=d)

        if d <= self.optimize_max_dimension:
            optimizer = CertaintyOptimizer(parent=self)
            value, state = optimizer.maximize(ctx, seed=self.seed)
            alpha, beta, fidelity = nearest_minimum_uncertainty_state(state, pair, ctx)
            report['summary'].update(optimizer_value=value, nearest_alpha=alpha,
                                     nearest_beta=beta, nearest_fidelity=fidelity)
            add_check(report, 'optimizer_bound', value - h2, 1e-9, value - h2 <= 1e-9, d=d)
            add_check(report, 'optimizer_value', abs(value - h2), 1e-9,
                      abs(value - h2) <= 1e-9, d=d)
            add_check(report, 'optimizer_fidelity', 1.0 - fidelity, 1e-9,
                      1.0 - fidelity <= 1e-9, d=d)
        return report


class QuasiprobApp(PhaseCommandApp):
    """Quasi probability distribution of a state, its marginals and sharpness"""

    name = "qudit-phase quasiprob"
    description = __doc__
    command = 'quasiprob'

    kind = Enum(['husimi', 'wigner'], default_value='husimi', config=True,
        help="Phase point operators: husimi (any d) or wigner (odd d).")
    state = Enum(['random', 'mixed', 'gamma', 'basis', 'maximally-mixed'],
        default_value='random', config=True, help="State whose distribution is computed.")
    reconstruct = Bool(False, config=True,
        help="Reconstruct the state from its husimi distribution (odd d only).")

    aliases = Dict(dict(_base_aliases, kind='QuasiprobApp.kind', state='QuasiprobApp.state'))
    flags = Dict(dict(_base_flags, reconstruct=(
        {'QuasiprobApp': {'reconstruct': True}},
        "Reconstruct the state from its distribution and report the round-trip error."
    )))

    def make_state(self, ctx, pair):
        d = ctx.d
        if self.state == 'gamma':
            return DensityMatrix.pure(pair.gamma.astype(complex))
        if self.state == 'basis':
            return DensityMatrix.pure(np.eye(d, dtype=complex)[0])
        if self.state == 'maximally-mixed':
            return DensityMatrix.maximally_mixed(d)
        rng = default_rng(self.seed, 0)
        if self.state == 'random':
            return DensityMatrix.pure(haar_state(rng, d))
        return DensityMatrix(ginibre_density(rng, d))

    def build_report(self):
        ctx, pair = self.solve()
        rho = self.make_state(ctx, pair)
        if self.d <= MAX_GRID_DIMENSION:
            pps = phase_points(self.kind, pair, ctx)
            dist = quasi_distribution(rho, pps)
            sigma, tau = sharpness(pps, ctx)
        else:
            dist = quasi_distribution_direct(rho, pair, ctx, kind=self.kind)
            sigma, tau = kernel_sharpness(kind_kernel(self.kind, pair, ctx), ctx)
        self._dist = dist

        report = self.new_report(kind=self.kind, state=self.state)
        state_sigma, state_tau = sharpness(rho, ctx)
        report['summary'].update(
            h=pair.h,
            total=float(dist.values.sum()),
            min_value=float(dist.values.min()),
            max_value=float(dist.values.max()),
            sigma=sigma,
            tau=tau,
            state_sigma=state_sigma,
            state_tau=state_tau,
            optimality_gap=pair.h ** 2 - state_sigma * state_tau,
        )
        columns = ['index', 'position', 'momentum', 'expected_position', 'expected_momentum']
        rows = [marginals(dist, 'position'), marginals(dist, 'momentum'),
                smeared_diagonal(rho, pair, ctx, 'position', kind=self.kind),
                smeared_diagonal(rho, pair, ctx, 'momentum', kind=self.kind)]
        add_table(report, 'marginals', columns, zip(range(self.d), *rows))

        d = self.d
        total = abs(dist.values.sum() - 1.0)
        add_check(report, 'normalization', total, 1e-10, total <= 1e-10, d=d)
        if self.kind == 'husimi':
            negative = -float(dist.values.min())
            add_check(report, 'nonnegative', negative, 1e-12, negative <= 1e-12, d=d)
        for axis, (got, expected) in (('position', rows[::2]), ('momentum', rows[1::2])):
            residual = float(np.max(np.abs(got - expected)))
            add_check(report, 'marginal_' + axis, residual, 1e-10, residual <= 1e-10, d=d)
        target = pair.h if self.kind == 'husimi' else 1.0
        residual = max(abs(sigma - target), abs(tau - target))
        add_check(report, 'sharpness', residual, 1e-10, residual <= 1e-10, d=d)
        gap = report['summary']['optimality_gap']
        add_check(report, 'optimality_gap', -gap, 1e-10, gap >= -1e-10, d=d)

        if self.reconstruct:
            recovered = reconstruct_state(dist, pair, ctx, log=self.log)
            error = float(np.max(np.abs(recovered.entries - rho.entries)))
            report['summary']['reconstruction_error'] = error
            add_check(report, 'reconstruction_round_trip', error, 1e-8, error <= 1e-8, d=d)
        return report

    def extra_outputs(self, report):
        path = os.path.join(self.output_dir, 'quasiprob_distribution.%s' % self.output_format)
        return [write_distribution(self._dist, path, seed=self.seed, log=self.log)]


class CompleteApp(PhaseCommandApp):
    """Fourier coefficients f_mn and g_mn, the zero set and the positivity argument"""

    name = "qudit-phase complete"
    description = __doc__
    command = 'complete'

    crosscheck_max_dimension = Integer(16, config=True,
        help="Largest d for the phase point Fourier cross-check.")

    def build_report(self):
        ctx, pair = self.solve()
        d = self.d
        table = coeff_table(pair, ctx)
        zeros = zero_set(table)
        expected = expected_zero_set(d)
        report = self.new_report()
        report['summary'].update(
            h=pair.h,
            zero_set_size=len(zeros),
            min_abs_f=float(np.min(np.abs(table.f))),
            min_g=float(table.g.min()),
        )
        k = range(d)
        add_table(report, 'f', ['m', 'n', 'real', 'imag', 'abs'],
                  ((m, n, table.f[m, n].real, table.f[m, n].imag, abs(table.f[m, n]))
                   for m in k for n in k))
        c = centered_indices(d).tolist()
        add_table(report, 'g', ['m', 'n', 'g'],
                  ((m, n, table.g[i, j]) for i, m in enumerate(c) for j, n in enumerate(c)))
        add_table(report, 'zero_set', ['m', 'n'], zeros)

        for name, value in table.symmetry_residuals().items():
            add_check(report, 'symmetry_' + name, value, 1e-10, value <= 1e-10, d=d)
        add_check(report, 'zero_set', float(zeros != expected), 0.0, zeros == expected,
                  d=d, informational=d > ZERO_SET_ASSERTED_MAX_D)
        if d <= MAX_BLOCK_DIMENSION:
            blocks = block_spectrum_check(ctx, pair)
            for name in ('block_spectrum', 'eigen_residual', 'projector_residual'):
                add_check(report, 'block_' + name, blocks[name], 1e-9,
                          blocks[name] <= 1e-9, d=d)
        if d % 2 == 1 and d <= MAX_REDUCTION_DIMENSION:
            reduced = symmetric_reduction_check(pair, ctx)
            report['summary'].update(reduced_size=reduced['size'],
                                     min_perron_component=reduced['min_perron_component'])
            add_check(report, 'reduced_eigen_residual', reduced['eigen_residual'], 1e-9,
                      reduced['eigen_residual'] <= 1e-9, d=d)
            for name in ('conjugation_residual', 'projection_residual'):
                if reduced[name] is not None:
                    add_check(report, name, reduced[name], 1e-10, reduced[name] <= 1e-10, d=d)
            for name in ('min_power_entry', 'min_perron_component'):
                add_check(report, name, reduced[name], 0.0, reduced[name] > 0.0, d=d)
        elif d % 2 == 1:
            self.log.info("d=%i is above the symmetric reduction cap %i; reporting min g only",
                          d, MAX_REDUCTION_DIMENSION)
        if d % 2 == 1:
            min_g = report['summary']['min_g']
            add_check(report, 'min_g', min_g, 0.0, min_g > 0.0, d=d,
                      informational=d > G_POSITIVE_ASSERTED_MAX_D)
        if d <= self.crosscheck_max_dimension:
            residual = fourier_phase_point_residual(pair, ctx)
            add_check(report, 'fourier_phase_points', residual, 1e-10, residual <= 1e-10, d=d)
        if d == 2:
            rank = qubit_real_completeness_rank(pair, ctx)
            report['summary']['real_rank'] = rank
            add_check(report, 'qubit_real_rank', rank, 3, rank == 3, d=d)
        return report


class AsymptApp(PhaseCommandApp):
    """Exact versus asymptotic h and Gamma, and the continuum-limit expansions"""

    name = "qudit-phase asympt"
    description = __doc__
    command = 'asympt'

    max_d = Integer(20, config=True, help="Largest d of the h-versus-d table.")
    continuum_d = Integer(101, config=True,
        help="Dimension at which the continuum expansions are checked.")
    ratio_dimensions = List(Integer(), default_value=[16, 32, 64, 128], config=True,
        help="Doubling sequence for the deviation ratios.")
    emit_plots = Bool(False, config=True, help="Write gnuplot scripts next to the CSV tables.")

    aliases = Dict(dict(_base_aliases, **{'max-d': 'AsymptApp.max_d'}))
    flags = Dict(dict(_base_flags, **{'emit-plots': (
        {'AsymptApp': {'emit_plots': True}},
        "Write gnuplot scripts for the h and Gamma tables."
    )}))

    @validate('max_d', 'continuum_d')
    def _valid_dimension(self, proposal):
        value = proposal['value']
        if not 2 <= value <= MAX_DIMENSION:
            raise TraitError("%s must lie in [2, %i], got %r"
                             % (proposal['trait'].name, MAX_DIMENSION, value))
        return value

    def build_report(self):
        solver = HarperSolver(parent=self)
        report = self.new_report(max_d=self.max_d, continuum_d=self.continuum_d)
        add_table(report, 'h_vs_d', ['d', 'h_exact', 'h_asym'],
                  h_table(range(2, self.max_d + 1), solver=solver))
        add_table(report, 'gamma', ['a', 'gamma_exact', 'gamma_asym'],
                  gamma_table(self.d, solver=solver))

        ratios = deviation_ratios(self.ratio_dimensions, solver=solver)
        add_table(report, 'deviation_ratios', ['d', 'ratio'], zip(self.ratio_dimensions[1:], ratios))
        for d, ratio in zip(self.ratio_dimensions[1:], ratios):
            add_check(report, 'deviation_ratio', ratio, 4.0, 3.0 <= ratio <= 5.0, d=d)

        ctx = build_context(self.continuum_d)
        pair = solver.solve(ctx)
        level = excited_level_check(pair, ctx)
        report['summary'].update(second_eigenvalue=level['second_eigenvalue'],
                                 second_eigenvalue_prediction=level['prediction'])
        add_check(report, 'excited_level', level['residual'], level['tolerance'],
                  level['passed'], d=ctx.d)
        scheme = ContinuumScheme(ctx.d)
        for label, state in (('gamma', pair.gamma), ('gaussian', gaussian_state(scheme, ctx))):
            expansion = continuum_expansion_check(state, scheme, ctx)
            report['summary'].update({'%s_%s' % (label, key): value
                                      for key, value in expansion.items()})
            add_check(report, label + '_continuum', expansion['position_residual'],
                      expansion['expansion_tolerance'], expansion['passed'], d=ctx.d)
        return report

    def extra_outputs(self, report):
        if not self.emit_plots:
            return []
        if self.output_format != 'csv':
            self.log.warning("plot scripts read CSV tables; rerun with --format csv")
            return []
        return [emit_plot_script(os.path.join(self.output_dir, 'asympt_%s.csv' % table), kind,
                                 log=self.log)
                for table, kind in (('h_vs_d', 'h'), ('gamma', 'gamma'))]


class SelftestApp(PhaseCommandApp):
    """Run the full invariant suite over a range of dimensions"""

    name = "qudit-phase selftest"
    description = __doc__
    command = 'selftest'
    classes = [HarperSolver, InvariantSuite]

    max_d = Integer(16, config=True, help="Largest dimension checked.")

    aliases = Dict(dict(_base_aliases, **{'max-d': 'SelftestApp.max_d'}))

    @validate('max_d')
    def _valid_max_d(self, proposal):
        value = proposal['value']
        if not 1 <= value <= MAX_GRID_DIMENSION:
            raise TraitError("max_d must lie in [1, %i], got %r" % (MAX_GRID_DIMENSION, value))
        return value

    def build_report(self):
        suite = InvariantSuite(parent=self, max_d=self.max_d, seed=self.seed)
        report = self.new_report(max_d=self.max_d)
        rows = suite.run()
        for name, d, value, tolerance, passed, informational in rows:
            add_check(report, name, value, tolerance, passed, d=d, informational=informational)
        report['summary'].update(checks=len(rows), failed=sum(not row[4] for row in rows))
        return report


class PlotApp(PhaseCommandApp):
    """Write a gnuplot script for an existing h-versus-d or Gamma table"""

    name = "qudit-phase plot"
    description = __doc__
    command = 'plot'

    table = Unicode('', config=True, help="CSV table to plot.")
    kind = Enum(sorted(PLOT_KINDS), default_value='h', config=True,
        help="Table layout: h (d, h_exact, h_asym) or gamma (a, gamma_exact, gamma_asym).")

    aliases = Dict(dict(_base_aliases, table='PlotApp.table', kind='PlotApp.kind'))

    def start(self):
        JupyterApp.start(self)
        try:
            path = emit_plot_script(self.table, self.kind, log=self.log)
        except QuditPhaseError as e:
            self.log.critical("plot failed: %s", e)
            self.exit(e.exit_status)
        self.log.info("wrote %s", path)


#-----------------------------------------------------------------------------
# Root application
#-----------------------------------------------------------------------------

_examples = """
qudit-phase harper --d 2 --format json      # h and Gamma of the qubit
qudit-phase complete --d 4                  # f table and its zero set
qudit-phase quasiprob --d 7 --kind wigner   # Wigner distribution of a random state
qudit-phase selftest --max-d 9              # full invariant suite
"""


class QuditPhaseApp(StrictArgumentsMixin, JupyterApp):
    """Root level qudit-phase app"""

    name = "qudit-phase"
    version = __version__
    description = "Finite-dimensional phase space: Harper ground states, minimum-uncertainty states, quasi probabilities and completeness"
    examples = _examples
    _log_formatter_cls = LogFormatter

    subcommands = dict(
        harper=(HarperApp, HarperApp.__doc__),
        states=(StatesApp, StatesApp.__doc__),
        quasiprob=(QuasiprobApp, QuasiprobApp.__doc__),
        complete=(CompleteApp, CompleteApp.__doc__),
        asympt=(AsymptApp, AsymptApp.__doc__),
        selftest=(SelftestApp, SelftestApp.__doc__),
        plot=(PlotApp, PlotApp.__doc__),
    )

    def start(self):
        """Perform the App's actions as configured"""
        super(QuditPhaseApp, self).start()

        # The above should have called a subcommand and raised NoStart; if we
        # get here, it didn't, so we should self.log.info a message.
        subcmds = ", ".join(sorted(self.subcommands))
        sys.exit("Please supply at least one subcommand: %s" % subcmds)


def clear_instances():
    """Forget the singleton apps so another run starts from fresh config."""
    QuditPhaseApp.clear_instance()
    for app, _ in QuditPhaseApp.subcommands.values():
        app.clear_instance()


def run(argv=None):
    """Run the command line in-process and return its exit code."""
    try:
        QuditPhaseApp.launch_instance(argv=argv)
    except SystemExit as e:
        if e.code is None or isinstance(e.code, int):
            return e.code or 0
        return 1
    finally:
        clear_instances()
    return 0


main = launch_new_instance = QuditPhaseApp.launch_instance

if __name__ == '__main__':
    main()
