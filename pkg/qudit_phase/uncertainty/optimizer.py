"""Numerical maximization of the certainty over pure states."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import math

import numpy as np
from scipy.optimize import minimize
from traitlets import Bool, Float, Integer, TraitError, validate
from traitlets.config import LoggingConfigurable

from ..prometheus.metrics import OPTIMIZER_STARTS_TOTAL
from ..qudit.sampling import default_rng, haar_state
from ..qudit.vectors import StateVector
from ..utils import run_in_workers
from .certainty import certainty


def log_certainty(psi, ctx):
    """log C at an unnormalized vector, with its Wirtinger gradient d/d(psi*).

    log C = log|psi^dag Q psi| + log|psi^dag P psi| - 2 log(psi^dag psi). For
    a unit vector the gradient is already tangent to the sphere.
    """
    norm2 = np.vdot(psi, psi).real
    q_psi = ctx.omega_powers * psi
    qd_psi = np.conj(ctx.omega_powers) * psi
    p_psi = np.roll(psi, 1)
    pd_psi = np.roll(psi, -1)
    q = np.vdot(psi, q_psi)
    p = np.vdot(psi, p_psi)
    if abs(q) == 0.0 or abs(p) == 0.0:
        return -math.inf, np.zeros_like(psi)
    value = math.log(abs(q)) + math.log(abs(p)) - 2.0 * math.log(norm2)
    grad = 0.5 * (q_psi / q + qd_psi / np.conj(q) + p_psi / p + pd_psi / np.conj(p))
    return value, grad - 2.0 * psi / norm2


class CertaintyOptimizer(LoggingConfigurable):
    """Multi-start projected gradient ascent of log C, with a quasi-Newton polish.

    Start ``i`` draws its Haar-random initial state from the stream
    ``[seed, i]``, so the best value and state do not depend on how the
    starts are scheduled across workers.
    """

    seeds = Integer(32, config=True, help="Number of random starts.")

    iterations = Integer(500, config=True, help="Gradient steps per start.")

    step = Float(0.1, config=True, help="Initial step length of each line search.")

    min_step = Float(1e-12, config=True,
        help="Backtracking stops, and the start ends, below this step.")

    polish = Bool(True, config=True,
        help="Refine each start with BFGS on the real parameterisation.")

    polish_tolerance = Float(1e-12, config=True, help="BFGS gradient tolerance.")

    @validate('seeds', 'iterations')
    def _valid_count(self, proposal):
        if proposal['value'] < 1:
            raise TraitError("%s must be at least 1" % proposal['trait'].name)
        return proposal['value']

    def _ascend(self, ctx, psi):
        value, grad = log_certainty(psi, ctx)
        for iteration in range(self.iterations):
            step = self.step
            while step >= self.min_step:
                trial = psi + step * grad
                trial /= np.linalg.norm(trial)
                trial_value, trial_grad = log_certainty(trial, ctx)
                if trial_value > value:
                    break
                step *= 0.5
            else:
                break
            psi, value, grad = trial, trial_value, trial_grad
        return psi, value, iteration

    def _polish(self, ctx, psi, value):
        d = ctx.d

        def objective(x):
            v, g = log_certainty(x[:d] + 1j * x[d:], ctx)
            if not math.isfinite(v):
                return math.inf, np.zeros_like(x)
            return -v, -2.0 * np.concatenate([g.real, g.imag])

        result = minimize(objective, np.concatenate([psi.real, psi.imag]), jac=True,
                          method='BFGS', options={'gtol': self.polish_tolerance,
                                                  'maxiter': 20 * d + 200})
        polished = result.x[:d] + 1j * result.x[d:]
        polished /= np.linalg.norm(polished)
        polished_value, _ = log_certainty(polished, ctx)
        if polished_value >= value:
            return polished, polished_value
        return psi, value

    def run_start(self, ctx, seed, index):
        """One start: (log C, unit vector)."""
        psi = haar_state(default_rng(seed, index), ctx.d)
        psi, value, steps = self._ascend(ctx, psi)
        if self.polish:
            psi, value = self._polish(ctx, psi, value)
        self.log.debug("start %i: log C = %.17g after %i steps", index, value, steps)
        return value, psi

    def maximize(self, ctx, seed=0):
        """Best (C, StateVector) over all starts; ties go to the lowest start index."""
        OPTIMIZER_STARTS_TOTAL.inc(self.seeds)
        results = run_in_workers(lambda i: self.run_start(ctx, seed, i), range(self.seeds))
        best = 0
        for index, (value, _) in enumerate(results):
            if value > results[best][0]:
                best = index
        state = StateVector(results[best][1])
        value = certainty(state, ctx)
        self.log.debug("d=%i: best certainty %.17g from start %i of %i",
                       ctx.d, value, best, self.seeds)
        return value, state


def maximize_certainty(ctx, seeds=32, iterations=500, seed=0, parent=None):
    """Largest certainty found from ``seeds`` random starts and its state."""
    optimizer = CertaintyOptimizer(seeds=seeds, iterations=iterations, parent=parent)
    return optimizer.maximize(ctx, seed=seed)
