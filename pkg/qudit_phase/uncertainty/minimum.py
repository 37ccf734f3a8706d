"""Minimum-uncertainty states |alpha, beta> = P^alpha Q^beta |Gamma>."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np
from traitlets import Integer

from ..errors import DomainError
from ..qudit.vectors import StateVector, position_amplitudes
from ..utils import max_abs


class MinUncertaintyState(StateVector):
    """A state saturating C = h^2, labelled by its phase-space point."""

    alpha = Integer(0)
    beta = Integer(0)

    def __repr__(self):
        return "<MinUncertaintyState d=%i alpha=%i beta=%i>" % (self.d, self.alpha, self.beta)


def _check_point(alpha, beta, d):
    for name, value in (('alpha', alpha), ('beta', beta)):
        if not 0 <= value < d:
            raise DomainError("%s must lie in [0, %i), got %r" % (name, d, value))


def min_uncertainty_state(alpha, beta, pair, ctx):
    """P^alpha Q^beta Gamma, with components w^(beta (a - alpha)) Gamma_(a - alpha)."""
    _check_point(alpha, beta, ctx.d)
    gamma = ctx.check_vector(pair.gamma, name="gamma")
    amplitudes = np.roll(ctx.phases(beta * np.arange(ctx.d)) * gamma, alpha)
    return MinUncertaintyState(amplitudes, alpha=int(alpha), beta=int(beta))


def minimum_uncertainty_grid(pair, ctx):
    """All d^2 states as an array indexed [alpha, beta, a]."""
    d = ctx.d
    gamma = ctx.check_vector(pair.gamma, name="gamma")
    base = ctx.phases(np.outer(np.arange(d), np.arange(d))) * gamma
    return np.stack([np.roll(base, alpha, axis=1) for alpha in range(d)])


def resolution_of_identity_residual(pair, ctx):
    """max-abs entry of (1/d) sum |alpha,beta><alpha,beta| - 1."""
    states = minimum_uncertainty_grid(pair, ctx).reshape(ctx.d ** 2, ctx.d)
    total = states.T @ states.conj() / ctx.d
    return max_abs(total - np.eye(ctx.d))


def nearest_minimum_uncertainty_state(state, pair, ctx):
    """(alpha, beta, fidelity) of the |alpha,beta> closest to ``state``.

    Ties go to the lexicographically smallest (alpha, beta).
    """
    amplitudes = position_amplitudes(state, ctx)
    states = minimum_uncertainty_grid(pair, ctx).reshape(ctx.d ** 2, ctx.d)
    fidelities = np.abs(states.conj() @ amplitudes) ** 2
    index = int(np.argmax(fidelities))
    alpha, beta = divmod(index, ctx.d)
    return alpha, beta, float(fidelities[index])
