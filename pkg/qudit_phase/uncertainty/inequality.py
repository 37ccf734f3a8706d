"""The weighted inequality cos(theta)|<Q>| + sin(theta)|<P>| <= h_theta."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import functools
import math

import numpy as np

from ..harper.operator import check_theta, theta_harper
from ..harper.solver import HarperSolver
from ..qudit.context import build_context
from ..qudit.vectors import StateVector, expectations


@functools.lru_cache(maxsize=64)
def _theta_pair(d, theta):
    ctx = build_context(d)
    return HarperSolver().solve_matrix(theta_harper(ctx, theta), theta=theta)


def theta_ground_pair(ctx, theta):
    """Ground pair of H_theta, cached per (d, theta)."""
    return _theta_pair(ctx.d, check_theta(theta))


def theta_min_uncertainty_state(alpha, beta, theta, ctx):
    """P^alpha Q^beta |Gamma_theta>, which saturates the weighted inequality."""
    gamma = theta_ground_pair(ctx, theta).gamma
    amplitudes = np.roll(ctx.phases(beta * np.arange(ctx.d)) * gamma, alpha)
    return StateVector(amplitudes)


def ms_inequality_check(state, theta, ctx):
    """Return (lhs, h_theta) for a pure state or density matrix."""
    theta = check_theta(theta)
    q, p = expectations(state, ctx)
    lhs = math.cos(theta) * abs(q) + math.sin(theta) * abs(p)
    return lhs, theta_ground_pair(ctx, theta).h
