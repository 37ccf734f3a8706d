"""Marginal sharpness (sigma, tau) of a covariant family and the bound sigma tau <= h^2."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np

from ..errors import NonCovariantError
from ..qudit.vectors import density_entries
from .phasepoints import PhasePointSet

COVARIANCE_TOL = 1e-8


def kernel_sharpness(kernel, ctx):
    """(|tr K Q|, |tr K P|) for a kernel matrix, validated or not."""
    kernel = ctx.check_operator(kernel, name="kernel")
    k = np.arange(ctx.d)
    sigma = abs(np.dot(np.diag(kernel), ctx.omega_powers))
    tau = abs(np.sum(kernel[k, (k + 1) % ctx.d]))
    return float(sigma), float(tau)


def sharpness(source, ctx):
    """(sigma, tau) of a PhasePointSet, or of the family generated by a density kernel.

    For a set, sigma = |tr[sum_beta Lambda(alpha, beta) Q]| must not depend on
    alpha, nor tau = |tr[sum_alpha Lambda(alpha, beta) P]| on beta.

    Raises
    ------
    NonCovariantError
        If either varies along the grid by more than 1e-8.
    """
    if not isinstance(source, PhasePointSet):
        return kernel_sharpness(density_entries(source, ctx), ctx)
    d = ctx.d
    k = np.arange(d)
    rows = source.marginal_operators('position')
    columns = source.marginal_operators('momentum')
    sigmas = np.abs(np.diagonal(rows, axis1=1, axis2=2) @ ctx.omega_powers)
    taus = np.abs(np.sum(columns[:, k, (k + 1) % d], axis=1))
    for name, values in (('sigma', sigmas), ('tau', taus)):
        spread = float(np.ptp(values))
        if spread > COVARIANCE_TOL:
            raise NonCovariantError("%s varies by %.3g across the grid" % (name, spread))
    return float(sigmas[0]), float(taus[0])


def optimality_gap(kernel, pair, ctx):
    """h^2 - sigma tau, zero exactly for kernels |alpha0, beta0><alpha0, beta0|."""
    sigma, tau = sharpness(kernel, ctx)
    return pair.h ** 2 - sigma * tau
