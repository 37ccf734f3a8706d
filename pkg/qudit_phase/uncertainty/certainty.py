"""The certainty C = |<Q><P>| and the inequalities bounding it."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import math

import numpy as np

from ..errors import DimensionError
from ..qudit.vectors import (
    DensityMatrix,
    batch_expectations,
    density_entries,
    expectations,
    position_amplitudes,
)


def certainty(state, ctx):
    """|<Q><P>| of a pure state, or |tr(rho Q) tr(rho P)| of a density matrix.

    Raises
    ------
    NormalizationError
        If the input is not a normalized state or a valid density matrix.
    """
    q, p = expectations(state, ctx)
    return abs(q) * abs(p)


def batch_certainty(amplitudes, ctx):
    """Certainty of every row of an (n, d) array of position amplitudes."""
    q, p = batch_expectations(amplitudes, ctx)
    return np.abs(q) * np.abs(p)


def batch_density_certainty(densities, ctx):
    """Certainty of a stack of (n, d, d) density matrices."""
    densities = np.asarray(densities)
    if densities.ndim != 3 or densities.shape[1:] != (ctx.d, ctx.d):
        raise DimensionError("expected shape (n, %i, %i), got %s"
                             % (ctx.d, ctx.d, densities.shape))
    k = np.arange(ctx.d)
    q = np.diagonal(densities, axis1=1, axis2=2) @ ctx.omega_powers
    p = np.sum(densities[:, k, (k + 1) % ctx.d], axis=1)
    return np.abs(q) * np.abs(p)


def amgm_chain(state, ctx, pair):
    """The chain sqrt(C) <= (|<Q>| + |<P>|)/2 <= h from the proof of the bound."""
    q, p = expectations(state, ctx)
    return {
        'sqrt_certainty': math.sqrt(abs(q) * abs(p)),
        'mean_modulus': 0.5 * (abs(q) + abs(p)),
        'h': pair.h,
    }


def spectral_certainty_bound(rho, ctx, pair):
    """Mixed-state bound through the spectral decomposition of rho.

    |tr(rho Q)| <= sum_i p_i |<Q>_i| and likewise for P, so
    sqrt(C(rho)) <= sum_i p_i (|<Q>_i| + |<P>_i|)/2 <= h.
    """
    entries = density_entries(rho, ctx)
    weights, vectors = np.linalg.eigh(entries)
    weights = np.clip(weights, 0.0, None)
    moduli = np.abs(batch_expectations(vectors.T, ctx))
    return {
        'sqrt_certainty': math.sqrt(certainty(DensityMatrix(entries), ctx)),
        'spectral_mean': float(np.dot(weights, 0.5 * (moduli[0] + moduli[1]))),
        'h': pair.h,
    }


def bloch_vector(state, ctx):
    """(<sigma_x>, <sigma_y>, <sigma_z>) of a qubit state, with P = sigma_x, Q = sigma_z."""
    if ctx.d != 2:
        raise DimensionError("Bloch vectors need d = 2, got d = %i" % ctx.d)
    c0, c1 = position_amplitudes(state, ctx)
    cross = np.conj(c0) * c1
    return np.array([2 * cross.real, 2 * cross.imag, abs(c0) ** 2 - abs(c1) ** 2])
