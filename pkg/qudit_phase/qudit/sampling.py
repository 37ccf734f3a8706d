"""Seeded random states: Haar vectors and Ginibre density matrices."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np


def default_rng(seed, *streams):
    """Generator for ``seed`` and an optional stream path.

    Runs that fan out over workers pass their stream index here so each run
    draws the same numbers whatever order it is scheduled in.
    """
    return np.random.default_rng([int(seed)] + [int(s) for s in streams])


def _complex_gaussian(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def haar_states(rng, d, count):
    """``count`` Haar-random pure states as rows of a (count, d) array."""
    z = _complex_gaussian(rng, (count, d))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def haar_state(rng, d):
    return haar_states(rng, d, 1)[0]


def ginibre_densities(rng, d, count, rank=None):
    """``count`` random density matrices rho = G G^dagger / tr(G G^dagger)."""
    rank = d if rank is None else rank
    g = _complex_gaussian(rng, (count, d, rank))
    rho = g @ np.conj(np.swapaxes(g, 1, 2))
    rho = 0.5 * (rho + np.conj(np.swapaxes(rho, 1, 2)))
    trace = np.trace(rho, axis1=1, axis2=2).real
    return rho / trace[:, None, None]


def ginibre_density(rng, d, rank=None):
    return ginibre_densities(rng, d, 1, rank=rank)[0]
