"""Completeness seen from the phase point operators themselves."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np

from ..errors import DimensionError
from ..quasiprob.phasepoints import phase_points
from ..utils import max_abs
from .coefficients import coeff_table

RANK_TOL = 1e-10


def fourier_phase_point_residual(pair, ctx):
    """max|(1/d) sum w^(alpha n - beta m) Delta(alpha, beta) - (1/d) conj(f_mn) P^m Q^n|.

    Both sides are compared for every (m, n); a zero f_mn on the right is a
    vanishing transformed operator on the left.
    """
    d = ctx.d
    operators = phase_points('husimi', pair, ctx).operators
    k = np.arange(d)
    forward = ctx.phases(np.outer(k, k))
    # sum over beta of w^(-beta m), then over alpha of w^(alpha n)
    partial = np.tensordot(np.conj(forward), operators, axes=([0], [1]))
    transformed = np.tensordot(forward, partial, axes=([0], [1])).swapaxes(0, 1) / d
    f = coeff_table(pair, ctx).f
    shifts = np.array([[ctx.displacement(m, n) for n in k] for m in k])
    return max_abs(transformed - np.conj(f)[:, :, None, None] * shifts / d)


def qubit_real_completeness_rank(pair, ctx):
    """Rank of the four qubit phase point operators on the real symmetric 2 x 2 matrices.

    The coordinates are tr[Delta 1], tr[Delta sigma_x] and tr[Delta sigma_z].
    Full rank 3 means the operators are complete for real amplitudes even
    though f_11 vanishes.
    """
    if ctx.d != 2:
        raise DimensionError("qubit check needs d = 2, got d = %i" % ctx.d)
    operators = phase_points('husimi', pair, ctx).operators.reshape(4, 2, 2)
    basis = np.array([np.eye(2), [[0.0, 1.0], [1.0, 0.0]], [[1.0, 0.0], [0.0, -1.0]]])
    coordinates = np.einsum('kij,bji->kb', operators, basis)
    return int(np.linalg.matrix_rank(coordinates.real, tol=RANK_TOL))
