"""Tensor-space operators whose joint eigenvector is the table |f>."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np

from ..errors import DimensionError
from ..harper.operator import build_harper
from .coefficients import coeff_table

MAX_BLOCK_DIMENSION = 16
EIGENSPACE_TOL = 1e-9


def block_operators(ctx):
    """(H_L, H_R) on C^d (x) C^d, index m*d + n.

    H_L |f> and H_R |f> act on the f table like H acting from the left on
    P^m Q^n and from the right, respectively.
    """
    P, Q = ctx.P, ctx.Q
    Pd, Qd = P.conj().T, Q.conj().T
    one = np.eye(ctx.d)
    left = 0.25 * (np.kron(Pd, one) + np.kron(P, one) + np.kron(Q, Pd) + np.kron(Qd, P))
    right = 0.25 * (np.kron(Pd, Q) + np.kron(P, Qd) + np.kron(one, Pd) + np.kron(one, P))
    return left, right


def block_spectrum_check(ctx, pair, max_dimension=MAX_BLOCK_DIMENSION):
    """Residuals of the block structure of H_L and the eigen equation for |f>.

    Returns a dict with

    * ``block_spectrum``: sorted spectrum of H_L against that of H repeated d times,
    * ``eigen_residual``: max|(H_L + H_R)|f> - 2h|f>|,
    * ``top_eigenvalue``: greatest eigenvalue of H_L + H_R,
    * ``projector_residual``: norm of |f> outside the 2h eigenspace, relative to |f>.
    """
    d = ctx.d
    if d > max_dimension:
        raise DimensionError("block check is limited to d <= %i, got %i"
                             % (max_dimension, d))
    left, right = block_operators(ctx)
    spectrum = np.linalg.eigvalsh(build_harper(ctx))
    block = np.sort(np.linalg.eigvalsh(left))
    total = left + right
    f = coeff_table(pair, ctx).f.ravel()
    values, vectors = np.linalg.eigh(total)
    top = vectors[:, np.abs(values - 2 * pair.h) < EIGENSPACE_TOL]
    outside = f - top @ (top.conj().T @ f)
    return {
        'block_spectrum': float(np.max(np.abs(block - np.sort(np.repeat(spectrum, d))))),
        'eigen_residual': float(np.max(np.abs(total @ f - 2 * pair.h * f))),
        'top_eigenvalue': float(values[-1]),
        'projector_residual': float(np.linalg.norm(outside) / np.linalg.norm(f)),
    }
