"""Strict positivity of g for odd d through the reflection-symmetric reduction."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np

from ..errors import DimensionError, OddDimensionRequired
from ..utils import centered_indices, max_abs
from .blocks import MAX_BLOCK_DIMENSION, block_operators
from .coefficients import coeff_table

# K^(S) is (d+1)^2/4 square and the power test is dense
MAX_REDUCTION_DIMENSION = 75
# comparisons against the full d^2 x d^2 operators
CONJUGATION_MAX_DIMENSION = MAX_BLOCK_DIMENSION


def corner_matrix(d, sign):
    """D(sign) on centered indices: ones on the off-diagonals, ``sign`` in the corners.

    For d = 1 both corner terms land on the single entry.
    """
    D = np.eye(d, k=1) + np.eye(d, k=-1)
    D[-1, 0] += sign
    D[0, -1] += sign
    return D


def symmetric_basis(d):
    """Columns e_a = (|a> + |-a>) / sqrt(2 (1 + delta_a0)) for a = 0 .. (d-1)/2."""
    c = centered_indices(d)
    E = np.zeros((d, (d + 1) // 2))
    for a in range((d + 1) // 2):
        E[c == a, a] += 1.0
        E[c == -a, a] += 1.0
        E[:, a] /= np.sqrt(2.0 * (1.0 + (a == 0)))
    return E


def _check_conjugation_dimension(d):
    if d > CONJUGATION_MAX_DIMENSION:
        raise DimensionError(
            "the full conjugated operator is built only for d <= %i, got %i"
            % (CONJUGATION_MAX_DIMENSION, d))


def conjugated_operator(d):
    """K = e^(i pi mn/d) (H_L + H_R) e^(-i pi m'n'/d) in closed form, centered indices."""
    _check_conjugation_dimension(d)
    c = centered_indices(d)
    cosines = np.cos(np.pi * c / d)
    K = np.zeros((d * d, d * d))
    for i, n in enumerate(c):
        unit = np.zeros((d, d))
        unit[i, i] = 1.0
        D = corner_matrix(d, (-1.0) ** (n % 2))
        K += 0.5 * cosines[i] * np.kron(D, unit)
        K += 0.5 * cosines[i] * np.kron(unit, D)
    return K


def reduced_operator(d):
    """K^(S) assembled from the reduced corner blocks E^T D(+-1) E.

    E^T |n><n| E is |b><b| for n = +-b, so only the (d+1)/2 square blocks
    and the diagonal projectors of the reduced space are needed.
    """
    if d % 2 == 0:
        raise OddDimensionRequired("symmetric reduction needs odd d, got %i" % d)
    if d > MAX_REDUCTION_DIMENSION:
        raise DimensionError(
            "the symmetric reduction is built only for d <= %i, got %i"
            % (MAX_REDUCTION_DIMENSION, d))
    r = (d + 1) // 2
    E = symmetric_basis(d)
    blocks = {sign: E.T @ corner_matrix(d, sign) @ E for sign in (1.0, -1.0)}
    reduced = np.zeros((r * r, r * r))
    for b in range(r):
        unit = np.zeros((r, r))
        unit[b, b] = 1.0
        block = blocks[(-1.0) ** (b % 2)]
        weight = 0.5 * np.cos(np.pi * b / d)
        reduced += weight * np.kron(block, unit)
        reduced += weight * np.kron(unit, block)
    return reduced


def _phase_conjugation_residual(ctx, K):
    d = ctx.d
    c = centered_indices(d)
    left, right = block_operators(ctx)
    order = (np.add.outer(c % d * d, c % d)).ravel()
    total = (left + right)[np.ix_(order, order)]
    phase = np.exp(1j * np.pi * np.outer(c, c).ravel() / d)
    return max_abs(phase[:, None] * total * np.conj(phase)[None, :] - K)


def symmetric_reduction_check(pair, ctx):
    """Build K^(S) and report the pieces of the positivity argument.

    Returns a dict with the reduced eigen residual, the smallest entry of
    (K^(S) + 1)^(d-1), the smallest Perron-vector component of K^(S) + 1
    and the smallest g_mn. For d <= CONJUGATION_MAX_DIMENSION it also
    carries the residual of K against the phase-conjugated H_L + H_R and
    of K^(S) against E^T K E; above that both are None.

    Raises
    ------
    OddDimensionRequired
        For even d.
    DimensionError
        Above MAX_REDUCTION_DIMENSION.
    """
    d = ctx.d
    reduced = reduced_operator(d)
    E = symmetric_basis(d)
    table = coeff_table(pair, ctx)
    # (E x E)^T vec(G) is vec(E^T G E) for row-major vec
    g_reduced = (E.T @ table.g @ E).ravel()
    shifted = reduced + np.eye(reduced.shape[0])
    power = np.linalg.matrix_power(shifted, d - 1)
    values, vectors = np.linalg.eigh(shifted)
    perron = vectors[:, -1] * np.sign(vectors[np.argmax(np.abs(vectors[:, -1])), -1])
    conjugation = projection = None
    if d <= CONJUGATION_MAX_DIMENSION:
        K = conjugated_operator(d)
        E2 = np.kron(E, E)
        conjugation = _phase_conjugation_residual(ctx, K)
        projection = max_abs(E2.T @ K @ E2 - reduced)
    return {
        'size': reduced.shape[0],
        'eigen_residual': max_abs(reduced @ g_reduced - 2 * pair.h * g_reduced),
        'min_power_entry': float(power.min()),
        'min_perron_component': float(perron.min()),
        'min_g': float(table.g.min()),
        'conjugation_residual': conjugation,
        'projection_residual': projection,
    }
