"""Covariant phase point operators Delta(alpha, beta) and Delta_W(alpha, beta)."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np
from traitlets import Enum, HasTraits, Instance, TraitError, validate

from ..errors import DimensionError, DomainError, OddDimensionRequired
from ..qudit.vectors import BASES
from ..utils import max_abs

MAX_GRID_DIMENSION = 32
KINDS = ('husimi', 'wigner', 'covariant')


def check_grid_dimension(d):
    if d > MAX_GRID_DIMENSION:
        raise DimensionError(
            "phase point grids are materialised only for d <= %i, got %i"
            % (MAX_GRID_DIMENSION, d))


def covariant_family(kernel, ctx):
    """Lambda(alpha, beta) = (1/d) P^alpha Q^beta K Q^-beta P^-alpha as a (d, d, d, d) array.

    Entry ``[alpha, beta, i, j]`` is w^(beta (i - j)) K[i - alpha, j - alpha] / d.
    """
    d = ctx.d
    check_grid_dimension(d)
    kernel = ctx.check_operator(kernel, name="kernel")
    shifted = np.stack([np.roll(kernel, (alpha, alpha), axis=(0, 1)) for alpha in range(d)])
    k = np.arange(d)
    phases = ctx.phases(np.multiply.outer(k, np.subtract.outer(k, k)))
    return shifted[:, None, :, :] * phases[None, :, :, :] / d


def kind_kernel(kind, pair, ctx):
    """Kernel |Gamma><Gamma| for husimi, the reflection T for wigner."""
    if kind == 'husimi':
        gamma = ctx.check_vector(pair.gamma, name="gamma")
        return np.outer(gamma, gamma).astype(complex)
    if kind == 'wigner':
        if ctx.d % 2 == 0:
            raise OddDimensionRequired("the Wigner construction needs odd d, got %i" % ctx.d)
        return ctx.T
    raise DomainError("unknown phase point kind %r" % kind)


class PhasePointSet(HasTraits):
    """The d x d grid of operators of one covariant family."""

    kind = Enum(KINDS, default_value='husimi')
    kernel = Instance(np.ndarray)
    operators = Instance(np.ndarray, help="Array indexed [alpha, beta, i, j].")

    @validate('operators')
    def _valid_operators(self, proposal):
        value = proposal['value']
        if value.ndim != 4 or len(set(value.shape)) != 1:
            raise TraitError("operators must have shape (d, d, d, d), got %s"
                             % (value.shape,))
        return value

    @property
    def d(self):
        return self.operators.shape[0]

    def __repr__(self):
        return "<PhasePointSet d=%i kind=%s>" % (self.d, self.kind)

    def grid_sum(self):
        return self.operators.sum(axis=(0, 1))

    def marginal_operators(self, axis='position'):
        """Sum over beta (position, indexed by alpha) or over alpha (momentum, by beta)."""
        if axis not in BASES:
            raise DomainError("axis must be one of %s, got %r" % (BASES, axis))
        return self.operators.sum(axis=1 if axis == 'position' else 0)


def phase_points(kind, pair, ctx):
    """Build the husimi or wigner phase point set.

    Raises
    ------
    OddDimensionRequired
        For the wigner kind with even d.
    DimensionError
        Above the materialisation cap.
    """
    kernel = kind_kernel(kind, pair, ctx)
    return PhasePointSet(kind=kind, kernel=kernel, operators=covariant_family(kernel, ctx))


def phase_points_from_kernel(kernel, ctx):
    """Covariant family generated by an arbitrary kernel."""
    kernel = np.asarray(kernel, dtype=complex)
    return PhasePointSet(kind='covariant', kernel=kernel,
                         operators=covariant_family(kernel, ctx))


def translational_covariance_residual(pps, ctx, a, b):
    """max over the grid of |P^a Q^b Delta(alpha, beta) (P^a Q^b)^dag - Delta(alpha + a, beta + b)|."""
    shift = ctx.displacement(a, b)
    moved = shift @ pps.operators @ shift.conj().T
    return max_abs(moved - np.roll(pps.operators, (-a, -b), axis=(0, 1)))


def fourier_covariance_residual(pps, ctx):
    """max over the grid of |F Delta(alpha, beta) F^dag - Delta(-beta, alpha)|."""
    d = ctx.d
    k = np.arange(d)
    alpha, beta = np.meshgrid(k, k, indexing='ij')
    moved = ctx.F @ pps.operators @ ctx.F.conj().T
    return max_abs(moved - pps.operators[(-beta) % d, alpha])


def wigner_orthogonality_residual(pps):
    """max|tr[Delta_W(a, b) Delta_W(a', b')] - delta delta / d| over all pairs of points."""
    d = pps.d
    flat = pps.operators.reshape(d * d, d * d)
    transposed = np.swapaxes(pps.operators, 2, 3).reshape(d * d, d * d)
    gram = flat @ transposed.T
    return max_abs(gram - np.eye(d * d) / d)
