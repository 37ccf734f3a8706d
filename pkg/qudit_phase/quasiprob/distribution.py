"""Quasi probability distributions D(alpha, beta) = tr[rho Delta(alpha, beta)]."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np
from traitlets import Enum, HasTraits, Instance, TraitError, validate

from ..errors import DomainError, InvariantViolation, NormalizationError, PositivityError
from ..qudit.context import build_context
from ..qudit.vectors import BASES, DensityMatrix, density_entries
from .phasepoints import KINDS, kind_kernel

NORMALIZATION_TOL = 1e-10
NEGATIVITY_FLOOR = -1e-12
IMAGINARY_TOL = 1e-12


class QuasiDistribution(HasTraits):
    """Real d x d grid indexed (alpha, beta)."""

    kind = Enum(KINDS, default_value='husimi')
    values = Instance(np.ndarray)

    @validate('values')
    def _valid_values(self, proposal):
        value = np.array(proposal['value'], dtype=float)
        if value.ndim != 2 or value.shape[0] != value.shape[1] or value.size == 0:
            raise TraitError("distribution must be a square grid, got shape %s"
                             % (value.shape,))
        total = value.sum()
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NormalizationError("distribution sums to %.17g" % total)
        value.setflags(write=False)
        return value

    def _check_husimi(self, values):
        smallest = values.min()
        if smallest < NEGATIVITY_FLOOR:
            raise PositivityError("husimi distribution has value %.3g" % smallest)

    def __init__(self, values, kind='husimi', **kwargs):
        super().__init__(values=values, kind=kind, **kwargs)
        if self.kind == 'husimi':
            self._check_husimi(self.values)

    @property
    def d(self):
        return self.values.shape[0]

    def __repr__(self):
        return "<QuasiDistribution d=%i kind=%s>" % (self.d, self.kind)

    def clamped(self):
        """Values with roundoff negatives in [-1e-12, 0) set to 0, for output."""
        values = self.values.copy()
        values[(values < 0.0) & (values >= NEGATIVITY_FLOOR)] = 0.0
        return values


def _real_part(values):
    imaginary = np.max(np.abs(values.imag)) if values.size else 0.0
    if imaginary > IMAGINARY_TOL:
        raise InvariantViolation("distribution has imaginary part %.3g" % imaginary)
    return values.real


def quasi_distribution(rho, pps):
    """tr[rho Delta(alpha, beta)] over the materialised grid."""
    ctx = build_context(pps.d)
    entries = density_entries(rho, ctx)
    values = np.einsum('ji,abij->ab', entries, pps.operators)
    return QuasiDistribution(_real_part(values), kind=pps.kind)


def quasi_distribution_direct(rho, pair, ctx, kind='husimi'):
    """Same as :func:`quasi_distribution` without materialising the operator grid.

    For each alpha the trace against w^(beta (i - j)) K[i - alpha, j - alpha]
    collapses to a sum over the diagonals j = i + k, which one FFT over k
    turns into all beta at once.
    """
    d = ctx.d
    entries = density_entries(rho, ctx)
    kernel = kind_kernel(kind, pair, ctx)
    rows = np.arange(d)[:, None]
    diagonals = (rows + np.arange(d)[None, :]) % d
    values = np.empty((d, d), dtype=complex)
    for alpha in range(d):
        weighted = entries.T * np.roll(kernel, (alpha, alpha), axis=(0, 1))
        sums = weighted[rows, diagonals].sum(axis=0)
        values[alpha] = np.fft.fft(sums) / d
    return QuasiDistribution(_real_part(values), kind=kind)


def marginals(dist, axis='position'):
    """Sum over beta (position marginal, indexed by alpha) or over alpha (momentum)."""
    if axis not in BASES:
        raise DomainError("axis must be one of %s, got %r" % (BASES, axis))
    return dist.values.sum(axis=1 if axis == 'position' else 0)


def smeared_diagonal(rho, pair, ctx, axis='position', kind='husimi'):
    """The marginal a distribution of ``kind`` must have.

    husimi: sum_a Gamma^2_(a - alpha) <a|rho|a>, or the same with the momentum
    diagonal <~b|rho|~b>. wigner: the diagonal itself.
    """
    if axis not in BASES:
        raise DomainError("axis must be one of %s, got %r" % (BASES, axis))
    entries = density_entries(rho, ctx)
    if axis == 'momentum':
        entries = ctx.F.conj().T @ entries @ ctx.F
    diagonal = np.diag(entries).real
    if kind == 'wigner':
        return diagonal
    weights = ctx.check_vector(pair.gamma, name="gamma") ** 2
    k = np.arange(ctx.d)
    return weights[np.subtract.outer(k, k).T % ctx.d] @ diagonal


def translate_density(rho, a, b, ctx):
    """P^a Q^b rho (P^a Q^b)^dag."""
    shift = ctx.displacement(a, b)
    return DensityMatrix(shift @ density_entries(rho, ctx) @ shift.conj().T)


def mixture_residual(weights, densities, pps):
    """max|D(sum p_i rho_i) - sum p_i D(rho_i)|: a mixture's distribution is the mixture."""
    weights = np.asarray(weights, dtype=float)
    densities = [DensityMatrix(rho) if not isinstance(rho, DensityMatrix) else rho
                 for rho in densities]
    mixed = DensityMatrix(sum(p * rho.entries for p, rho in zip(weights, densities)))
    combined = sum(p * quasi_distribution(rho, pps).values
                   for p, rho in zip(weights, densities))
    return float(np.max(np.abs(quasi_distribution(mixed, pps).values - combined)))
