"""State vectors, density matrices and the Fourier transform between bases."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np
from traitlets import Enum, HasTraits, Instance, TraitError, validate

from ..errors import DimensionError, NormalizationError

NORM_TOL = 1e-10
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10

BASES = ('position', 'momentum')


class StateVector(HasTraits):
    """Normalized amplitudes over the position basis |a> or momentum basis |~b>."""

    amplitudes = Instance(np.ndarray)
    basis = Enum(BASES, default_value='position')

    def __init__(self, amplitudes, basis='position', **kwargs):
        super().__init__(amplitudes=np.asarray(amplitudes), basis=basis, **kwargs)

    @validate('amplitudes')
    def _valid_amplitudes(self, proposal):
        value = np.array(proposal['value'], dtype=complex)
        if value.ndim != 1 or value.size == 0:
            raise TraitError("amplitudes must be a non-empty vector, got shape %s"
                             % (value.shape,))
        norm = np.vdot(value, value).real
        if abs(norm - 1.0) > NORM_TOL:
            raise NormalizationError("state has squared norm %.17g" % norm)
        value.setflags(write=False)
        return value

    @property
    def d(self):
        return self.amplitudes.shape[0]

    def __repr__(self):
        return "<StateVector d=%i basis=%s>" % (self.d, self.basis)


class DensityMatrix(HasTraits):
    """Hermitian, positive semidefinite, trace-one matrix in the position basis."""

    entries = Instance(np.ndarray)

    def __init__(self, entries, **kwargs):
        super().__init__(entries=np.asarray(entries), **kwargs)

    @validate('entries')
    def _valid_entries(self, proposal):
        value = np.array(proposal['value'], dtype=complex)
        if value.ndim != 2 or value.shape[0] != value.shape[1] or value.size == 0:
            raise TraitError("density matrix must be square, got shape %s"
                             % (value.shape,))
        hermiticity = np.max(np.abs(value - value.conj().T))
        if hermiticity > HERMITIAN_TOL:
            raise NormalizationError("density matrix is not Hermitian (%.3g)" % hermiticity)
        trace = np.trace(value).real
        if abs(trace - 1.0) > TRACE_TOL:
            raise NormalizationError("density matrix has trace %.17g" % trace)
        smallest = np.linalg.eigvalsh(value)[0]
        if smallest < EIGENVALUE_FLOOR:
            raise NormalizationError(
                "density matrix has negative eigenvalue %.3g" % smallest)
        value.setflags(write=False)
        return value

    @property
    def d(self):
        return self.entries.shape[0]

    @classmethod
    def pure(cls, state):
        amplitudes = state.amplitudes if isinstance(state, StateVector) else np.asarray(state)
        return cls(np.outer(amplitudes, amplitudes.conj()))

    @classmethod
    def maximally_mixed(cls, d):
        return cls(np.eye(d, dtype=complex) / d)

    def __repr__(self):
        return "<DensityMatrix d=%i>" % self.d


def position_amplitudes(state, ctx):
    """Position-basis amplitudes of a StateVector or a raw vector.

    Raw vectors are taken to be position amplitudes and are checked for
    normalization like a StateVector would be.
    """
    if isinstance(state, StateVector):
        amplitudes = ctx.check_vector(state.amplitudes)
        if state.basis == 'momentum':
            amplitudes = ctx.F @ amplitudes
        return amplitudes
    amplitudes = ctx.check_vector(np.asarray(state, dtype=complex))
    norm = np.vdot(amplitudes, amplitudes).real
    if abs(norm - 1.0) > NORM_TOL:
        raise NormalizationError("state has squared norm %.17g" % norm)
    return amplitudes


def density_entries(rho, ctx):
    """Entries of a DensityMatrix, validating raw arrays on the way."""
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    return ctx.check_operator(rho.entries, name="density matrix")


def dft(state, ctx):
    """Apply the transform F, with kernel w^(ab)/sqrt(d), to the amplitudes.

    The result is tagged with the other basis. Applying it twice gives the
    reflected state T|phi>. Use :func:`change_basis` to express one physical
    state in the other basis instead.
    """
    if not isinstance(state, StateVector):
        state = StateVector(state)
    amplitudes = ctx.check_vector(state.amplitudes)
    other = 'momentum' if state.basis == 'position' else 'position'
    return StateVector(ctx.F @ amplitudes, basis=other)


def change_basis(state, ctx, basis):
    """Express ``state`` in ``basis``: c~_b = <~b|phi> = (F^dagger c)_b."""
    if basis not in BASES:
        raise TraitError("basis must be one of %s, got %r" % (BASES, basis))
    if not isinstance(state, StateVector):
        state = StateVector(state)
    if state.basis == basis:
        return state
    amplitudes = ctx.check_vector(state.amplitudes)
    if basis == 'momentum':
        return StateVector(ctx.F.conj().T @ amplitudes, basis='momentum')
    return StateVector(ctx.F @ amplitudes, basis='position')


def expectations(state, ctx):
    """Return (<Q>, <P>) for a pure state or a density matrix."""
    if isinstance(state, DensityMatrix) or np.ndim(state) == 2:
        rho = density_entries(state, ctx)
        q = np.dot(np.diag(rho), ctx.omega_powers)
        # tr(rho P) = sum_a <a|rho|a+1>
        p = np.sum(rho[np.arange(ctx.d), (np.arange(ctx.d) + 1) % ctx.d])
        return complex(q), complex(p)
    amplitudes = position_amplitudes(state, ctx)
    return tuple(complex(x) for x in batch_expectations(amplitudes[None, :], ctx)[:, 0])


def batch_expectations(amplitudes, ctx):
    """(<Q>, <P>) for a stack of position amplitudes of shape (n, d).

    Returns an array of shape (2, n). <P> uses sum_a conj(c_{a+1}) c_a.
    """
    amplitudes = np.asarray(amplitudes)
    if amplitudes.ndim != 2 or amplitudes.shape[1] != ctx.d:
        raise DimensionError("expected shape (n, %i), got %s" % (ctx.d, amplitudes.shape))
    q = (np.abs(amplitudes) ** 2) @ ctx.omega_powers
    p = np.sum(np.roll(amplitudes, -1, axis=1).conj() * amplitudes, axis=1)
    return np.stack([q, p])
