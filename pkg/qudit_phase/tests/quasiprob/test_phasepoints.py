import numpy as np
import pytest

from qudit_phase.errors import DimensionError, DomainError, OddDimensionRequired
from qudit_phase.quasiprob import (
    MAX_GRID_DIMENSION,
    convolution_residual,
    convolution_weights,
    covariant_family,
    fourier_covariance_residual,
    phase_points,
    phase_points_from_kernel,
    translational_covariance_residual,
    wigner_orthogonality_residual,
)
from qudit_phase.qudit import build_context


@pytest.mark.parametrize('kind,d', [('husimi', 2), ('husimi', 6), ('wigner', 3), ('wigner', 7)])
def test_grid_sums_to_identity(kind, d, qp_pair):
    ctx, pair = qp_pair(d)
    pps = phase_points(kind, pair, ctx)
    assert pps.operators.shape == (d, d, d, d)
    assert np.max(np.abs(pps.grid_sum() - np.eye(d))) < 1e-10


@pytest.mark.parametrize('kind,d', [('husimi', 4), ('wigner', 5)])
def test_operators_are_hermitian_with_unit_trace(kind, d, qp_pair):
    ctx, pair = qp_pair(d)
    ops = phase_points(kind, pair, ctx).operators
    assert np.allclose(ops, np.conj(np.swapaxes(ops, 2, 3)))
    assert np.allclose(np.trace(ops, axis1=2, axis2=3), 1.0 / d)


def test_husimi_operators_are_projectors_onto_minimum_uncertainty_states(qp_pair):
    ctx, pair = qp_pair(5)
    ops = phase_points('husimi', pair, ctx).operators
    state = ctx.displacement(2, 3) @ pair.gamma
    assert np.allclose(ops[2, 3], np.outer(state, state.conj()) / 5)


@pytest.mark.parametrize('kind,d', [('husimi', 3), ('husimi', 4), ('wigner', 5)])
def test_covariance(kind, d, qp_pair):
    ctx, pair = qp_pair(d)
    pps = phase_points(kind, pair, ctx)
    for a in range(d):
        for b in range(d):
            assert translational_covariance_residual(pps, ctx, a, b) < 1e-10
    assert fourier_covariance_residual(pps, ctx) < 1e-10


@pytest.mark.parametrize('d', [3, 5, 9])
def test_wigner_orthogonality(d, qp_pair):
    ctx, pair = qp_pair(d)
    assert wigner_orthogonality_residual(phase_points('wigner', pair, ctx)) < 1e-10


def test_husimi_operators_are_not_orthogonal(qp_pair):
    ctx, pair = qp_pair(3)
    assert wigner_orthogonality_residual(phase_points('husimi', pair, ctx)) > 1e-3


def test_wigner_needs_odd_dimension(qp_pair):
    ctx, pair = qp_pair(4)
    with pytest.raises(OddDimensionRequired):
        phase_points('wigner', pair, ctx)
    with pytest.raises(OddDimensionRequired):
        convolution_weights(pair, ctx)


def test_grid_cap():
    ctx = build_context(MAX_GRID_DIMENSION + 1)
    with pytest.raises(DimensionError):
        covariant_family(np.eye(ctx.d) / ctx.d, ctx)


def test_unknown_kind(qp_pair):
    ctx, pair = qp_pair(3)
    with pytest.raises(DomainError):
        phase_points('glauber', pair, ctx)


def test_kernel_family(qp_ginibre):
    ctx = build_context(4)
    pps = phase_points_from_kernel(qp_ginibre(4), ctx)
    assert pps.kind == 'covariant'
    assert np.max(np.abs(pps.grid_sum() - np.eye(4))) < 1e-10
    assert translational_covariance_residual(pps, ctx, 1, 3) < 1e-12


@pytest.mark.parametrize('d', [3, 5, 7])
def test_convolution(d, qp_pair):
    ctx, pair = qp_pair(d)
    weights = convolution_weights(pair, ctx)
    assert weights.sum() == pytest.approx(1.0)
    assert convolution_residual(pair, ctx) < 1e-10


@pytest.mark.parametrize('axis', ['position', 'momentum'])
def test_wigner_marginal_operators_are_projectors(axis, qp_pair):
    ctx, pair = qp_pair(5)
    marginal = phase_points('wigner', pair, ctx).marginal_operators(axis)
    basis = np.eye(5) if axis == 'position' else ctx.F
    for k in range(5):
        assert np.allclose(marginal[k], np.outer(basis[:, k], basis[:, k].conj()))
