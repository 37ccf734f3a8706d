import numpy as np
import pytest

from qudit_phase.errors import NormalizationError, PositivityError
from qudit_phase.quasiprob import (
    QuasiDistribution,
    marginals,
    mixture_residual,
    phase_points,
    quasi_distribution,
    quasi_distribution_direct,
    smeared_diagonal,
    translate_density,
)
from qudit_phase.qudit import DensityMatrix
from qudit_phase.qudit.sampling import ginibre_densities


@pytest.mark.parametrize('kind,d', [('husimi', 2), ('husimi', 4), ('wigner', 3), ('wigner', 5)])
def test_maximally_mixed_is_uniform(kind, d, qp_pair):
    ctx, pair = qp_pair(d)
    dist = quasi_distribution(DensityMatrix.maximally_mixed(d), phase_points(kind, pair, ctx))
    assert np.allclose(dist.values, 1.0 / d ** 2)
    for axis in ('position', 'momentum'):
        assert np.allclose(marginals(dist, axis), 1.0 / d)


def test_minimum_uncertainty_state_at_its_own_point(qp_pair):
    ctx, pair = qp_pair(5)
    state = ctx.displacement(1, 4) @ pair.gamma
    dist = quasi_distribution(DensityMatrix.pure(state), phase_points('husimi', pair, ctx))
    assert dist.values[1, 4] == pytest.approx(1.0 / 5)
    assert dist.values.max() == pytest.approx(1.0 / 5)


@pytest.mark.parametrize('d', [2, 3, 6])
def test_husimi_is_a_probability(d, qp_pair, qp_rng):
    ctx, pair = qp_pair(d)
    pps = phase_points('husimi', pair, ctx)
    for rho in ginibre_densities(qp_rng, d, 20):
        dist = quasi_distribution(rho, pps)
        assert dist.values.sum() == pytest.approx(1.0, abs=1e-10)
        assert dist.values.min() >= -1e-12


def test_husimi_marginal_of_position_state(qp_pair):
    ctx, pair = qp_pair(5)
    rho = DensityMatrix.pure(np.eye(5)[0])
    dist = quasi_distribution(rho, phase_points('husimi', pair, ctx))
    expected = pair.gamma[(-np.arange(5)) % 5] ** 2
    assert np.allclose(marginals(dist, 'position'), expected)
    assert np.allclose(smeared_diagonal(rho, pair, ctx, 'position'), expected)


@pytest.mark.parametrize('kind,d', [('husimi', 4), ('husimi', 5), ('wigner', 7)])
def test_marginals_match_smeared_diagonals(kind, d, qp_pair, qp_ginibre):
    ctx, pair = qp_pair(d)
    rho = qp_ginibre(d)
    dist = quasi_distribution(rho, phase_points(kind, pair, ctx))
    for axis in ('position', 'momentum'):
        expected = smeared_diagonal(rho, pair, ctx, axis, kind=kind)
        assert np.max(np.abs(marginals(dist, axis) - expected)) < 1e-10


def test_wigner_position_marginal_is_sharp(qp_pair, qp_ginibre):
    ctx, pair = qp_pair(7)
    rho = qp_ginibre(7)
    dist = quasi_distribution(rho, phase_points('wigner', pair, ctx))
    assert np.max(np.abs(marginals(dist, 'position') - np.diag(rho).real)) < 1e-10


def test_wigner_can_be_negative(qp_pair):
    ctx, pair = qp_pair(3)
    rho = DensityMatrix.pure(np.array([1.0, 1.0, 0.0]) / np.sqrt(2))
    dist = quasi_distribution(rho, phase_points('wigner', pair, ctx))
    assert dist.kind == 'wigner'
    assert dist.values.min() < 0.0


@pytest.mark.parametrize('kind,d', [('husimi', 6), ('wigner', 5)])
def test_direct_agrees_with_grid(kind, d, qp_pair, qp_ginibre):
    ctx, pair = qp_pair(d)
    rho = qp_ginibre(d)
    grid = quasi_distribution(rho, phase_points(kind, pair, ctx))
    direct = quasi_distribution_direct(rho, pair, ctx, kind=kind)
    assert np.max(np.abs(grid.values - direct.values)) < 1e-12


def test_translation_shifts_the_grid(qp_pair, qp_ginibre):
    ctx, pair = qp_pair(4)
    pps = phase_points('husimi', pair, ctx)
    rho = qp_ginibre(4)
    moved = quasi_distribution(translate_density(rho, 1, 3, ctx), pps)
    original = quasi_distribution(rho, pps)
    assert np.allclose(moved.values, np.roll(original.values, (1, 3), axis=(0, 1)))


def test_mixture(qp_pair, qp_rng):
    ctx, pair = qp_pair(3)
    densities = ginibre_densities(qp_rng, 3, 3, rank=1)
    assert mixture_residual([0.2, 0.3, 0.5], densities, phase_points('husimi', pair, ctx)) < 1e-12


def test_distribution_validation():
    with pytest.raises(NormalizationError):
        QuasiDistribution(np.full((2, 2), 0.3))
    with pytest.raises(PositivityError):
        QuasiDistribution(np.array([[0.6, -0.1], [0.25, 0.25]]))
    dist = QuasiDistribution(np.array([[0.6, -0.1], [0.25, 0.25]]), kind='wigner')
    assert dist.d == 2
    clamped = QuasiDistribution(np.array([[0.5, -1e-13], [0.25, 0.25 + 1e-13]])).clamped()
    assert clamped[0, 1] == 0.0
