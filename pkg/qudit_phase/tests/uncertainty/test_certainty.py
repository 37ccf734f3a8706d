import math

import numpy as np
import pytest

from qudit_phase.errors import DimensionError, NormalizationError
from qudit_phase.qudit import DensityMatrix, StateVector, build_context
from qudit_phase.qudit.sampling import ginibre_densities, haar_states
from qudit_phase.uncertainty import (
    amgm_chain,
    batch_certainty,
    batch_density_certainty,
    bloch_vector,
    certainty,
    modulus_lift,
    spectral_certainty_bound,
)


def test_sharp_position_has_no_certainty():
    assert certainty(StateVector([1.0, 0.0]), build_context(2)) == pytest.approx(0.0)


def test_qubit_maximum():
    # Bloch vector (1, 0, 1)/sqrt(2)
    ctx = build_context(2)
    state = [math.cos(math.pi / 8), math.sin(math.pi / 8)]
    assert np.allclose(bloch_vector(state, ctx), [1 / math.sqrt(2), 0.0, 1 / math.sqrt(2)])
    assert certainty(state, ctx) == pytest.approx(0.5)


@pytest.mark.parametrize('d', [1, 3, 8])
def test_maximally_mixed_has_no_certainty(d):
    expected = 1.0 if d == 1 else 0.0
    assert certainty(DensityMatrix.maximally_mixed(d), build_context(d)) == pytest.approx(
        expected, abs=1e-12)


def test_unnormalized_input_is_rejected():
    with pytest.raises(NormalizationError):
        certainty(np.array([1.0, 1.0]), build_context(2))
    with pytest.raises(NormalizationError):
        certainty(np.eye(2), build_context(2))


@pytest.mark.slow
@pytest.mark.parametrize('d', list(range(2, 17)))
def test_random_states_respect_the_bound(d, qp_pair, qp_rng):
    ctx, pair = qp_pair(d)
    states = haar_states(qp_rng, d, 10000)
    assert batch_certainty(states, ctx).max() <= pair.h ** 2 + 1e-10
    densities = ginibre_densities(qp_rng, d, 1000)
    assert batch_density_certainty(densities, ctx).max() <= pair.h ** 2 + 1e-10


def test_batch_agrees_with_single(qp_rng):
    ctx = build_context(5)
    states = haar_states(qp_rng, 5, 4)
    assert np.allclose(batch_certainty(states, ctx), [certainty(s, ctx) for s in states])
    densities = ginibre_densities(qp_rng, 5, 4)
    assert np.allclose(batch_density_certainty(densities, ctx),
                       [certainty(DensityMatrix(r), ctx) for r in densities])
    with pytest.raises(DimensionError):
        batch_density_certainty(densities[0], ctx)


@pytest.mark.parametrize('d', [3, 6])
def test_amgm_chain(d, qp_pair, qp_haar):
    ctx, pair = qp_pair(d)
    chain = amgm_chain(qp_haar(d), ctx, pair)
    assert chain['sqrt_certainty'] <= chain['mean_modulus'] + 1e-12
    assert chain['mean_modulus'] <= chain['h'] + 1e-12


@pytest.mark.parametrize('d', [2, 5])
def test_spectral_bound(d, qp_pair, qp_ginibre):
    ctx, pair = qp_pair(d)
    bound = spectral_certainty_bound(qp_ginibre(d), ctx, pair)
    assert bound['sqrt_certainty'] <= bound['spectral_mean'] + 1e-12
    assert bound['spectral_mean'] <= bound['h'] + 1e-12


@pytest.mark.parametrize('d', [4, 7])
def test_modulus_lift(d, qp_haar):
    ctx = build_context(d)
    psi = StateVector(qp_haar(d))
    q, p = abs(np.vdot(psi.amplitudes, ctx.Q @ psi.amplitudes)), \
        abs(np.vdot(psi.amplitudes, ctx.P @ psi.amplitudes))

    lifted = modulus_lift(psi, ctx).amplitudes
    assert abs(np.vdot(lifted, ctx.Q @ lifted)) == pytest.approx(q)
    assert abs(np.vdot(lifted, ctx.P @ lifted)) >= p - 1e-12

    lifted = modulus_lift(psi, ctx, basis='momentum').amplitudes
    assert abs(np.vdot(lifted, ctx.P @ lifted)) == pytest.approx(p)
    assert abs(np.vdot(lifted, ctx.Q @ lifted)) >= q - 1e-12


def test_modulus_lift_fixed_point():
    ctx = build_context(3)
    state = StateVector(np.array([0.6, 0.0, 0.8]))
    assert np.allclose(modulus_lift(state, ctx).amplitudes, state.amplitudes)


def test_bloch_vector_needs_a_qubit():
    with pytest.raises(DimensionError):
        bloch_vector(np.eye(3)[0], build_context(3))
