import numpy as np
import pytest

from qudit_phase.completeness import (
    CONJUGATION_MAX_DIMENSION,
    MAX_REDUCTION_DIMENSION,
    conjugated_operator,
    corner_matrix,
    reduced_operator,
    symmetric_basis,
    symmetric_reduction_check,
)
from qudit_phase.errors import DimensionError, OddDimensionRequired


def test_corner_matrix():
    D = corner_matrix(4, -1.0)
    assert np.array_equal(D, [[0, 1, 0, -1], [1, 0, 1, 0], [0, 1, 0, 1], [-1, 0, 1, 0]])
    assert np.array_equal(corner_matrix(1, 1.0), [[2.0]])


@pytest.mark.parametrize('d', [1, 3, 7])
def test_symmetric_basis_is_orthonormal(d):
    E = symmetric_basis(d)
    assert E.shape == (d, (d + 1) // 2)
    assert np.allclose(E.T @ E, np.eye((d + 1) // 2))


@pytest.mark.parametrize('d', [1, 3, 5, 9, 15])
def test_reduced_operator_is_the_projected_operator(d):
    E2 = np.kron(symmetric_basis(d), symmetric_basis(d))
    expected = E2.T @ conjugated_operator(d) @ E2
    assert np.max(np.abs(reduced_operator(d) - expected)) < 1e-13


@pytest.mark.parametrize('d', [1, 3, 5, 9])
def test_reduction(d, qp_pair):
    ctx, pair = qp_pair(d)
    report = symmetric_reduction_check(pair, ctx)
    assert report['size'] == ((d + 1) // 2) ** 2
    assert report['eigen_residual'] < 1e-10
    assert report['conjugation_residual'] < 1e-12
    assert report['projection_residual'] < 1e-13
    assert report['min_power_entry'] > 0.0
    assert report['min_perron_component'] > 0.0
    assert report['min_g'] > 0.0


def test_reduction_without_full_operator(qp_pair):
    d = CONJUGATION_MAX_DIMENSION + 17
    ctx, pair = qp_pair(d)
    report = symmetric_reduction_check(pair, ctx)
    assert report['size'] == ((d + 1) // 2) ** 2
    assert report['conjugation_residual'] is None
    assert report['projection_residual'] is None
    assert report['eigen_residual'] < 1e-9
    assert report['min_power_entry'] > 0.0
    assert report['min_perron_component'] > 0.0


def test_reduction_cap(qp_pair):
    d = MAX_REDUCTION_DIMENSION + 2
    ctx, pair = qp_pair(d)
    with pytest.raises(DimensionError):
        reduced_operator(d)
    with pytest.raises(DimensionError):
        symmetric_reduction_check(pair, ctx)


def test_full_operator_cap():
    with pytest.raises(DimensionError):
        conjugated_operator(CONJUGATION_MAX_DIMENSION + 1)


def test_trivial_dimension(qp_pair):
    ctx, pair = qp_pair(1)
    assert np.allclose(conjugated_operator(1), [[2.0]])
    assert np.allclose(reduced_operator(1), [[2.0]])
    assert symmetric_reduction_check(pair, ctx)['min_g'] == pytest.approx(1.0)


def test_even_dimension_is_refused(qp_pair):
    ctx, pair = qp_pair(4)
    with pytest.raises(OddDimensionRequired):
        symmetric_reduction_check(pair, ctx)
    with pytest.raises(OddDimensionRequired):
        reduced_operator(4)
