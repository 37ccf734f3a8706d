import math

import numpy as np
import pytest

from traitlets import TraitError
from traitlets.config import Config

from qudit_phase.errors import ConvergenceError, DegenerateSpectrumError, DomainError
from qudit_phase.harper import (
    HarperSolver,
    build_harper,
    eigen_residual,
    ground_pair_dense,
    ground_pair_power,
    power_iteration,
    verify_gamma_symmetries,
)
from qudit_phase.qudit import build_context


def test_qubit_ground_pair():
    pair = HarperSolver().solve(build_context(2))
    assert pair.h == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
    assert np.allclose(pair.gamma, [math.cos(math.pi / 8), math.sin(math.pi / 8)], atol=1e-12)


def test_one_dimensional_ground_pair():
    pair = HarperSolver().solve(build_context(1))
    assert pair.h == pytest.approx(1.0)
    assert np.allclose(pair.gamma, [1.0])
    assert pair.gap == math.inf


@pytest.mark.parametrize('method', ['jacobi', 'lapack', 'power'])
@pytest.mark.parametrize('d', [2, 5, 7, 12])
def test_methods_agree(method, d):
    ctx = build_context(d)
    reference = np.linalg.eigvalsh(build_harper(ctx))
    pair = HarperSolver(method=method).solve(ctx)
    assert pair.method == method
    assert pair.h == pytest.approx(reference[-1], abs=1e-9)
    assert pair.gap == pytest.approx(reference[-1] - reference[-2], abs=1e-6)
    assert eigen_residual(build_harper(ctx), pair) < 1e-9
    assert np.linalg.norm(pair.gamma) == pytest.approx(1.0)


def test_power_oracle_at_five():
    ctx = build_context(5)
    H = build_harper(ctx)
    value, _, iterations = power_iteration(H, kappa=1.0, tol=1e-13)
    assert HarperSolver().solve(ctx).h == pytest.approx(value, abs=1e-10)
    assert iterations > 0


@pytest.mark.parametrize('d', [2, 3, 6, 9, 16, 27])
def test_gamma_is_positive(d):
    pair = HarperSolver().solve(build_context(d))
    assert pair.gamma.min() > 0.0


@pytest.mark.parametrize('d', [2, 6, 9])
def test_gamma_symmetries(d):
    ctx = build_context(d)
    pair = HarperSolver().solve(ctx)
    residuals = verify_gamma_symmetries(pair, ctx)
    assert set(residuals) == {'fourier', 'reflection', 'expectation'}
    tolerance = 1e-12 if d == 2 else 1e-10
    for name, value in residuals.items():
        assert value < tolerance, name


def test_auto_method_switches_to_lapack():
    solver = HarperSolver(jacobi_max_dimension=4)
    assert solver.resolve_method(4) == 'jacobi'
    assert solver.resolve_method(5) == 'lapack'
    assert solver.solve(build_context(5)).method == 'lapack'


def test_spectrum_is_descending():
    ctx = build_context(6)
    for method in ('jacobi', 'lapack'):
        values = HarperSolver(method=method).spectrum(ctx)
        assert np.allclose(values, np.linalg.eigvalsh(build_harper(ctx))[::-1])


def test_theta_sweep():
    ctx = build_context(4)
    h = HarperSolver().theta_sweep(ctx, [math.pi / 8, math.pi / 4])
    assert h[1] == pytest.approx(math.sqrt(2) * HarperSolver().solve(ctx).h)


def test_solver_is_configurable():
    config = Config({'HarperSolver': {'method': 'power', 'kappa': 2.0}})
    solver = HarperSolver(config=config)
    assert solver.method == 'power'
    assert solver.kappa == 2.0
    with pytest.raises(TraitError):
        HarperSolver(kappa=0.5)
    with pytest.raises(TraitError):
        HarperSolver(method='qr')


def test_power_iteration_cap():
    H = build_harper(build_context(9))
    with pytest.raises(ConvergenceError):
        ground_pair_power(H, max_iterations=3)
    with pytest.raises(DomainError):
        power_iteration(H, kappa=0.5)


def test_degenerate_spectrum_is_refused():
    with pytest.raises(DegenerateSpectrumError):
        ground_pair_dense(np.eye(3))
