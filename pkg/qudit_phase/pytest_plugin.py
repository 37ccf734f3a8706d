# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import os
import sys
import functools

import pytest
import numpy as np

import jupyter_core.paths

from qudit_phase import phaseapp
from qudit_phase.harper import HarperSolver
from qudit_phase.qudit import build_context
from qudit_phase.qudit.sampling import default_rng, ginibre_density, haar_state


# ============ Isolated Jupyter environment =============

def mkdir(tmp_path, *parts):
    path = tmp_path.joinpath(*parts)
    if not path.exists():
        path.mkdir(parents=True)
    return path


@pytest.fixture
def qp_home_dir(tmp_path):
    """Provides a temporary HOME directory value."""
    return mkdir(tmp_path, "home")


@pytest.fixture
def qp_config_dir(tmp_path):
    """Provides a temporary Jupyter config dir directory value."""
    return mkdir(tmp_path, "config")


@pytest.fixture
def qp_system_config_path(tmp_path):
    """Provides a temporary Jupyter config path value."""
    return mkdir(tmp_path, "etc", "jupyter")


@pytest.fixture
def qp_env_config_path(tmp_path):
    """Provides a temporary Jupyter env config path value."""
    return mkdir(tmp_path, "env", "etc", "jupyter")


@pytest.fixture
def qp_environ(
    monkeypatch,
    tmp_path,
    qp_home_dir,
    qp_config_dir,
    qp_system_config_path,
    qp_env_config_path,
):
    """Configures a temporary environment so no user config leaks into the apps."""
    monkeypatch.setenv("HOME", str(qp_home_dir))
    monkeypatch.setenv("PYTHONPATH", os.pathsep.join(sys.path))
    monkeypatch.setenv("JUPYTER_CONFIG_DIR", str(qp_config_dir))
    monkeypatch.setenv("JUPYTER_DATA_DIR", str(mkdir(tmp_path, "data")))
    monkeypatch.setenv("JUPYTER_RUNTIME_DIR", str(mkdir(tmp_path, "runtime")))
    monkeypatch.setattr(
        jupyter_core.paths, "SYSTEM_CONFIG_PATH", [str(qp_system_config_path)]
    )
    monkeypatch.setattr(jupyter_core.paths, "ENV_CONFIG_PATH", [str(qp_env_config_path)])
    monkeypatch.delenv("QUDIT_PHASE_THREADS", raising=False)


# ================= Numerics ================

@functools.lru_cache(maxsize=None)
def _cached_pair(d, theta):
    return HarperSolver().solve(build_context(d), theta=theta)


@pytest.fixture
def qp_context():
    """Factory for the shared, immutable context of dimension d."""
    return build_context


@pytest.fixture
def qp_pair():
    """Factory returning (ctx, ground pair) for dimension d, cached across tests.

    Example::

        def test_something(qp_pair):
            ctx, pair = qp_pair(5)
    """
    def _pair(d, theta=phaseapp.QUARTER_PI):
        return build_context(d), _cached_pair(d, theta)
    return _pair


@pytest.fixture
def qp_seed():
    return 42


@pytest.fixture
def qp_rng(qp_seed):
    """Generator seeded from qp_seed; override qp_seed to change the stream."""
    return default_rng(qp_seed)


@pytest.fixture
def qp_haar(qp_rng):
    """Draw a Haar-random pure state of dimension d."""
    def _haar(d):
        return haar_state(qp_rng, d)
    return _haar


@pytest.fixture
def qp_ginibre(qp_rng):
    """Draw a Ginibre-random density matrix of dimension d."""
    def _ginibre(d, rank=None):
        return ginibre_density(qp_rng, d, rank=rank)
    return _ginibre


# ================= Command line ================

@pytest.fixture
def qp_output_dir(tmp_path):
    """Provides a temporary directory for result files."""
    return mkdir(tmp_path, "output")


@pytest.fixture
def qp_argv():
    """Allows tests to pass extra command line arguments to every qp_run call."""
    return []


@pytest.fixture
def qp_run(qp_environ, qp_output_dir, qp_argv):
    """Run ``qudit-phase <subcommand> ...`` in-process, writing to qp_output_dir.

    Returns the exit code.
    """
    def _run(*args):
        argv = list(args) + ['--output=%s' % qp_output_dir] + list(qp_argv)
        return phaseapp.run(argv)
    yield _run
    phaseapp.clear_instances()
