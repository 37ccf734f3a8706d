import threading

import numpy as np
import pytest

from qudit_phase.utils import (
    THREADS_ENV,
    canonical_view,
    centered_indices,
    centered_view,
    max_abs,
    run_in_workers,
    worker_count,
)


@pytest.mark.parametrize(
    'd,expected',
    [
        (1, [0]),
        (4, [-2, -1, 0, 1]),
        (5, [-2, -1, 0, 1, 2]),
    ]
)
def test_centered_indices(d, expected):
    assert centered_indices(d).tolist() == expected


def test_views_are_inverse():
    values = np.arange(6)
    assert centered_view(values).tolist() == [3, 4, 5, 0, 1, 2]
    assert np.array_equal(canonical_view(centered_view(values)), values)


def test_max_abs():
    assert max_abs([]) == 0.0
    assert max_abs([1, -3j]) == 3.0


@pytest.mark.parametrize(
    'value,expected',
    [
        ('3', 3),
        ('0', None),
        ('-2', None),
        ('many', None),
        ('', None),
    ]
)
def test_worker_count(value, expected, monkeypatch):
    monkeypatch.setattr('os.cpu_count', lambda: 7)
    assert worker_count({THREADS_ENV: value}) == (expected or 7)


def test_results_keep_input_order():
    names = set()

    def square(x):
        names.add(threading.current_thread().name)
        return x * x

    assert run_in_workers(square, range(20), limit=4) == [x * x for x in range(20)]
    assert run_in_workers(square, [], limit=4) == []
    assert run_in_workers(square, [3], limit=4) == [9]


def test_errors_propagate():
    def fail(x):
        raise ValueError(x)

    with pytest.raises(Exception):
        run_in_workers(fail, [1, 2], limit=2)
