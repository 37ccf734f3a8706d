"""Index conventions and worker helpers shared by every module."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import os

import anyio
import numpy as np
from anyio.to_thread import run_sync

THREADS_ENV = "QUDIT_PHASE_THREADS"


def periodic_index(i, d):
    """Reduce an integer index to the canonical range [0, d)."""
    return int(i) % int(d)


def centered_indices(d):
    """Centered representatives floor(-(d-1)/2) .. floor((d-1)/2).

    For odd d this is the symmetric range -(d-1)/2 .. (d-1)/2; for even d the
    extra point sits on the negative side.
    """
    return np.arange(-(d // 2), (d - 1) // 2 + 1)


def centered_view(values):
    """Reorder the leading axis of ``values`` from canonical to centered order."""
    values = np.asarray(values)
    d = values.shape[0]
    return values[centered_indices(d) % d]


def canonical_view(values):
    """Inverse of :func:`centered_view`."""
    values = np.asarray(values)
    d = values.shape[0]
    out = np.empty_like(values)
    out[centered_indices(d) % d] = values
    return out


def max_abs(array):
    """Max-abs entry of an array, 0.0 for empty input."""
    array = np.asarray(array)
    if array.size == 0:
        return 0.0
    return float(np.max(np.abs(array)))


def worker_count(environ=None):
    """Number of worker threads allowed by QUDIT_PHASE_THREADS."""
    environ = os.environ if environ is None else environ
    value = environ.get(THREADS_ENV, "")
    try:
        count = int(value)
    except ValueError:
        count = 0
    if count < 1:
        count = os.cpu_count() or 1
    return count


def run_in_workers(func, items, limit=None):
    """Call ``func(item)`` for every item in worker threads.

    Results come back in input order, so callers see the same output whatever
    the scheduling was.

    Parameters
    ----------
    func : callable
        Pure function of one argument.
    items : iterable
        Arguments, one call each.
    limit : int, optional
        Maximum concurrent threads. Defaults to :func:`worker_count`.
    """
    items = list(items)
    limit = worker_count() if limit is None else max(1, int(limit))
    if limit == 1 or len(items) < 2:
        return [func(item) for item in items]

    results = [None] * len(items)

    async def _main():
        limiter = anyio.CapacityLimiter(limit)

        async def _run(index, item):
            results[index] = await run_sync(func, item, limiter=limiter)

        async with anyio.create_task_group() as tg:
            for index, item in enumerate(items):
                tg.start_soon(_run, index, item)

    anyio.run(_main)
    return results
