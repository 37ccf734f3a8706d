"""
Utilities for writing result files.
"""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

from contextlib import contextmanager
import csv
import io
import json
import math
import numbers
import os
import shutil

import numpy as np

from .errors import DomainError
from .quasiprob.distribution import QuasiDistribution
from ._version import __version__

FORMATS = ('csv', 'json')


def replace_file(src, dst):
    """ replace dst with src
    """
    os.replace(src, dst)


def copy2_safe(src, dst, log=None):
    """copy src to dst

    like shutil.copy2, but log errors in copystat instead of raising
    """
    shutil.copyfile(src, dst)
    try:
        shutil.copystat(src, dst)
    except OSError:
        if log:
            log.debug("copystat on %s failed", dst, exc_info=True)


def path_to_intermediate(path):
    '''Name of the backup file kept during atomic writes.

    The .~ prefix keeps the backup out of directory listings of results.'''
    dirname, basename = os.path.split(path)
    return os.path.join(dirname, '.~' + basename)


@contextmanager
def atomic_writing(path, encoding='utf-8', log=None):
    """Context manager to write to a file only if the entire write is successful.

    The previous contents are copied to an intermediate file next to the
    target and restored if the context exits with an error. On success the
    new data is synced to disk and the intermediate file is removed.
    """
    path = os.fspath(path)
    if os.path.islink(path):
        path = os.path.join(os.path.dirname(path), os.readlink(path))

    tmp_path = path_to_intermediate(path)

    if os.path.isfile(path):
        copy2_safe(path, tmp_path, log=log)

    # Unix linefeeds on every platform, so outputs compare byte for byte
    fileobj = io.open(path, 'w', encoding=encoding, newline='\n')

    try:
        yield fileobj
    except BaseException:
        fileobj.close()
        if os.path.isfile(tmp_path):
            replace_file(tmp_path, path)
        else:
            os.remove(path)
        raise

    fileobj.flush()
    os.fsync(fileobj.fileno())
    fileobj.close()

    if os.path.isfile(tmp_path):
        os.remove(tmp_path)


def format_number(value):
    """17 significant digits for floats, plain text for everything else."""
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format(float(value), '.17g')
    return str(value)


def jsonable(value):
    """Plain Python values for json: numpy scalars unwrapped, non-finite floats as None."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def new_report(command, metadata):
    """Empty report skeleton; ``metadata`` keys follow command and version."""
    head = {'command': command, 'generator_version': __version__}
    head.update(metadata)
    return {'metadata': head, 'summary': {}, 'tables': {}, 'checks': []}


def add_table(report, name, columns, rows):
    report['tables'][name] = {'columns': list(columns), 'rows': [list(r) for r in rows]}


def add_check(report, name, value, tolerance, passed, d=None, informational=False):
    """Record a check; failed informational checks do not make a run fail."""
    report['checks'].append({'check': name, 'd': d, 'value': value, 'tolerance': tolerance,
                             'passed': bool(passed), 'informational': bool(informational)})


def _write_rows(path, header, rows, log=None):
    with atomic_writing(path, log=log) as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_number(v) for v in row])


def write_report(report, output_dir, prefix, fmt='csv', log=None):
    """Write a report as ``<prefix>.json`` or as ``<prefix>_<table>.csv`` files.

    Returns the paths written, in the order they were written.
    """
    if fmt not in FORMATS:
        raise DomainError("format must be one of %s, got %r" % (FORMATS, fmt))
    os.makedirs(output_dir, exist_ok=True)
    if fmt == 'json':
        path = os.path.join(output_dir, prefix + '.json')
        with atomic_writing(path, log=log) as f:
            json.dump(jsonable(report), f, indent=1, allow_nan=False)
            f.write('\n')
        return [path]

    paths = []
    summary = list(report['metadata'].items()) + list(report['summary'].items())
    path = os.path.join(output_dir, prefix + '_summary.csv')
    _write_rows(path, ['key', 'value'], summary, log=log)
    paths.append(path)
    for name, table in report['tables'].items():
        path = os.path.join(output_dir, '%s_%s.csv' % (prefix, name))
        _write_rows(path, table['columns'], table['rows'], log=log)
        paths.append(path)
    if report['checks']:
        path = os.path.join(output_dir, prefix + '_checks.csv')
        columns = ['check', 'd', 'value', 'tolerance', 'passed', 'informational']
        rows = [['' if c[k] is None else c[k] for k in columns] for c in report['checks']]
        _write_rows(path, columns, rows, log=log)
        paths.append(path)
    for path in paths:
        if log:
            log.debug("wrote %s", path)
    return paths


def write_distribution(dist, path, seed=None, clamp=True, log=None):
    """Write a QuasiDistribution as JSON or as alpha,beta,value CSV, by extension."""
    values = dist.clamped() if clamp and dist.kind == 'husimi' else dist.values
    path = os.fspath(path)
    if path.endswith('.json'):
        payload = {'d': dist.d, 'kind': dist.kind, 'values': values.ravel(),
                   'seed': seed, 'generator_version': __version__}
        with atomic_writing(path, log=log) as f:
            json.dump(jsonable(payload), f, indent=1, allow_nan=False)
            f.write('\n')
        return path
    d = dist.d
    rows = ((alpha, beta, values[alpha, beta]) for alpha in range(d) for beta in range(d))
    _write_rows(path, ['alpha', 'beta', 'value'], rows, log=log)
    return path


def read_distribution(path, kind='husimi'):
    """Load a distribution written by :func:`write_distribution`.

    CSV files carry no kind, so ``kind`` is used for them.
    """
    path = os.fspath(path)
    with io.open(path, encoding='utf-8') as f:
        if path.endswith('.json'):
            payload = json.load(f)
            d = int(payload['d'])
            values = np.array(payload['values'], dtype=float).reshape(d, d)
            return QuasiDistribution(values, kind=payload.get('kind', kind))
        rows = list(csv.DictReader(f))
    if not rows:
        raise DomainError("%s holds no distribution rows" % path)
    d = int(round(math.sqrt(len(rows))))
    if d * d != len(rows):
        raise DomainError("%s has %i rows, not a square grid" % (path, len(rows)))
    values = np.zeros((d, d))
    for row in rows:
        values[int(row['alpha']), int(row['beta'])] = float(row['value'])
    return QuasiDistribution(values, kind=kind)
