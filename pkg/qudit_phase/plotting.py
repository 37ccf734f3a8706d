"""Gnuplot scripts that plot the exact-versus-asymptotic tables."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import csv
import io
import os

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from . import DEFAULT_TEMPLATE_PATH
from ._version import __version__
from .errors import DomainError
from .fileio import atomic_writing

PLOT_KINDS = {
    'h': ('h_vs_d.gp', ['d', 'h_exact', 'h_asym'], "greatest eigenvalue h vs d"),
    'gamma': ('gamma.gp', ['a', 'gamma_exact', 'gamma_asym'], "components of Gamma"),
}


def template_environment(template_path=None):
    template_path = template_path or DEFAULT_TEMPLATE_PATH
    if isinstance(template_path, str):
        template_path = (template_path,)
    return Environment(loader=FileSystemLoader([os.path.expanduser(p) for p in template_path]),
                       undefined=StrictUndefined, keep_trailing_newline=True)


def _check_table(path, columns):
    if not os.path.isfile(path):
        raise DomainError("table %s does not exist" % path)
    with io.open(path, encoding='utf-8') as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or next(reader, None) is None:
            raise DomainError("table %s is empty" % path)
    if header != columns:
        raise DomainError("table %s has columns %s, expected %s" % (path, header, columns))


def emit_plot_script(table_path, kind, script_path=None, image=None, env=None, log=None):
    """Render the gnuplot script for a table and write it next to the table.

    The script refers to the table by file name, so it runs from the table's
    directory. Returns the script path.
    """
    if kind not in PLOT_KINDS:
        raise DomainError("plot kind must be one of %s, got %r" % (sorted(PLOT_KINDS), kind))
    template_name, columns, title = PLOT_KINDS[kind]
    table_path = os.fspath(table_path)
    _check_table(table_path, columns)
    if script_path is None:
        script_path = os.path.splitext(table_path)[0] + '.gp'
    env = env or template_environment()
    script = env.get_template(template_name).render(
        title=title, version=__version__,
        table_name=os.path.basename(table_path), output=image)
    with atomic_writing(script_path, log=log) as f:
        f.write(script)
    if log:
        log.debug("wrote plot script %s", script_path)
    return script_path
