#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Qudit Phase documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import os.path as osp
import sys

HERE = osp.abspath(osp.dirname(__file__))

# add repo root to sys.path
# here = root/docs/source
repo_root = os.path.dirname(os.path.dirname(HERE))
sys.path.insert(0, repo_root)

# Check if docs are being built by ReadTheDocs
# If so, generate a full-config.rst file and populate it with documentation about
# configuration options

if os.environ.get('READTHEDOCS', ''):

    # Readthedocs doesn't run our Makefile, so we do this to force it to generate
    # the config docs.
    with open('../autogen_config.py') as f:
        exec(compile(f.read(), '../autogen_config.py', 'exec'), {})

# -- General configuration ------------------------------------------------

extensions = [
    'myst_parser',
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'

project = 'Qudit Phase'
copyright = '2021, Qudit Phase Development Team'
author = 'Qudit Phase Development Team'

# The short X.Y version.
_version_py = '../../qudit_phase/_version.py'
version_ns = {}
exec(compile(open(_version_py).read(), _version_py, 'exec'), version_ns)
version = '%i.%i' % version_ns['version_info'][:2]
# The full version, including alpha/beta/rc tags.
release = version_ns['__version__']

language = None
pygments_style = 'default'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = "pydata_sphinx_theme"
htmlhelp_basename = 'QuditPhasedoc'

man_pages = [
    (master_doc, 'qudit-phase', 'Qudit Phase Documentation',
     [author], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'traitlets': ('https://traitlets.readthedocs.io/en/stable/', None),
}
