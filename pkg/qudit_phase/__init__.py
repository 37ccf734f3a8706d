"""Finite-dimensional phase space: Harper ground states, minimum-uncertainty
states, covariant quasi probabilities and their completeness."""

import os

DEFAULT_TEMPLATE_PATH = os.path.join(os.path.dirname(__file__), "templates")

del os

from ._version import version_info, __version__
