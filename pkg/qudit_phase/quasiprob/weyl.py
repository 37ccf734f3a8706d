"""The twirl identity behind completeness of the phase point operators."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np

from ..utils import max_abs
from .phasepoints import covariant_family


def verify_weyl_identity(omega, a, b, ctx):
    """Residual of sum w^(alpha b - beta a) U Omega U^dag = d tr[(P^a Q^b)^dag Omega] P^a Q^b.

    U runs over P^alpha Q^beta; the left side is summed directly over the grid.
    """
    d = ctx.d
    omega = ctx.check_operator(np.asarray(omega, dtype=complex), name="Omega")
    conjugates = d * covariant_family(omega, ctx)
    k = np.arange(d)
    weights = ctx.phases(np.subtract.outer(k * b, k * a))
    left = np.einsum('ab,abij->ij', weights, conjugates)
    shift = ctx.displacement(a, b)
    right = d * np.trace(shift.conj().T @ omega) * shift
    return max_abs(left - right)
