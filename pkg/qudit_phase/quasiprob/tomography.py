"""Reconstruction of rho from its husimi distribution for odd d."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np

from ..completeness.coefficients import coeff_table
from ..errors import DomainError, NotInvertibleError
from ..qudit.vectors import DensityMatrix

SINGULAR_TOL = 1e-12


def reconstruct_state(dist, pair, ctx, log=None):
    """Invert D(alpha, beta) = tr[rho Delta(alpha, beta)].

    The transform sum D(alpha, beta) w^(alpha n - beta m) equals
    conj(f_mn) tr[rho P^m Q^n] / d, so dividing by conj(f_mn) gives the
    expansion coefficients of rho in the P^m Q^n basis. The result is
    Hermitized and trace-normalized.

    Raises
    ------
    NotInvertibleError
        For even d, where some f_mn vanish, or when min|f_mn| < 1e-12.
    """
    d = ctx.d
    if dist.kind != 'husimi':
        raise DomainError("reconstruction needs a husimi distribution, got %s" % dist.kind)
    if dist.d != d:
        raise DomainError("distribution has d=%i, context has d=%i" % (dist.d, d))
    if d % 2 == 0:
        raise NotInvertibleError(
            "phase point operators are not complete for even d (d=%i)" % d)
    f = coeff_table(pair, ctx).f
    smallest = float(np.min(np.abs(f)))
    if log is not None:
        log.debug("d=%i reconstruction: min|f_mn| = %.3g", d, smallest)
    if smallest < SINGULAR_TOL:
        raise NotInvertibleError("min|f_mn| = %.3g makes the inversion singular" % smallest)
    transformed = d * np.fft.fft(np.fft.ifft(dist.values, axis=0), axis=1).T
    # t[m, n] = tr[rho P^m Q^n]
    t = transformed / np.conj(f)
    k = np.arange(d)
    rows = np.conj(t) @ ctx.phases(np.outer(k, k))
    i, j = np.meshgrid(k, k, indexing='ij')
    rho = rows[(i - j) % d, j] / d
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(rho / np.trace(rho).real)
