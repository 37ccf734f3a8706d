"""Convolution weights w(alpha, beta) = <Gamma|Delta_W(alpha, beta)|Gamma>."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np

from ..errors import OddDimensionRequired
from ..qudit.vectors import DensityMatrix
from ..utils import max_abs
from .distribution import quasi_distribution_direct
from .phasepoints import phase_points


def convolution_weights(pair, ctx):
    """The Wigner distribution of |Gamma><Gamma|, as a real d x d grid.

    Raises
    ------
    OddDimensionRequired
        For even d.
    """
    if ctx.d % 2 == 0:
        raise OddDimensionRequired("convolution weights need odd d, got %i" % ctx.d)
    rho = DensityMatrix.pure(pair.gamma.astype(complex))
    return quasi_distribution_direct(rho, pair, ctx, kind='wigner').values


def convolution_residual(pair, ctx):
    """max|Delta(alpha, beta) - sum w(alpha - a', beta - b') Delta_W(a', b')|.

    The double sum is a cyclic convolution over the grid axes and is
    evaluated with 2-D FFTs.
    """
    w = convolution_weights(pair, ctx)
    husimi = phase_points('husimi', pair, ctx).operators
    wigner = phase_points('wigner', pair, ctx).operators
    spectrum = np.fft.fft2(w)[:, :, None, None] * np.fft.fft2(wigner, axes=(0, 1))
    return max_abs(np.fft.ifft2(spectrum, axes=(0, 1)) - husimi)
