"""Large-d formulas for h, Gamma and the next eigenvalue, and the recurrence they come from."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import math

import numpy as np

from ..errors import DimensionError, DomainError
from ..utils import centered_indices, centered_view, max_abs

EXCITED_LEVEL_TOL = 10.0


def _check_d(d):
    if d < 1:
        raise DomainError("d must be a positive integer, got %r" % d)
    return int(d)


def asymptotic_h(d):
    """1 - pi/(2d)."""
    return 1.0 - math.pi / (2 * _check_d(d))


def asymptotic_level(d, n):
    """Harmonic-oscillator estimate 1 - (n + 1/2) pi / d of the n-th eigenvalue."""
    return 1.0 - (n + 0.5) * math.pi / _check_d(d)


def asymptotic_gamma(d):
    """Normalized exp(-pi a^2 / d) on the centered range, in centered order."""
    a = centered_indices(_check_d(d))
    values = np.exp(-math.pi * a ** 2 / d)
    return values / np.linalg.norm(values)


def gamma_deviation(pair):
    """max-abs difference of Gamma from :func:`asymptotic_gamma`."""
    return max_abs(centered_view(pair.gamma) - asymptotic_gamma(pair.d))


def mathieu_residual(pair, ctx):
    """max|(c_(a+1) + c_(a-1) + 2 cos(2 pi a/d) c_a)/4 - h c_a| with c = Gamma."""
    c = ctx.check_vector(pair.gamma, name="gamma")
    cosines = np.cos(2 * np.pi * np.arange(ctx.d) / ctx.d)
    left = 0.25 * (np.roll(c, -1) + np.roll(c, 1) + 2 * cosines * c)
    return max_abs(left - pair.h * c)


def excited_level_check(pair, ctx):
    """Compare the second eigenvalue h - gap with 1 - 3 pi/(2d), within 10/d^2."""
    d = ctx.d
    if d < 2:
        raise DimensionError("there is no second eigenvalue for d = 1")
    second = pair.h - pair.gap
    prediction = asymptotic_level(d, 1)
    residual = abs(second - prediction)
    tolerance = EXCITED_LEVEL_TOL / d ** 2
    return {
        'second_eigenvalue': second,
        'prediction': prediction,
        'residual': residual,
        'tolerance': tolerance,
        'passed': residual < tolerance,
    }
