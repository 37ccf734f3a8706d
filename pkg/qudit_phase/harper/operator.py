"""The Harper operator H = (P + P^dagger + Q + Q^dagger) / 4 and its theta family."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import math

import numpy as np

from ..errors import DomainError

QUARTER_PI = math.pi / 4


def check_theta(theta):
    """Reject angles outside the open interval (0, pi/2)."""
    theta = float(theta)
    if not (0.0 < theta < math.pi / 2):
        raise DomainError("theta must lie strictly between 0 and pi/2, got %r" % theta)
    return theta


def _clock_part(ctx):
    # (Q + Q^dagger)/2 is real diagonal
    return np.diag(np.cos(2 * np.pi * np.arange(ctx.d) / ctx.d))


def _shift_part(ctx):
    return 0.5 * (ctx.P + ctx.P.conj().T).real


def theta_harper(ctx, theta):
    """H_theta = cos(theta) (Q + Q^dagger)/2 + sin(theta) (P + P^dagger)/2.

    The weights pair with the inequality
    cos(theta)|<Q>| + sin(theta)|<P>| <= h_theta, so the eigenvector of the top
    eigenvalue saturates it. At theta = pi/4 this is sqrt(2) H.
    """
    theta = check_theta(theta)
    return math.cos(theta) * _clock_part(ctx) + math.sin(theta) * _shift_part(ctx)


def build_harper(ctx, theta=QUARTER_PI):
    """Real symmetric Harper matrix.

    ``theta == pi/4`` returns H = (P + P^dagger + Q + Q^dagger)/4; any other
    angle in (0, pi/2) returns :func:`theta_harper`.
    """
    theta = check_theta(theta)
    if math.isclose(theta, QUARTER_PI, rel_tol=0.0, abs_tol=1e-15):
        return 0.5 * (_clock_part(ctx) + _shift_part(ctx))
    return theta_harper(ctx, theta)
