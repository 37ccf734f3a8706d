"""The continuum scheme x = a eps, p = 2 pi b / L with sigma^2 = eps L / (2 pi) held fixed."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import math

import numpy as np
from traitlets import Float, HasTraits, Integer, TraitError, validate

from ..errors import BoundaryConcentrationError
from ..qudit.vectors import StateVector, position_amplitudes
from ..utils import canonical_view, centered_indices, centered_view

TAIL_TOL = 1e-6
EXPANSION_FACTOR = 5.0
LEADING_ORDER_FACTOR = 10.0


class ContinuumScheme(HasTraits):
    """Lattice constant eps = sigma sqrt(2 pi / d) and system size L = eps d."""

    d = Integer(1)
    sigma_scale = Float(1.0, help="Length scale sigma.")

    @validate('d')
    def _valid_d(self, proposal):
        if proposal['value'] < 1:
            raise TraitError("d must be a positive integer, got %r" % proposal['value'])
        return proposal['value']

    @validate('sigma_scale')
    def _valid_sigma(self, proposal):
        if not proposal['value'] > 0.0:
            raise TraitError("sigma_scale must be positive, got %r" % proposal['value'])
        return proposal['value']

    def __init__(self, d, sigma_scale=1.0, **kwargs):
        super().__init__(d=d, sigma_scale=sigma_scale, **kwargs)

    @property
    def epsilon(self):
        return self.sigma_scale * math.sqrt(2 * math.pi / self.d)

    @property
    def length(self):
        return self.epsilon * self.d

    @property
    def indices(self):
        return centered_indices(self.d)

    @property
    def positions(self):
        """x = a eps on the centered range."""
        return self.indices * self.epsilon

    @property
    def momenta(self):
        """p = 2 pi b / L on the centered range."""
        return 2 * math.pi * self.indices / self.length

    def scale_residual(self):
        """|eps L - 2 pi sigma^2|."""
        return abs(self.epsilon * self.length - 2 * math.pi * self.sigma_scale ** 2)


def gaussian_state(scheme, ctx, width=None, x0=0.0, p0=0.0):
    """c_a proportional to exp(-(x - x0)^2 / (2 width^2)) exp(i p0 x), width defaulting to sigma."""
    width = scheme.sigma_scale if width is None else width
    x = scheme.positions
    values = np.exp(-(x - x0) ** 2 / (2 * width ** 2) + 1j * p0 * x)
    return StateVector(canonical_view(values / np.linalg.norm(values)))


def _spread(weights, coordinates):
    mean = np.dot(weights, coordinates)
    return math.sqrt(max(np.dot(weights, (coordinates - mean) ** 2), 0.0))


def continuum_expansion_check(state, scheme, ctx):
    """Leading-order expansions of |<Q>| and |<P>| and the relations they imply.

    Raises
    ------
    BoundaryConcentrationError
        If more than 1e-6 of the position or momentum mass sits outside the
        central half of the range, where the wrap-around breaks the
        variance formulas.
    """
    d = ctx.d
    amplitudes = position_amplitudes(state, ctx)
    position = centered_view(np.abs(amplitudes) ** 2)
    momentum = centered_view(np.abs(ctx.F.conj().T @ amplitudes) ** 2)
    outside = np.abs(scheme.indices) > d / 4
    for name, weights in (('position', position), ('momentum', momentum)):
        tail = float(weights[outside].sum())
        if tail > TAIL_TOL:
            raise BoundaryConcentrationError(
                "%s mass %.3g lies outside the central half" % (name, tail))
    sigma = scheme.sigma_scale
    dx = _spread(position, scheme.positions)
    dp = _spread(momentum, scheme.momenta)
    q_deficit = 1.0 - abs(np.dot(position, np.exp(2j * np.pi * scheme.indices / d)))
    p_deficit = 1.0 - abs(np.dot(momentum, np.exp(-2j * np.pi * scheme.indices / d)))
    q_prediction = math.pi * dx ** 2 / (sigma ** 2 * d)
    p_prediction = math.pi * sigma ** 2 * dp ** 2 / d
    expansion_tolerance = EXPANSION_FACTOR * d ** -1.5
    leading_tolerance = LEADING_ORDER_FACTOR * d ** -0.5
    sum_rule = dx ** 2 / sigma ** 2 + sigma ** 2 * dp ** 2
    product = dx * dp
    report = {
        'delta_x': dx,
        'delta_p': dp,
        'position_deficit': q_deficit,
        'position_prediction': q_prediction,
        'position_residual': abs(q_deficit - q_prediction),
        'momentum_deficit': p_deficit,
        'momentum_prediction': p_prediction,
        'momentum_residual': abs(p_deficit - p_prediction),
        'sum_rule': sum_rule,
        'product': product,
        'expansion_tolerance': expansion_tolerance,
        'leading_order_tolerance': leading_tolerance,
    }
    report['passed'] = bool(
        report['position_residual'] <= expansion_tolerance
        and report['momentum_residual'] <= expansion_tolerance
        and sum_rule >= 1.0 - leading_tolerance
        and product >= 0.5 - leading_tolerance)
    return report
