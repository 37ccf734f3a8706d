"""Componentwise-modulus lifts used in the proof of the certainty bound."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np
from traitlets import TraitError

from ..qudit.vectors import BASES, StateVector, position_amplitudes


def modulus_lift(state, ctx, basis='position'):
    """Replace the amplitudes in ``basis`` by their moduli.

    A position lift keeps <Q> and can only increase |<P>|; a momentum lift
    does the converse. The result is returned in the position basis.
    """
    if basis not in BASES:
        raise TraitError("basis must be one of %s, got %r" % (BASES, basis))
    amplitudes = position_amplitudes(state, ctx)
    if basis == 'position':
        return StateVector(np.abs(amplitudes))
    momentum = ctx.F.conj().T @ amplitudes
    return StateVector(ctx.F @ np.abs(momentum))
