"""Clock and shift operators of a d-level system."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import functools
import numbers

import numpy as np
from traitlets import HasTraits, Instance, Integer, TraitError, validate

from ..errors import DimensionError


def _frozen(array):
    array.setflags(write=False)
    return array


class QuditContext(HasTraits):
    """Dimension d with the roots of unity and the matrices Q, P, F and T.

    ``Q|a> = w^a |a>``, ``P|a> = |a+1>``, ``F|a> = |~a>`` and ``T|a> = |-a>``
    with w = exp(2 pi i / d). Traits are read-only and the arrays are not
    writeable, so a context can be shared freely between threads.
    """

    d = Integer(1, read_only=True, help="Dimension of the state space.")

    omega_powers = Instance(np.ndarray, read_only=True,
        help="w^k for k in [0, d).")

    Q = Instance(np.ndarray, read_only=True, help="Clock operator.")
    P = Instance(np.ndarray, read_only=True, help="Shift operator.")
    F = Instance(np.ndarray, read_only=True, help="Discrete Fourier transform.")
    T = Instance(np.ndarray, read_only=True, help="Reflection a -> -a.")

    def __init__(self, d, **kwargs):
        super().__init__(**kwargs)
        if isinstance(d, numbers.Integral) and not isinstance(d, bool):
            d = int(d)
        self.set_trait('d', d)
        d = self.d
        k = np.arange(d)
        # angles from k mod d so large exponents never drift
        omega = _frozen(np.exp(2j * np.pi * k / d))
        self.set_trait('omega_powers', omega)
        self.set_trait('Q', _frozen(np.diag(omega)))
        self.set_trait('P', _frozen(self.P_power(1)))
        self.set_trait('F', _frozen(omega[np.outer(k, k) % d] / np.sqrt(d)))
        T = np.zeros((d, d), dtype=complex)
        T[(-k) % d, k] = 1.0
        self.set_trait('T', _frozen(T))

    @validate('d')
    def _valid_d(self, proposal):
        value = proposal['value']
        if value < 1:
            raise TraitError("Dimension must be a positive integer, got %r" % value)
        return value

    def __repr__(self):
        return "<%s d=%i>" % (self.__class__.__name__, self.d)

    def phases(self, exponents):
        """w^k for an integer or an integer array of exponents."""
        return self.omega_powers[np.mod(exponents, self.d)]

    def P_power(self, m):
        """P^m as a dense matrix."""
        return np.roll(np.eye(self.d, dtype=complex), m, axis=0)

    def Q_power(self, n):
        """Q^n as a dense matrix."""
        return np.diag(self.phases(n * np.arange(self.d)))

    def displacement(self, m, n):
        """P^m Q^n, whose column a holds w^(n a) at row a + m."""
        return np.roll(self.Q_power(n), m, axis=0)

    def check_vector(self, values, name="state"):
        values = np.asarray(values)
        if values.shape != (self.d,):
            raise DimensionError(
                "%s has shape %s, expected (%i,)" % (name, values.shape, self.d))
        return values

    def check_operator(self, values, name="operator"):
        values = np.asarray(values)
        if values.shape != (self.d, self.d):
            raise DimensionError(
                "%s has shape %s, expected (%i, %i)" % (name, values.shape, self.d, self.d))
        return values


@functools.lru_cache(maxsize=128)
def build_context(d):
    """Build (or reuse) the immutable context for dimension d.

    Raises
    ------
    traitlets.TraitError
        If d is not a positive integer.
    """
    return QuditContext(d)
