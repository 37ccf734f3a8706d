"""Exceptions raised by qudit_phase.

Every error carries an ``exit_status`` so the command line front end can map
it to a process exit code without a lookup table.
"""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.


class QuditPhaseError(Exception):
    """Base class for all errors raised by this package."""
    exit_status = 1


class DimensionError(QuditPhaseError, ValueError):
    """Array shapes disagree with the context dimension, or a cap is exceeded."""


class DomainError(QuditPhaseError, ValueError):
    """An argument lies outside the range an operation is defined on."""


class NormalizationError(DomainError):
    """A state vector or density matrix fails its validity checks."""


class ConvergenceError(QuditPhaseError, RuntimeError):
    """An iterative method reached its iteration cap."""
    exit_status = 2


class InvariantViolation(QuditPhaseError):
    """A numerically checked invariant does not hold."""
    exit_status = 2


class DegenerateSpectrumError(InvariantViolation):
    pass


class PositivityError(InvariantViolation):
    pass


class NotInvertibleError(InvariantViolation):
    pass


class OddDimensionRequired(InvariantViolation):
    pass


class NonCovariantError(InvariantViolation):
    pass


class BoundaryConcentrationError(InvariantViolation):
    pass
