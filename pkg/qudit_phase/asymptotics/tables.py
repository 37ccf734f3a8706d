"""Exact-versus-asymptotic tables for h and Gamma."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

from ..harper.solver import HarperSolver
from ..qudit.context import build_context
from ..utils import centered_indices, centered_view
from .formulas import asymptotic_gamma, asymptotic_h


def h_table(ds, solver=None):
    """Rows (d, h_exact, h_asym)."""
    solver = HarperSolver() if solver is None else solver
    return [(d, solver.solve(build_context(d)).h, asymptotic_h(d)) for d in ds]


def gamma_table(d, solver=None):
    """Rows (a, gamma_exact, gamma_asym) over the centered range."""
    solver = HarperSolver() if solver is None else solver
    exact = centered_view(solver.solve(build_context(d)).gamma)
    return list(zip(centered_indices(d).tolist(), exact.tolist(),
                    asymptotic_gamma(d).tolist()))


def deviation_ratios(ds, solver=None):
    """(h_exact - h_asym) at each d divided by the same at the next d."""
    rows = h_table(ds, solver=solver)
    deviations = [exact - asym for _, exact, asym in rows]
    return [a / b for a, b in zip(deviations, deviations[1:])]
