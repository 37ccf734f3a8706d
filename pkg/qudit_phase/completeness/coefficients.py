"""The Fourier coefficients f_mn = <Gamma|P^m Q^n|Gamma> and their real form g_mn."""

# Copyright (c) Qudit Phase Development Team.
# Distributed under the terms of the Modified BSD License.

import numpy as np
from traitlets import HasTraits, Instance

from ..utils import centered_indices, max_abs

ZERO_TOL = 1e-10


class FourierCoeffTable(HasTraits):
    """f on canonical indices [0, d) and g on centered indices.

    ``g[i, j]`` belongs to ``(centered_indices(d)[i], centered_indices(d)[j])``.
    """

    f = Instance(np.ndarray)
    g = Instance(np.ndarray)
    g_imaginary = Instance(np.ndarray, help="Imaginary part discarded from g.")

    @property
    def d(self):
        return self.f.shape[0]

    def __repr__(self):
        return "<FourierCoeffTable d=%i>" % self.d

    def coefficient(self, m, n):
        d = self.d
        return complex(self.f[m % d, n % d])

    def g_values(self, m, n):
        """g_mn on broadcast integer arrays, from the defining phase exp(i pi m n / d) f_mn."""
        d = self.d
        m, n = np.asarray(m), np.asarray(n)
        return (np.exp(1j * np.pi * m * n / d) * self.f[m % d, n % d]).real

    def g_value(self, m, n):
        return float(self.g_values(m, n))

    def symmetry_residuals(self):
        """Max-abs residual of every symmetry the table must satisfy."""
        d = self.d
        f = self.f
        k = np.arange(d)
        neg = (-k) % d
        mn = np.outer(k, k)
        omega = np.exp(2j * np.pi * (mn % d) / d)
        c = centered_indices(d)
        g = self.g
        flipped = self.g_values(-c[:, None], c[None, :])
        shifted = self.g_values(c[:, None] + d, c[None, :])
        signs = (-1.0) ** (np.abs(c) % 2)
        return {
            'normalization': abs(f[0, 0] - 1.0),
            'inversion': max_abs(f - f[np.ix_(neg, neg)]),
            'transpose': max_abs(f - f.T),
            'reflection': max_abs(f - np.conj(omega) * f[:, neg]),
            'conjugation': max_abs(f - np.conj(omega) * np.conj(f)),
            'g_real': max_abs(self.g_imaginary),
            'g_transpose': max_abs(g - g.T),
            'g_reflection': max_abs(g - flipped),
            'g_quasi_periodic': max_abs(shifted - signs[None, :] * g),
        }


def fourier_coefficients(gamma):
    """f[m, n] = sum_a Gamma_(a+m) Gamma_a w^(n a), one inverse FFT per row."""
    gamma = np.asarray(gamma, dtype=float)
    d = gamma.shape[0]
    rows = np.stack([np.roll(gamma, -m) * gamma for m in range(d)])
    return d * np.fft.ifft(rows, axis=1)


def coeff_table(pair, ctx):
    """Build the f and g tables for a ground pair."""
    gamma = ctx.check_vector(pair.gamma, name="gamma")
    f = fourier_coefficients(gamma)
    c = centered_indices(ctx.d)
    phase = np.exp(1j * np.pi * np.outer(c, c) / ctx.d)
    g = phase * f[np.ix_(c % ctx.d, c % ctx.d)]
    return FourierCoeffTable(f=f, g=g.real.copy(), g_imaginary=g.imag.copy())


def zero_set(table, tol=ZERO_TOL):
    """Sorted (m, n) with |f_mn| < tol."""
    m, n = np.nonzero(np.abs(table.f) < tol)
    return sorted(zip(m.tolist(), n.tolist()))


def expected_zero_set(d):
    """Vanishing pattern of f: empty for odd d; for even d the lines m = d/2, n = d/2.

    On those lines f vanishes at the centre (d/2, d/2) and wherever the other
    index is odd.
    """
    if d % 2:
        return []
    half = d // 2
    zeros = {(half, half)}
    zeros.update((m, half) for m in range(1, d, 2))
    zeros.update((half, n) for n in range(1, d, 2))
    return sorted(zeros)
