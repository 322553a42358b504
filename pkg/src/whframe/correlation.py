"""Window correlation profiles over the shift lattice.

The central object is the table

    Gk[k][x] = sum_{n=0}^{N-1} g(x - n*a) * conj(g(x - n*a - k*q)),

the autocorrelation of the window along its translation lattice, evaluated
at the adjoint-lattice shifts k*q, k in [0, b). The shift k*q repeats mod L
with period b, so b rows capture every distinct lag exactly. The k = 0 row
is the lattice power profile; it is real, nonnegative and a-periodic.

These tables drive the tightness tests, the frame operator's diagonal-sum
form, and the quadratic energy split used by the reconstruction identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import GaborLattice, require_length, translate

__all__ = [
    "CorrelationProfile",
    "cross_correlation_table",
    "correlation_profile",
    "periodized_correlation",
    "walnut_upper_bound",
    "frame_energy_split",
    "wh_identity_terms",
]


@dataclass(frozen=True)
class CorrelationProfile:
    """Autocorrelation table of a window over its shift lattice.

    table has shape (b, L); row k holds Gk[k][x] for x in [0, L).
    Invariants (tested, exact up to roundoff): every row is a-periodic,
    row 0 is real and >= 0, and rows pair up under conjugation:
    Gk[(b-k) % b][(x - k*q) % L] == conj(Gk[k][x]).
    """

    lat: GaborLattice
    table: np.ndarray

    def to_csv(self) -> str:
        """Serialize as CSV with columns k,x,re,im,abs, one row per (k, x).

        Rows are k-major. Floats are written with repr (shortest
        round-trip form); negative zero is normalized to 0.0.
        """
        lines = ["k,x,re,im,abs"]
        for k in range(self.lat.b):
            for x in range(self.lat.L):
                v = complex(self.table[k, x])
                re, im, mag = v.real + 0.0, v.imag + 0.0, abs(v) + 0.0
                lines.append(f"{k},{x},{re!r},{im!r},{mag!r}")
        return "\n".join(lines) + "\n"


def cross_correlation_table(lat: GaborLattice, h: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Table of sum_n h(x - n*a) * conj(g(x - n*a - k*q)), shape (b, L)."""
    require_length(lat, h, g)
    h = np.asarray(h, dtype=np.complex128)
    g = np.asarray(g, dtype=np.complex128)
    # row n of the stacks is the window shifted by n*a
    h_shifts = np.stack([np.roll(h, n * lat.a) for n in range(lat.N)])
    g_shifts = np.stack([np.roll(g, n * lat.a) for n in range(lat.N)])
    table = np.empty((lat.b, lat.L), dtype=np.complex128)
    for k in range(lat.b):
        table[k] = np.sum(h_shifts * np.conj(np.roll(g_shifts, k * lat.q, axis=1)), axis=0)
    return table


def correlation_profile(lat: GaborLattice, g: np.ndarray) -> CorrelationProfile:
    """Autocorrelation profile of g over the lattice (h = g case)."""
    return CorrelationProfile(lat, cross_correlation_table(lat, g, g))


def periodized_correlation(h: np.ndarray, g: np.ndarray, shift: int, fold_period: int) -> np.ndarray:
    """Fold the pointwise product h * conj(translate(g, shift)) to a period.

    output(r) = sum_j (h * conj(T_shift g))(r + j*fold_period) for
    j = 0 .. L/fold_period - 1. With shift = l*q and fold_period = a, a
    flat output (all entries equal) says exactly that h is orthogonal to
    every nontrivial p-step modulation of translate(g, l*q); the common
    entry is then inner(h, translate(g, shift)) / fold_period.
    """
    h = np.asarray(h, dtype=np.complex128)
    g = np.asarray(g, dtype=np.complex128)
    if len(h) != len(g):
        raise ValueError(f"signals have lengths {len(h)} and {len(g)}")
    L = len(h)
    if fold_period < 1 or L % fold_period:
        raise ValueError(f"fold_period {fold_period} does not divide L={L}")
    product = h * np.conj(translate(g, shift))
    return product.reshape(L // fold_period, fold_period).sum(axis=0)


def walnut_upper_bound(lat: GaborLattice, g: np.ndarray) -> float:
    """Diagonal-sum estimate M * max_x sum_k |Gk[k][x]|.

    Always an upper bound for the optimal upper frame bound B (a Schur
    test on the frame operator's diagonal-sum form); it is attained when
    the off-diagonal rows vanish, e.g. for tight windows.
    """
    table = cross_correlation_table(lat, g, g)
    return float(lat.M * np.max(np.sum(np.abs(table), axis=0)))


def frame_energy_split(lat: GaborLattice, g: np.ndarray, f: np.ndarray) -> tuple[float, complex]:
    """Split the coefficient energy sum_{m,n} |<f, atom_{m,n}>|^2 in two.

    Returns (F1, F2) with

        F1 = M * sum_x |f(x)|^2 * Gk[0][x]            (real),
        F2 = M * sum_{k != 0} sum_x conj(f(x)) f(x - k*q) Gk[k][x],

    where F1 + F2 equals the coefficient energy exactly. F2 is returned as
    a complex number; its imaginary part is pure roundoff because the
    k and b-k terms are conjugate.
    """
    require_length(lat, g, f)
    f = np.asarray(f, dtype=np.complex128)
    table = cross_correlation_table(lat, g, g)
    f1 = float(lat.M * np.sum(np.abs(f) ** 2 * table[0].real))
    f2 = 0j
    for k in range(1, lat.b):
        f2 += np.sum(np.conj(f) * np.roll(f, k * lat.q) * table[k])
    return f1, complex(lat.M * f2)


def wh_identity_terms(lat: GaborLattice, g: np.ndarray, f: np.ndarray) -> tuple[float, float]:
    """The two terms of the quadratic energy identity, as reals.

    F1 + F2 = sum_{m,n} |<f, atom_{m,n}>|^2; the imaginary part of the
    second term vanishes up to roundoff and is dropped here (use
    frame_energy_split to inspect it).
    """
    f1, f2 = frame_energy_split(lat, g, f)
    return f1, f2.real
