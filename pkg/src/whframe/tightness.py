"""Deciding tightness: four equivalent criteria plus density diagnostics.

A window g generates a normalized tight system (frame operator S = I) if
and only if any one of the following holds, and then all of them do:

  (2) the correlation profile is flat: Gk[0] == b/L everywhere and every
      other row vanishes;
  (3) g is orthogonal to every nontrivial adjoint-lattice atom of itself
      and norm_sq(g) == a*b/L;
  (4) the adjoint-lattice atoms of g form an orthogonal family and
      norm_sq(g) == a*b/L;
  (5) the system is a frame and S g = g.

Each check returns a residual; the criterion holds when the residual is
at most the tolerance. classify() aggregates the residuals with the frame
bounds and the basis flags: the system is an orthonormal basis iff it is
normalized tight with a unit-norm window, and a frame is a Riesz basis
iff it has exactly L atoms (M*N == L, i.e. a*b == L).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlation import cross_correlation_table
from .frame import FrameBounds, canonical_dual, frame_bounds, frame_operator
from .lattice import GaborLattice, adjoint_atom, dft, inner, norm_sq, require_length

__all__ = [
    "TightnessReport",
    "DensityReport",
    "check_cond_walnut",
    "check_cond_adjoint",
    "check_cond_orthogonal_system",
    "check_cond_fixed_point",
    "classify",
    "density_diagnostics",
    "fourier_dual_check",
]


@dataclass(frozen=True)
class TightnessReport:
    """Verdicts and residuals for one (lattice, window) pair.

    tight_constant is the common eigenvalue c when S == c*I within
    tolerance, else None; normalized_tight means c == 1. The four
    residuals correspond to the equivalent criteria listed in the module
    docstring and must agree with the bounds-based verdict.
    """

    bounds: FrameBounds
    is_frame: bool
    tight_constant: float | None
    normalized_tight: bool
    onb: bool
    riesz_basis: bool
    cond2_residual: float
    cond3_residual: float
    cond4_residual: float
    cond5_residual: float

    def to_dict(self) -> dict:
        return {
            "bounds": self.bounds.to_dict(),
            "is_frame": self.is_frame,
            "tight_constant": self.tight_constant,
            "normalized_tight": self.normalized_tight,
            "onb": self.onb,
            "riesz_basis": self.riesz_basis,
            "cond2_residual": self.cond2_residual,
            "cond3_residual": self.cond3_residual,
            "cond4_residual": self.cond4_residual,
            "cond5_residual": self.cond5_residual,
        }


@dataclass(frozen=True)
class DensityReport:
    """Identities every frame satisfies, reported with their residuals.

    The pairing of the canonical dual with the window is always the real
    constant a*b/L, and the canonical dual is orthogonal to every
    nontrivial adjoint atom. A frame forces a*b <= L, with equality
    exactly for Riesz bases.
    """

    dual_pairing: complex
    expected_pairing: float
    pairing_residual: float
    adjoint_residual: float
    riesz_basis: bool

    def to_dict(self) -> dict:
        return {
            "dual_pairing": [self.dual_pairing.real, self.dual_pairing.imag],
            "expected_pairing": self.expected_pairing,
            "pairing_residual": self.pairing_residual,
            "adjoint_residual": self.adjoint_residual,
            "riesz_basis": self.riesz_basis,
        }


def check_cond_walnut(lat: GaborLattice, g: np.ndarray) -> float:
    """Flat-profile residual: |Gk[0] - b/L| and |Gk[k != 0]|, worst case."""
    require_length(lat, g)
    table = cross_correlation_table(lat, g, g)
    residual = float(np.max(np.abs(table[0] - lat.b / lat.L)))
    if lat.b > 1:
        residual = max(residual, float(np.max(np.abs(table[1:]))))
    return residual


def check_cond_adjoint(lat: GaborLattice, g: np.ndarray) -> float:
    """Self-orthogonality residual on the adjoint lattice, plus the norm gap."""
    require_length(lat, g)
    residual = abs(norm_sq(g) - lat.a * lat.b / lat.L)
    for k in range(lat.a):
        for l in range(lat.b):
            if (k, l) != (0, 0):
                residual = max(residual, abs(inner(g, adjoint_atom(lat, g, k, l))))
    return float(residual)


def check_cond_orthogonal_system(lat: GaborLattice, g: np.ndarray) -> float:
    """Pairwise-orthogonality residual of all a*b adjoint atoms, plus norm gap.

    Agrees with check_cond_adjoint up to roundoff: any two adjoint atoms
    have the same inner product as g with a third, times a unit phase.
    """
    require_length(lat, g)
    atoms = [adjoint_atom(lat, g, k, l) for k in range(lat.a) for l in range(lat.b)]
    residual = abs(norm_sq(g) - lat.a * lat.b / lat.L)
    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            residual = max(residual, abs(inner(atoms[i], atoms[j])))
    return float(residual)


def check_cond_fixed_point(lat: GaborLattice, g: np.ndarray, tol: float = 1e-9) -> float:
    """Fixed-point residual ||S g - g||_inf, forced to fail for non-frames.

    S g = g alone does not rule out a singular S (the window can sit in a
    unit-eigenvalue eigenspace while S has a kernel), so when the lower
    bound is at most tol times the upper the residual is floored at 1.
    """
    require_length(lat, g)
    S = frame_operator(lat, g)
    w = np.linalg.eigvalsh(S)
    residual = float(np.max(np.abs(S @ np.asarray(g, dtype=np.complex128) - g)))
    if w[0] <= tol * w[-1]:
        residual = max(residual, 1.0)
    return residual


def classify(lat: GaborLattice, g: np.ndarray, tol: float = 1e-9) -> TightnessReport:
    """Full tightness report: bounds, all four residuals, basis flags."""
    require_length(lat, g)
    bounds = frame_bounds(lat, g)
    is_frame = bounds.A > tol * bounds.B if bounds.B > 0 else False
    tight = bounds.B - bounds.A <= 2 * tol
    tight_constant = (bounds.A + bounds.B) / 2 if tight else None
    normalized_tight = abs(bounds.A - 1.0) <= tol and abs(bounds.B - 1.0) <= tol
    onb = normalized_tight and abs(norm_sq(g) ** 0.5 - 1.0) <= tol
    return TightnessReport(
        bounds=bounds,
        is_frame=is_frame,
        tight_constant=tight_constant,
        normalized_tight=normalized_tight,
        onb=onb,
        riesz_basis=is_frame and lat.atom_count == lat.L,
        cond2_residual=check_cond_walnut(lat, g),
        cond3_residual=check_cond_adjoint(lat, g),
        cond4_residual=check_cond_orthogonal_system(lat, g),
        cond5_residual=check_cond_fixed_point(lat, g, tol),
    )


def density_diagnostics(lat: GaborLattice, g: np.ndarray) -> DensityReport:
    """Frame identities around the canonical dual; raises for non-frames."""
    dual = canonical_dual(lat, g)
    pairing = inner(dual, g)
    expected = lat.a * lat.b / lat.L
    adjoint_residual = 0.0
    for k in range(lat.a):
        for l in range(lat.b):
            if (k, l) != (0, 0):
                adjoint_residual = max(
                    adjoint_residual, abs(inner(dual, adjoint_atom(lat, g, k, l)))
                )
    return DensityReport(
        dual_pairing=pairing,
        expected_pairing=expected,
        pairing_residual=abs(pairing - expected),
        adjoint_residual=float(adjoint_residual),
        riesz_basis=lat.atom_count == lat.L,
    )


def fourier_dual_check(lat: GaborLattice, g: np.ndarray, tol: float = 1e-9) -> bool:
    """Tightness transfers to the Fourier side with the steps swapped.

    Classifies (L, a, b) on g and (L, b, a) on dft(g) and returns whether
    the two normalized-tight verdicts agree (they always must: the DFT
    maps the atoms of one system onto the other's up to unit phases).
    """
    here = classify(lat, g, tol).normalized_tight
    there = classify(lat.swapped(), dft(g), tol).normalized_tight
    return here == there
