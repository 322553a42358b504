"""Frame operator, frame bounds, dual and tight windows, reconstruction.

The frame operator of a window g is the L x L Hermitian positive
semidefinite matrix S = sum over all M*N atoms of atom * atom^H. Its
extreme eigenvalues are the optimal frame bounds; the system is a frame
exactly when the smallest eigenvalue is positive. S commutes with every
lattice operator, which is what makes the canonical dual S^-1 g and the
canonical tight window S^-1/2 g generate Weyl-Heisenberg systems again.

Near-singular operators are rejected rather than inverted: eigenvalues at
or below FRAME_FLOOR times the largest mean "not a frame".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlation import cross_correlation_table
from .errors import NotAFrameError
from .lattice import GaborLattice, gabor_atom, inner, norm_sq, require_length

__all__ = [
    "FRAME_FLOOR",
    "FrameBounds",
    "NormAudit",
    "frame_operator",
    "walnut_apply",
    "frame_bounds",
    "canonical_dual",
    "tighten",
    "reconstruct",
    "norm_audit",
]

# Relative eigenvalue floor below which S is treated as singular.
FRAME_FLOOR = 1e-10


@dataclass(frozen=True)
class FrameBounds:
    """Optimal frame bounds: A = smallest, B = largest eigenvalue of S."""

    A: float
    B: float

    def to_dict(self) -> dict:
        return {"A": self.A, "B": self.B}


@dataclass(frozen=True)
class NormAudit:
    """Window norm against the upper bound B.

    norm_sq <= B always (every atom has the window's norm). When the bound
    is attained, the window must be orthogonal to all other atoms;
    max_overlap and orthogonal_to_rest report that check and are None
    otherwise.
    """

    norm_sq: float
    upper_bound: float
    within_bound: bool
    at_bound: bool
    max_overlap: float | None
    orthogonal_to_rest: bool | None

    def to_dict(self) -> dict:
        return {
            "norm_sq": self.norm_sq,
            "upper_bound": self.upper_bound,
            "within_bound": self.within_bound,
            "at_bound": self.at_bound,
            "max_overlap": self.max_overlap,
            "orthogonal_to_rest": self.orthogonal_to_rest,
        }


def _atom_stack(lat: GaborLattice, g: np.ndarray) -> np.ndarray:
    """All M*N atoms as rows, m-major then n."""
    return np.stack([
        gabor_atom(lat, g, m, n) for m in range(lat.M) for n in range(lat.N)
    ])


def frame_operator(lat: GaborLattice, g: np.ndarray) -> np.ndarray:
    """Dense frame operator S = sum_{m,n} atom (x) conj(atom), shape (L, L)."""
    require_length(lat, g)
    atoms = _atom_stack(lat, g)
    return atoms.T @ np.conj(atoms)


def walnut_apply(lat: GaborLattice, g: np.ndarray, f: np.ndarray) -> np.ndarray:
    """Apply S to f through the diagonal-sum form, without assembling S.

    output(x) = M * sum_{k=0}^{b-1} Gk[k][x] * f(x - k*q).
    """
    require_length(lat, g, f)
    f = np.asarray(f, dtype=np.complex128)
    table = cross_correlation_table(lat, g, g)
    out = np.zeros(lat.L, dtype=np.complex128)
    for k in range(lat.b):
        out += table[k] * np.roll(f, k * lat.q)
    return lat.M * out


def frame_bounds(lat: GaborLattice, g: np.ndarray) -> FrameBounds:
    """Optimal bounds from the eigenvalues of the dense frame operator."""
    w = np.linalg.eigvalsh(frame_operator(lat, g))
    return FrameBounds(A=max(float(w[0]), 0.0), B=max(float(w[-1]), 0.0))


def _frame_eig(lat: GaborLattice, g: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of S, raising NotAFrameError when near-singular."""
    w, V = np.linalg.eigh(frame_operator(lat, g))
    if w[-1] <= 0.0 or w[0] <= FRAME_FLOOR * w[-1]:
        raise NotAFrameError(
            f"lower frame bound {max(float(w[0]), 0.0):.3e} vanishes "
            f"(upper bound {max(float(w[-1]), 0.0):.3e})"
        )
    return w, V


def canonical_dual(lat: GaborLattice, g: np.ndarray) -> np.ndarray:
    """The canonical dual window S^-1 g."""
    w, V = _frame_eig(lat, g)
    return V @ ((np.conj(V.T) @ np.asarray(g, dtype=np.complex128)) / w)


def tighten(lat: GaborLattice, g: np.ndarray) -> np.ndarray:
    """The canonical tight window S^-1/2 g; its own frame operator is I."""
    w, V = _frame_eig(lat, g)
    return V @ ((np.conj(V.T) @ np.asarray(g, dtype=np.complex128)) / np.sqrt(w))


def reconstruct(lat: GaborLattice, g: np.ndarray, h: np.ndarray, f: np.ndarray) -> np.ndarray:
    """Analyze f with the atoms of h, synthesize with the atoms of g.

    Returns sum_{m,n} <f, atom_h(m,n)> * atom_g(m,n). This equals f for
    every f exactly when h is a dual window of g, which is the operational
    duality test.
    """
    require_length(lat, g, h, f)
    f = np.asarray(f, dtype=np.complex128)
    atoms_g = _atom_stack(lat, g)
    atoms_h = _atom_stack(lat, h)
    coeffs = np.conj(atoms_h) @ f
    return atoms_g.T @ coeffs


def norm_audit(lat: GaborLattice, g: np.ndarray, tol: float = 1e-9) -> NormAudit:
    """Check norm_sq(g) <= B; at equality, check g against all other atoms."""
    require_length(lat, g)
    nsq = norm_sq(g)
    B = frame_bounds(lat, g).B
    at_bound = abs(nsq - B) <= tol
    max_overlap = None
    orthogonal = None
    if at_bound:
        overlaps = [
            abs(inner(g, gabor_atom(lat, g, m, n)))
            for m in range(lat.M)
            for n in range(lat.N)
            if (m, n) != (0, 0)
        ]
        max_overlap = max(overlaps, default=0.0)
        orthogonal = max_overlap <= tol
    return NormAudit(
        norm_sq=nsq,
        upper_bound=B,
        within_bound=nsq <= B + tol,
        at_bound=at_bound,
        max_overlap=max_overlap,
        orthogonal_to_rest=orthogonal,
    )
