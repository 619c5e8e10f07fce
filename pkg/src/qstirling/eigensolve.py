"""Dense real-symmetric eigendecomposition with contract checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hamiltonians import ModelParams, build_hamiltonian


class EigensolveError(RuntimeError):
    """The dense symmetric eigensolver failed to converge."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (ascending) and optional eigenvector columns of one matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None
    params: ModelParams | None = None

    @classmethod
    def from_eigenvalues(cls, values, params: ModelParams | None = None) -> "Spectrum":
        """Wrap a plain sequence of energies (sorted here) as a Spectrum."""
        return cls(eigenvalues=np.sort(np.asarray(values, dtype=float)), params=params)

    @property
    def dimension(self) -> int:
        return len(self.eigenvalues)

    @property
    def ground_energy(self) -> float:
        return float(self.eigenvalues[0])


def eigh(matrix: np.ndarray, want_vectors: bool = False, params: ModelParams | None = None) -> Spectrum:
    """Full spectrum of a dense real symmetric matrix.

    Backed by LAPACK's tridiagonal-reduction solvers through numpy, which is
    deterministic for identical input.  The matrix must be exactly symmetric
    (every constructor in this package guarantees that) and finite.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
    if matrix.shape[0] < 1:
        raise ValueError("cannot diagonalize an empty matrix")
    if not np.all(np.isfinite(matrix)):
        raise ValueError("matrix contains non-finite entries")
    if not np.array_equal(matrix, matrix.T):
        raise ValueError("matrix is not symmetric")
    try:
        if want_vectors:
            values, vectors = np.linalg.eigh(matrix)
            return Spectrum(eigenvalues=values, eigenvectors=vectors, params=params)
        values = np.linalg.eigvalsh(matrix)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - needs a pathological input
        raise EigensolveError(f"symmetric eigensolver did not converge: {exc}") from exc
    return Spectrum(eigenvalues=values, params=params)


def model_spectrum(params: ModelParams, want_vectors: bool = False) -> Spectrum:
    """Build and diagonalize the Hamiltonian for the given parameters."""
    return eigh(build_hamiltonian(params), want_vectors=want_vectors, params=params)
