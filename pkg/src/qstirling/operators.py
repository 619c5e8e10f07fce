"""Collective angular-momentum and boson operators in the symmetric sector.

Everything here is a dense, real, exactly symmetric numpy matrix (or a
diagonal one).  The imaginary unit never appears: J_y enters the models only
through J_y^2 = -(J_+ - J_-)^2 / 4, and the cavity coupling only through the
manifestly Hermitian combinations a J_+ + a^+ J_- and a J_- + a^+ J_+.

Basis orderings are fixed and part of the public contract: spin states by
ascending m, Fock states by ascending occupation, and tensor products with
the left (boson) index varying slowest.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SpinBasis:
    """Collective spin ladder |j, m> with j = N/2, ordered by ascending m."""

    n_particles: int

    def __post_init__(self) -> None:
        if self.n_particles < 1:
            raise ValueError(f"n_particles must be a positive integer, got {self.n_particles!r}")

    @property
    def j(self) -> float:
        return self.n_particles / 2.0

    @property
    def dimension(self) -> int:
        return self.n_particles + 1

    def m_values(self) -> np.ndarray:
        """Magnetic quantum numbers -j, -j+1, ..., j in basis order."""
        return np.arange(self.dimension) - self.j


@dataclass(frozen=True)
class BosonBasis:
    """Truncated Fock space |0>, ..., |cutoff>, ordered by ascending occupation."""

    cutoff: int

    def __post_init__(self) -> None:
        if self.cutoff < 1:
            raise ValueError(f"cutoff must be a positive integer, got {self.cutoff!r}")

    @property
    def dimension(self) -> int:
        return self.cutoff + 1

    def occupations(self) -> np.ndarray:
        return np.arange(self.dimension)


def symmetrize(matrix: np.ndarray) -> np.ndarray:
    """(M + M^T)/2.

    Floating-point addition commutes entrywise, so the result is exactly
    symmetric even when BLAS filled M's two triangles in different orders.
    """
    return (matrix + matrix.T) / 2.0


def build_jz(basis: SpinBasis) -> np.ndarray:
    """Diagonal J_z: entry m for the state |j, m>."""
    return np.diag(basis.m_values())


def build_jplus(basis: SpinBasis) -> np.ndarray:
    """Raising operator: <j, m+1| J_+ |j, m> = sqrt(j(j+1) - m(m+1))."""
    j = basis.j
    m = basis.m_values()[:-1]  # states that can still be raised
    mat = np.zeros((basis.dimension, basis.dimension))
    mat[np.arange(1, basis.dimension), np.arange(basis.dimension - 1)] = np.sqrt(
        j * (j + 1) - m * (m + 1)
    )
    return mat


def build_jminus(basis: SpinBasis) -> np.ndarray:
    """Lowering operator, the transpose of J_+."""
    return build_jplus(basis).T.copy()


def build_jx_squared(basis: SpinBasis) -> np.ndarray:
    """J_x^2 with J_x = (J_+ + J_-)/2."""
    jp = build_jplus(basis)
    jx = (jp + jp.T) / 2.0
    return symmetrize(jx @ jx)


def build_jy_squared(basis: SpinBasis) -> np.ndarray:
    """J_y^2 = -(J_+ - J_-)^2 / 4, assembled without complex arithmetic."""
    jp = build_jplus(basis)
    d = (jp - jp.T) / 2.0
    return symmetrize(-(d @ d))


def build_boson_ops(basis: BosonBasis) -> tuple[np.ndarray, np.ndarray]:
    """Annihilation and creation matrices truncated at the cutoff.

    <n-1| a |n> = sqrt(n); the creation operator is the transpose.  The
    truncation makes [a, a^+] deviate from the identity only in the last
    diagonal entry, which equals -cutoff.
    """
    dim = basis.dimension
    n = np.arange(1, dim)
    a = np.zeros((dim, dim))
    a[n - 1, n] = np.sqrt(n)
    return a, a.T.copy()


def build_boson_number(basis: BosonBasis) -> np.ndarray:
    """The number operator a^+ a with exact integer diagonal entries."""
    return np.diag(basis.occupations().astype(float))


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; the left factor's index varies slowest."""
    return np.kron(a, b)


def build_parity_spin(basis: SpinBasis) -> np.ndarray:
    """Parity exp(i pi (J_z + N/2)): diagonal signs (-1)^(m + N/2).

    m + N/2 is the basis index, so the diagonal alternates +1, -1, ...
    starting from the lowest-m state.
    """
    signs = 1.0 - 2.0 * (np.arange(basis.dimension) % 2)
    return np.diag(signs)


def build_parity_dicke(boson: BosonBasis, spin: SpinBasis) -> np.ndarray:
    """Parity exp(i pi (a^+ a + J_z + N/2)) on the boson (x) spin space."""
    total = boson.occupations()[:, None] + np.arange(spin.dimension)[None, :]
    signs = 1.0 - 2.0 * (total.ravel() % 2)
    return np.diag(signs)
