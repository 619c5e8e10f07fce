"""LMG and Dicke Hamiltonians on the fully symmetric (j = N/2) sector.

LMG:    H = -omega0 J_z - (coupling/N) (J_x^2 + gamma J_y^2)
Dicke:  H = omega a^+ a + omega0 J_z
            + coupling (1+gamma)/(2 sqrt(N)) (a J_+ + a^+ J_-)
            + coupling (1-gamma)/(2 sqrt(N)) (a J_- + a^+ J_+)

gamma in [0, 1] weights the two interaction directions (LMG) or the
counter-rotating against the rotating term (Dicke); at gamma = 1 both models
gain a continuous symmetry generated by the excitation number.  Both conserve
parity at every gamma.  The ground state turns critical at
coupling = omega0 (LMG) and coupling = sqrt(omega*omega0) (Dicke).
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .operators import (
    BosonBasis,
    SpinBasis,
    build_boson_number,
    build_boson_ops,
    build_jplus,
    build_jx_squared,
    build_jy_squared,
    build_jz,
    build_parity_dicke,
    build_parity_spin,
    tensor,
)


class Model(Enum):
    LMG = "lmg"
    DICKE = "dicke"


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters identifying one Hamiltonian instance.

    omega0 is the two-level gap, omega the cavity mode energy (Dicke only),
    gamma the anisotropy / counter-rotating weight, coupling the interaction
    strength, boson_cutoff the Fock truncation (Dicke only).  Instances are
    frozen and hashable, so they double as cache keys.
    """

    model: Model
    n_particles: int
    omega0: float = 1.0
    gamma: float = 0.0
    coupling: float = 0.0
    omega: float | None = None
    boson_cutoff: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.n_particles, int) or self.n_particles < 1:
            raise ValueError(f"n_particles must be a positive integer, got {self.n_particles!r}")
        if self.omega0 <= 0:
            raise ValueError(f"omega0 must be positive, got {self.omega0!r}")
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma!r}")
        if self.coupling < 0:
            raise ValueError(f"coupling must be non-negative, got {self.coupling!r}")
        if self.model is Model.DICKE:
            if self.omega is None or self.omega <= 0:
                raise ValueError("Dicke model requires a positive boson energy omega")
            if self.boson_cutoff is None or self.boson_cutoff < 1:
                raise ValueError("Dicke model requires boson_cutoff >= 1")

    @property
    def dimension(self) -> int:
        spin_dim = self.n_particles + 1
        if self.model is Model.DICKE:
            return (self.boson_cutoff + 1) * spin_dim
        return spin_dim

    def with_coupling(self, coupling: float) -> "ModelParams":
        return dataclasses.replace(self, coupling=coupling)

    def with_cutoff(self, boson_cutoff: int) -> "ModelParams":
        return dataclasses.replace(self, boson_cutoff=boson_cutoff)


def build_lmg(params: ModelParams) -> np.ndarray:
    """Assemble the LMG matrix, (N+1) x (N+1), exactly symmetric."""
    if params.model is not Model.LMG:
        raise ValueError(f"build_lmg called with model {params.model}")
    basis = SpinBasis(params.n_particles)
    interaction = build_jx_squared(basis) + params.gamma * build_jy_squared(basis)
    return -params.omega0 * build_jz(basis) - (params.coupling / params.n_particles) * interaction


def build_dicke(params: ModelParams) -> np.ndarray:
    """Assemble the Dicke matrix on the boson (x) spin product space.

    Dimension (cutoff+1) (N+1), boson index slowest.  Both coupling terms are
    built as M + M^T of a real Kronecker product, so symmetry is exact.
    """
    if params.model is not Model.DICKE:
        raise ValueError(f"build_dicke called with model {params.model}")
    spin = SpinBasis(params.n_particles)
    boson = BosonBasis(params.boson_cutoff)
    a, _ = build_boson_ops(boson)
    jp = build_jplus(spin)
    ident_boson = np.eye(boson.dimension)
    ident_spin = np.eye(spin.dimension)

    rotating = tensor(a, jp)        # a J_+
    counter = tensor(a, jp.T)       # a J_-
    scale = params.coupling / (2.0 * math.sqrt(params.n_particles))
    return (
        params.omega * tensor(build_boson_number(boson), ident_spin)
        + params.omega0 * tensor(ident_boson, build_jz(spin))
        + scale * (1.0 + params.gamma) * (rotating + rotating.T)
        + scale * (1.0 - params.gamma) * (counter + counter.T)
    )


def build_hamiltonian(params: ModelParams) -> np.ndarray:
    if params.model is Model.LMG:
        return build_lmg(params)
    return build_dicke(params)


def critical_coupling(params: ModelParams) -> float:
    """Coupling at which the ground state turns critical.

    omega0 for the LMG model, sqrt(omega*omega0) for the Dicke model.
    """
    if params.model is Model.LMG:
        return params.omega0
    return math.sqrt(params.omega * params.omega0)


def build_parity(params: ModelParams) -> np.ndarray:
    """The parity operator exp(i pi N_hat), a diagonal matrix of +-1."""
    spin = SpinBasis(params.n_particles)
    if params.model is Model.LMG:
        return build_parity_spin(spin)
    return build_parity_dicke(BosonBasis(params.boson_cutoff), spin)


def excitation_number(params: ModelParams) -> np.ndarray:
    """N_hat = J_z + N/2 (LMG) or a^+ a + J_z + N/2 (Dicke).

    Generates the continuous symmetry that both models enjoy at gamma = 1.
    """
    spin = SpinBasis(params.n_particles)
    shifted_jz = build_jz(spin) + (params.n_particles / 2.0) * np.eye(spin.dimension)
    if params.model is Model.LMG:
        return shifted_jz
    boson = BosonBasis(params.boson_cutoff)
    return tensor(build_boson_number(boson), np.eye(spin.dimension)) + tensor(
        np.eye(boson.dimension), shifted_jz
    )
