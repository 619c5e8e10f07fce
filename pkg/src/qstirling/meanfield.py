"""Thermodynamic-limit energies and the second-order transition signature.

Closed forms for the energy per particle in the N -> infinity limit:

    LMG:    U/N = -omega0/2                     for coupling <  omega0
            U/N = -(coupling + omega0^2/coupling)/4      otherwise
    Dicke:  U/N = -omega0/2                     for coupling <  sqrt(omega*omega0)
            U/N = -(coupling^2/(4 omega)) (1 + omega^2 omega0^2 / coupling^4)

Both branches join continuously in value and first derivative at the critical
coupling, while the second derivative jumps: the transition is second order.
The entropy per particle vanishes identically at every temperature, which is
why nothing in this module takes a beta argument - the symmetric-sector
models have no thermal phase transition.

These expressions double as an independent oracle for the exact
diagonalization pipeline: finite-N ground energies must approach them as N
grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .hamiltonians import Model


class Phase(Enum):
    """NORMAL covers the paramagnetic (LMG) / normal (Dicke) side of the
    transition, ORDERED the ferromagnetic / superradiant side."""

    NORMAL = "normal"
    ORDERED = "ordered"


@dataclass(frozen=True)
class MeanFieldResult:
    energy_per_particle: float
    entropy_per_particle: float  # identically zero
    phase: Phase
    lambda_c: float


def lmg_energy_per_particle(omega0: float, coupling: float) -> MeanFieldResult:
    if omega0 <= 0:
        raise ValueError(f"omega0 must be positive, got {omega0!r}")
    if coupling < 0:
        raise ValueError(f"coupling must be non-negative, got {coupling!r}")
    lambda_c = omega0
    if coupling < lambda_c:
        return MeanFieldResult(-omega0 / 2.0, 0.0, Phase.NORMAL, lambda_c)
    energy = -(coupling + omega0**2 / coupling) / 4.0
    return MeanFieldResult(energy, 0.0, Phase.ORDERED, lambda_c)


def dicke_energy_per_particle(omega: float, omega0: float, coupling: float) -> MeanFieldResult:
    if omega <= 0 or omega0 <= 0:
        raise ValueError("omega and omega0 must be positive")
    if coupling < 0:
        raise ValueError(f"coupling must be non-negative, got {coupling!r}")
    lambda_c = math.sqrt(omega * omega0)
    if coupling < lambda_c:
        return MeanFieldResult(-omega0 / 2.0, 0.0, Phase.NORMAL, lambda_c)
    energy = -(coupling**2 / (4.0 * omega)) * (1.0 + (omega * omega0) ** 2 / coupling**4)
    return MeanFieldResult(energy, 0.0, Phase.ORDERED, lambda_c)


def energy_per_particle(
    model: Model, omega0: float, coupling: float, omega: float | None = None
) -> MeanFieldResult:
    """Dispatch helper used by the command-line layer."""
    if model is Model.LMG:
        return lmg_energy_per_particle(omega0, coupling)
    if omega is None:
        raise ValueError("Dicke mean field requires omega")
    return dicke_energy_per_particle(omega, omega0, coupling)


def second_derivative_jump(model: Model, omega0: float, omega: float | None = None) -> float:
    """Magnitude of the jump of d^2(U/N)/d coupling^2 at the critical point.

    The normal branch is constant, so the jump is the ordered branch's second
    derivative evaluated at lambda_c:

        LMG:    d2 = -omega0^2 / (2 coupling^3)            -> 1/(2 omega0)
        Dicke:  d2 = -1/(2 omega) - 3 omega omega0^2 / (2 coupling^4)
                                                           -> 2/omega
    """
    if omega0 <= 0:
        raise ValueError(f"omega0 must be positive, got {omega0!r}")
    if model is Model.LMG:
        return 1.0 / (2.0 * omega0)
    if omega is None or omega <= 0:
        raise ValueError("Dicke jump requires a positive omega")
    return 2.0 / omega


def lmg_amplitudes(omega0: float, coupling: float) -> tuple[float, float]:
    """Saddle-point mode amplitudes (r1, r2); (1, 0) in the normal phase.

    Informational order-parameter output: r2 > 0 signals the broken phase.
    """
    result = lmg_energy_per_particle(omega0, coupling)
    if result.phase is Phase.NORMAL:
        return 1.0, 0.0
    r1 = math.sqrt((coupling + omega0) / (2.0 * coupling))
    r2 = math.sqrt((coupling - omega0) / (2.0 * coupling))
    return r1, r2


def dicke_amplitudes(omega: float, omega0: float, coupling: float) -> tuple[float, float, float]:
    """Saddle-point amplitudes (r0, r1, r2) for the cavity mode and the two
    collective modes; (0, 0, 1) in the normal phase."""
    result = dicke_energy_per_particle(omega, omega0, coupling)
    if result.phase is Phase.NORMAL:
        return 0.0, 0.0, 1.0
    squared = coupling**2
    r0 = math.sqrt((squared - omega * omega0) * (squared + omega * omega0)) / (2.0 * omega * coupling)
    r1 = math.sqrt((squared - omega * omega0) / (2.0 * squared))
    r2 = math.sqrt((squared + omega * omega0) / (2.0 * squared))
    return r0, r1, r2
