"""Four-level system with controllable ground-level crossings.

The levels are affine in the control parameter:

    E1 = 3 lam,  E2 = 1 + lam,  E3 = 5 - lam,  E4 = 12 - 3 lam

so the ground level changes identity at lam = 0.5, 2 and 3.5.  Sweeping a
Stirling cycle across those points reproduces the efficiency peaks of the
full many-body engines with a spectrum simple enough to reason about by
hand; the cycle is evaluated through the exact same thermodynamics code
path, which makes this module double as an end-to-end integration check.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .eigensolve import Spectrum
from .stirling import CycleResult, CycleSpec, cycle_from_spectra

LEVEL_INTERCEPTS = np.array([0.0, 1.0, 5.0, 12.0])
LEVEL_SLOPES = np.array([3.0, 1.0, -1.0, -3.0])

# Couplings where the ground level crosses into a new branch.
GROUND_CROSSINGS = (0.5, 2.0, 3.5)


def toy_levels(coupling: float) -> np.ndarray:
    """The four level energies in level order (not sorted by value)."""
    return LEVEL_INTERCEPTS + LEVEL_SLOPES * coupling


def toy_spectrum(coupling: float) -> Spectrum:
    return Spectrum.from_eigenvalues(toy_levels(coupling))


def toy_cycle(spec: CycleSpec) -> CycleResult:
    """Stirling cycle with the four-level spectrum as working substance."""
    return cycle_from_spectra(
        toy_spectrum(spec.lambda1), toy_spectrum(spec.lambda2), spec.beta_hot, spec.beta_cold
    )


def toy_sweep(spec: CycleSpec, lambda2_grid: Iterable[float]) -> list[CycleResult]:
    """toy_cycle over an ascending lambda2 grid, reusing the lambda1 corner."""
    grid = [float(x) for x in lambda2_grid]
    if not grid:
        raise ValueError("lambda2_grid is empty")
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise ValueError("lambda2_grid must be ascending")
    base = toy_spectrum(spec.lambda1)
    return [
        cycle_from_spectra(base, toy_spectrum(lam2), spec.beta_hot, spec.beta_cold)
        for lam2 in grid
    ]
