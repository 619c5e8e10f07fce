"""Four-stroke Stirling cycle: heats, work, efficiency, Carnot bound.

The cycle visits four Gibbs states of the same model at two couplings and two
bath temperatures:

    A = (beta_hot,  lambda1)   --isothermal-->   B = (beta_hot,  lambda2)
    B --cooling at fixed lambda2--> C = (beta_cold, lambda2)
    C --isothermal--> D = (beta_cold, lambda1)
    D --heating at fixed lambda1--> A

Heats are Q_AB = (S_B - S_A)/beta_hot, Q_BC = U_C - U_B,
Q_CD = (S_D - S_C)/beta_cold, Q_DA = U_A - U_D.  The work output is their sum
(first law over a closed cycle) and is cross-checked on every evaluation
against the independent isothermal free-energy route
(F_A - F_B) + (F_C - F_D).  Efficiency is work / (Q_AB + Q_DA).
"""

from __future__ import annotations

import dataclasses
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .eigensolve import EigensolveError, Spectrum, model_spectrum
from .hamiltonians import ModelParams
from .thermo import thermal_state

STATUS_ENGINE = "engine"
STATUS_NOT_ENGINE = "not-engine"
STATUS_NEGATIVE_QDA = "negative-qda"
STATUS_ERROR = "error"

# First-law closure demanded between the heat-sum and free-energy work routes.
FIRST_LAW_RTOL = 1e-9
# Slack allowed on the Carnot bound before an evaluation is rejected.
CARNOT_SLACK = 1e-9


@dataclass(frozen=True)
class CycleSpec:
    """One Stirling cycle: couplings lambda1 (corners A, D) and lambda2
    (corners B, C), bath inverse temperatures beta_hot and beta_cold."""

    lambda1: float
    lambda2: float
    beta_hot: float
    beta_cold: float
    params_base: ModelParams | None = None

    def __post_init__(self) -> None:
        if not (self.beta_cold > self.beta_hot > 0):
            raise ValueError(
                f"need beta_cold > beta_hot > 0 (hot bath hotter), "
                f"got beta_hot={self.beta_hot!r}, beta_cold={self.beta_cold!r}"
            )
        if self.lambda1 < 0 or self.lambda2 < 0:
            raise ValueError("couplings must be non-negative")

    @property
    def carnot(self) -> float:
        return 1.0 - self.beta_hot / self.beta_cold


@dataclass(frozen=True)
class CycleResult:
    """Heats, work, efficiency and Carnot bound of one evaluated cycle.

    efficiency is NaN when the absorbed heat Q_AB + Q_DA is not positive; the
    status field then reads "not-engine" instead.  detail carries an error
    message for failed sweep points and stays out of the tabular output.
    """

    q_ab: float
    q_bc: float
    q_cd: float
    q_da: float
    work: float
    efficiency: float
    carnot: float
    absorbed_heat: float
    status: str
    detail: str = ""

    @classmethod
    def failed(cls, carnot: float, detail: str) -> "CycleResult":
        nan = float("nan")
        return cls(nan, nan, nan, nan, nan, nan, carnot, nan, STATUS_ERROR, detail)


def cycle_from_spectra(
    spectrum1: Spectrum, spectrum2: Spectrum, beta_hot: float, beta_cold: float
) -> CycleResult:
    """Evaluate the cycle given the spectra at lambda1 and lambda2.

    Orientation follows the sign of the bath difference, so callers may pass
    beta_hot > beta_cold to study the reversed cycle.
    """
    state_a = thermal_state(spectrum1, beta_hot)
    state_b = thermal_state(spectrum2, beta_hot)
    state_c = thermal_state(spectrum2, beta_cold)
    state_d = thermal_state(spectrum1, beta_cold)

    q_ab = (state_b.entropy - state_a.entropy) / beta_hot
    q_bc = state_c.internal_energy - state_b.internal_energy
    q_cd = (state_d.entropy - state_c.entropy) / beta_cold
    q_da = state_a.internal_energy - state_d.internal_energy

    work = q_ab + q_bc + q_cd + q_da
    work_isothermal = (state_a.free_energy - state_b.free_energy) + (
        state_c.free_energy - state_d.free_energy
    )
    if abs(work - work_isothermal) > FIRST_LAW_RTOL * (1.0 + abs(work)):
        raise ArithmeticError(
            f"first-law closure violated: heat sum {work!r} vs "
            f"free-energy work {work_isothermal!r}"
        )

    absorbed = q_ab + q_da
    carnot = 1.0 - beta_hot / beta_cold
    if absorbed > 0:
        efficiency = work / absorbed
        if efficiency > carnot + CARNOT_SLACK:
            raise ArithmeticError(
                f"Carnot bound violated: efficiency {efficiency!r} > {carnot!r}"
            )
        if work > 0:
            status = STATUS_NEGATIVE_QDA if q_da < 0 else STATUS_ENGINE
        else:
            status = STATUS_NOT_ENGINE
    else:
        efficiency = float("nan")
        status = STATUS_NOT_ENGINE

    return CycleResult(
        q_ab=q_ab,
        q_bc=q_bc,
        q_cd=q_cd,
        q_da=q_da,
        work=work,
        efficiency=efficiency,
        carnot=carnot,
        absorbed_heat=absorbed,
        status=status,
    )


class SpectrumCache:
    """Memoizes diagonalizations keyed by the full parameter set.

    Lookups and inserts hold a lock; the decomposition itself runs outside
    it.  Two threads may rarely diagonalize the same key, which is
    deterministic and harmless, so sweeps stay byte-reproducible at any
    worker count.
    """

    def __init__(self) -> None:
        self._spectra: dict[ModelParams, Spectrum] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._spectra)

    def spectrum(self, params: ModelParams) -> Spectrum:
        with self._lock:
            hit = self._spectra.get(params)
        if hit is not None:
            return hit
        computed = model_spectrum(params)
        with self._lock:
            return self._spectra.setdefault(params, computed)


def run_cycle(spec: CycleSpec, cache: SpectrumCache | None = None) -> CycleResult:
    """Diagonalize at both couplings and evaluate the cycle."""
    if spec.params_base is None:
        raise ValueError("CycleSpec.params_base is required to run a model cycle")
    resolve = cache.spectrum if cache is not None else model_spectrum
    spectrum1 = resolve(spec.params_base.with_coupling(spec.lambda1))
    spectrum2 = resolve(spec.params_base.with_coupling(spec.lambda2))
    return cycle_from_spectra(spectrum1, spectrum2, spec.beta_hot, spec.beta_cold)


def efficiency_sweep(
    spec: CycleSpec,
    lambda2_grid: Iterable[float],
    cache: SpectrumCache | None = None,
    workers: int = 1,
) -> list[CycleResult]:
    """Evaluate the cycle at every lambda2 of an ascending grid.

    The shared (beta, lambda1) corners are diagonalized once up front and
    reused through the cache.  Per-point failures become results with status
    "error" instead of aborting the sweep, and the output preserves grid
    order at any worker count.
    """
    grid = [float(x) for x in lambda2_grid]
    if not grid:
        raise ValueError("lambda2_grid is empty")
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise ValueError("lambda2_grid must be ascending")
    if spec.params_base is None:
        raise ValueError("CycleSpec.params_base is required to run a sweep")

    if cache is None:
        cache = SpectrumCache()
    cache.spectrum(spec.params_base.with_coupling(spec.lambda1))

    def evaluate(lam2: float) -> CycleResult:
        try:
            return run_cycle(dataclasses.replace(spec, lambda2=lam2), cache)
        except (ArithmeticError, EigensolveError, ValueError) as exc:
            return CycleResult.failed(spec.carnot, str(exc))

    if workers <= 1:
        return [evaluate(lam2) for lam2 in grid]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, grid))
