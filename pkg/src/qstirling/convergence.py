"""Boson-cutoff selection by convergence of the cycle observables.

The Fock truncation is chosen against the quantities that actually get
reported - efficiency and the four heats - not against the ground energy:
a cutoff is accepted once growing it to the next entry of a geometric
schedule no longer moves any of them.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .hamiltonians import Model, ModelParams
from .stirling import CycleResult, CycleSpec, SpectrumCache, run_cycle


class CutoffConvergenceError(RuntimeError):
    """The cycle observables kept moving up to the maximum allowed cutoff."""


@dataclass(frozen=True)
class CutoffPolicy:
    """Geometric growth schedule for the Fock-space truncation.

    A cutoff is accepted once growing it to the next schedule entry changes
    the efficiency by less than eta_tol and every heat by less than
    heat_tol * (1 + |heat|).
    """

    initial: int = 8
    growth: float = 2.0
    eta_tol: float = 1e-6
    heat_tol: float = 1e-6
    max_cutoff: int = 512

    def __post_init__(self) -> None:
        if self.initial < 1:
            raise ValueError(f"initial cutoff must be >= 1, got {self.initial!r}")
        if self.growth <= 1.0:
            raise ValueError(f"growth factor must exceed 1, got {self.growth!r}")
        if self.eta_tol <= 0 or self.heat_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_cutoff < self.initial:
            raise ValueError("max_cutoff must be at least the initial cutoff")

    def schedule(self) -> list[int]:
        cutoffs = [self.initial]
        while True:
            nxt = max(cutoffs[-1] + 1, math.ceil(cutoffs[-1] * self.growth))
            if nxt > self.max_cutoff:
                return cutoffs
            cutoffs.append(nxt)


def _observables_close(coarse: CycleResult, fine: CycleResult, policy: CutoffPolicy) -> bool:
    if math.isnan(coarse.efficiency) and math.isnan(fine.efficiency):
        eta_ok = True
    elif math.isnan(coarse.efficiency) or math.isnan(fine.efficiency):
        eta_ok = False
    else:
        eta_ok = abs(coarse.efficiency - fine.efficiency) < policy.eta_tol
    heats_ok = all(
        abs(qa - qb) < policy.heat_tol * (1.0 + abs(qa))
        for qa, qb in (
            (coarse.q_ab, fine.q_ab),
            (coarse.q_bc, fine.q_bc),
            (coarse.q_cd, fine.q_cd),
            (coarse.q_da, fine.q_da),
        )
    )
    return eta_ok and heats_ok


def converge_cutoff(
    params: ModelParams,
    cycle: CycleSpec,
    policy: CutoffPolicy = CutoffPolicy(),
    cache: SpectrumCache | None = None,
) -> tuple[int, CycleResult]:
    """Smallest scheduled cutoff whose cycle observables are stable under
    growth to the next scheduled cutoff; returns that cutoff's result."""
    if params.model is not Model.DICKE:
        raise ValueError("cutoff convergence applies to the Dicke model only")
    if cache is None:
        cache = SpectrumCache()
    schedule = policy.schedule()
    if len(schedule) < 2:
        raise ValueError(
            f"cutoff schedule {schedule} has no growth step; raise max_cutoff"
        )

    previous: tuple[int, CycleResult] | None = None
    for cutoff in schedule:
        spec = dataclasses.replace(cycle, params_base=params.with_cutoff(cutoff))
        result = run_cycle(spec, cache)
        if previous is not None and _observables_close(previous[1], result, policy):
            return previous
        previous = (cutoff, result)
    raise CutoffConvergenceError(
        f"cycle observables not converged by cutoff {schedule[-1]} "
        f"(N={params.n_particles}, gamma={params.gamma}, lambda1={cycle.lambda1}, "
        f"lambda2={cycle.lambda2}, beta_hot={cycle.beta_hot}, beta_cold={cycle.beta_cold})"
    )
