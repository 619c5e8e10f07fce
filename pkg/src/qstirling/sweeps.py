"""Config-driven execution of the six commands, shared by the CLI.

Grids run in a fixed order - N outermost, then gamma, then lambda2 - and
parallelism only ever applies to the independent lambda2 points inside one
(N, gamma) group, so output rows are deterministic for any worker count.
"""

from __future__ import annotations

import math

from .config import RunConfig
from .convergence import CutoffPolicy, converge_cutoff
from .eigensolve import model_spectrum
from .hamiltonians import Model
from .meanfield import energy_per_particle
from .output import CycleRecord, MeanFieldRow, SpectrumTable, record_from_cycle
from .stirling import CycleSpec, SpectrumCache, efficiency_sweep, run_cycle
from .toymodel import toy_sweep


def run_spectrum(config: RunConfig) -> SpectrumTable:
    """Eigenvalues against the coupling at fixed N and gamma."""
    couplings = config.lambda_grid.values()
    base = config.base_params(config.n_list[0], config.gamma, config.cutoff_fixed)
    energies = [list(model_spectrum(base.with_coupling(lam)).eigenvalues) for lam in couplings]
    return SpectrumTable(couplings=couplings, energies=energies)


def _group_cutoff(config: RunConfig, n_particles: int, gamma: float, lambda2_max: float,
                  cache: SpectrumCache) -> int | None:
    """Cutoff used for one (N, gamma) group of Dicke cycles.

    With an automatic policy the convergence search runs once at the largest
    lambda2 of the group: the truncation demand grows with the coupling, so a
    cutoff converged there covers the whole grid.
    """
    if config.model_enum() is not Model.DICKE:
        return None
    if config.cutoff_fixed is not None:
        return config.cutoff_fixed
    probe = config.base_params(n_particles, gamma, cutoff=1)
    spec = CycleSpec(
        lambda1=config.lambda1,
        lambda2=lambda2_max,
        beta_hot=config.beta_hot,
        beta_cold=config.beta_cold,
    )
    cutoff, _ = converge_cutoff(probe, spec, config.cutoff_policy or CutoffPolicy(), cache)
    return cutoff


def run_sweep(config: RunConfig, workers: int = 1) -> list[CycleRecord]:
    """Cycle records over N x gamma x lambda2."""
    grid = config.lambda2_grid.values()
    cache = SpectrumCache()
    records: list[CycleRecord] = []
    for n_particles in config.n_list:
        for gamma in config.gammas():
            cutoff = _group_cutoff(config, n_particles, gamma, grid[-1], cache)
            params = config.base_params(n_particles, gamma, cutoff)
            spec = CycleSpec(
                lambda1=config.lambda1,
                lambda2=grid[0],
                beta_hot=config.beta_hot,
                beta_cold=config.beta_cold,
                params_base=params,
            )
            results = efficiency_sweep(spec, grid, cache, workers=workers)
            for lam2, result in zip(grid, results):
                records.append(
                    record_from_cycle(
                        result,
                        model=config.model,
                        n_particles=n_particles,
                        gamma=gamma,
                        lambda1=config.lambda1,
                        lambda2=lam2,
                        beta_hot=config.beta_hot,
                        beta_cold=config.beta_cold,
                        cutoff=cutoff,
                    )
                )
    return records


def run_cycle_command(config: RunConfig) -> list[CycleRecord]:
    """A single cycle per N at scalar gamma and lambda2."""
    cache = SpectrumCache()
    records = []
    for n_particles in config.n_list:
        cutoff = _group_cutoff(config, n_particles, config.gamma, config.lambda2, cache)
        params = config.base_params(n_particles, config.gamma, cutoff)
        spec = CycleSpec(
            lambda1=config.lambda1,
            lambda2=config.lambda2,
            beta_hot=config.beta_hot,
            beta_cold=config.beta_cold,
            params_base=params,
        )
        result = run_cycle(spec, cache)
        records.append(
            record_from_cycle(
                result,
                model=config.model,
                n_particles=n_particles,
                gamma=config.gamma,
                lambda1=config.lambda1,
                lambda2=config.lambda2,
                beta_hot=config.beta_hot,
                beta_cold=config.beta_cold,
                cutoff=cutoff,
            )
        )
    return records


def run_converge_cutoff(config: RunConfig) -> list[CycleRecord]:
    """Search the cutoff schedule at one cycle and report the converged point."""
    n_particles = config.n_list[0]
    probe = config.base_params(n_particles, config.gamma, cutoff=1)
    spec = CycleSpec(
        lambda1=config.lambda1,
        lambda2=config.lambda2,
        beta_hot=config.beta_hot,
        beta_cold=config.beta_cold,
    )
    cutoff, result = converge_cutoff(probe, spec, config.cutoff_policy or CutoffPolicy())
    return [
        record_from_cycle(
            result,
            model=config.model,
            n_particles=n_particles,
            gamma=config.gamma,
            lambda1=config.lambda1,
            lambda2=config.lambda2,
            beta_hot=config.beta_hot,
            beta_cold=config.beta_cold,
            cutoff=cutoff,
        )
    ]


def run_toy(config: RunConfig) -> list[CycleRecord]:
    """Toy-model cycle records over the lambda2 grid."""
    grid = config.lambda2_grid.values()
    spec = CycleSpec(
        lambda1=config.lambda1,
        lambda2=grid[0],
        beta_hot=config.beta_hot,
        beta_cold=config.beta_cold,
    )
    results = toy_sweep(spec, grid)
    return [
        record_from_cycle(
            result,
            model="toy",
            lambda1=config.lambda1,
            lambda2=lam2,
            beta_hot=config.beta_hot,
            beta_cold=config.beta_cold,
        )
        for lam2, result in zip(grid, results)
    ]


def run_meanfield(config: RunConfig) -> list[MeanFieldRow]:
    """Thermodynamic-limit energy and its finite-difference curvature.

    The curvature column uses central differences on the emitted grid, so the
    discontinuity shows up as two extreme rows around the critical coupling;
    edge rows carry no curvature value.
    """
    model = config.model_enum()
    couplings = config.lambda_grid.values()
    step = config.lambda_grid.step
    results = [energy_per_particle(model, config.omega0, lam, config.omega) for lam in couplings]
    energies = [r.energy_per_particle for r in results]
    rows = []
    for i, (lam, res) in enumerate(zip(couplings, results)):
        if 0 < i < len(couplings) - 1:
            d2 = (energies[i + 1] - 2.0 * energies[i] + energies[i - 1]) / step**2
        else:
            d2 = math.nan
        rows.append(
            MeanFieldRow(
                coupling=lam,
                energy_per_particle=res.energy_per_particle,
                d2_energy=d2,
                phase=res.phase.value,
            )
        )
    return rows
