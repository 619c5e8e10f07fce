"""Quantum Stirling heat engines with critical working substances.

Exact diagonalization of the anisotropic LMG and full Dicke models, Gibbs
thermodynamics that stays stable at low temperature, the four-stroke Stirling
cycle with its efficiency and Carnot bound, thermodynamic-limit oracles, and
a four-level toy system - all surfaced through a sweep CLI.
"""

from .convergence import CutoffConvergenceError, CutoffPolicy, converge_cutoff
from .eigensolve import EigensolveError, Spectrum, eigh, model_spectrum
from .hamiltonians import (
    Model,
    ModelParams,
    build_dicke,
    build_hamiltonian,
    build_lmg,
    build_parity,
    critical_coupling,
    excitation_number,
)
from .meanfield import (
    MeanFieldResult,
    Phase,
    dicke_amplitudes,
    dicke_energy_per_particle,
    lmg_amplitudes,
    lmg_energy_per_particle,
    second_derivative_jump,
)
from .operators import (
    BosonBasis,
    SpinBasis,
    build_boson_number,
    build_boson_ops,
    build_jminus,
    build_jplus,
    build_jx_squared,
    build_jy_squared,
    build_jz,
    symmetrize,
    tensor,
)
from .stirling import (
    CycleResult,
    CycleSpec,
    SpectrumCache,
    cycle_from_spectra,
    efficiency_sweep,
    run_cycle,
)
from .thermo import ThermalState, occupation_probabilities, thermal_state
from .toymodel import GROUND_CROSSINGS, toy_cycle, toy_levels, toy_spectrum, toy_sweep

__version__ = "0.1.0"

__all__ = [
    "BosonBasis",
    "CutoffConvergenceError",
    "CutoffPolicy",
    "CycleResult",
    "CycleSpec",
    "EigensolveError",
    "GROUND_CROSSINGS",
    "MeanFieldResult",
    "Model",
    "ModelParams",
    "Phase",
    "Spectrum",
    "SpectrumCache",
    "SpinBasis",
    "ThermalState",
    "build_boson_number",
    "build_boson_ops",
    "build_dicke",
    "build_hamiltonian",
    "build_jminus",
    "build_jplus",
    "build_jx_squared",
    "build_jy_squared",
    "build_jz",
    "build_lmg",
    "build_parity",
    "converge_cutoff",
    "critical_coupling",
    "cycle_from_spectra",
    "dicke_amplitudes",
    "dicke_energy_per_particle",
    "efficiency_sweep",
    "eigh",
    "excitation_number",
    "lmg_amplitudes",
    "lmg_energy_per_particle",
    "model_spectrum",
    "occupation_probabilities",
    "run_cycle",
    "second_derivative_jump",
    "symmetrize",
    "tensor",
    "thermal_state",
    "toy_cycle",
    "toy_levels",
    "toy_spectrum",
    "toy_sweep",
]
