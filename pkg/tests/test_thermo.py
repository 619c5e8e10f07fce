import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qstirling.eigensolve import Spectrum
from qstirling.thermo import occupation_probabilities, thermal_state


def spec(*values):
    return Spectrum.from_eigenvalues(list(values))


spectra = st.lists(
    st.floats(min_value=-50.0, max_value=50.0, allow_nan=False), min_size=1, max_size=40
)
betas = st.floats(min_value=1e-3, max_value=30.0)


def test_frozen_ground_state():
    state = thermal_state(spec(0.0, 1.0), beta=1e3)
    assert abs(state.internal_energy) < 1e-6
    assert abs(state.entropy) < 1e-6


def test_infinite_temperature_limit():
    state = thermal_state(spec(0.0, 1.0), beta=1e-4)
    assert abs(state.entropy - math.log(2.0)) < 1e-4


def test_uniform_spectrum():
    state = thermal_state(spec(*([2.5] * 8)), beta=1.7)
    assert state.internal_energy == pytest.approx(2.5, abs=1e-12)
    assert state.entropy == pytest.approx(math.log(8.0), abs=1e-9)
    assert state.free_energy == pytest.approx(2.5 - math.log(8.0) / 1.7, abs=1e-9)


def test_probabilities_examples():
    np.testing.assert_allclose(occupation_probabilities(spec(4.2), 3.0), [1.0])
    np.testing.assert_allclose(occupation_probabilities(spec(1.0, 1.0), 3.0), [0.5, 0.5])
    np.testing.assert_allclose(
        occupation_probabilities(spec(0.0, 1.0), math.log(2.0)), [2.0 / 3.0, 1.0 / 3.0], atol=1e-14
    )


@settings(max_examples=100, deadline=None)
@given(spectra, betas)
def test_probabilities_normalized(values, beta):
    probs = occupation_probabilities(spec(*values), beta)
    assert np.all(probs >= 0.0)
    assert abs(probs.sum() - 1.0) < 1e-12


@settings(max_examples=100, deadline=None)
@given(spectra, betas)
def test_state_identities(values, beta):
    state = thermal_state(spec(*values), beta)
    # F = U - S/beta
    assert abs(state.free_energy - (state.internal_energy - state.entropy / beta)) < 1e-9 * (
        1.0 + abs(state.internal_energy)
    )
    assert 0.0 <= state.entropy <= math.log(len(values)) + 1e-9
    for value in (state.log_z, state.internal_energy, state.entropy, state.free_energy):
        assert math.isfinite(value)


@settings(max_examples=60, deadline=None)
@given(spectra, betas, betas)
def test_entropy_monotone_in_beta(values, beta_a, beta_b):
    lo, hi = sorted((beta_a, beta_b))
    spectrum = spec(*values)
    warm = thermal_state(spectrum, lo)
    cold = thermal_state(spectrum, hi)
    assert warm.entropy >= cold.entropy - 1e-10


@settings(max_examples=60, deadline=None)
@given(spectra, betas, st.floats(min_value=-100.0, max_value=100.0, allow_nan=False))
def test_shift_invariance(values, beta, shift):
    base = thermal_state(spec(*values), beta)
    moved = thermal_state(spec(*[v + shift for v in values]), beta)
    scale = 1e-10 * (1.0 + abs(shift) + abs(base.internal_energy))
    assert abs(moved.entropy - base.entropy) < scale
    assert abs(moved.internal_energy - (base.internal_energy + shift)) < scale
    assert abs(moved.free_energy - (base.free_energy + shift)) < scale
    np.testing.assert_allclose(
        occupation_probabilities(spec(*values), beta),
        occupation_probabilities(spec(*[v + shift for v in values]), beta),
        atol=1e-14,
    )


def test_deep_cold_with_large_energies():
    # the operating point that overflows without the ground-energy shift
    rng = np.random.default_rng(1)
    spectrum = Spectrum.from_eigenvalues(rng.uniform(-1000.0, 1000.0, size=400))
    state = thermal_state(spectrum, beta=30.0)
    for value in (state.log_z, state.internal_energy, state.entropy, state.free_energy):
        assert math.isfinite(value)
    assert state.internal_energy >= spectrum.ground_energy


def test_rejects_bad_input():
    with pytest.raises(ValueError, match="beta"):
        thermal_state(spec(0.0), 0.0)
    with pytest.raises(ValueError, match="beta"):
        thermal_state(spec(0.0), -1.0)
    with pytest.raises(ValueError, match="empty"):
        thermal_state(Spectrum.from_eigenvalues([]), 1.0)
    with pytest.raises(ValueError, match="finite"):
        thermal_state(Spectrum.from_eigenvalues([0.0, float("nan")]), 1.0)
