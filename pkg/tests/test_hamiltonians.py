import numpy as np
import pytest

from qstirling.eigensolve import model_spectrum
from qstirling.hamiltonians import (
    Model,
    ModelParams,
    build_dicke,
    build_hamiltonian,
    build_lmg,
    build_parity,
    critical_coupling,
    excitation_number,
)


def lmg_params(n, gamma, coupling, omega0=1.0):
    return ModelParams(Model.LMG, n, omega0=omega0, gamma=gamma, coupling=coupling)


def dicke_params(n, gamma, coupling, cutoff, omega=1.0, omega0=1.0):
    return ModelParams(
        Model.DICKE, n, omega0=omega0, gamma=gamma, coupling=coupling, omega=omega, boson_cutoff=cutoff
    )


def isotropic_lmg_levels(n, omega0, coupling):
    # at gamma=1 the interaction is J^2 - J_z^2, so H is diagonal:
    # E_m = -omega0*m - (coupling/N)(j(j+1) - m^2)
    j = n / 2.0
    m = np.arange(-j, j + 1)
    return np.sort(-omega0 * m - (coupling / n) * (j * (j + 1) - m**2))


class TestLmg:
    @pytest.mark.parametrize("n", [2, 8, 20])
    @pytest.mark.parametrize("coupling", [0.5, 1.0, 2.0])
    def test_isotropic_closed_form(self, n, coupling):
        spectrum = model_spectrum(lmg_params(n, 1.0, coupling))
        expected = isotropic_lmg_levels(n, 1.0, coupling)
        np.testing.assert_allclose(spectrum.eigenvalues, expected, atol=1e-10)

    def test_free_spins(self):
        spectrum = model_spectrum(lmg_params(6, 0.3, 0.0, omega0=1.5))
        expected = np.sort(-1.5 * np.arange(-3.0, 4.0))
        np.testing.assert_allclose(spectrum.eigenvalues, expected, atol=1e-12)

    def test_ground_energy_near_thermodynamic_limit(self):
        # N=20, gamma=0, coupling=2: the infinite-N value is -0.625 per spin
        spectrum = model_spectrum(lmg_params(20, 0.0, 2.0))
        assert abs(spectrum.ground_energy / 20 - (-0.625)) < 0.01

    def test_dimension_and_symmetry(self):
        h = build_lmg(lmg_params(11, 0.4, 1.7))
        assert h.shape == (12, 12)
        assert np.array_equal(h, h.T)

    def test_model_mismatch(self):
        with pytest.raises(ValueError):
            build_lmg(dicke_params(2, 0.0, 1.0, cutoff=4))


class TestDicke:
    def test_decoupled_spectrum(self):
        params = dicke_params(2, 0.7, 0.0, cutoff=5, omega=1.3, omega0=0.9)
        spectrum = model_spectrum(params)
        expected = np.sort(
            [1.3 * n + 0.9 * m for n in range(6) for m in (-1.0, 0.0, 1.0)]
        )
        np.testing.assert_allclose(spectrum.eigenvalues, expected, atol=1e-12)

    def test_rotating_wave_conserves_excitations(self):
        params = dicke_params(4, 1.0, 1.4, cutoff=30)
        h = build_dicke(params)
        n_hat = excitation_number(params)
        assert np.abs(h @ n_hat - n_hat @ h).max() < 1e-10

    @pytest.mark.parametrize("gamma", [0.0, 0.25, 0.5, 0.75, 1.0])
    def test_parity_commutes(self, gamma):
        params = dicke_params(4, gamma, 1.6, cutoff=12)
        h = build_dicke(params)
        pi = build_parity(params)
        assert np.abs(h @ pi - pi @ h).max() < 1e-10

    def test_dimension_and_symmetry(self):
        h = build_dicke(dicke_params(3, 0.5, 1.1, cutoff=7))
        assert h.shape == (32, 32)
        assert np.array_equal(h, h.T)


@pytest.mark.parametrize("gamma", [0.0, 0.25, 0.5, 0.75, 1.0])
@pytest.mark.parametrize("n", [1, 7, 20])
def test_lmg_parity_commutes(gamma, n):
    params = lmg_params(n, gamma, 1.8)
    h = build_lmg(params)
    pi = build_parity(params)
    assert np.abs(h @ pi - pi @ h).max() < 1e-10


def test_lmg_isotropic_conserves_jz():
    params = lmg_params(10, 1.0, 2.2)
    h = build_lmg(params)
    n_hat = excitation_number(params)
    assert np.abs(h @ n_hat - n_hat @ h).max() < 1e-10


@pytest.mark.parametrize(
    "params",
    [lmg_params(12, 0.3, 1.0), dicke_params(3, 0.3, 1.0, cutoff=10)],
)
def test_spectrum_continuous_in_gamma(params):
    import dataclasses

    before = model_spectrum(params).eigenvalues
    after = model_spectrum(dataclasses.replace(params, gamma=params.gamma + 1e-6)).eigenvalues
    assert np.abs(after - before).max() < 1e-4


def test_critical_coupling():
    assert critical_coupling(lmg_params(2, 0.0, 0.0)) == 1.0
    assert critical_coupling(dicke_params(2, 0.0, 0.0, cutoff=2)) == 1.0
    assert critical_coupling(dicke_params(2, 0.0, 0.0, cutoff=2, omega=4.0)) == 2.0


def test_build_hamiltonian_dispatch():
    assert build_hamiltonian(lmg_params(2, 0.0, 1.0)).shape == (3, 3)
    assert build_hamiltonian(dicke_params(2, 0.0, 1.0, cutoff=3)).shape == (12, 12)


class TestParamValidation:
    def test_gamma_range(self):
        with pytest.raises(ValueError):
            lmg_params(2, -0.1, 1.0)
        with pytest.raises(ValueError):
            lmg_params(2, 1.5, 1.0)

    def test_negative_coupling(self):
        with pytest.raises(ValueError):
            lmg_params(2, 0.5, -0.2)

    def test_omega0_positive(self):
        with pytest.raises(ValueError):
            lmg_params(2, 0.5, 1.0, omega0=0.0)

    def test_dicke_needs_omega_and_cutoff(self):
        with pytest.raises(ValueError):
            ModelParams(Model.DICKE, 2, omega0=1.0, boson_cutoff=4)
        with pytest.raises(ValueError):
            ModelParams(Model.DICKE, 2, omega0=1.0, omega=1.0)

    def test_n_particles_positive_integer(self):
        with pytest.raises(ValueError):
            ModelParams(Model.LMG, 0)

    def test_with_coupling_revalidates(self):
        with pytest.raises(ValueError):
            lmg_params(2, 0.5, 1.0).with_coupling(-1.0)
