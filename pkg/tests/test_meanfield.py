import math

import pytest

from qstirling.hamiltonians import Model
from qstirling.meanfield import (
    Phase,
    dicke_amplitudes,
    dicke_energy_per_particle,
    energy_per_particle,
    lmg_amplitudes,
    lmg_energy_per_particle,
    second_derivative_jump,
)


class TestLmgEnergy:
    def test_normal_branch(self):
        result = lmg_energy_per_particle(1.0, 0.5)
        assert result.energy_per_particle == -0.5
        assert result.phase is Phase.NORMAL
        assert result.lambda_c == 1.0

    def test_ordered_branch(self):
        result = lmg_energy_per_particle(1.0, 2.0)
        assert result.energy_per_particle == pytest.approx(-0.625, abs=0.0)
        assert result.phase is Phase.ORDERED

    def test_continuity_at_critical_point(self):
        eps = 1e-9
        below = lmg_energy_per_particle(1.0, 1.0 - eps).energy_per_particle
        at = lmg_energy_per_particle(1.0, 1.0).energy_per_particle
        above = lmg_energy_per_particle(1.0, 1.0 + eps).energy_per_particle
        assert abs(at - below) < 1e-12 + eps
        assert abs(above - at) < 1e-12 + eps
        assert at == -0.5

    def test_entropy_identically_zero(self):
        for coupling in (0.0, 0.5, 1.0, 3.7):
            assert lmg_energy_per_particle(1.0, coupling).entropy_per_particle == 0.0


class TestDickeEnergy:
    def test_normal_branch(self):
        result = dicke_energy_per_particle(1.0, 1.0, 0.5)
        assert result.energy_per_particle == -0.5
        assert result.phase is Phase.NORMAL

    def test_ordered_branch(self):
        result = dicke_energy_per_particle(1.0, 1.0, 2.0)
        assert result.energy_per_particle == pytest.approx(-1.0625, abs=0.0)
        assert result.phase is Phase.ORDERED

    def test_critical_coupling_scaling(self):
        assert dicke_energy_per_particle(4.0, 1.0, 0.5).lambda_c == 2.0

    def test_continuity_at_critical_point(self):
        at = dicke_energy_per_particle(1.0, 1.0, 1.0).energy_per_particle
        below = dicke_energy_per_particle(1.0, 1.0, 1.0 - 1e-9).energy_per_particle
        assert abs(at - below) < 1e-11
        assert at == pytest.approx(-0.5, abs=1e-15)


@pytest.mark.parametrize(
    "evaluate",
    [
        lambda lam: lmg_energy_per_particle(1.0, lam).energy_per_particle,
        lambda lam: dicke_energy_per_particle(1.0, 1.0, lam).energy_per_particle,
    ],
    ids=["lmg", "dicke"],
)
def test_first_derivative_continuous(evaluate):
    # second-order transition: the central difference straddling lambda_c
    # matches the one-sided slopes (both zero) to 1e-6
    h = 1e-6
    central = (evaluate(1.0 + h) - evaluate(1.0 - h)) / (2.0 * h)
    assert abs(central) < 1e-6


class TestSecondDerivativeJump:
    @pytest.mark.parametrize("omega0, expected", [(1.0, 0.5), (2.0, 0.25)])
    def test_lmg_analytic(self, omega0, expected):
        assert second_derivative_jump(Model.LMG, omega0) == pytest.approx(expected, abs=0.0)

    def test_dicke_analytic(self):
        assert second_derivative_jump(Model.DICKE, 1.0, omega=1.0) == 2.0
        assert second_derivative_jump(Model.DICKE, 1.0, omega=2.0) == 1.0

    @pytest.mark.parametrize(
        "model, omega0, omega",
        [(Model.LMG, 1.0, None), (Model.LMG, 2.0, None), (Model.DICKE, 1.0, 1.0)],
    )
    def test_finite_difference_oracle(self, model, omega0, omega):
        lambda_c = omega0 if model is Model.LMG else math.sqrt(omega * omega0)

        def u(lam):
            return energy_per_particle(model, omega0, lam, omega).energy_per_particle

        h = 1e-4
        # one-sided second differences hugging the critical point
        below = (u(lambda_c - 2 * h) - 2 * u(lambda_c - h) + u(lambda_c)) / h**2
        above = (u(lambda_c) - 2 * u(lambda_c + h) + u(lambda_c + 2 * h)) / h**2
        jump = abs(above - below)
        assert jump == pytest.approx(second_derivative_jump(model, omega0, omega), abs=1e-3)


class TestAmplitudes:
    def test_lmg_normal(self):
        assert lmg_amplitudes(1.0, 0.5) == (1.0, 0.0)

    def test_lmg_ordered(self):
        r1, r2 = lmg_amplitudes(1.0, 2.0)
        assert r1 == pytest.approx(math.sqrt(3.0 / 4.0))
        assert r2 == pytest.approx(math.sqrt(1.0 / 4.0))
        assert r1**2 + r2**2 == pytest.approx(1.0, abs=1e-14)

    def test_dicke_normal(self):
        assert dicke_amplitudes(1.0, 1.0, 0.5) == (0.0, 0.0, 1.0)

    def test_dicke_ordered(self):
        r0, r1, r2 = dicke_amplitudes(1.0, 1.0, 2.0)
        assert r0 == pytest.approx(math.sqrt(15.0) / 4.0)
        assert r1 == pytest.approx(math.sqrt(3.0 / 8.0))
        assert r2 == pytest.approx(math.sqrt(5.0 / 8.0))
        assert r1**2 + r2**2 == pytest.approx(1.0, abs=1e-14)


def test_input_validation():
    with pytest.raises(ValueError):
        lmg_energy_per_particle(0.0, 1.0)
    with pytest.raises(ValueError):
        lmg_energy_per_particle(1.0, -0.5)
    with pytest.raises(ValueError):
        dicke_energy_per_particle(-1.0, 1.0, 0.5)
    with pytest.raises(ValueError):
        energy_per_particle(Model.DICKE, 1.0, 1.0, omega=None)
    with pytest.raises(ValueError):
        second_derivative_jump(Model.DICKE, 1.0, omega=None)
