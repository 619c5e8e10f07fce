import math

import numpy as np
import pytest

from qstirling.stirling import CycleSpec
from qstirling.toymodel import (
    GROUND_CROSSINGS,
    toy_cycle,
    toy_levels,
    toy_spectrum,
    toy_sweep,
)

COLD_BATHS = dict(beta_hot=0.5, beta_cold=20.0)  # T_H = 2, T_C = 0.05


def test_levels_at_origin():
    np.testing.assert_array_equal(toy_levels(0.0), [0.0, 1.0, 5.0, 12.0])


def test_level_identity_preserved():
    # unsorted return: each slot keeps its branch even after crossings
    np.testing.assert_array_equal(toy_levels(4.0), [12.0, 5.0, 1.0, 0.0])


@pytest.mark.parametrize(
    "coupling, pair",
    [(0.5, (0, 1)), (2.0, (1, 2)), (3.5, (2, 3))],
)
def test_ground_level_crossings(coupling, pair):
    levels = toy_levels(coupling)
    i, k = pair
    assert levels[i] == levels[k]
    # the degenerate pair is the ground level at the crossing
    assert levels[i] == levels.min()


def test_crossing_constants_match_levels():
    for crossing in GROUND_CROSSINGS:
        sorted_levels = np.sort(toy_levels(crossing))
        assert sorted_levels[0] == sorted_levels[1]


def test_spectrum_sorted():
    spectrum = toy_spectrum(4.0)
    np.testing.assert_array_equal(spectrum.eigenvalues, [0.0, 1.0, 5.0, 12.0])


def test_zero_work_cycle():
    result = toy_cycle(CycleSpec(0.0, 0.0, **COLD_BATHS))
    assert result.work == 0.0
    # the lambda-fixed strokes still exchange heat, so the efficiency is a
    # well-defined zero rather than undefined
    assert result.efficiency == 0.0
    assert result.status == "not-engine"


def test_first_law_and_bound_inherited():
    for lam2 in (0.3, 0.5, 1.7, 2.0, 3.9):
        result = toy_cycle(CycleSpec(0.0, lam2, **COLD_BATHS))
        heat_sum = result.q_ab + result.q_bc + result.q_cd + result.q_da
        assert abs(result.work - heat_sum) < 1e-9 * (1.0 + abs(result.work))
        if result.absorbed_heat > 0:
            assert result.efficiency <= result.carnot + 1e-9


def test_efficiency_peaks_near_crossings():
    grid = [0.01 * i for i in range(401)]
    results = toy_sweep(CycleSpec(0.0, 0.0, **COLD_BATHS), grid)
    etas = np.array([r.efficiency for r in results])
    for crossing in GROUND_CROSSINGS:
        index = int(round(crossing / 0.01))
        window = etas[max(index - 10, 1) : index + 10]
        # a local maximum lives within +-0.1 of the crossing
        assert np.nanmax(window) > np.nanmax(
            [etas[max(index - 30, 1)], etas[min(index + 30, 400)]]
        )


@pytest.mark.parametrize("crossing", GROUND_CROSSINGS)
def test_qbc_locally_minimal_at_crossings(crossing):
    def qbc(lam2):
        return abs(toy_cycle(CycleSpec(0.0, lam2, **COLD_BATHS)).q_bc)

    at = qbc(crossing)
    near = max(qbc(crossing - 0.05), qbc(crossing + 0.05))
    far = min(qbc(crossing - 0.3), qbc(crossing + 0.3))
    assert at < far
    assert near < far


def test_sweep_grid_validation():
    with pytest.raises(ValueError, match="empty"):
        toy_sweep(CycleSpec(0.0, 0.0, **COLD_BATHS), [])
    with pytest.raises(ValueError, match="ascending"):
        toy_sweep(CycleSpec(0.0, 0.0, **COLD_BATHS), [1.0, 0.0])
