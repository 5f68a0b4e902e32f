"""
Tests for spectral/weights.py
"""

import numpy as np
import pytest

from spectral.grid import Grid, GridMismatchError
from spectral.operators import derivative
from spectral.weights import sech_squared, weight_bound_ratios, weight_family


@pytest.fixture
def grid():
    return Grid(1024, 100.0)


@pytest.mark.parametrize("kind", ["sech2", "sech4"])
def test_closed_form_derivatives_match_spectral(grid, kind):
    """
    The localized families are periodic to roundoff on this grid,
    so spectral differentiation checks every closed form.
    """
    family = weight_family(kind, 5.0, grid)
    assert np.allclose(derivative(family.w, grid), family.dw, atol=1e-9)
    assert np.allclose(derivative(family.w, grid, order=2), family.d2w, atol=1e-9)
    assert np.allclose(derivative(family.w, grid, order=3), family.d3w, atol=1e-9)


def test_tanh_derivative_chain(grid):
    """
    tanh itself jumps at the seam; its derivatives do not.
    """
    family = weight_family("tanh", 5.0, grid)
    assert np.allclose(derivative(family.dw, grid), family.d2w, atol=1e-9)
    assert np.allclose(derivative(family.d2w, grid), family.d3w, atol=1e-9)


def test_default_amplitudes(grid):
    assert weight_family("tanh", 4.0, grid).amplitude == 4.0
    assert weight_family("sech2", 4.0, grid).amplitude == 1.0
    assert weight_family("sech4", 4.0, grid).amplitude == 4.0
    assert weight_family("tanh", 4.0, grid, amplitude=1.0).amplitude == 1.0


def test_family_remembers_its_grid(grid):
    family = weight_family("sech2", 7.0, grid)
    assert family.grid == grid
    assert family.reflected().grid == grid
    grid.check_weights(family)
    with pytest.raises(GridMismatchError):
        Grid(1024, 50.0).check_weights(family)


def test_reflected_tanh_is_odd(grid):
    family = weight_family("tanh", 7.0, grid)
    mirrored = family.reflected()
    # node 0 sits on the seam at -L
    assert np.allclose(mirrored.w[1:], -family.w[1:], atol=1e-13)
    assert np.allclose(mirrored.dw[1:], -family.dw[1:], atol=1e-13)
    assert np.allclose(mirrored.d2w[1:], -family.d2w[1:], atol=1e-13)


def test_reflected_sech2_is_even(grid):
    family = weight_family("sech2", 7.0, grid)
    mirrored = family.reflected()
    assert np.allclose(mirrored.w, family.w, atol=1e-13)
    assert np.allclose(mirrored.dw, family.dw, atol=1e-13)


@pytest.mark.parametrize("lambda_", [2.0, 5.0, 20.0, 50.0])
def test_tanh_bound_ratios(grid, lambda_):
    ratios = weight_bound_ratios(weight_family("tanh", lambda_, grid), grid)
    assert ratios["dw"] == pytest.approx(1.0)
    assert ratios["d2w"] <= 2.0 + 1e-12
    assert ratios["d3w"] <= 4.0 + 1e-12
    # |6 tanh^2 - 2| is 2 at the origin and grows towards the edges
    assert ratios["d3w"] > 2.0


def test_sech4_bound_ratios(grid):
    ratios = weight_bound_ratios(weight_family("sech4", 10.0, grid), grid)
    assert ratios["dw"] < 4.0
    assert ratios["d2w"] < 20.0


def test_invalid_weights(grid):
    with pytest.raises(ValueError):
        weight_family("gaussian", 1.0, grid)
    with pytest.raises(ValueError):
        weight_family("tanh", 0.0, grid)


def test_sech_squared_does_not_overflow():
    with np.errstate(over="raise"):
        values = sech_squared(np.array([-1000.0, 0.0, 1000.0]))
    assert values[1] == 1.0
    assert values[0] == 0.0 and values[2] == 0.0
