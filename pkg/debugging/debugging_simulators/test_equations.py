"""
Tests for the right-hand side, the RK4 stepper and its stability limit
"""

import math

import numpy as np
import pytest

from parameter_space.admissibility import NormalizedParameters
from simulators.config import UnknownComponentError
from simulators.equations import rhs
from simulators.initial_data import gaussian_data, solitary_wave
from simulators.state import FieldPair
from simulators.steppers import (
    build_stepper,
    default_dt,
    max_linear_frequency,
    rk4_step,
    stable_dt_limit,
)
from spectral.grid import Grid

UNIT = NormalizedParameters(a=-1.0, c=-1.0)


def test_zero_is_an_equilibrium():
    grid = Grid(64, 10.0)
    out = rhs(FieldPair.zeros(grid), UNIT)
    assert out.sup_norm() == 0.0


def test_linear_symbol_on_one_mode():
    """
    u = cos(kx), eta = 0 gives eta_t = k (1 - a k^2)/(1 + k^2) sin(kx), u_t = 0.
    """
    grid = Grid(128, 20.0)
    parameters = NormalizedParameters(a=-0.5, c=-2.0)
    k = math.pi * 5 / grid.L
    state = FieldPair(u=np.cos(k * grid.nodes), eta=np.zeros(grid.N), grid=grid)
    out = rhs(state, parameters, nonlinear=False)
    expected = k * (1.0 - parameters.a * k**2) / (1.0 + k**2) * np.sin(k * grid.nodes)
    assert np.allclose(out.eta, expected, atol=1e-13)
    assert np.allclose(out.u, 0.0, atol=1e-13)


@pytest.mark.parametrize("a", [-1.0, -2.0, -0.5])
def test_solitary_wave_is_stationary(a):
    grid = Grid(2048, 100.0)
    parameters = NormalizedParameters(a=a, c=a)
    assert rhs(solitary_wave(grid, parameters), parameters).sup_norm() < 1e-8


def test_dealiasing_leaves_low_modes_alone():
    grid = Grid(64, math.pi)
    state = FieldPair(u=0.1 * np.cos(3.0 * grid.nodes), eta=0.1 * np.sin(4.0 * grid.nodes), grid=grid)
    plain = rhs(state, UNIT)
    dealiased = rhs(state, UNIT, dealias=True)
    assert plain.distance(dealiased) < 1e-14


def test_nonlinear_terms_are_quadratic():
    grid = Grid(256, 30.0)
    state = gaussian_data(grid, amp_u=0.3, amp_eta=-0.2, width=3.0)
    linear = rhs(state, UNIT, nonlinear=False)
    nonlinear = rhs(state, UNIT).axpy(-1.0, linear)
    doubled = rhs(state.axpy(1.0, state), UNIT).axpy(-2.0, linear)
    assert np.allclose(doubled.u, 4.0 * nonlinear.u, atol=1e-14)
    assert np.allclose(doubled.eta, 4.0 * nonlinear.eta, atol=1e-14)


def test_rk4_is_fourth_order():
    """
    For a = c = -1 the linear flow is the wave equation:
    u = cos(kx) cos(kt), eta = sin(kx) sin(kt).
    """
    grid = Grid(64, 10.0)
    k = math.pi * 3 / grid.L
    x = grid.nodes
    initial = FieldPair(u=np.cos(k * x), eta=np.zeros(grid.N), grid=grid)
    exact = FieldPair(u=np.cos(k * x) * math.cos(2.0 * k), eta=np.sin(k * x) * math.sin(2.0 * k), grid=grid)
    errors = []
    for dt in (0.1, 0.05):
        state = initial
        for _ in range(int(round(2.0 / dt))):
            state = rk4_step(state, dt, UNIT, nonlinear=False)
        errors.append(state.distance(exact))
    assert errors[1] < 1e-6
    assert errors[0] / errors[1] > 12.0


def test_stability_limit_for_unit_pair():
    grid = Grid(1024, 100.0)
    # omega(k) = |k|; the largest kept wavenumber is pi (N/2 - 1) / L
    assert max_linear_frequency(grid, UNIT) == pytest.approx(math.pi * 511 / 100.0)
    assert stable_dt_limit(grid, UNIT) == pytest.approx(2.0 * math.sqrt(2.0) / (math.pi * 5.11))
    assert default_dt(grid, UNIT) == 0.048828125


def test_default_dt_scales_with_ac():
    grid = Grid(256, 10.0)
    assert default_dt(grid, NormalizedParameters(a=-4.0, c=-1.0)) == pytest.approx(0.25 * grid.dx / 2.0)


def test_unknown_stepper():
    assert build_stepper("rk4") is rk4_step
    with pytest.raises(UnknownComponentError):
        build_stepper("euler")
    with pytest.raises(UnknownComponentError):
        stable_dt_limit(Grid(64, 10.0), UNIT, "euler")
