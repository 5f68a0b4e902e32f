"""
Tests for the initial data generators and the FieldPair state
"""

import numpy as np
import pytest

from parameter_space.admissibility import NormalizedParameters
from simulators.config import ConfigurationError
from simulators.initial_data import (
    boosted_solitary_data,
    build_initial_data,
    gaussian_data,
    random_smooth_state,
    soliton_profile,
)
from simulators.state import FieldPair
from spectral.grid import Grid, GridMismatchError
from spectral.operators import derivative

UNIT = NormalizedParameters(a=-1.0, c=-1.0)


def test_soliton_profile_solves_the_ode():
    grid = Grid(512, 50.0)
    Q = soliton_profile(grid.nodes)
    residual = derivative(Q, grid, order=2) - Q + Q**2
    assert np.max(np.abs(residual)) < 1e-8
    assert Q[grid.N // 2] == 1.5


def test_solitary_wave_needs_equal_coefficients():
    grid = Grid(64, 20.0)
    with pytest.raises(ConfigurationError):
        build_initial_data({"kind": "solitary_wave", "center": 0.0}, grid, NormalizedParameters(a=-1.0, c=-2.0))


def test_gaussian_rejects_bad_width():
    with pytest.raises(ConfigurationError):
        gaussian_data(Grid(64, 20.0), 0.1, 0.1, width=0.0)


def test_boosted_pulse_has_u_equal_eta():
    grid = Grid(256, 50.0)
    state = boosted_solitary_data(grid, amplitude=0.05, width=5.0, center=-20.0)
    assert np.array_equal(state.u, state.eta)
    assert grid.nodes[int(np.argmax(state.eta))] == pytest.approx(-20.0, abs=grid.dx)
    assert state.sup_norm() == pytest.approx(0.1, rel=1e-2)


def test_random_state_is_seeded_and_localized():
    grid = Grid(1024, 100.0)
    first = random_smooth_state(grid, np.random.default_rng(7))
    second = random_smooth_state(grid, np.random.default_rng(7))
    assert first.distance(second) == 0.0
    assert first.outer_amplitude() < 1e-10
    assert first.sup_norm() > 0.0


def test_build_initial_data_kinds():
    grid = Grid(128, 30.0)
    zero = build_initial_data({"kind": "zero"}, grid, UNIT)
    assert zero.sup_norm() == 0.0
    bump = build_initial_data(
        {"kind": "gaussian", "amp_u": 0.2, "amp_eta": 0.1, "width": 3.0, "center": 0.0}, grid, UNIT
    )
    assert float(np.max(bump.u)) == pytest.approx(0.2)
    with pytest.raises(NotImplementedError):
        build_initial_data({"kind": "shock"}, grid, UNIT)


def test_field_pair_is_a_snapshot():
    grid = Grid(16, 1.0)
    u = np.ones(16)
    state = FieldPair(u=u, eta=np.zeros(16), grid=grid)
    u[0] = 5.0
    assert state.u[0] == 1.0
    with pytest.raises(ValueError):
        state.u[1] = 2.0


def test_field_pair_checks_the_grid():
    with pytest.raises(GridMismatchError):
        FieldPair(u=np.zeros(8), eta=np.zeros(16), grid=Grid(16, 1.0))


def test_reflection_and_norms():
    grid = Grid(64, 10.0)
    x = grid.nodes
    state = FieldPair(u=x * np.exp(-(x**2)), eta=np.exp(-(x**2)), grid=grid)
    mirrored = state.reflected()
    assert np.allclose(mirrored.u[1:], -state.u[1:])
    assert np.allclose(mirrored.eta, state.eta)
    assert state.axpy(-1.0, state).sup_norm() == 0.0
    assert not FieldPair(u=np.full(64, np.nan), eta=np.zeros(64), grid=grid).is_finite()
