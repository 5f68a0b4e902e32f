"""
Tests for diagnostics/conserved.py
"""

import math

import numpy as np
import pytest

from diagnostics.conserved import energy, h1_norm, momentum, quadratic_energy
from parameter_space.admissibility import NormalizedParameters
from simulators.initial_data import gaussian_data, random_smooth_state
from simulators.state import FieldPair
from spectral.grid import Grid
from spectral.quadrature import weighted_integral

UNIT = NormalizedParameters(a=-1.0, c=-1.0)


@pytest.fixture
def grid():
    return Grid(512, 40.0)


def test_gaussian_energy_closed_form(grid):
    """
    u = A exp(-x^2/w^2), eta = 0:
    E = 1/2 A^2 sqrt(pi/2) (w + 1/w) for a = -1.
    """
    A, w = 0.5, 3.0
    state = gaussian_data(grid, amp_u=A, amp_eta=0.0, width=w)
    expected = 0.5 * A**2 * math.sqrt(math.pi / 2.0) * (w + 1.0 / w)
    assert energy(state, UNIT) == pytest.approx(expected, rel=1e-12)


def test_momentum_and_norm_of_diagonal_data(grid):
    A, w = 0.2, 2.0
    state = gaussian_data(grid, amp_u=A, amp_eta=A, width=w)
    P = momentum(state)
    assert P == pytest.approx(A**2 * math.sqrt(math.pi / 2.0) * (w + 1.0 / w), rel=1e-12)
    assert h1_norm(state) ** 2 == pytest.approx(2.0 * P, rel=1e-12)
    assert momentum(FieldPair(u=state.u, eta=np.zeros(grid.N), grid=grid)) == 0.0


def test_cubic_part_of_energy(grid, rng):
    state = random_smooth_state(grid, rng, amplitude=0.2)
    cubic = 0.5 * weighted_integral(grid, None, state.u, state.u, state.eta)
    assert energy(state, UNIT) - quadratic_energy(state, UNIT) == pytest.approx(cubic, rel=1e-9, abs=1e-15)
    assert quadratic_energy(state, UNIT) > 0.0


def test_zero_state(grid):
    zero = FieldPair.zeros(grid)
    assert energy(zero, UNIT) == 0.0
    assert momentum(zero) == 0.0
    assert h1_norm(zero) == 0.0
