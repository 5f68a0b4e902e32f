"""Energy, momentum and the global H1 x H1 norm"""

import math

from spectral.operators import derivative
from spectral.quadrature import weighted_integral


def energy(state, parameters):
    """E = 1/2 int(-a u_x^2 - c eta_x^2 + u^2 + eta^2 + u^2 eta)"""
    grid = state.grid
    u, eta = state.u, state.eta
    u_x = derivative(u, grid)
    eta_x = derivative(eta, grid)
    density = -parameters.a * u_x**2 - parameters.c * eta_x**2 + u**2 + eta**2 + u**2 * eta
    return 0.5 * weighted_integral(grid, None, density)


def quadratic_energy(state, parameters):
    """The quadratic part of E, nonnegative for a, c < 0."""
    grid = state.grid
    u_x = derivative(state.u, grid)
    eta_x = derivative(state.eta, grid)
    density = -parameters.a * u_x**2 - parameters.c * eta_x**2 + state.u**2 + state.eta**2
    return 0.5 * weighted_integral(grid, None, density)


def momentum(state):
    """P = int(u eta + u_x eta_x)"""
    grid = state.grid
    u_x = derivative(state.u, grid)
    eta_x = derivative(state.eta, grid)
    return weighted_integral(grid, None, state.u * state.eta + u_x * eta_x)


def h1_norm(state):
    """||(u, eta)||_{H1 x H1}"""
    grid = state.grid
    u_x = derivative(state.u, grid)
    eta_x = derivative(state.eta, grid)
    density = state.u**2 + u_x**2 + state.eta**2 + eta_x**2
    return math.sqrt(weighted_integral(grid, None, density))
