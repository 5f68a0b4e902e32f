"""
Right-hand side of the normalized abcd system in the form

    eta_t = a u_x - (1+a)(1-d_x^2)^{-1} u_x - (1-d_x^2)^{-1} (u eta)_x
    u_t   = c eta_x - (1+c)(1-d_x^2)^{-1} eta_x - (1-d_x^2)^{-1} (u^2/2)_x

evaluated with Fourier multipliers.
"""

from spectral.operators import dealiased_product
from simulators.state import FieldPair


def linear_symbol(grid, coefficient):
    """ik (coefficient - (1 + coefficient)/(1 + k^2)) = -ik (1 - coefficient k^2)/(1 + k^2)"""
    return grid.ik * (coefficient - (1.0 + coefficient) * grid.helmholtz_symbol)


def rhs(state: FieldPair, parameters, nonlinear=True, dealias=False) -> FieldPair:
    """
    Time derivative of (u, eta).
    Args:
        state: current FieldPair
        parameters: NormalizedParameters
        nonlinear: False drops the quadratic terms (linearized flow)
        dealias: apply the 2/3 rule to the quadratic products
    """
    grid = state.grid
    u_hat = grid.forward(state.u)
    eta_hat = grid.forward(state.eta)

    eta_t_hat = linear_symbol(grid, parameters.a) * u_hat
    u_t_hat = linear_symbol(grid, parameters.c) * eta_hat

    if nonlinear:
        if dealias:
            u_eta = dealiased_product(state.u, state.eta, grid)
            u_sq = dealiased_product(state.u, state.u, grid)
        else:
            u_eta = state.u * state.eta
            u_sq = state.u * state.u
        smoothing = grid.ik * grid.helmholtz_symbol
        eta_t_hat = eta_t_hat - smoothing * grid.forward(u_eta)
        u_t_hat = u_t_hat - 0.5 * smoothing * grid.forward(u_sq)

    return FieldPair(u=grid.backward(u_t_hat), eta=grid.backward(eta_t_hat), grid=grid)
