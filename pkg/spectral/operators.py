"""
Fourier multipliers: derivatives, the Helmholtz inverse (1 - d_x^2)^{-1}
that maps u to its canonical variable f, and 2/3-rule truncation.
"""

import numpy as np


def derivative(f, grid, order=1):
    """
    Spectral derivative (ik)^order of a real field.
    Odd orders drop the Nyquist mode.
    """
    if order not in (1, 2, 3, 4):
        raise ValueError(f"derivative order must be 1..4, got {order}")
    grid.check(f)
    multiplier = grid.ik**order
    return grid.backward(multiplier * grid.forward(f))


def derivatives(f, grid, max_order=3):
    """f and its derivatives up to max_order from a single forward transform."""
    grid.check(f)
    f_hat = grid.forward(f)
    out = [np.asarray(f, dtype=np.float64)]
    for order in range(1, max_order + 1):
        out.append(grid.backward(grid.ik**order * f_hat))
    return out


def helmholtz_inverse(u, grid):
    """Solve f - f_xx = u on the torus, i.e. multiply by 1/(1+k^2)."""
    grid.check(u)
    return grid.backward(grid.helmholtz_symbol * grid.forward(u))


def helmholtz(f, grid):
    """Apply (1 - d_x^2)."""
    grid.check(f)
    return grid.backward((1.0 + grid.rwavenumbers**2) * grid.forward(f))


def dealias(f, grid):
    """Zero the upper third of the spectrum."""
    grid.check(f)
    return grid.backward(grid.dealias_mask * grid.forward(f))


def dealiased_product(f, g, grid):
    """2/3-rule product: truncate both factors, multiply, truncate again."""
    return dealias(dealias(f, grid) * dealias(g, grid), grid)
