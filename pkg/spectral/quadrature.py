"""Rectangle-rule quadrature on the periodic grid."""

import numpy as np


def weighted_integral(grid, w, *fields):
    """
    (2L/N) * sum(w * prod(fields)).
    Spectrally accurate for resolved periodic integrands.
    Args:
        grid: Grid the samples live on
        w: weight samples, or None for w = 1
        fields: zero or more sampled fields
    """
    integrand = np.ones(grid.N) if w is None else np.asarray(w, dtype=np.float64)
    grid.check(integrand, *fields)
    for field in fields:
        integrand = integrand * field
    return float(grid.dx * np.sum(integrand))
