"""Local H1 norms, the light-cone scale lambda(t) and norm-equivalence ratios"""

import math

import numpy as np

from diagnostics.canonical import canonical_fields
from spectral.quadrature import weighted_integral


def local_h1(state, weights, fields=None):
    """int w (u^2 + u_x^2 + eta^2 + eta_x^2)"""
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    density = fields.u**2 + fields.u_x**2 + fields.eta**2 + fields.eta_x**2
    return weighted_integral(state.grid, weights.w, density)


def lambda_of_t(t, C0):
    """lambda(t) = C0 t / log^2 t, defined for t >= 2."""
    if t < 2.0:
        raise ValueError(f"lambda(t) is only defined for t >= 2, got t={t}")
    return C0 * t / math.log(t) ** 2


def lambda_log_derivative(t):
    """lambda'(t)/lambda(t) = (1/t)(1 - 2/log t)"""
    if t < 2.0:
        raise ValueError(f"lambda(t) is only defined for t >= 2, got t={t}")
    return (1.0 - 2.0 / math.log(t)) / t


def norm_equivalence_ratios(state, weights, fields=None):
    """
    For a positive weight w with mu = sup|w''|/w < 1:
        1/(2(1+mu)) <= int w(f^2 + f_x^2 + f_xx^2) / int w u^2 <= 1/(1-mu)
    and likewise for (g, eta). Returns the two ratios and the bounds.
    """
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    grid = state.grid
    positive = weights.w > 1e-300
    mu = float(np.max(np.abs(weights.d2w[positive]) / weights.w[positive]))
    ratios = {}
    for name, base, (h, h_x, h_xx) in (
        ("u", fields.u, (fields.f, fields.f_x, fields.f_xx)),
        ("eta", fields.eta, (fields.g, fields.g_x, fields.g_xx)),
    ):
        denominator = weighted_integral(grid, weights.w, base, base)
        numerator = weighted_integral(grid, weights.w, h**2 + h_x**2 + h_xx**2)
        ratios[name] = numerator / denominator if denominator > 0 else math.nan
    return {
        "ratio_u": ratios["u"],
        "ratio_eta": ratios["eta"],
        "mu": mu,
        "lower": 1.0 / (2.0 * (1.0 + mu)),
        "upper": 1.0 / (1.0 - mu) if mu < 1.0 else math.inf,
    }
