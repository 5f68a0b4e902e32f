"""
Virial functionals I, J, K, the modified virial H = I + alpha J + beta K,
and the decomposition dH/dt = Q + SQ + NQ.

Q, SQ and NQ are evaluated term by term in the physical variables;
quadratic_Q_canonical evaluates the same Q in canonical variables with
the coefficients from parameter_space.virial_coefficients, so the two
representations can be compared on any state.
"""

from dataclasses import dataclass, field

import numpy as np

from diagnostics.canonical import canonical_fields
from parameter_space.virial_coefficients import virial_coefficients
from spectral.quadrature import weighted_integral


@dataclass(frozen=True)
class VirialValues:
    I: float
    J: float
    K: float
    H: float


@dataclass(frozen=True)
class VirialRates:
    Q: float
    SQ: float
    NQ: float
    terms: dict = field(default_factory=dict)

    @property
    def total(self):
        return self.Q + self.SQ + self.NQ


@dataclass(frozen=True)
class SQRewrite:
    eta_lhs: float
    eta_rhs: float
    u_lhs: float
    u_rhs: float
    eta_bound: float
    u_bound: float


def virials(state, weights, ab, fields=None) -> VirialValues:
    """
    I = int phi (u eta + u_x eta_x), J = int phi' eta u_x, K = int phi' eta_x u.
    """
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    grid = state.grid
    I = weighted_integral(grid, weights.w, fields.u * fields.eta + fields.u_x * fields.eta_x)
    J = weighted_integral(grid, weights.dw, fields.eta, fields.u_x)
    K = weighted_integral(grid, weights.dw, fields.eta_x, fields.u)
    return VirialValues(I=I, J=J, K=K, H=I + ab.alpha * J + ab.beta * K)


def dH_decomposition(state, weights, parameters, ab, fields=None) -> VirialRates:
    """Q (six terms), SQ (four terms) and NQ (five terms) of dH/dt."""
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    grid = state.grid
    a, c = parameters.a, parameters.c
    alpha, beta = ab.alpha, ab.beta
    s = beta - alpha
    d1, d2, d3 = weights.dw, weights.d2w, weights.d3w
    u, u_x, eta, eta_x = fields.u, fields.u_x, fields.eta, fields.eta_x
    f, f_x, g, g_x = fields.f, fields.f_x, fields.g, fields.g_x
    P, P_x, R, R_x = fields.P, fields.P_x, fields.R, fields.R_x

    q_terms = {
        "Q.eta2": ((1.0 + c) * (-s - 1.0) + 0.5) * weighted_integral(grid, d1, eta, eta),
        "Q.eta_x2": c * (s - 0.5) * weighted_integral(grid, d1, eta_x, eta_x),
        "Q.u2": ((1.0 + a) * (s - 1.0) + 0.5) * weighted_integral(grid, d1, u, u),
        "Q.u_x2": a * (-s - 0.5) * weighted_integral(grid, d1, u_x, u_x),
        "Q.eta_g": (1.0 + c) * (s + 1.0) * weighted_integral(grid, d1, eta, g),
        "Q.u_f": (1.0 + a) * (-s + 1.0) * weighted_integral(grid, d1, u, f),
    }
    sq_terms = {
        "SQ.eta_g_x": beta * (1.0 + c) * weighted_integral(grid, d2, eta, g_x),
        "SQ.u_f_x": alpha * (1.0 + a) * weighted_integral(grid, d2, u, f_x),
        "SQ.eta2": 0.5 * alpha * c * weighted_integral(grid, d3, eta, eta),
        "SQ.u2": 0.5 * beta * a * weighted_integral(grid, d3, u, u),
    }
    nq_terms = {
        "NQ.u2_eta": 0.5 * (s - 1.0) * weighted_integral(grid, d1, u, u, eta),
        "NQ.eta_R": 0.5 * (s + 1.0) * weighted_integral(grid, d1, eta, R),
        "NQ.u_P": (-s + 1.0) * weighted_integral(grid, d1, u, P),
        "NQ.eta_R_x": 0.5 * beta * weighted_integral(grid, d2, eta, R_x),
        "NQ.u_P_x": alpha * weighted_integral(grid, d2, u, P_x),
    }
    terms = {**q_terms, **sq_terms, **nq_terms}
    return VirialRates(
        Q=float(sum(q_terms.values())),
        SQ=float(sum(sq_terms.values())),
        NQ=float(sum(nq_terms.values())),
        terms=terms,
    )


def quadratic_Q_canonical(state, weights, parameters, ab, coefficients=None, fields=None):
    """
    Q = int phi'(A1 f^2 + A2 f_x^2 + A3 f_xx^2 + A4 f_xxx^2)
      + int phi'(B1 g^2 + B2 g_x^2 + B3 g_xx^2 + B4 g_xxx^2)
      + int phi'''(D11 f^2 + D12 f_x^2 + D21 g^2 + D22 g_x^2)
    `coefficients` overrides the computed VirialCoefficients.
    """
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    k = virial_coefficients(parameters, ab) if coefficients is None else coefficients
    grid = state.grid
    f, f_x, f_xx, f_xxx = fields.f, fields.f_x, fields.f_xx, fields.f_xxx
    g, g_x, g_xx, g_xxx = fields.g, fields.g_x, fields.g_xx, fields.g_xxx
    main = (
        k.A1 * f**2 + k.A2 * f_x**2 + k.A3 * f_xx**2 + k.A4 * f_xxx**2
        + k.B1 * g**2 + k.B2 * g_x**2 + k.B3 * g_xx**2 + k.B4 * g_xxx**2
    )
    lower = k.D11 * f**2 + k.D12 * f_x**2 + k.D21 * g**2 + k.D22 * g_x**2
    return weighted_integral(grid, weights.dw, main) + weighted_integral(grid, weights.d3w, lower)


def quadratic_Q_without_lower_order(state, weights, parameters, ab, fields=None):
    """The phi' part of the canonical Q alone (the D terms dropped)."""
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    k = virial_coefficients(parameters, ab)
    main = (
        k.A1 * fields.f**2 + k.A2 * fields.f_x**2 + k.A3 * fields.f_xx**2 + k.A4 * fields.f_xxx**2
        + k.B1 * fields.g**2 + k.B2 * fields.g_x**2 + k.B3 * fields.g_xx**2 + k.B4 * fields.g_xxx**2
    )
    return weighted_integral(state.grid, weights.dw, main)


def sq_canonical_rewrite(state, weights, parameters, ab, fields=None) -> SQRewrite:
    """
    beta(1+c) int phi'' eta g_x  = -1/2 beta(1+c) int phi'''(g^2 - g_x^2)
    alpha(1+a) int phi'' u f_x   = -1/2 alpha(1+a) int phi'''(f^2 - f_x^2)
    The bounds use |phi'''| <= (4/lambda^2) phi'.
    """
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    grid = state.grid
    a, c = parameters.a, parameters.c
    eta_coefficient = ab.beta * (1.0 + c)
    u_coefficient = ab.alpha * (1.0 + a)
    third_order = 4.0 / weights.lambda_**2
    return SQRewrite(
        eta_lhs=eta_coefficient * weighted_integral(grid, weights.d2w, fields.eta, fields.g_x),
        eta_rhs=-0.5 * eta_coefficient * weighted_integral(grid, weights.d3w, fields.g**2 - fields.g_x**2),
        u_lhs=u_coefficient * weighted_integral(grid, weights.d2w, fields.u, fields.f_x),
        u_rhs=-0.5 * u_coefficient * weighted_integral(grid, weights.d3w, fields.f**2 - fields.f_x**2),
        eta_bound=0.5 * abs(eta_coefficient) * third_order
        * weighted_integral(grid, weights.dw, fields.g**2 + fields.g_x**2),
        u_bound=0.5 * abs(u_coefficient) * third_order
        * weighted_integral(grid, weights.dw, fields.f**2 + fields.f_x**2),
    )


def time_weight_corrections(state, lambda_t, rate, ab, fields=None):
    """
    Extra terms of dH/dt when phi = tanh(x/lambda(t)), with rate = lambda'/lambda:
        -rate int (x/lambda) sech^2(x/lambda) (u eta + u_x eta_x)
        -alpha rate int (1 - (2x/lambda) tanh(x/lambda)) lambda^{-1} sech^2(x/lambda) eta u_x
        -beta  rate int (same factor) eta_x u
    Returns (total, dict of the three terms).
    """
    fields = canonical_fields(state) if fields is None else fields
    grid = state.grid
    y = grid.nodes / lambda_t
    T = np.tanh(y)
    S = 1.0 - T**2
    d_phi = -rate * y * S
    d_dphi = -rate * (1.0 - 2.0 * y * T) * S / lambda_t
    terms = {
        "I": weighted_integral(grid, d_phi, fields.u * fields.eta + fields.u_x * fields.eta_x),
        "J": ab.alpha * weighted_integral(grid, d_dphi, fields.eta, fields.u_x),
        "K": ab.beta * weighted_integral(grid, d_dphi, fields.eta_x, fields.u),
    }
    return float(sum(terms.values())), terms


def canonical_weighted_norm(state, weights, fields=None):
    """int phi'(f^2 + f_x^2 + f_xx^2 + f_xxx^2 + g^2 + g_x^2 + g_xx^2 + g_xxx^2)"""
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    density = (
        fields.f**2 + fields.f_x**2 + fields.f_xx**2 + fields.f_xxx**2
        + fields.g**2 + fields.g_x**2 + fields.g_xx**2 + fields.g_xxx**2
    )
    return weighted_integral(state.grid, weights.dw, density)


def positivity_margin(state, weights, parameters, ab, fields=None):
    """1/2 min(A, B) times the canonical weighted norm."""
    coefficients = virial_coefficients(parameters, ab)
    return 0.5 * coefficients.minimum() * canonical_weighted_norm(state, weights, fields=fields)
