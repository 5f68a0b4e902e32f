"""
Localized energy E_loc = 1/2 int psi(-a u_x^2 - c eta_x^2 + u^2 + eta^2 + u^2 eta)
with psi = lambda sech^4(x/lambda), and its time derivative written in
canonical variables: an eight-term linear part plus four small
nonlinear groups.

With F = a f_xx + f + P and G = c g_xx + g + R/2 the exact variation is
    int psi' F G - int psi' F_x G_x + a int psi' u_t u_x + c int psi' eta_t eta_x,
which local_energy_rate_direct evaluates as a cross-check.
"""

from dataclasses import dataclass, field

from diagnostics.canonical import canonical_fields
from spectral.quadrature import weighted_integral


@dataclass(frozen=True)
class LocalEnergyRate:
    linear: float
    nonlinear: float
    terms: dict = field(default_factory=dict)

    @property
    def total(self):
        return self.linear + self.nonlinear


def local_energy(state, weights, parameters, fields=None):
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    u, u_x, eta, eta_x = fields.u, fields.u_x, fields.eta, fields.eta_x
    density = (
        -parameters.a * u_x**2 - parameters.c * eta_x**2 + u**2 + eta**2 + u**2 * eta
    )
    return 0.5 * weighted_integral(state.grid, weights.w, density)


def local_energy_rate(state, weights, parameters, fields=None) -> LocalEnergyRate:
    """Term-by-term dE_loc/dt."""
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    grid = state.grid
    a, c = parameters.a, parameters.c
    ac = a * c
    d1, d2 = weights.dw, weights.d2w
    fl = fields

    linear = {
        "L.fg": weighted_integral(grid, d1, fl.f, fl.g),
        "L.f_x_g_x": (-1.0 - 2.0 * (a + c)) * weighted_integral(grid, d1, fl.f_x, fl.g_x),
        "L.f_xx_g_xx": 3.0 * ac * weighted_integral(grid, d1, fl.f_xx, fl.g_xx),
        "L.f_xxx_g_xxx": ac * weighted_integral(grid, d1, fl.f_xxx, fl.g_xxx),
        "L.f_x_g": -a * weighted_integral(grid, d2, fl.f_x, fl.g),
        "L.f_g_x": -c * weighted_integral(grid, d2, fl.f, fl.g_x),
        "L.f_xx_g_x": ac * weighted_integral(grid, d2, fl.f_xx, fl.g_x),
        "L.f_x_g_xx": ac * weighted_integral(grid, d2, fl.f_x, fl.g_xx),
    }
    # (psi' u_x)_x = psi'' u_x + psi' u_xx
    snl1 = 0.5 * a * weighted_integral(grid, None, (d2 * fl.u_x + d1 * fl.u_xx) * fl.R) + c * weighted_integral(
        grid, None, (d2 * fl.eta_x + d1 * fl.eta_xx) * fl.P
    )
    snl2 = (
        0.5 * weighted_integral(grid, d1, fl.f, fl.R)
        + 0.5 * a * weighted_integral(grid, d1, fl.f_xx, fl.R)
        + weighted_integral(grid, d1, fl.g, fl.P)
        + c * weighted_integral(grid, d1, fl.g_xx, fl.P)
        - 0.5 * weighted_integral(grid, d1, fl.f_x, fl.R_x)
        - weighted_integral(grid, d1, fl.g_x, fl.P_x)
    )
    snl3 = -0.5 * a * weighted_integral(grid, d1, fl.f_xxx, fl.R_x) - c * weighted_integral(
        grid, d1, fl.g_xxx, fl.P_x
    )
    snl4 = 0.5 * weighted_integral(grid, d1, fl.P, fl.R) - 0.5 * weighted_integral(grid, d1, fl.P_x, fl.R_x)
    nonlinear = {"SNL1": snl1, "SNL2": snl2, "SNL3": snl3, "SNL4": snl4}
    return LocalEnergyRate(
        linear=float(sum(linear.values())),
        nonlinear=float(sum(nonlinear.values())),
        terms={**linear, **nonlinear},
    )


def dEloc_rhs(state, weights, parameters, fields=None):
    return local_energy_rate(state, weights, parameters, fields=fields).total


def local_energy_rate_direct(state, weights, parameters, fields=None):
    state.grid.check_weights(weights)
    fields = canonical_fields(state) if fields is None else fields
    grid = state.grid
    a, c = parameters.a, parameters.c
    F = a * fields.f_xx + fields.f + fields.P
    F_x = a * fields.f_xxx + fields.f_x + fields.P_x
    G = c * fields.g_xx + fields.g + 0.5 * fields.R
    G_x = c * fields.g_xxx + fields.g_x + 0.5 * fields.R_x
    u_t, eta_t = -G_x, -F_x
    return (
        weighted_integral(grid, weights.dw, F, G)
        - weighted_integral(grid, weights.dw, F_x, G_x)
        + a * weighted_integral(grid, weights.dw, u_t, fields.u_x)
        + c * weighted_integral(grid, weights.dw, eta_t, fields.eta_x)
    )
