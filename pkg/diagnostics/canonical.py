"""
Canonical variables f = (1-d_x^2)^{-1} u, g = (1-d_x^2)^{-1} eta and the
smoothed nonlinearities P = (1-d_x^2)^{-1}(u eta), R = (1-d_x^2)^{-1}(u^2),
with the derivatives every diagnostic needs, computed once per state.
"""

from dataclasses import dataclass

import numpy as np

from spectral.operators import derivatives, helmholtz_inverse


@dataclass(frozen=True, eq=False)
class CanonicalFields:
    u: np.ndarray
    u_x: np.ndarray
    u_xx: np.ndarray
    eta: np.ndarray
    eta_x: np.ndarray
    eta_xx: np.ndarray
    f: np.ndarray
    f_x: np.ndarray
    f_xx: np.ndarray
    f_xxx: np.ndarray
    g: np.ndarray
    g_x: np.ndarray
    g_xx: np.ndarray
    g_xxx: np.ndarray
    P: np.ndarray
    P_x: np.ndarray
    R: np.ndarray
    R_x: np.ndarray

    def time_derivatives(self, parameters):
        """
        (u_t, eta_t) = (-G_x, -F_x) with F = a f_xx + f + P and
        G = c g_xx + g + R/2.
        """
        F_x = parameters.a * self.f_xxx + self.f_x + self.P_x
        G_x = parameters.c * self.g_xxx + self.g_x + 0.5 * self.R_x
        return -G_x, -F_x


def canonical_fields(state) -> CanonicalFields:
    grid = state.grid
    u, u_x, u_xx = derivatives(state.u, grid, max_order=2)
    eta, eta_x, eta_xx = derivatives(state.eta, grid, max_order=2)
    f, f_x, f_xx, f_xxx = derivatives(helmholtz_inverse(u, grid), grid, max_order=3)
    g, g_x, g_xx, g_xxx = derivatives(helmholtz_inverse(eta, grid), grid, max_order=3)
    P, P_x = derivatives(helmholtz_inverse(u * eta, grid), grid, max_order=1)
    R, R_x = derivatives(helmholtz_inverse(u * u, grid), grid, max_order=1)
    return CanonicalFields(
        u=u, u_x=u_x, u_xx=u_xx,
        eta=eta, eta_x=eta_x, eta_xx=eta_xx,
        f=f, f_x=f_x, f_xx=f_xx, f_xxx=f_xxx,
        g=g, g_x=g_x, g_xx=g_xx, g_xxx=g_xxx,
        P=P, P_x=P_x, R=R, R_x=R_x,
    )
