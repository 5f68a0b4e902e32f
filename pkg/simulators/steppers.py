"""Time steppers and their linear stability limits"""

import math

import numpy as np

from parameter_space.dispersion_relation import dispersion_omega
from simulators.config import UnknownComponentError
from simulators.equations import rhs

# RK4 stability interval on the imaginary axis
RK4_IMAGINARY_LIMIT = 2.0 * math.sqrt(2.0)


def rk4_step(state, dt, parameters, nonlinear=True, dealias=False):
    """One classical fourth-order Runge-Kutta step."""
    k1 = rhs(state, parameters, nonlinear=nonlinear, dealias=dealias)
    k2 = rhs(state.axpy(0.5 * dt, k1), parameters, nonlinear=nonlinear, dealias=dealias)
    k3 = rhs(state.axpy(0.5 * dt, k2), parameters, nonlinear=nonlinear, dealias=dealias)
    k4 = rhs(state.axpy(dt, k3), parameters, nonlinear=nonlinear, dealias=dealias)
    return state.axpy(dt / 6.0, k1).axpy(dt / 3.0, k2).axpy(dt / 3.0, k3).axpy(dt / 6.0, k4)


STEPPER_DICT = {
    "rk4": rk4_step,
}

STABILITY_LIMIT_DICT = {
    "rk4": RK4_IMAGINARY_LIMIT,
}


def build_stepper(stepper_name):
    if stepper_name not in STEPPER_DICT:
        raise UnknownComponentError(f"stepper {stepper_name} not implemented.")
    return STEPPER_DICT[stepper_name]


def max_linear_frequency(grid, parameters):
    """Largest |omega(k)| over the modes the derivative keeps (Nyquist excluded)."""
    return float(np.max(dispersion_omega(grid.rwavenumbers[:-1], parameters)))


def stable_dt_limit(grid, parameters, stepper_name="rk4"):
    """Largest dt for which the linearized flow is stable."""
    if stepper_name not in STABILITY_LIMIT_DICT:
        raise UnknownComponentError(f"stepper {stepper_name} not implemented.")
    return STABILITY_LIMIT_DICT[stepper_name] / max_linear_frequency(grid, parameters)


def default_dt(grid, parameters):
    """0.25 dx / max(1, sqrt(ac))"""
    return 0.25 * grid.dx / max(1.0, math.sqrt(parameters.a * parameters.c))
