"""
Builds the individual components of the simulator,
and the simulator itself.
"""

import math

from parameter_space.bands import AlphaBeta, select_alpha_beta
from parameter_space.build_parameters import build_parameters
from parameter_space.exceptions import EmptyBandIntersectionError
from simulators.base_simulator import BaseSimulator
from simulators.config import ConfigurationError, SimulationConfig, UnknownComponentError
from simulators.initial_data import build_initial_data
from simulators.schedulers import build_weight_scheduler
from simulators.steppers import build_stepper, default_dt, stable_dt_limit
from spectral.grid import Grid

# runs longer than this default to 2/3-rule dealiasing
DEALIAS_HORIZON = 50.0


def build_grid(simulator_cfg):
    """
    Given the simulator config, build the periodic grid.
    """
    try:
        return Grid(N=simulator_cfg["N"], L=simulator_cfg["L"])
    except ValueError as exc:
        raise ConfigurationError(f"simulator.N / simulator.L: {exc}") from exc


def fit_dt_to_horizon(dt, T):
    """Largest step not above dt that divides T into a whole number of steps."""
    if not (dt > 0 and T > 0 and math.isfinite(dt) and math.isfinite(T)):
        return dt  # rejected by SimulationConfig.validate
    num_steps = max(1, math.ceil(T / dt - 1e-9))
    return T / num_steps


def build_alpha_beta(alpha_beta_cfg, parameters):
    """
    auto: midpoint of A2 n A3 n A4 (falls back to (0, 0) with a notice when
    the pair is not dispersion-like); manual: the configured values.
    """
    mode = alpha_beta_cfg["mode"]
    if mode == "manual":
        return AlphaBeta(alpha=float(alpha_beta_cfg["alpha"]), beta=float(alpha_beta_cfg["beta"]))
    if mode == "auto":
        try:
            return select_alpha_beta(parameters)
        except EmptyBandIntersectionError as exc:
            print(f"alpha_beta: {exc}; using alpha = beta = 0")
            return AlphaBeta(alpha=0.0, beta=0.0)
    raise ConfigurationError(f"simulator.alpha_beta.mode must be auto or manual, got {mode}")


def build_simulation_config(cfg) -> SimulationConfig:
    """
    Resolve the defaults left open in the config (dt, dealias, alpha_beta)
    and validate the result.
    """
    simulator_cfg = cfg["simulator"]
    parameters = build_parameters(cfg["parameters"])
    grid = build_grid(simulator_cfg)

    dt = simulator_cfg["dt"]
    if dt is None:
        dt = default_dt(grid, parameters)
    dt = fit_dt_to_horizon(float(dt), float(simulator_cfg["T"]))
    dealias = simulator_cfg["dealias"]
    if dealias is None:
        dealias = simulator_cfg["T"] > DEALIAS_HORIZON

    sim_cfg = SimulationConfig(
        parameters=parameters,
        N=grid.N,
        L=grid.L,
        dt=float(dt),
        T=float(simulator_cfg["T"]),
        t_start=float(simulator_cfg["t_start"]),
        diagnostic_interval=int(simulator_cfg["diagnostic_interval"]),
        log_interval=int(simulator_cfg["log_interval"]),
        weight_mode=cfg["weights"]["kind"],
        lambda_scale=float(cfg["weights"]["lambda_scale"]),
        C0=float(cfg["weights"]["C0"]),
        alpha_beta=build_alpha_beta(simulator_cfg["alpha_beta"], parameters),
        nonlinear=bool(simulator_cfg["nonlinear"]),
        dealias=bool(dealias),
        stepper=simulator_cfg["stepper"],
        blowup_factor=float(simulator_cfg["blowup_factor"]),
    )

    stability_limit = None
    if simulator_cfg["check_stability"]:
        stability_limit = stable_dt_limit(grid, parameters, sim_cfg.stepper)
    return sim_cfg.validate(stability_limit=stability_limit)


SIMULATOR_DICT = {
    "base_simulator": BaseSimulator,
}


def build_simulator(cfg, rng=None, record_callback=None):
    """
    Given a config, this function builds a simulator
    and all relevant components of it.
    """
    sim_cfg = build_simulation_config(cfg)
    grid = Grid(N=sim_cfg.N, L=sim_cfg.L)

    initial_state = build_initial_data(
        initial_data_cfg=cfg["initial_data"],
        grid=grid,
        parameters=sim_cfg.parameters,
        rng=rng,
    )

    stepper = build_stepper(sim_cfg.stepper)
    weight_scheduler = build_weight_scheduler(cfg["weights"])

    simulator_type = cfg["simulator"]["simulator_type"]
    if simulator_type not in SIMULATOR_DICT:
        raise UnknownComponentError(f"simulator {simulator_type} not implemented.")
    return SIMULATOR_DICT[simulator_type](
        sim_cfg=sim_cfg,
        initial_state=initial_state,
        stepper=stepper,
        weight_scheduler=weight_scheduler,
        cfg=cfg,
        record_callback=record_callback,
    )
