"""
Tests for building and running the simulator
"""

import numpy as np
import pytest

from diagnostics.reports import decay_report
from parameter_space.admissibility import NormalizedParameters
from parameter_space.bands import AlphaBeta
from simulators.base_simulator import BaseSimulator, SimulationInstabilityError
from simulators.build_simulators import (
    build_alpha_beta,
    build_simulation_config,
    build_simulator,
    fit_dt_to_horizon,
)
from simulators.config import ConfigurationError
from simulators.steppers import stable_dt_limit
from spectral.grid import Grid

ZERO_RUN = {
    "parameters": {"kind": "normalized", "a": -1.0, "c": -1.0},
    "initial_data": {"kind": "zero"},
    "simulator": {"N": 64, "L": 20.0, "T": 1.0, "dt": 0.125, "diagnostic_interval": 2},
}


def test_defaults_are_resolved(simulate_cfg):
    sim_cfg = build_simulation_config(simulate_cfg({"simulator": {"N": 1024, "L": 100.0, "T": 20.0}}))
    # 0.25 dx = 0.048828125 does not divide T = 20; 410 steps do
    assert sim_cfg.dt == pytest.approx(20.0 / 410.0)
    assert sim_cfg.dealias is False
    assert sim_cfg.alpha_beta == AlphaBeta(0.0, 0.0)
    assert sim_cfg.num_steps == 410


def test_long_runs_dealias(simulate_cfg):
    sim_cfg = build_simulation_config(simulate_cfg({"simulator": {"N": 256, "L": 50.0, "T": 60.0}}))
    assert sim_cfg.dealias is True
    sim_cfg = build_simulation_config(
        simulate_cfg({"simulator": {"N": 256, "L": 50.0, "T": 60.0, "dealias": False}})
    )
    assert sim_cfg.dealias is False


def test_unstable_dt_is_a_config_error(simulate_cfg):
    with pytest.raises(ConfigurationError, match="stability limit"):
        build_simulation_config(simulate_cfg({"simulator": {"dt": 1.0}}))
    sim_cfg = build_simulation_config(simulate_cfg({"simulator": {"dt": 1.0, "check_stability": False}}))
    assert sim_cfg.dt == 1.0


@pytest.mark.parametrize(
    "overrides",
    [
        {"simulator": {"N": 1000}},
        {"simulator": {"T": 0.0}},
        {"simulator": {"diagnostic_interval": 0}},
        {"weights": {"lambda_scale": -1.0}},
        {"weights": {"kind": "light_cone"}},
        {"weights": {"kind": "light_cone", "C0": 0.0}, "simulator": {"t_start": 2.0}},
        {"simulator": {"alpha_beta": {"mode": "random"}}},
    ],
)
def test_invalid_simulation_configs(simulate_cfg, overrides):
    with pytest.raises(ConfigurationError):
        build_simulation_config(simulate_cfg(overrides))


def test_light_cone_from_t_two(simulate_cfg):
    sim_cfg = build_simulation_config(
        simulate_cfg({"weights": {"kind": "light_cone"}, "simulator": {"t_start": 2.0}})
    )
    assert sim_cfg.weight_mode == "light_cone"


def test_alpha_beta_modes(capsys):
    n = NormalizedParameters(a=-1.0, c=-1.0)
    assert build_alpha_beta({"mode": "manual", "alpha": 0.1, "beta": 0.2}, n) == AlphaBeta(0.1, 0.2)
    assert build_alpha_beta({"mode": "auto", "alpha": 9.0, "beta": 9.0}, n) == AlphaBeta(0.0, 0.0)

    flat = NormalizedParameters(a=-0.1, c=-0.1)
    assert build_alpha_beta({"mode": "auto"}, flat) == AlphaBeta(0.0, 0.0)
    assert "using alpha = beta = 0" in capsys.readouterr().out


def test_unknown_simulator_type(simulate_cfg):
    with pytest.raises(NotImplementedError):
        build_simulator(simulate_cfg({"simulator": {"simulator_type": "implicit"}}))


def test_records_on_the_cadence(simulate_cfg):
    seen = []
    simulator = build_simulator(
        simulate_cfg(ZERO_RUN), record_callback=lambda record, state: seen.append((record.t, state))
    )
    assert isinstance(simulator, BaseSimulator)
    result = simulator.run()

    assert result.steps == 8
    assert [record.t for record in result.records] == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert [t for t, _ in seen] == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert result.t_final == 1.0
    assert result.final_state.sup_norm() == 0.0
    assert all(record.E == 0.0 and record.H == 0.0 for record in result.records)


def test_t_start_offsets_the_clock(simulate_cfg):
    overrides = {**ZERO_RUN, "simulator": {**ZERO_RUN["simulator"], "t_start": 3.0}}
    result = build_simulator(simulate_cfg(overrides)).run()
    assert result.records[0].t == 3.0
    assert result.t_final == 4.0


def test_dt_is_fitted_to_the_horizon(simulate_cfg):
    assert fit_dt_to_horizon(0.3, 1.0) == 0.25
    assert fit_dt_to_horizon(0.125, 1.0) == 0.125
    assert fit_dt_to_horizon(2.0, 1.0) == 1.0

    overrides = {**ZERO_RUN, "simulator": {**ZERO_RUN["simulator"], "dt": 0.3, "diagnostic_interval": 1}}
    result = build_simulator(simulate_cfg(overrides)).run()
    assert result.steps == 4
    assert result.t_final == 1.0
    assert [record.t for record in result.records] == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_instability_is_reported(simulate_cfg):
    grid = Grid(256, 50.0)
    limit = stable_dt_limit(grid, NormalizedParameters(a=-1.0, c=-1.0))
    simulator = build_simulator(
        simulate_cfg(
            {
                "parameters": {"kind": "normalized", "a": -1.0, "c": -1.0},
                "initial_data": {"kind": "gaussian", "amp_u": 0.01, "amp_eta": 0.01, "width": 5.0},
                "simulator": {
                    "N": 256,
                    "L": 50.0,
                    "dt": 10.0 * limit,
                    "T": 200.0 * limit,
                    "check_stability": False,
                    "diagnostic_interval": 1,
                },
            }
        )
    )
    with pytest.raises(SimulationInstabilityError) as info:
        simulator.run()
    assert info.value.step is not None and info.value.step < 20
    assert len(info.value.records) == info.value.step
    assert np.isfinite(info.value.records[0].E)


def test_same_seed_same_run(simulate_cfg):
    overrides = {
        "initial_data": {"kind": "random_smooth", "amp_u": 0.05, "width": 10.0},
        "simulator": {"N": 256, "L": 50.0, "T": 0.5},
    }
    first = build_simulator(simulate_cfg(overrides), rng=np.random.default_rng(1)).run()
    second = build_simulator(simulate_cfg(overrides), rng=np.random.default_rng(1)).run()
    assert first.final_state.distance(second.final_state) == 0.0
    assert [(r.E, r.H, r.Q) for r in first.records] == [(r.E, r.H, r.Q) for r in second.records]


def test_sech4_observable_decays_and_flux_stays_bounded(simulate_cfg):
    """
    a = c = -1 is the wave equation in disguise: with amp_u = amp_eta the
    bump travels right at unit speed and leaves the lambda = 10 window by
    t = 40. The linear part of dE_loc/dt is int psi'(u eta + u_x eta_x) with
    |psi'| <= 1.54 sech^2(x/lambda), so |dE_loc/dt| <= 0.77 localH1 up to
    small nonlinear terms.
    """
    result = build_simulator(
        simulate_cfg(
            {
                "weights": {"kind": "fixed", "lambda_scale": 10.0},
                "simulator": {"N": 1024, "L": 100.0, "T": 40.0, "diagnostic_interval": 20},
            }
        )
    ).run()
    report = decay_report(result.records)
    assert report["localH1_sech4_initial"] > 0.0
    assert report["localH1_sech4_ratio"] < 0.05
    assert report["localH1_ratio"] < 0.5
    assert report["max_energy_flux_ratio"] < 1.0
    assert all(record.localH1_sech4 <= record.localH1 for record in result.records)
