"""
One simulate run: build, step, write the run directory.
"""

import os
from dataclasses import asdict

from omegaconf import OmegaConf

from diagnostics.records import write_records_csv
from diagnostics.reports import REPORT_DICT, build_reports
from runs.exit_codes import EXIT_INSTABILITY, EXIT_SUCCESS
from runs.manifest import mark_completed, start_run
from runs.plot_scripts import write_plot_script
from simulators.base_simulator import SimulationInstabilityError
from simulators.build_simulators import build_simulator
from simulators.config import UnknownComponentError
from simulators.utils import print_summary, set_seed, write_final_state

RECORDS_FILE = "diagnostics.csv"
STATE_FILE = "final_state.bin"
REPORT_FILE = "report.yaml"


def _resolved_parameters(sim_cfg):
    parameters = asdict(sim_cfg.parameters)
    parameters.update(
        alpha=sim_cfg.alpha_beta.alpha,
        beta=sim_cfg.alpha_beta.beta,
        dt=sim_cfg.dt,
        dealias=sim_cfg.dealias,
        N=sim_cfg.N,
        L=sim_cfg.L,
    )
    return parameters


def _write_report(run_dir, status, reports, notes):
    content = {"status": status, "reports": reports, "notes": notes}
    OmegaConf.save(config=OmegaConf.create(content), f=os.path.join(run_dir, REPORT_FILE))


def run_simulation(cfg):
    """
    Run one simulation described by cfg. Config errors propagate before the
    run directory exists. Returns (exit_code, run_dir, reports).
    """
    for name in cfg["simulator"]["reports"]:
        if name not in REPORT_DICT:
            raise UnknownComponentError(f"report {name} not implemented.")
    rng = set_seed(cfg["general"]["seed"])
    simulator = build_simulator(cfg, rng=rng)
    sim_cfg = simulator.sim_cfg
    run_dir, _ = start_run(cfg, "simulate", parameters=_resolved_parameters(sim_cfg))
    print(f"Run directory: {run_dir}")

    try:
        result = simulator.run()
    except SimulationInstabilityError as exc:
        # partial CSV stays on disk
        write_records_csv(exc.records, os.path.join(run_dir, RECORDS_FILE))
        notes = {"error": str(exc), "step": exc.step, "t": float(exc.t)}
        _write_report(run_dir, "instability", {}, notes)
        mark_completed(run_dir, status="instability")
        print(f"Instability: {exc}")
        return EXIT_INSTABILITY, run_dir, {}

    write_records_csv(result.records, os.path.join(run_dir, RECORDS_FILE))
    if cfg["simulator"]["save_final_state"]:
        write_final_state(result.final_state, result.t_final, os.path.join(run_dir, STATE_FILE))
    write_plot_script(run_dir, "diagnostics", RECORDS_FILE)

    reports = build_reports(cfg["simulator"]["reports"], result, simulator.initial_state)
    notes = {"steps": result.steps, "wall_time": float(result.wall_time), "t_final": float(result.t_final)}
    _write_report(run_dir, "completed", reports, notes)
    mark_completed(run_dir, status="success")

    for name, report in reports.items():
        print_summary(f"{name} report", report)
    return EXIT_SUCCESS, run_dir, reports
