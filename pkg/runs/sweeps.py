"""
Parameter sweeps: one simulate run per value of sweep.key, fanned out over
a process pool. Runs share nothing; each worker owns its run directory and
the aggregator only reads directories marked COMPLETED.
"""

import copy
import multiprocessing as mp
import os

import pandas as pd
from omegaconf import OmegaConf, open_dict
from omegaconf.errors import OmegaConfBaseException

from parameter_space.exceptions import ParameterError
from runs.exit_codes import EXIT_CONFIG_ERROR, EXIT_INSTABILITY, EXIT_SUCCESS
from runs.manifest import completed_status, is_completed, load_config, mark_completed, start_run
from runs.plot_scripts import write_plot_script
from runs.simulation_run import REPORT_FILE, run_simulation
from simulators.config import ConfigurationError
from simulators.utils import init_print_override, restore_print_override

SUMMARY_FILE = "sweep_summary.csv"


def sweep_points(cfg, output_dir):
    """One config per sweep value, writing below output_dir."""
    key = cfg["sweep"]["key"]
    points = []
    for value in cfg["sweep"]["values"]:
        point = copy.deepcopy(cfg)
        try:
            OmegaConf.update(point, key, value, merge=False)
        except OmegaConfBaseException as exc:
            raise ConfigurationError(f"invalid sweep.key '{key}': {exc}") from exc
        with open_dict(point):
            point["sweep"]["key"] = None
            point["sweep"]["values"] = []
            point["general"]["paths"]["output_dir"] = output_dir
        points.append(point)
    return points


def _sweep_worker(args):
    """Run one sweep point; only rank 0 prints."""
    rank, point = args
    os.environ["SWEEP_RANK"] = str(rank)
    original_print = init_print_override()
    try:
        code, run_dir, _ = run_simulation(point)
        return code, run_dir
    except (ConfigurationError, ParameterError) as exc:
        print(f"Sweep point {rank}: {exc}")
        return EXIT_CONFIG_ERROR, None
    finally:
        restore_print_override(original_print)
        os.environ.pop("SWEEP_RANK", None)


def _flatten(prefix, values, row):
    for name, value in values.items():
        if isinstance(value, dict):
            _flatten(f"{prefix}{name}.", value, row)
        else:
            row[f"{prefix}{name}"] = value


def aggregate_sweep(sweep_dir, key):
    """
    Collect report.yaml of every completed run below sweep_dir into one
    frame, ordered by the swept value. Incomplete directories are skipped.
    """
    rows = []
    for name in sorted(os.listdir(sweep_dir)):
        run_dir = os.path.join(sweep_dir, name)
        if not os.path.isdir(run_dir) or not is_completed(run_dir):
            continue
        report = OmegaConf.to_container(OmegaConf.load(os.path.join(run_dir, REPORT_FILE)))
        row = {
            "run": name,
            "key": key,
            "value": OmegaConf.select(load_config(run_dir), key),
            "status": completed_status(run_dir),
        }
        for report_values in report["reports"].values():
            _flatten("", report_values, row)
        rows.append(row)
    frame = pd.DataFrame(rows)
    if not frame.empty:
        frame = frame.sort_values("value", kind="stable").reset_index(drop=True)
    return frame


def run_sweep(cfg):
    """
    Fan out the sweep over general.jobs worker processes and write
    sweep_summary.csv. Returns (exit_code, sweep_dir).
    """
    key = cfg["sweep"]["key"]
    sweep_dir, _ = start_run(cfg, "sweep", parameters={"key": key, "values": list(cfg["sweep"]["values"])})
    points = sweep_points(cfg, sweep_dir)
    jobs = max(1, int(cfg["general"]["jobs"]))
    print(f"Sweep over {key}: {len(points)} runs on {jobs} worker(s)")

    if jobs == 1:
        outcomes = [_sweep_worker(args) for args in enumerate(points)]
    else:
        with mp.Pool(processes=jobs) as pool:
            outcomes = pool.map(_sweep_worker, list(enumerate(points)))

    frame = aggregate_sweep(sweep_dir, key)
    frame.to_csv(os.path.join(sweep_dir, SUMMARY_FILE), index=False, float_format="%.17g")
    write_plot_script(sweep_dir, "sweep", SUMMARY_FILE)
    mark_completed(sweep_dir)

    codes = [code for code, _ in outcomes]
    if EXIT_CONFIG_ERROR in codes:
        return EXIT_CONFIG_ERROR, sweep_dir
    if EXIT_INSTABILITY in codes:
        return EXIT_INSTABILITY, sweep_dir
    return EXIT_SUCCESS, sweep_dir
