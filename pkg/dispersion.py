"""
Dispersion relation omega(k), the group velocity |omega'(k)| and the
analytic report on the cubic p(mu).
"""
import os
import sys
from dataclasses import asdict

import hydra
import numpy as np
import pandas as pd
from omegaconf import OmegaConf

from parameter_space.admissibility import b_from_normalized
from parameter_space.build_parameters import build_parameters
from parameter_space.dispersion_relation import (
    dispersion_omega,
    group_velocity,
    group_velocity_report,
)
from runs.config_validation import validate_config
from runs.exit_codes import EXIT_SUCCESS, guarded
from runs.manifest import mark_completed, start_run
from runs.plot_scripts import write_plot_script
from simulators.config import ConfigurationError
from simulators.utils import create_folder_structure, print_summary

TABLE_COLUMNS = ["k", "omega", "abs_group_velocity"]


def dispersion_table(k, parameters):
    return pd.DataFrame(
        {
            "k": k,
            "omega": dispersion_omega(k, parameters),
            "abs_group_velocity": group_velocity(k, parameters),
        },
        columns=TABLE_COLUMNS,
    )


def scan_minimum(parameters, k_max, points):
    """Brute-force minimum of |omega'(k)| on [0, k_max]; returns (k, value)."""
    k = np.linspace(0.0, k_max, points)
    speeds = group_velocity(k, parameters)
    index = int(np.argmin(speeds))
    return float(k[index]), float(speeds[index])


@guarded
def cmd_dispersion(cfg):
    """Write dispersion.csv and group_velocity.yaml"""
    cfg = validate_config(cfg, "dispersion")
    dispersion_cfg = cfg["dispersion"]
    if dispersion_cfg["k_points"] < 2 or dispersion_cfg["scan_points"] < 2:
        raise ConfigurationError("dispersion.k_points and dispersion.scan_points must be >= 2")
    parameters = build_parameters(cfg["parameters"])
    b = dispersion_cfg["b"]
    if b is None:
        b = b_from_normalized(parameters)

    run_dir, _ = start_run(cfg, "dispersion", parameters={"a": parameters.a, "c": parameters.c, "b": b})
    print(f"Run directory: {run_dir}")

    table = dispersion_table(np.linspace(0.0, dispersion_cfg["k_max"], dispersion_cfg["k_points"]), parameters)
    table.to_csv(os.path.join(run_dir, "dispersion.csv"), index=False, float_format="%.17g")
    write_plot_script(run_dir, "dispersion", "dispersion.csv")

    report = group_velocity_report(b, parameters)
    scan_k, scan_value = scan_minimum(parameters, dispersion_cfg["scan_k_max"], dispersion_cfg["scan_points"])
    summary = {
        **asdict(report),
        "table_min_abs_group_velocity": float(table["abs_group_velocity"].min()),
        "scan_min_k": scan_k,
        "scan_min_abs_group_velocity": scan_value,
        "group_velocity_at_zero": float(group_velocity(0.0, parameters)),
    }
    OmegaConf.save(config=OmegaConf.create(summary), f=os.path.join(run_dir, "group_velocity.yaml"))
    mark_completed(run_dir)

    print_summary("Group velocity", summary)
    return EXIT_SUCCESS


@hydra.main(version_base=None, config_path="configs", config_name="dispersion")
def main(cfg):
    if "full_configs" in cfg:
        cfg = cfg["full_configs"]
    cfg["general"]["paths"]["output_dir"] = hydra.utils.to_absolute_path(
        cfg["general"]["paths"]["output_dir"]
    )
    create_folder_structure(path_config=cfg["general"]["paths"])
    sys.exit(cmd_dispersion(cfg))


if __name__ == "__main__":
    # pylint: disable=no-value-for-parameter
    main()
    # pylint: enable=no-value-for-parameter
