"""
Parameter-space atlas: the (nu, b) region grid, b-slices, the band table
and gamma(b) samples, written as CSVs with plot scripts.
"""
import os
import sys

import hydra
import numpy as np

from parameter_space.exports import (
    b_slice_frame,
    band_frame,
    dispersion_onset,
    gamma_frame,
    gamma_roots_frame,
    region_frame,
)
from runs.config_validation import validate_config
from runs.exit_codes import EXIT_SUCCESS, guarded
from runs.manifest import mark_completed, start_run
from runs.plot_scripts import write_plot_script
from simulators.config import ConfigurationError
from simulators.utils import create_folder_structure, print_summary


def _write_csv(frame, run_dir, name):
    frame.to_csv(os.path.join(run_dir, name), index=False, float_format="%.17g")


@guarded
def cmd_atlas(cfg):
    """Build every atlas table into a fresh run directory"""
    cfg = validate_config(cfg, "atlas")
    atlas_cfg = cfg["atlas"]
    for key in ("nu_points", "b_points", "ac_points", "gamma_a_points"):
        if atlas_cfg[key] < 1:
            raise ConfigurationError(f"atlas.{key} must be >= 1, got {atlas_cfg[key]}")

    run_dir, _ = start_run(cfg, "atlas")
    print(f"Run directory: {run_dir}")

    nu_values = np.linspace(atlas_cfg["nu_min"], atlas_cfg["nu_max"], atlas_cfg["nu_points"])
    b_values = np.linspace(atlas_cfg["b_min"], atlas_cfg["b_max"], atlas_cfg["b_points"])
    regions = region_frame(nu_values, b_values)
    _write_csv(regions, run_dir, "regions.csv")
    write_plot_script(run_dir, "regions", "regions.csv")

    _write_csv(b_slice_frame(list(atlas_cfg["b_slices"])), run_dir, "b_slices.csv")

    a_values = np.linspace(atlas_cfg["a_min"], atlas_cfg["a_max"], atlas_cfg["ac_points"])
    c_values = np.linspace(atlas_cfg["c_min"], atlas_cfg["c_max"], atlas_cfg["ac_points"])
    _write_csv(band_frame(a_values, c_values), run_dir, "bands.csv")

    gamma_b = list(atlas_cfg["gamma_b_values"])
    gamma_a = np.linspace(atlas_cfg["a_min"], atlas_cfg["a_max"], atlas_cfg["gamma_a_points"])
    _write_csv(gamma_frame(gamma_b, gamma_a), run_dir, "gamma.csv")
    _write_csv(gamma_roots_frame(gamma_b), run_dir, "gamma_roots.csv")
    write_plot_script(run_dir, "gamma", "gamma.csv")

    mark_completed(run_dir)

    summary = {
        "region points": len(regions),
        "dispersion-like points": int(regions["dispersion_like"].sum()) if len(regions) else 0,
    }
    nu_third = nu_values[np.argmin(np.abs(nu_values - 1.0 / 3.0))]
    summary[f"onset b at nu={nu_third:.4g}"] = dispersion_onset(regions, nu_third) if len(regions) else float("nan")
    print_summary("Atlas", summary)
    return EXIT_SUCCESS


@hydra.main(version_base=None, config_path="configs", config_name="atlas")
def main(cfg):
    if "full_configs" in cfg:
        cfg = cfg["full_configs"]
    cfg["general"]["paths"]["output_dir"] = hydra.utils.to_absolute_path(
        cfg["general"]["paths"]["output_dir"]
    )
    create_folder_structure(path_config=cfg["general"]["paths"])
    sys.exit(cmd_atlas(cfg))


if __name__ == "__main__":
    # pylint: disable=no-value-for-parameter
    main()
    # pylint: enable=no-value-for-parameter
