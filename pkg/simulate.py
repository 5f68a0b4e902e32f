"""
Simulate the normalized abcd system and record the virial diagnostics,
one run or a sweep over sweep.key.
"""
import sys

import hydra

from runs.config_validation import validate_config
from runs.exit_codes import guarded
from runs.simulation_run import run_simulation
from runs.sweeps import run_sweep
from simulators.utils import create_folder_structure


@guarded
def cmd_simulate(cfg):
    """Run the configured simulation (or sweep); returns the exit code"""
    cfg = validate_config(cfg, "simulate")
    if cfg["sweep"]["key"]:
        code, _ = run_sweep(cfg)
        return code
    code, _, _ = run_simulation(cfg)
    return code


@hydra.main(version_base=None, config_path="configs", config_name="simulate")
def main(cfg):
    if "full_configs" in cfg:
        cfg = cfg["full_configs"]
    cfg["general"]["paths"]["output_dir"] = hydra.utils.to_absolute_path(
        cfg["general"]["paths"]["output_dir"]
    ) # must be done before multiprocessing or else the path is wrong

    create_folder_structure(path_config=cfg["general"]["paths"])
    sys.exit(cmd_simulate(cfg))


if __name__ == "__main__":
    # pylint: disable=no-value-for-parameter
    main()
    # pylint: enable=no-value-for-parameter
