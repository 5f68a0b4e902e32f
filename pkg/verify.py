"""
Run the property suite and write verify_report.csv.
"""
import os
import sys

import hydra

from properties.property_interface import FAIL, INCONCLUSIVE, PropertySettings
from properties.verify_suite import (
    overall_status,
    print_property_results,
    results_frame,
    run_properties,
)
from runs.config_validation import validate_config
from runs.exit_codes import (
    EXIT_INSTABILITY,
    EXIT_PROPERTY_FAILURE,
    EXIT_SUCCESS,
    guarded,
)
from runs.manifest import mark_completed, start_run
from simulators.config import ConfigurationError
from simulators.utils import create_folder_structure

MUTATIONS = (None, "a3_sign")


@guarded
def cmd_verify(cfg):
    """Evaluate the selected properties; 0 pass, 3 inconclusive, 4 fail"""
    cfg = validate_config(cfg, "verify")
    verify_cfg = cfg["verify"]
    if verify_cfg["mutation"] not in MUTATIONS:
        raise ConfigurationError(f"verify.mutation must be one of {MUTATIONS}, got {verify_cfg['mutation']}")
    names = None if verify_cfg["properties"] is None else list(verify_cfg["properties"])
    settings = PropertySettings(
        seed=int(cfg["general"]["seed"]),
        mutation=verify_cfg["mutation"],
        instability_probe=bool(verify_cfg["instability_probe"]),
        num_random_states=int(verify_cfg["num_random_states"]),
    )

    run_dir, _ = start_run(cfg, "verify")
    print(f"Run directory: {run_dir}")
    try:
        results = run_properties(names, settings, jobs=int(cfg["general"]["jobs"]))
    except NotImplementedError as exc:
        raise ConfigurationError(f"verify.properties: {exc}") from exc

    print_property_results(results)
    results_frame(results).to_csv(
        os.path.join(run_dir, "verify_report.csv"), index=False, float_format="%.17g"
    )
    status = overall_status(results)
    mark_completed(run_dir, status=status)
    print(f"Overall: {status}")
    if status == FAIL:
        return EXIT_PROPERTY_FAILURE
    if status == INCONCLUSIVE:
        return EXIT_INSTABILITY
    return EXIT_SUCCESS


@hydra.main(version_base=None, config_path="configs", config_name="verify")
def main(cfg):
    if "full_configs" in cfg:
        cfg = cfg["full_configs"]
    cfg["general"]["paths"]["output_dir"] = hydra.utils.to_absolute_path(
        cfg["general"]["paths"]["output_dir"]
    )
    create_folder_structure(path_config=cfg["general"]["paths"])
    sys.exit(cmd_verify(cfg))


if __name__ == "__main__":
    # pylint: disable=no-value-for-parameter
    main()
    # pylint: enable=no-value-for-parameter
