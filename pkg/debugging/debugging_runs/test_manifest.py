"""
Tests for runs/manifest.py and runs/config_validation.py
"""

import os

import pytest
from hydra import compose, initialize_config_dir
from hydra.core.hydra_config import HydraConfig
from omegaconf import OmegaConf

from runs.config_validation import validate_config
from runs.manifest import (
    completed_status,
    config_digest,
    create_run_directory,
    is_completed,
    load_config,
    mark_completed,
    read_manifest,
    start_run,
)
from simulators.config import ConfigurationError

CONFIG_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..", "configs"))


def test_digest_follows_the_resolved_config():
    first = OmegaConf.create({"x": 1, "y": "${x}"})
    second = OmegaConf.create({"x": 1, "y": 1})
    assert config_digest(first) == config_digest(second)
    assert config_digest(first) != config_digest(OmegaConf.create({"x": 2, "y": 2}))


def test_run_directories_never_collide(tmp_path):
    first = create_run_directory(str(tmp_path), "atlas", "0123456789abcdef")
    second = create_run_directory(str(tmp_path), "atlas", "0123456789abcdef")
    assert os.path.basename(first) == "atlas_0123456789_000"
    assert os.path.basename(second) == "atlas_0123456789_001"


def test_start_run_writes_manifest_and_config(tmp_path):
    cfg = validate_config(
        OmegaConf.create({"general": {"paths": {"output_dir": str(tmp_path)}, "seed": 7}}), "atlas"
    )
    run_dir, manifest = start_run(cfg, "atlas", parameters={"b": 0.5})
    assert read_manifest(run_dir) == manifest
    assert manifest.seed == 7
    assert manifest.parameters == {"b": 0.5}
    # no Hydra app is running under the test runner
    assert manifest.config_path == ""
    assert load_config(run_dir).atlas.nu_points == cfg.atlas.nu_points
    assert not os.path.exists(os.path.join(run_dir, "manifest.yaml.tmp"))

    assert not is_completed(run_dir)
    mark_completed(run_dir, status="instability")
    assert is_completed(run_dir)
    assert completed_status(run_dir) == "instability"


def test_manifest_names_the_hydra_config(tmp_path):
    with initialize_config_dir(config_dir=CONFIG_DIR, version_base=None):
        hydra_cfg = compose(config_name="atlas", return_hydra_config=True)
    HydraConfig.instance().set_config(hydra_cfg)
    try:
        cfg = validate_config(OmegaConf.create({"general": {"paths": {"output_dir": str(tmp_path)}}}), "atlas")
        run_dir, manifest = start_run(cfg, "atlas")
    finally:
        HydraConfig.instance().cfg = None
    assert os.path.samefile(manifest.config_path, os.path.join(CONFIG_DIR, "atlas.yaml"))
    assert read_manifest(run_dir).config_path == manifest.config_path


@pytest.mark.parametrize(
    "content, key",
    [
        ({"simulator": {"bogus": 1}}, "bogus"),
        ({"simulator": {"N": "many"}}, "N"),
        ({"weights": {"lamda_scale": 3.0}}, "lamda_scale"),
    ],
)
def test_invalid_keys_are_named(content, key):
    with pytest.raises(ConfigurationError, match=key):
        validate_config(OmegaConf.create(content), "simulate")


def test_full_configs_wrapper_is_unwrapped():
    cfg = validate_config(OmegaConf.create({"full_configs": {"verify": {"mutation": "a3_sign"}}}), "verify")
    assert cfg.verify.mutation == "a3_sign"
