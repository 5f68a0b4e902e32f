"""
Run directories: created atomically, self-describing through manifest.yaml
and config.yaml, and marked COMPLETED only once every output is on disk.
"""

import hashlib
import os
from dataclasses import asdict, dataclass, field

from hydra.core.hydra_config import HydraConfig
from omegaconf import OmegaConf

MANIFEST_FILE = "manifest.yaml"
CONFIG_FILE = "config.yaml"
COMPLETED_FILE = "COMPLETED"


@dataclass
class RunManifest:
    subcommand: str
    config_path: str
    output_dir: str
    seed: int
    parameters: dict = field(default_factory=dict)
    config_digest: str = ""


def config_digest(cfg):
    """sha256 of the resolved config as YAML."""
    text = OmegaConf.to_yaml(cfg, resolve=True)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def create_run_directory(output_root, subcommand, digest):
    """
    Create <output_root>/<subcommand>_<digest[:10]>_<index>. The first free
    index wins; os.makedirs(exist_ok=False) makes the claim exclusive, so two
    concurrent writers never share a directory.
    """
    os.makedirs(output_root, exist_ok=True)
    index = 0
    while True:
        path = os.path.join(output_root, f"{subcommand}_{digest[:10]}_{index:03d}")
        try:
            os.makedirs(path, exist_ok=False)
            return path
        except FileExistsError:
            index += 1


def _atomic_save(config, path):
    tmp_path = f"{path}.tmp"
    OmegaConf.save(config=config, f=tmp_path)
    os.replace(tmp_path, path)


def write_manifest(manifest: RunManifest, run_dir):
    _atomic_save(OmegaConf.create(asdict(manifest)), os.path.join(run_dir, MANIFEST_FILE))


def read_manifest(run_dir):
    values = OmegaConf.to_container(OmegaConf.load(os.path.join(run_dir, MANIFEST_FILE)))
    return RunManifest(**values)


def save_config(cfg, run_dir):
    """Resolved copy of the composed config; with the manifest it reproduces the run."""
    _atomic_save(OmegaConf.create(OmegaConf.to_container(cfg, resolve=True)), os.path.join(run_dir, CONFIG_FILE))


def load_config(run_dir):
    return OmegaConf.load(os.path.join(run_dir, CONFIG_FILE))


def mark_completed(run_dir, status="success"):
    with open(os.path.join(run_dir, COMPLETED_FILE), "w", encoding="utf-8") as f:
        f.write(f"{status}\n")


def is_completed(run_dir):
    return os.path.exists(os.path.join(run_dir, COMPLETED_FILE))


def completed_status(run_dir):
    with open(os.path.join(run_dir, COMPLETED_FILE), encoding="utf-8") as f:
        return f.read().strip()


def hydra_config_path():
    """
    <config dir>/<config name>.yaml of the running Hydra app. Empty when no
    Hydra app is running (compose API, spawned worker processes).
    """
    if not HydraConfig.initialized():
        return ""
    hydra_cfg = HydraConfig.get()
    config_name = hydra_cfg.job.config_name or ""
    for source in hydra_cfg.runtime.config_sources:
        if source.provider == "main":
            return os.path.join(source.path, f"{config_name}.yaml")
    return config_name


def start_run(cfg, subcommand, parameters=None, config_path=None):
    """
    Claim a fresh run directory and write the manifest (first) and the
    config copy before any compute starts. config_path defaults to the
    running Hydra app's primary config. Returns (run_dir, manifest).
    """
    if config_path is None:
        config_path = hydra_config_path()
    digest = config_digest(cfg)
    run_dir = create_run_directory(cfg["general"]["paths"]["output_dir"], subcommand, digest)
    manifest = RunManifest(
        subcommand=subcommand,
        config_path=config_path,
        output_dir=os.path.abspath(run_dir),
        seed=int(cfg["general"]["seed"]),
        parameters=dict(parameters or {}),
        config_digest=digest,
    )
    write_manifest(manifest, run_dir)
    save_config(cfg, run_dir)
    return run_dir, manifest
