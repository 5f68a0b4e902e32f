"""
Strict schemas for the composed Hydra configs. Merging a config into its
structured schema rejects unknown keys and mistyped values; the error names
the dotted key path.
"""

from dataclasses import dataclass, field
from typing import Any, List, Optional

from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException

from simulators.config import ConfigurationError


@dataclass
class LoggingSchema:
    wandb_log: bool = False
    wandb_project: str = "abcd-virial-lab"
    verbose: bool = True


@dataclass
class PathsSchema:
    output_dir: str = "outputs"


@dataclass
class GeneralSchema:
    logging: LoggingSchema = field(default_factory=LoggingSchema)
    paths: PathsSchema = field(default_factory=PathsSchema)
    seed: int = 489
    jobs: int = 1


@dataclass
class ParametersSchema:
    kind: str = "normalized"
    a: Optional[float] = None
    b: Optional[float] = None
    c: Optional[float] = None
    d: Optional[float] = None
    nu: Optional[float] = None


@dataclass
class InitialDataSchema:
    kind: str = "gaussian"
    center: float = 0.0
    amp_u: float = 0.0
    amp_eta: float = 0.0
    width: float = 1.0


@dataclass
class WeightsSchema:
    kind: str = "fixed"
    lambda_scale: float = 20.0
    C0: float = 4.0


@dataclass
class AlphaBetaSchema:
    mode: str = "auto"
    alpha: float = 0.0
    beta: float = 0.0


@dataclass
class SimulatorSchema:
    simulator_type: str = "base_simulator"
    stepper: str = "rk4"
    N: int = 1024
    L: float = 100.0
    dt: Optional[float] = None
    T: float = 20.0
    t_start: float = 0.0
    diagnostic_interval: int = 10
    log_interval: int = 1000
    nonlinear: bool = True
    dealias: Optional[bool] = None
    blowup_factor: float = 1.0e3
    check_stability: bool = True
    save_final_state: bool = True
    alpha_beta: AlphaBetaSchema = field(default_factory=AlphaBetaSchema)
    reports: List[str] = field(default_factory=lambda: ["conservation", "identities"])


@dataclass
class SweepSchema:
    key: Optional[str] = None
    values: List[Any] = field(default_factory=list)


@dataclass
class SimulateSchema:
    general: GeneralSchema = field(default_factory=GeneralSchema)
    parameters: ParametersSchema = field(default_factory=ParametersSchema)
    initial_data: InitialDataSchema = field(default_factory=InitialDataSchema)
    weights: WeightsSchema = field(default_factory=WeightsSchema)
    simulator: SimulatorSchema = field(default_factory=SimulatorSchema)
    sweep: SweepSchema = field(default_factory=SweepSchema)


@dataclass
class AtlasGridSchema:
    nu_min: float = 0.0
    nu_max: float = 1.0
    nu_points: int = 200
    b_min: float = 0.17
    b_max: float = 1.0
    b_points: int = 200
    b_slices: List[float] = field(default_factory=lambda: [0.25, 2.0 / 9.0, 0.5])
    a_min: float = -2.0
    a_max: float = -0.01
    c_min: float = -1.0
    c_max: float = -0.01
    ac_points: int = 50
    gamma_b_values: List[float] = field(default_factory=lambda: [0.25, 0.5])
    gamma_a_points: int = 100


@dataclass
class AtlasSchema:
    general: GeneralSchema = field(default_factory=GeneralSchema)
    atlas: AtlasGridSchema = field(default_factory=AtlasGridSchema)


@dataclass
class DispersionTableSchema:
    b: Optional[float] = None
    k_max: float = 20.0
    k_points: int = 401
    scan_k_max: float = 200.0
    scan_points: int = 200001


@dataclass
class DispersionSchema:
    general: GeneralSchema = field(default_factory=GeneralSchema)
    parameters: ParametersSchema = field(default_factory=ParametersSchema)
    dispersion: DispersionTableSchema = field(default_factory=DispersionTableSchema)


@dataclass
class VerifySettingsSchema:
    properties: Optional[List[str]] = None
    mutation: Optional[str] = None
    instability_probe: bool = False
    num_random_states: int = 100


@dataclass
class VerifySchema:
    general: GeneralSchema = field(default_factory=GeneralSchema)
    verify: VerifySettingsSchema = field(default_factory=VerifySettingsSchema)


SCHEMA_DICT = {
    "atlas": AtlasSchema,
    "simulate": SimulateSchema,
    "verify": VerifySchema,
    "dispersion": DispersionSchema,
}


def validate_config(cfg, subcommand):
    """
    Merge cfg into the subcommand's schema. Returns the typed config;
    raises ConfigurationError naming the offending key.
    """
    if "full_configs" in cfg:
        cfg = cfg["full_configs"]
    try:
        schema = OmegaConf.structured(SCHEMA_DICT[subcommand])
        return OmegaConf.merge(schema, cfg)
    except OmegaConfBaseException as exc:
        key = getattr(exc, "full_key", None) or "<root>"
        message = getattr(exc, "msg", None) or str(exc)
        raise ConfigurationError(f"invalid config key '{key}': {message}") from exc
