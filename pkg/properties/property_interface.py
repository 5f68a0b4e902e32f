"""Defines the PropertyCheck interface and the result it reports."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from omegaconf import OmegaConf

from parameter_space.build_parameters import build_parameters
from runs.config_validation import SimulateSchema
from simulators.base_simulator import SimulationInstabilityError
from simulators.build_simulators import build_grid, build_simulator
from simulators.steppers import stable_dt_limit

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PropertyResult:
    name: str
    status: str
    value: float
    threshold: float
    detail: str = ""


@dataclass
class PropertySettings:
    seed: int = 489
    mutation: Optional[str] = None
    instability_probe: bool = False
    num_random_states: int = 100
    extra: dict = field(default_factory=dict)


class PropertyCheck:
    """Interface for one verifiable property."""

    name = None

    def __init__(self, settings: PropertySettings):
        self.settings = settings
        self.rng = np.random.default_rng(settings.seed)

    def evaluate(self) -> PropertyResult:
        """Measure the property and compare against its threshold."""
        raise NotImplementedError()

    def run(self) -> PropertyResult:
        """Evaluate; an aborted simulation makes the property inconclusive."""
        try:
            return self.evaluate()
        except SimulationInstabilityError as exc:
            return PropertyResult(
                name=self.name,
                status=INCONCLUSIVE,
                value=float("nan"),
                threshold=float("nan"),
                detail=f"simulation aborted: {exc}",
            )

    def result(self, passed, value, threshold, detail=""):
        return PropertyResult(
            name=self.name,
            status=PASS if passed else FAIL,
            value=float(value),
            threshold=float(threshold),
            detail=detail,
        )

    def simulation_config(self, overrides):
        """A full simulate config from the schema defaults plus overrides, quiet."""
        cfg = OmegaConf.merge(
            OmegaConf.structured(SimulateSchema),
            {"general": {"seed": self.settings.seed, "logging": {"verbose": False}}},
            overrides,
        )
        if self.settings.instability_probe:
            parameters = build_parameters(cfg.parameters)
            grid = build_grid(cfg.simulator)
            cfg.simulator.dt = 2.0 * stable_dt_limit(grid, parameters, cfg.simulator.stepper)
            cfg.simulator.check_stability = False
        return cfg

    def simulate(self, overrides, record_callback=None):
        """Build and run a simulator; returns (simulator, result)."""
        cfg = self.simulation_config(overrides)
        simulator = build_simulator(
            cfg, rng=np.random.default_rng(self.settings.seed), record_callback=record_callback
        )
        return simulator, simulator.run()
