"""
Validated run configuration of a single simulation.
"""

import math
from dataclasses import dataclass


class ConfigurationError(ValueError):
    """An invalid run or command configuration."""


class UnknownComponentError(ConfigurationError, NotImplementedError):
    """A config names a registry entry that does not exist."""


@dataclass(frozen=True)
class SimulationConfig:
    """Everything a single run needs, resolved from the Hydra config."""

    parameters: object  # NormalizedParameters
    N: int
    L: float
    dt: float
    T: float
    t_start: float
    diagnostic_interval: int
    log_interval: int
    weight_mode: str  # "fixed" or "light_cone"
    lambda_scale: float
    C0: float
    alpha_beta: object  # AlphaBeta
    nonlinear: bool = True
    dealias: bool = False
    stepper: str = "rk4"
    blowup_factor: float = 1.0e3

    @property
    def num_steps(self):
        """dt is resolved to T / num_steps, so the last step lands on T."""
        return max(1, int(round(self.T / self.dt)))

    def validate(self, stability_limit=None):
        """Raise ConfigurationError on an invalid combination."""
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ConfigurationError(f"simulator.dt must be positive, got {self.dt}")
        if not self.T > 0:
            raise ConfigurationError(f"simulator.T must be positive, got {self.T}")
        if self.diagnostic_interval < 1:
            raise ConfigurationError("simulator.diagnostic_interval must be >= 1")
        if not self.lambda_scale > 0:
            raise ConfigurationError(f"weights.lambda_scale must be positive, got {self.lambda_scale}")
        if self.weight_mode not in ("fixed", "light_cone"):
            raise ConfigurationError(f"weights.kind must be fixed or light_cone, got {self.weight_mode}")
        if self.weight_mode == "light_cone":
            if not self.C0 > 0:
                raise ConfigurationError(f"weights.C0 must be positive, got {self.C0}")
            if self.t_start < 2.0:
                raise ConfigurationError(
                    f"light_cone weights need simulator.t_start >= 2, got {self.t_start}"
                )
        if stability_limit is not None and self.dt > stability_limit:
            raise ConfigurationError(
                f"simulator.dt={self.dt:.4g} exceeds the {self.stepper} stability limit "
                f"{stability_limit:.4g} for this grid and (a, c)"
            )
        return self
