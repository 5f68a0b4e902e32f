"""
Shared fixtures: quiet simulate configs built from the schema defaults.
"""

import numpy as np
import pytest
from omegaconf import OmegaConf

from runs.config_validation import SimulateSchema


@pytest.fixture
def simulate_cfg(tmp_path):
    """
    Factory for a full simulate config: schema defaults, a = c = -1 with
    small Gaussian data, verbose off, output below tmp_path, then the
    given overrides.
    """

    def build(overrides=None):
        return OmegaConf.merge(
            OmegaConf.structured(SimulateSchema),
            {
                "general": {
                    "logging": {"verbose": False},
                    "paths": {"output_dir": str(tmp_path / "outputs")},
                },
                "parameters": {"kind": "normalized", "a": -1.0, "c": -1.0},
                "initial_data": {"kind": "gaussian", "amp_u": 0.01, "amp_eta": 0.01, "width": 5.0},
            },
            overrides or {},
        )

    return build


@pytest.fixture
def rng():
    return np.random.default_rng(489)
