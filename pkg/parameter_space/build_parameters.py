"""
Builds the normalized (a, c) pair from the parameters config group.
"""

from parameter_space.admissibility import (
    NormalizedParameters,
    NuB,
    PhysicalParameters,
    from_nu_b,
    normalize,
)
from simulators.config import ConfigurationError, UnknownComponentError

PARAMETER_DICT = {
    "normalized": lambda parameter_cfg: NormalizedParameters(
        a=parameter_cfg["a"],
        c=parameter_cfg["c"],
        b_origin=parameter_cfg.get("b"),
    ),
    "physical": lambda parameter_cfg: normalize(
        PhysicalParameters(
            a=parameter_cfg["a"],
            b=parameter_cfg["b"],
            c=parameter_cfg["c"],
            d=parameter_cfg["d"],
        )
    ),
    "nu_b": lambda parameter_cfg: normalize(
        from_nu_b(NuB(nu=parameter_cfg["nu"], b=parameter_cfg["b"]))
    ),
}

REQUIRED_KEYS_DICT = {
    "normalized": ("a", "c"),
    "physical": ("a", "b", "c", "d"),
    "nu_b": ("nu", "b"),
}


def build_parameters(parameter_cfg) -> NormalizedParameters:
    """
    Given the parameters config, build the normalized pair.
    """
    kind = parameter_cfg["kind"]
    if kind not in PARAMETER_DICT:
        raise UnknownComponentError(f"parameter kind {kind} not implemented.")
    missing = [key for key in REQUIRED_KEYS_DICT[kind] if parameter_cfg.get(key) is None]
    if missing:
        raise ConfigurationError(
            f"parameters of kind {kind} need {', '.join(f'parameters.{key}' for key in missing)}"
        )
    return PARAMETER_DICT[kind](parameter_cfg=parameter_cfg)
