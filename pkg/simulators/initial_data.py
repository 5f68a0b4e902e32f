"""
Initial data generators.
"""

import math

import numpy as np

from simulators.config import ConfigurationError, UnknownComponentError
from simulators.state import FieldPair
from spectral.weights import sech_squared


def soliton_profile(x):
    """Q(x) = 3 / (2 cosh^2(x/2)), the solution of Q'' - Q + Q^2 = 0."""
    return 1.5 * sech_squared(np.asarray(x) / 2.0)


def solitary_wave(grid, parameters, center=0.0):
    """
    Standing solitary wave for a = c < 0:
        (u, eta) = (sqrt(2) Q(x/sqrt|a|), -Q(x/sqrt|a|))
    """
    if parameters.a != parameters.c:
        raise ConfigurationError(
            f"the explicit solitary wave needs a = c, got a={parameters.a}, c={parameters.c}"
        )
    profile = soliton_profile((grid.nodes - center) / math.sqrt(abs(parameters.a)))
    return FieldPair(u=math.sqrt(2.0) * profile, eta=-profile, grid=grid)


def gaussian_data(grid, amp_u, amp_eta, width, center=0.0):
    """u = amp_u exp(-(x-center)^2/width^2), eta likewise."""
    if not width > 0:
        raise ConfigurationError(f"gaussian width must be positive, got {width}")
    bump = np.exp(-(((grid.nodes - center) / width) ** 2))
    return FieldPair(u=amp_u * bump, eta=amp_eta * bump, grid=grid)


def zero_data(grid):
    return FieldPair.zeros(grid)


def boosted_solitary_data(grid, amplitude, width, center=0.0):
    """
    Right-moving long-wave pulse: eta = amplitude sech^2((x-center)/width), u = eta.
    Along u = eta the linearized flow is purely right-going at long waves.
    """
    if not width > 0:
        raise ConfigurationError(f"pulse width must be positive, got {width}")
    pulse = amplitude * sech_squared((grid.nodes - center) / width)
    return FieldPair(u=pulse, eta=pulse, grid=grid)


def random_smooth_state(grid, rng, amplitude=0.1, max_wavenumber=2.0, num_modes=6, envelope_width=15.0):
    """
    Localized random state: a Gaussian envelope times a few random
    low-wavenumber cosines, so the spectrum is resolved far below Nyquist.
    """
    x = grid.nodes
    fields = []
    for _ in range(2):
        center = rng.uniform(-0.1, 0.1) * grid.L
        envelope = np.exp(-(((x - center) / envelope_width) ** 2))
        wave = np.zeros_like(x)
        for _ in range(num_modes):
            k = rng.uniform(0.0, max_wavenumber)
            phase = rng.uniform(0.0, 2.0 * np.pi)
            wave += rng.normal() * np.cos(k * x + phase)
        fields.append(amplitude * envelope * wave / math.sqrt(num_modes))
    return FieldPair(u=fields[0], eta=fields[1], grid=grid)


INITIAL_DATA_DICT = {
    "solitary_wave": lambda cfg, grid, parameters, rng: solitary_wave(
        grid=grid, parameters=parameters, center=cfg["center"]
    ),
    "gaussian": lambda cfg, grid, parameters, rng: gaussian_data(
        grid=grid,
        amp_u=cfg["amp_u"],
        amp_eta=cfg["amp_eta"],
        width=cfg["width"],
        center=cfg["center"],
    ),
    "zero": lambda cfg, grid, parameters, rng: zero_data(grid=grid),
    "boosted_solitary": lambda cfg, grid, parameters, rng: boosted_solitary_data(
        grid=grid, amplitude=cfg["amp_eta"], width=cfg["width"], center=cfg["center"]
    ),
    "random_smooth": lambda cfg, grid, parameters, rng: random_smooth_state(
        grid=grid, rng=rng, amplitude=cfg["amp_u"], envelope_width=cfg["width"]
    ),
}


def build_initial_data(initial_data_cfg, grid, parameters, rng=None):
    """
    Given the initial data config, sample the initial FieldPair.
    """
    kind = initial_data_cfg["kind"]
    if kind not in INITIAL_DATA_DICT:
        raise UnknownComponentError(f"initial data {kind} not implemented.")
    if rng is None:
        rng = np.random.default_rng(0)
    return INITIAL_DATA_DICT[kind](initial_data_cfg, grid, parameters, rng)
