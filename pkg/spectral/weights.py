"""
Analytic weight families sampled on a grid.

tanh:  w = A tanh(x/lambda)       (virial weight, A = lambda by default)
sech2: w = A sech^2(x/lambda)     (local H1 window, A = 1 by default)
sech4: w = A sech^4(x/lambda)     (localized energy, A = lambda by default)

Derivatives are closed forms in T = tanh(y), S = sech^2(y), y = x/lambda.
"""

from dataclasses import dataclass

import numpy as np


def _tanh_profile(T, S, lam, amplitude):
    w = amplitude * T
    dw = amplitude / lam * S
    d2w = amplitude / lam**2 * (-2.0 * T * S)
    d3w = amplitude / lam**3 * (4.0 * T**2 * S - 2.0 * S**2)
    return w, dw, d2w, d3w


def _sech2_profile(T, S, lam, amplitude):
    w = amplitude * S
    dw = amplitude / lam * (-2.0 * T * S)
    d2w = amplitude / lam**2 * (4.0 * T**2 * S - 2.0 * S**2)
    d3w = amplitude / lam**3 * (16.0 * T * S**2 - 8.0 * T**3 * S)
    return w, dw, d2w, d3w


def _sech4_profile(T, S, lam, amplitude):
    w = amplitude * S**2
    dw = amplitude / lam * (-4.0 * T * S**2)
    d2w = amplitude / lam**2 * (16.0 * T**2 * S**2 - 4.0 * S**3)
    d3w = amplitude / lam**3 * (56.0 * T * S**3 - 64.0 * T**3 * S**2)
    return w, dw, d2w, d3w


WEIGHT_DICT = {
    "tanh": _tanh_profile,
    "sech2": _sech2_profile,
    "sech4": _sech4_profile,
}

DEFAULT_AMPLITUDE = {
    "tanh": lambda lam: lam,
    "sech2": lambda lam: 1.0,
    "sech4": lambda lam: lam,
}


def sech_squared(y):
    """sech^2 without overflow for large |y|."""
    e = np.exp(-2.0 * np.abs(y))
    return 4.0 * e / (1.0 + e) ** 2


@dataclass(frozen=True, eq=False)
class WeightFamily:
    """Samples of a weight and its first three derivatives at grid nodes."""

    kind: str
    lambda_: float
    amplitude: float
    w: np.ndarray
    dw: np.ndarray
    d2w: np.ndarray
    d3w: np.ndarray
    grid: object = None  # Grid the samples live on

    def reflected(self):
        """Samples of x -> w(-x) and its derivatives on the same nodes."""
        index = (-np.arange(self.w.size)) % self.w.size
        return WeightFamily(
            kind=self.kind,
            lambda_=self.lambda_,
            amplitude=self.amplitude,
            w=self.w[index],
            dw=-self.dw[index],
            d2w=self.d2w[index],
            d3w=-self.d3w[index],
            grid=self.grid,
        )


def weight_family(kind, lambda_, grid, amplitude=None):
    """
    Build a weight family on the grid nodes.
    Args:
        kind: one of "tanh", "sech2", "sech4"
        lambda_: scale > 0
        grid: Grid
        amplitude: overall factor, defaults to lambda for tanh/sech4 and 1 for sech2
    """
    if kind not in WEIGHT_DICT:
        raise ValueError(f"weight kind {kind} not implemented.")
    if not lambda_ > 0:
        raise ValueError(f"lambda must be positive, got {lambda_}")
    if amplitude is None:
        amplitude = DEFAULT_AMPLITUDE[kind](lambda_)
    y = grid.nodes / lambda_
    T = np.tanh(y)
    S = sech_squared(y)
    w, dw, d2w, d3w = WEIGHT_DICT[kind](T, S, float(lambda_), float(amplitude))
    for samples in (w, dw, d2w, d3w):
        samples.setflags(write=False)
    return WeightFamily(
        kind=kind,
        lambda_=float(lambda_),
        amplitude=float(amplitude),
        w=w,
        dw=dw,
        d2w=d2w,
        d3w=d3w,
        grid=grid,
    )


def weight_bound_ratios(family, grid):
    """
    Samplewise sups of |w'|, lambda|w''| and lambda^2|w'''| relative to a
    positive reference: w' itself for tanh, sech^2(x/lambda) otherwise.
    tanh gives 1, 2 and 4 exactly; sech4 with amplitude lambda stays
    below 4 and 20 in the first two.
    """
    lam = family.lambda_
    if family.kind == "tanh":
        reference = family.dw
    else:
        reference = sech_squared(grid.nodes / lam)
    keep = reference > 1e-200
    return {
        "dw": float(np.max(np.abs(family.dw[keep]) / reference[keep])),
        "d2w": float(np.max(lam * np.abs(family.d2w[keep]) / reference[keep])),
        "d3w": float(np.max(lam**2 * np.abs(family.d3w[keep]) / reference[keep])),
    }
