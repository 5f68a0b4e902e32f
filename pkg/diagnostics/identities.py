"""
Centered-difference checks of the rate identities along a run, and the
finite-horizon decay observables.
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class IdentityCheck:
    times: np.ndarray
    finite_difference: np.ndarray
    predicted: np.ndarray
    residuals: np.ndarray
    scale: float

    @property
    def max_residual(self):
        return float(np.max(self.residuals)) if self.residuals.size else 0.0


def centered_difference(times, values):
    """(v[i+1] - v[i-1]) / (t[i+1] - t[i-1]) at the interior points."""
    times = np.asarray(times, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    return (values[2:] - values[:-2]) / (times[2:] - times[:-2])


def identity_residuals(times, values, rates, floor=1e-300):
    """
    Residual of d(values)/dt against the predicted rates at interior cadence
    points, normalized by the run-wide peak of |rates|.
    """
    times = np.asarray(times, dtype=np.float64)
    rates = np.asarray(rates, dtype=np.float64)
    if times.size < 3:
        empty = np.zeros(0)
        return IdentityCheck(empty, empty, empty, empty, 0.0)
    fd = centered_difference(times, values)
    predicted = rates[1:-1]
    scale = max(float(np.max(np.abs(rates))), floor)
    return IdentityCheck(
        times=times[1:-1],
        finite_difference=fd,
        predicted=predicted,
        residuals=np.abs(fd - predicted) / scale,
        scale=scale,
    )


def virial_identity(records):
    """dH/dt against Q + SQ + NQ (+ moving-weight correction)."""
    return identity_residuals(
        [r.t for r in records], [r.H for r in records], [r.dH_rhs for r in records]
    )


def local_energy_identity(records):
    """dE_loc/dt against its canonical-variable decomposition."""
    return identity_residuals(
        [r.t for r in records], [r.E_loc for r in records], [r.dEloc_rhs for r in records]
    )


def relative_drift(records, key):
    """max_t |X(t) - X(0)| / |X(0)|; absolute drift when X(0) = 0."""
    values = np.array([getattr(r, key) for r in records], dtype=np.float64)
    reference = abs(values[0])
    drift = float(np.max(np.abs(values - values[0])))
    return drift / reference if reference > 0 else drift


def running_integral(times, integrand):
    """Trapezoid running integral over the finite samples."""
    times = np.asarray(times, dtype=np.float64)
    integrand = np.asarray(integrand, dtype=np.float64)
    keep = np.isfinite(integrand)
    times, integrand = times[keep], integrand[keep]
    if times.size == 0:
        return times, times
    steps = 0.5 * (integrand[1:] + integrand[:-1]) * np.diff(times)
    return times, np.concatenate([[0.0], np.cumsum(steps)])


def tail_fraction(times, cumulative):
    """Share of the total integral accumulated over the last quarter of the horizon."""
    if len(times) < 2 or cumulative[-1] <= 0:
        return math.nan
    start = times[0] + 0.75 * (times[-1] - times[0])
    at_start = float(np.interp(start, times, cumulative))
    return (cumulative[-1] - at_start) / cumulative[-1]
