"""
Run-level reports built from the record list: stationarity, conservation,
virial positivity and finite-horizon decay. Each returns a flat dict of
plain floats/bools so it can be written to report.yaml as is.
"""

import math

import numpy as np

from diagnostics.identities import (
    local_energy_identity,
    relative_drift,
    running_integral,
    tail_fraction,
    virial_identity,
)
from simulators.config import UnknownComponentError

STATIONARITY_TOLERANCE = 1e-6
CONSERVATION_TOLERANCE = 1e-7
DECAY_RATIO_TOLERANCE = 0.5
TAIL_FRACTION_TOLERANCE = 0.1


def _series(records, key):
    return np.array([getattr(record, key) for record in records], dtype=np.float64)


def stationarity_report(initial_state, final_state, records, tol=STATIONARITY_TOLERANCE):
    """sup-drift of the state and the largest change of I, J, K, H."""
    sup_drift = final_state.distance(initial_state)
    virial_drift = 0.0
    for key in ("I", "J", "K", "H"):
        values = _series(records, key)
        virial_drift = max(virial_drift, float(np.max(np.abs(values - values[0]))))
    return {
        "sup_drift": float(sup_drift),
        "virial_drift": virial_drift,
        "stationary": bool(sup_drift < tol and virial_drift < tol),
    }


def conservation_report(records, tol=CONSERVATION_TOLERANCE):
    """Relative drift of E and P over the run."""
    energy_drift = relative_drift(records, "E")
    momentum_drift = relative_drift(records, "P")
    return {
        "energy_drift": float(energy_drift),
        "momentum_drift": float(momentum_drift),
        "conserved": bool(energy_drift < tol and momentum_drift < tol),
    }


def identity_report(records):
    """Largest normalized residual of the two rate identities."""
    virial = virial_identity(records)
    local = local_energy_identity(records)
    return {
        "virial_residual": virial.max_residual,
        "local_energy_residual": local.max_residual,
    }


def positivity_report(records, transient=0.0):
    """
    Sign of dH/dt and Q after `transient` time units. Q_canonical is
    reported beside Q since the two are the same quadratic form.
    """
    times = _series(records, "t")
    keep = times >= times[0] + transient
    dH = np.array([record.dH_rhs for record in records])[keep]
    Q = _series(records, "Q")[keep]
    if not dH.size:
        return {"min_dH_rhs": math.nan, "min_Q": math.nan, "all_positive": False}
    return {
        "min_dH_rhs": float(np.min(dH)),
        "min_Q": float(np.min(Q)),
        "min_Q_canonical": float(np.min(_series(records, "Q_canonical")[keep])),
        "all_positive": bool(np.all(dH > 0) and np.all(Q >= 0)),
    }


def decay_report(
    records,
    ratio_tol=DECAY_RATIO_TOLERANCE,
    tail_tol=TAIL_FRACTION_TOLERANCE,
):
    """
    localH1(T)/localH1(0) at the fixed window, the same ratio for the sech^4
    observable, and the last-quarter share of the running integral of
    lambda(t)^-1 * localH1 over the light-cone window. max_energy_flux_ratio is
    the largest |dE_loc/dt| / localH1 seen; it stays bounded along a run.
    """
    local = _series(records, "localH1")
    ratio = float(local[-1] / local[0]) if local[0] > 0 else math.nan
    sech4 = _series(records, "localH1_sech4")
    sech4_ratio = float(sech4[-1] / sech4[0]) if sech4[0] > 0 else math.nan
    flux = np.abs(_series(records, "dEloc_rhs"))
    positive = local > 0
    flux_ratio = float(np.max(flux[positive] / local[positive])) if np.any(positive) else math.nan
    times, cumulative = running_integral(_series(records, "t"), _series(records, "decay_integrand"))
    tail = tail_fraction(times, cumulative) if times.size else math.nan
    return {
        "localH1_initial": float(local[0]),
        "localH1_final": float(local[-1]),
        "localH1_ratio": ratio,
        "localH1_sech4_initial": float(sech4[0]),
        "localH1_sech4_final": float(sech4[-1]),
        "localH1_sech4_ratio": sech4_ratio,
        "max_energy_flux_ratio": flux_ratio,
        "decay_integral": float(cumulative[-1]) if times.size else math.nan,
        "tail_fraction": float(tail),
        "decayed": bool(ratio < ratio_tol and sech4_ratio < ratio_tol and tail < tail_tol),
        "max_boundary_flag": float(np.max(_series(records, "boundary_flag"))),
    }


REPORT_DICT = {
    "conservation": lambda result, initial_state: conservation_report(result.records),
    "identities": lambda result, initial_state: identity_report(result.records),
    "positivity": lambda result, initial_state: positivity_report(result.records),
    "stationarity": lambda result, initial_state: stationarity_report(
        initial_state, result.final_state, result.records
    ),
    "decay": lambda result, initial_state: decay_report(result.records),
}


def build_reports(report_names, result, initial_state):
    """
    Given the list of report names, evaluate each on the finished run.
    """
    reports = {}
    for name in report_names:
        if name not in REPORT_DICT:
            raise UnknownComponentError(f"report {name} not implemented.")
        reports[name] = REPORT_DICT[name](result, initial_state)
    return reports
