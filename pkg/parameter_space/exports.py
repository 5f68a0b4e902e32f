"""
Tables behind the atlas: the (nu, b) region grid, b-slices, the band
table over an (a, c) grid and samples of gamma(b).
"""

import numpy as np
import pandas as pd

from parameter_space.admissibility import (
    NormalizedParameters,
    NuB,
    admissible_nu_interval,
    from_nu_b,
    normalize,
)
from parameter_space.bands import alpha_beta_bands, intersect_bands
from parameter_space.exceptions import ParameterError
from parameter_space.regions import (
    dispersive_nu_interval,
    gamma_boundary,
    gamma_segment_roots,
    is_dispersion_like,
)

REGION_COLUMNS = ["nu", "b", "a", "c", "admissible", "dispersion_like"]
SLICE_COLUMNS = ["b", "admissible_lo", "admissible_hi", "dispersive_lo", "dispersive_hi", "dispersive"]
BAND_COLUMNS = ["a", "c", "A2_lo", "A2_hi", "A3_lo", "A3_hi", "intersect_lo", "intersect_hi"]
GAMMA_COLUMNS = ["b", "a", "c"]
GAMMA_ROOT_COLUMNS = ["b", "a", "c", "multiplicity"]


def region_frame(nu_values, b_values):
    """
    One row per chart point with b > 1/6 (the chart is empty below).
    a and c are the physical values from the (nu, b) chart.
    """
    rows = []
    for b in b_values:
        if b <= 1.0 / 6.0:
            continue
        interval = admissible_nu_interval(b)
        for nu in nu_values:
            p = from_nu_b(NuB(nu, b))
            admissible = interval.contains(nu)
            dispersion_like = admissible and is_dispersion_like(normalize(p))
            rows.append([nu, b, p.a, p.c, admissible, dispersion_like])
    return pd.DataFrame(rows, columns=REGION_COLUMNS)


def dispersion_onset(frame, nu, atol=1e-12):
    """Smallest b in the frame at which the point (nu, b) is dispersion-like."""
    column = frame[np.isclose(frame["nu"], nu, atol=atol, rtol=0.0) & frame["dispersion_like"]]
    if column.empty:
        return float("nan")
    return float(column["b"].min())


def b_slice_frame(b_values):
    rows = []
    for b in b_values:
        admissible = admissible_nu_interval(b)
        dispersive = dispersive_nu_interval(b)
        rows.append([b, *admissible.bounds(), *dispersive.bounds(), str(dispersive)])
    return pd.DataFrame(rows, columns=SLICE_COLUMNS)


def band_frame(a_values, c_values):
    rows = []
    for a in a_values:
        for c in c_values:
            a2, a3, a4 = alpha_beta_bands(NormalizedParameters(a=a, c=c))
            common = intersect_bands((a2, a3, a4))
            lo, hi = (np.nan, np.nan) if common.is_empty() else (common.lower, common.upper)
            rows.append([a, c, a2.lower, a2.upper, a3.lower, a3.upper, lo, hi])
    return pd.DataFrame(rows, columns=BAND_COLUMNS)


def gamma_frame(b_values, a_values):
    rows = []
    for b in b_values:
        for a in a_values:
            try:
                rows.append([b, a, gamma_boundary(b, a)])
            except ParameterError:
                continue
    return pd.DataFrame(rows, columns=GAMMA_COLUMNS)


def gamma_roots_frame(b_values):
    rows = []
    for b in b_values:
        roots = gamma_segment_roots(b)
        multiplicity = 2 if len(roots) == 1 else 1
        for a, c in roots:
            rows.append([b, a, c, multiplicity])
    return pd.DataFrame(rows, columns=GAMMA_ROOT_COLUMNS)
