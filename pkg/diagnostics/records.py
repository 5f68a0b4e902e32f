"""
One snapshot of every observable, and its CSV form.
"""

import math
from dataclasses import asdict, dataclass, fields as dataclass_fields

import pandas as pd

from diagnostics.canonical import canonical_fields
from diagnostics.conserved import energy, h1_norm, momentum
from diagnostics.local_energy import dEloc_rhs, local_energy
from diagnostics.local_norms import local_h1
from diagnostics.virials import (
    dH_decomposition,
    quadratic_Q_canonical,
    time_weight_corrections,
    virials,
)


@dataclass(frozen=True)
class DiagnosticsRecord:
    t: float
    E: float
    P: float
    I: float
    J: float
    K: float
    H: float
    Q: float
    SQ: float
    NQ: float
    Q_canonical: float
    E_loc: float
    dEloc_rhs: float
    localH1: float
    lambda_t: float
    boundary_flag: float
    # appended after the core columns
    dH_correction: float = 0.0
    localH1_light_cone: float = math.nan
    decay_integrand: float = math.nan
    norm_H1: float = 0.0
    localH1_sech4: float = 0.0

    @property
    def dH_rhs(self):
        """Predicted dH/dt: Q + SQ + NQ plus the moving-weight correction."""
        return self.Q + self.SQ + self.NQ + self.dH_correction


RECORD_COLUMNS = [f.name for f in dataclass_fields(DiagnosticsRecord)]


def compute_record(t, state, parameters, ab, scheduler) -> DiagnosticsRecord:
    """
    Evaluate every observable on `state` at time t.
    Args:
        parameters: NormalizedParameters
        ab: AlphaBeta of the modified virial
        scheduler: weight scheduler giving the windows at time t
    """
    grid = state.grid
    fields = canonical_fields(state)
    virial_weight = scheduler.virial_weight(grid, t)
    values = virials(state, virial_weight, ab, fields=fields)
    rates = dH_decomposition(state, virial_weight, parameters, ab, fields=fields)
    q_canonical = quadratic_Q_canonical(state, virial_weight, parameters, ab, fields=fields)

    correction = 0.0
    if scheduler.time_dependent:
        correction, _ = time_weight_corrections(
            state, scheduler.get_lambda(t), scheduler.get_rate(t), ab, fields=fields
        )

    energy_weight = scheduler.energy_weight(grid)
    local = local_h1(state, scheduler.local_weight(grid, t), fields=fields)

    light_cone_weight = scheduler.light_cone_weight(grid, t)
    if light_cone_weight is None:
        light_cone, integrand = math.nan, math.nan
    else:
        light_cone = local_h1(state, light_cone_weight, fields=fields)
        integrand = light_cone / light_cone_weight.lambda_

    return DiagnosticsRecord(
        t=float(t),
        E=energy(state, parameters),
        P=momentum(state),
        I=values.I,
        J=values.J,
        K=values.K,
        H=values.H,
        Q=rates.Q,
        SQ=rates.SQ,
        NQ=rates.NQ,
        Q_canonical=q_canonical,
        E_loc=local_energy(state, energy_weight, parameters, fields=fields),
        dEloc_rhs=dEloc_rhs(state, energy_weight, parameters, fields=fields),
        localH1=local,
        lambda_t=float(scheduler.get_lambda(t)),
        boundary_flag=state.outer_amplitude(),
        dH_correction=correction,
        localH1_light_cone=light_cone,
        decay_integrand=integrand,
        norm_H1=h1_norm(state),
        localH1_sech4=local_h1(state, scheduler.sech4_weight(grid, t), fields=fields),
    )


def records_frame(records):
    return pd.DataFrame([asdict(record) for record in records], columns=RECORD_COLUMNS)


def write_records_csv(records, path):
    """One header row, columns in record order, 17 significant digits."""
    records_frame(records).to_csv(path, index=False, float_format="%.17g")


def read_records_csv(path):
    frame = pd.read_csv(path, float_precision="round_trip")
    return [DiagnosticsRecord(**row) for row in frame.to_dict(orient="records")]
