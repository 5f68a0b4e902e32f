"""
Tests for diagnostics/records.py
"""

import math

import pandas as pd
import pytest

from diagnostics.local_norms import lambda_of_t
from diagnostics.records import (
    RECORD_COLUMNS,
    DiagnosticsRecord,
    compute_record,
    read_records_csv,
    write_records_csv,
)
from parameter_space.admissibility import NormalizedParameters
from parameter_space.bands import AlphaBeta
from simulators.initial_data import random_smooth_state
from simulators.schedulers import ConstantWeightScheduler, LightConeWeightScheduler
from simulators.state import FieldPair
from spectral.grid import Grid

UNIT = NormalizedParameters(a=-1.0, c=-1.0)


@pytest.fixture
def grid():
    return Grid(512, 60.0)


def test_zero_state_record(grid):
    record = compute_record(0.0, FieldPair.zeros(grid), UNIT, AlphaBeta(0.0, 0.0), ConstantWeightScheduler(10.0))
    assert record.E == record.H == record.Q == record.E_loc == record.localH1 == record.localH1_sech4 == 0.0
    assert record.lambda_t == 10.0
    assert math.isnan(record.localH1_light_cone)
    assert math.isnan(record.decay_integrand)

    later = compute_record(3.0, FieldPair.zeros(grid), UNIT, AlphaBeta(0.0, 0.0), ConstantWeightScheduler(10.0))
    assert later.localH1_light_cone == 0.0
    assert later.decay_integrand == 0.0


def test_light_cone_record(grid, rng):
    state = random_smooth_state(grid, rng)
    record = compute_record(10.0, state, UNIT, AlphaBeta(0.0, 0.0), LightConeWeightScheduler(10.0, C0=4.0))
    assert record.lambda_t == pytest.approx(lambda_of_t(10.0, 4.0))
    assert record.dH_correction != 0.0
    assert record.decay_integrand == pytest.approx(record.localH1_light_cone / record.lambda_t)
    # sech^4 <= sech^2 at the same lambda(t)
    assert 0.0 < record.localH1_sech4 < record.localH1


def test_dH_rhs_includes_the_correction():
    values = {name: 0.0 for name in RECORD_COLUMNS}
    values.update(Q=1.0, SQ=2.0, NQ=3.0, dH_correction=0.5)
    record = DiagnosticsRecord(**values)
    assert record.dH_rhs == 6.5


def test_csv_round_trip(grid, rng, tmp_path):
    state = random_smooth_state(grid, rng)
    scheduler = ConstantWeightScheduler(10.0)
    records = [
        compute_record(t, state, UNIT, AlphaBeta(0.1, -0.1), scheduler) for t in (0.0, 2.5)
    ]
    path = tmp_path / "diagnostics.csv"
    write_records_csv(records, path)

    assert list(pd.read_csv(path).columns) == RECORD_COLUMNS
    loaded = read_records_csv(path)
    assert [record.E for record in loaded] == [record.E for record in records]
    assert [record.H for record in loaded] == [record.H for record in records]
    assert math.isnan(loaded[0].decay_integrand)
    assert loaded[1].decay_integrand == records[1].decay_integrand
