"""
Tests for simulators/schedulers.py
"""

import math

import pytest

from simulators.schedulers import (
    ConstantWeightScheduler,
    LightConeWeightScheduler,
    build_weight_scheduler,
)
from spectral.grid import Grid


def test_constant_scheduler():
    grid = Grid(128, 50.0)
    scheduler = build_weight_scheduler({"kind": "fixed", "lambda_scale": 20.0, "C0": 4.0})
    assert isinstance(scheduler, ConstantWeightScheduler)
    assert not scheduler.time_dependent
    assert scheduler.get_lambda(0.0) == scheduler.get_lambda(100.0) == 20.0
    assert scheduler.get_rate(5.0) == 0.0
    assert scheduler.virial_weight(grid, 3.0).kind == "tanh"
    assert scheduler.local_weight(grid, 3.0).kind == "sech2"
    assert scheduler.energy_weight(grid).amplitude == 20.0
    sech4 = scheduler.sech4_weight(grid, 3.0)
    assert (sech4.kind, sech4.lambda_, sech4.amplitude) == ("sech4", 20.0, 1.0)


def test_light_cone_window_starts_at_two():
    grid = Grid(128, 50.0)
    scheduler = ConstantWeightScheduler(20.0, C0=4.0)
    assert scheduler.light_cone_weight(grid, 1.5) is None
    window = scheduler.light_cone_weight(grid, math.e**2)
    assert window.lambda_ == pytest.approx(math.e**2)


def test_light_cone_scheduler():
    grid = Grid(128, 50.0)
    scheduler = build_weight_scheduler({"kind": "light_cone", "lambda_scale": 20.0, "C0": 4.0})
    assert isinstance(scheduler, LightConeWeightScheduler)
    assert scheduler.time_dependent
    t = math.e**2
    assert scheduler.get_lambda(t) == pytest.approx(t)
    assert scheduler.get_rate(t) == pytest.approx(0.0, abs=1e-15)
    weight = scheduler.virial_weight(grid, t)
    assert weight.amplitude == 1.0
    # the energy window stays at the fixed scale
    assert scheduler.energy_weight(grid).lambda_ == 20.0
    # the pointwise decay window follows lambda(t)
    assert scheduler.sech4_weight(grid, t).lambda_ == pytest.approx(t)


def test_light_cone_before_two_is_rejected():
    scheduler = LightConeWeightScheduler(20.0, C0=4.0)
    with pytest.raises(ValueError):
        scheduler.get_lambda(1.0)


def test_unknown_scheduler():
    with pytest.raises(NotImplementedError):
        build_weight_scheduler({"kind": "adaptive", "lambda_scale": 1.0, "C0": 1.0})
