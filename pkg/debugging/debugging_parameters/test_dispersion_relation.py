"""
Tests for the linear dispersion relation and the group velocity report
"""

import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from parameter_space.admissibility import NormalizedParameters, NuB, from_nu_b, normalize
from parameter_space.dispersion_relation import (
    cubic_p,
    dispersion_omega,
    group_velocity,
    group_velocity_everywhere_positive,
    group_velocity_report,
)


def _chart(nu, b):
    return normalize(from_nu_b(NuB(nu=nu, b=b)))


def test_unit_pair_is_non_dispersive():
    n = NormalizedParameters(a=-1.0, c=-1.0)
    k = np.linspace(0.0, 50.0, 501)
    assert np.allclose(dispersion_omega(k, n), k, rtol=1e-13)
    assert np.allclose(group_velocity(k, n), 1.0, rtol=1e-12)


@given(st.floats(-30.0, 30.0))
def test_omega_is_even(k):
    n = _chart(1.0 / 3.0, 0.5)
    assert dispersion_omega(k, n) == dispersion_omega(-k, n)
    assert dispersion_omega(k, n) >= 0.0


@pytest.mark.parametrize("nu, b", [(1.0 / 3.0, 0.5), (0.5, 0.5), (0.3, 0.3)])
def test_group_velocity_is_derivative_of_omega(nu, b):
    n = _chart(nu, b)
    k = np.linspace(0.1, 10.0, 100)
    h = 1e-5
    slope = (dispersion_omega(k + h, n) - dispersion_omega(k - h, n)) / (2.0 * h)
    assert np.allclose(np.abs(slope), group_velocity(k, n), rtol=1e-6, atol=1e-9)


def test_group_velocity_at_zero_is_one():
    assert group_velocity(0.0, _chart(1.0 / 3.0, 2.0 / 9.0)) == 1.0


@given(st.floats(0.0, 1.0), st.floats(0.23, 1.0), st.floats(0.0, 100.0))
def test_cubic_is_the_numerator(nu, b, mu):
    """
    On the zero surface tension chart -(1 + 2a + 2c) = 3 - 2/(3b).
    """
    p = from_nu_b(NuB(nu=nu, b=b))
    assume(p.a < 0 and p.c < 0 and 0 < nu < 1)
    n = normalize(p)
    ac = n.a * n.c
    numerator = ac * mu**3 + 3.0 * ac * mu**2 - (1.0 + 2.0 * n.a + 2.0 * n.c) * mu + 1.0
    assert float(cubic_p(mu, b, n)) == pytest.approx(numerator, rel=1e-9, abs=1e-9)


def test_report_at_two_ninths():
    n = _chart(1.0 / 3.0, 2.0 / 9.0)
    report = group_velocity_report(2.0 / 9.0, n)
    assert report.kappa == pytest.approx(0.0, abs=1e-12)
    assert report.radicand == pytest.approx(1.0)
    assert report.mu_plus == pytest.approx(0.0, abs=1e-12)
    assert report.everywhere_positive
    assert report.verdict.startswith("no positive critical point")


def test_report_at_b_quarter():
    report = group_velocity_report(0.25, _chart(1.0 / 3.0, 0.25))
    # the radicand is zero up to roundoff
    assert math.isnan(report.mu_plus) or report.mu_plus <= 0.0
    assert report.everywhere_positive


@pytest.mark.parametrize("b", [0.5, 1.0])
def test_report_without_real_critical_point(b):
    report = group_velocity_report(b, _chart(1.0 / 3.0, b))
    assert report.radicand < 0.0
    assert math.isnan(report.mu_plus)
    assert report.everywhere_positive


def test_report_detects_vanishing_group_velocity():
    """
    A nearly dispersionless pair with b below 1/6 has p(mu+) < 0 and
    the group velocity touches zero.
    """
    n = NormalizedParameters(a=-0.01, c=-0.01)
    b = 1.0 / (3.0 * (n.a + n.c + 2.0))
    report = group_velocity_report(b, n)
    assert report.mu_plus > 0.0
    assert report.p_at_mu_plus < 0.0
    assert not report.everywhere_positive
    assert not group_velocity_everywhere_positive(b, n)
    k = np.linspace(0.0, 20.0, 200001)
    assert float(np.min(group_velocity(k, n))) < 1e-3
