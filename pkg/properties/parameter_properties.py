"""
Properties of the parameter-space algebra: chart round trip, the
dispersion-like boundary, band selection and the group velocity.
"""

import numpy as np

from parameter_space.admissibility import (
    NormalizedParameters,
    NuB,
    admissible_nu_interval,
    from_nu_b,
    normalize,
    validate_physical,
)
from parameter_space.bands import select_alpha_beta
from parameter_space.dispersion_relation import group_velocity, group_velocity_report
from parameter_space.exceptions import EmptyBandIntersectionError
from parameter_space.exports import dispersion_onset, region_frame
from parameter_space.regions import dispersion_like_sides, dispersive_nu_interval
from parameter_space.virial_coefficients import virial_coefficients
from properties.property_interface import PropertyCheck

GRID_POINTS = 200


class ChartRoundTrip(PropertyCheck):
    """from_nu_b then validate_physical passes on every admissible grid point"""

    name = "chart_round_trip"

    def evaluate(self):
        failures, checked = 0, 0
        for b in np.linspace(1.0 / 6.0, 1.0, GRID_POINTS + 1)[1:]:
            interval = admissible_nu_interval(b)
            for nu in np.linspace(0.0, 1.0, GRID_POINTS):
                if not interval.contains(nu):
                    continue
                checked += 1
                p = from_nu_b(NuB(nu=float(nu), b=float(b)))
                if not validate_physical(p).passed or normalize(p).c < -1.0:
                    failures += 1
        return self.result(
            failures == 0, failures, 0, f"{checked} admissible points checked"
        )


class DispersionOnset(PropertyCheck):
    """At nu = 1/3 the dispersion-like region starts at b = 2/9 within one grid step"""

    name = "dispersion_onset"

    def evaluate(self):
        b_values = np.linspace(0.17, 1.0, GRID_POINTS)
        step = b_values[1] - b_values[0]
        onset = dispersion_onset(region_frame([1.0 / 3.0], b_values), 1.0 / 3.0)
        error = abs(onset - 2.0 / 9.0)
        return self.result(error <= step, error, step, f"onset b = {onset:.6f}")


class BoundaryPoint(PropertyCheck):
    """(-1/4, -1/4): both sides equal 1/2 and the A3 band is empty"""

    name = "boundary_point"

    def evaluate(self):
        n = NormalizedParameters(a=-0.25, c=-0.25)
        lhs, rhs = dispersion_like_sides(n)
        try:
            select_alpha_beta(n)
            a3_empty = False
        except EmptyBandIntersectionError as exc:
            a3_empty = "A3" in str(exc)
        error = abs(lhs - 0.5) + abs(rhs - 0.5)
        return self.result(
            error == 0.0 and a3_empty, error, 0.0, f"sides ({lhs}, {rhs}), A3 empty: {a3_empty}"
        )


class CoefficientPositivity(PropertyCheck):
    """Selected (alpha, beta) makes A2..A4, B2..B4 positive on sampled dispersion-like points"""

    name = "coefficient_positivity"

    def evaluate(self):
        worst = np.inf
        samples = 0
        while samples < 500:
            b = self.rng.uniform(2.0 / 9.0, 1.5)
            interval = dispersive_nu_interval(b)
            if interval.is_empty():
                continue
            lo, hi = interval.bounds()
            n = normalize(from_nu_b(NuB(nu=self.rng.uniform(lo, hi), b=b)))
            k = virial_coefficients(n, select_alpha_beta(n))
            worst = min(worst, k.A2, k.A3, k.A4, k.B2, k.B3, k.B4)
            samples += 1
        return self.result(worst > 0, worst, 0.0, f"{samples} points")


class GroupVelocityPositive(PropertyCheck):
    """For b >= 2/9 the cubic report finds no zero and a dense k-scan agrees"""

    name = "group_velocity_positive"

    def evaluate(self):
        k = np.linspace(0.0, 200.0, 200001)
        worst = np.inf
        verdicts = []
        for b in (2.0 / 9.0, 0.25, 0.5, 1.0):
            n = normalize(from_nu_b(NuB(nu=1.0 / 3.0, b=b)))
            report = group_velocity_report(b, n)
            speeds = group_velocity(k, n)
            if not report.everywhere_positive or speeds[0] != 1.0:
                worst = -np.inf
            worst = min(worst, float(np.min(speeds)))
            verdicts.append(f"b={b:.4g}: {report.verdict}")
        return self.result(worst > 0, worst, 0.0, "; ".join(verdicts))
