"""
Properties observed along time evolution: stationarity, conservation,
the linear dispersion relation, symmetry classes, the rate identities,
positivity of dH/dt, finite-horizon decay and determinism.
"""

import math

import numpy as np

from diagnostics.identities import local_energy_identity, virial_identity
from diagnostics.records import records_frame
from diagnostics.reports import conservation_report, decay_report, stationarity_report
from diagnostics.virials import dH_decomposition, positivity_margin
from parameter_space.admissibility import NormalizedParameters
from parameter_space.bands import select_alpha_beta
from parameter_space.dispersion_relation import dispersion_omega
from properties.identity_properties import property_parameter_points
from properties.property_interface import PropertyCheck
from simulators.equations import rhs
from simulators.initial_data import solitary_wave
from simulators.state import FieldPair
from simulators.steppers import rk4_step, stable_dt_limit
from spectral.grid import Grid
from spectral.weights import weight_family

UNIT_PARAMETERS = {"kind": "normalized", "a": -1.0, "c": -1.0}
SMALL_GAUSSIAN = {"kind": "gaussian", "amp_u": 0.01, "amp_eta": 0.01, "width": 5.0, "center": 0.0}


def small_gaussian_run(T, dt, parameters=None, **simulator):
    """Overrides for the reference small-data run (N = 1024, L = 100, lambda = 20)."""
    return {
        "parameters": parameters or UNIT_PARAMETERS,
        "initial_data": SMALL_GAUSSIAN,
        "weights": {"kind": "fixed", "lambda_scale": 20.0},
        "simulator": {"N": 1024, "L": 100.0, "T": T, "dt": dt, **simulator},
    }


class SolitaryWaveStationarity(PropertyCheck):
    """The explicit solitary pair has a vanishing rhs and does not move"""

    name = "solitary_wave_stationarity"
    tolerance = 1e-6

    def evaluate(self):
        grid = Grid(2048, 100.0)
        parameters = NormalizedParameters(a=-1.0, c=-1.0)
        residual = rhs(solitary_wave(grid, parameters), parameters).sup_norm()
        simulator, result = self.simulate(
            {
                "parameters": UNIT_PARAMETERS,
                "initial_data": {"kind": "solitary_wave", "center": 0.0},
                "simulator": {"N": 2048, "L": 100.0, "T": 10.0},
            }
        )
        report = stationarity_report(simulator.initial_state, result.final_state, result.records)
        drift = report["sup_drift"]
        return self.result(
            residual < 1e-8 and drift < self.tolerance,
            drift,
            self.tolerance,
            f"rhs sup-norm {residual:.3e}",
        )


class Conservation(PropertyCheck):
    """E and P drift below 1e-7 relative over T = 50"""

    name = "conservation"
    tolerance = 1e-7

    def evaluate(self):
        _, result = self.simulate(small_gaussian_run(T=50.0, dt=0.005, diagnostic_interval=100))
        report = conservation_report(result.records, tol=self.tolerance)
        worst = max(report["energy_drift"], report["momentum_drift"])
        return self.result(
            report["conserved"],
            worst,
            self.tolerance,
            f"E drift {report['energy_drift']:.3e}, P drift {report['momentum_drift']:.3e}",
        )


class LinearDispersion(PropertyCheck):
    """Single Fourier modes of the linearized flow rotate at omega(k)"""

    name = "linear_dispersion"
    tolerance = 1e-8

    def evaluate(self):
        grid = Grid(256, 50.0)
        parameters = property_parameter_points()[2]
        dt, steps = 0.005, 400
        worst = 0.0
        for m in (3, 17, 40):
            k = math.pi * m / grid.L
            omega = float(dispersion_omega(k, parameters))
            phase = self.rng.uniform(0.0, 2.0 * math.pi)
            state = FieldPair(
                u=np.cos(k * grid.nodes + phase),
                eta=0.5 * np.sin(k * grid.nodes),
                grid=grid,
            )
            derivative = rhs(state, parameters, nonlinear=False)
            second = rhs(derivative, parameters, nonlinear=False)
            expected = FieldPair.zeros(grid).axpy(-omega**2, state)
            worst = max(worst, second.distance(expected) / max(omega**2, 1.0))

            evolved = state
            for _ in range(steps):
                evolved = rk4_step(evolved, dt, parameters, nonlinear=False)
            t = steps * dt
            exact = FieldPair.zeros(grid).axpy(math.cos(omega * t), state).axpy(
                math.sin(omega * t) / omega, derivative
            )
            worst = max(worst, evolved.distance(exact))
        return self.result(worst < self.tolerance, worst, self.tolerance)


class OddEvenSymmetry(PropertyCheck):
    """u odd and eta even stay odd and even under the nonlinear flow"""

    name = "odd_even_symmetry"
    tolerance = 1e-12

    def evaluate(self):
        grid = Grid(512, 50.0)
        parameters = property_parameter_points()[1]
        x = grid.nodes
        bump = np.exp(-((x / 4.0) ** 2))
        state = FieldPair(u=0.05 * x * bump, eta=0.1 * bump, grid=grid)
        dt = 0.5 * stable_dt_limit(grid, parameters)
        for _ in range(400):
            state = rk4_step(state, dt, parameters)
        mirrored = state.reflected()
        scale = state.sup_norm()
        error = (
            float(np.max(np.abs(state.u + mirrored.u))) + float(np.max(np.abs(state.eta - mirrored.eta)))
        ) / scale
        return self.result(error < self.tolerance, error, self.tolerance)


class VirialIdentity(PropertyCheck):
    """Centered dH/dt matches Q + SQ + NQ; halving dt shrinks the residual"""

    name = "virial_identity"
    tolerance = 1e-5

    def evaluate(self):
        _, coarse = self.simulate(small_gaussian_run(T=20.0, dt=0.005))
        _, fine = self.simulate(small_gaussian_run(T=20.0, dt=0.0025))
        coarse_residual = virial_identity(coarse.records).max_residual
        fine_residual = virial_identity(fine.records).max_residual
        reduction = coarse_residual / max(fine_residual, 1e-300)
        return self.result(
            coarse_residual < self.tolerance and reduction >= 3.5,
            coarse_residual,
            self.tolerance,
            f"halving dt reduces the residual {reduction:.2f}x",
        )


class LocalEnergyIdentity(PropertyCheck):
    """Centered dE_loc/dt matches its canonical decomposition"""

    name = "local_energy_identity"
    tolerance = 1e-5

    def evaluate(self):
        _, result = self.simulate(small_gaussian_run(T=20.0, dt=0.005))
        residual = local_energy_identity(result.records).max_residual
        return self.result(residual < self.tolerance, residual, self.tolerance)


class VirialPositivity(PropertyCheck):
    """
    Q >= 0, dH/dt > 0 and dH/dt >= 1/2 min(A, B) * canonical norm at every
    cadence point of small-data runs at three dispersion-like points.
    The detail reports, for the initial state, the largest lambda at which
    the margin fails.
    """

    name = "virial_positivity"

    def evaluate(self):
        worst = np.inf
        failing_scales = []
        for parameters in property_parameter_points():
            overrides = small_gaussian_run(
                T=20.0,
                dt=None,
                parameters={"kind": "normalized", "a": parameters.a, "c": parameters.c},
            )
            ab = select_alpha_beta(parameters)
            margins = []

            def record_margin(record, state, parameters=parameters, ab=ab, margins=margins):
                weights = weight_family("tanh", record.lambda_t, state.grid)
                margins.append(
                    min(
                        record.Q,
                        record.dH_rhs,
                        record.dH_rhs - positivity_margin(state, weights, parameters, ab),
                    )
                )

            simulator, _ = self.simulate(overrides, record_callback=record_margin)
            worst = min(worst, min(margins))
            failing_scales.append(self._largest_failing_scale(simulator.initial_state, parameters, ab))
        detail = "largest failing lambda at t=0: " + ", ".join(
            "none" if scale is None else f"{scale:g}" for scale in failing_scales
        )
        return self.result(worst > 0, worst, 0.0, detail)

    @staticmethod
    def _largest_failing_scale(state, parameters, ab):
        failing = None
        for lam in (1.0, 2.0, 5.0, 10.0, 20.0, 40.0):
            weights = weight_family("tanh", lam, state.grid)
            rates = dH_decomposition(state, weights, parameters, ab)
            if rates.total < positivity_margin(state, weights, parameters, ab):
                failing = lam
        return failing


class Decay(PropertyCheck):
    """localH1(200)/localH1(0) < 0.5 and the light-cone integral has a thin tail"""

    name = "decay"

    def evaluate(self):
        _, result = self.simulate(
            {
                "parameters": UNIT_PARAMETERS,
                "initial_data": SMALL_GAUSSIAN,
                "weights": {"kind": "fixed", "lambda_scale": 20.0, "C0": 4.0},
                "simulator": {"N": 4096, "L": 400.0, "T": 200.0, "diagnostic_interval": 20},
            }
        )
        report = decay_report(result.records)
        return self.result(
            report["decayed"],
            report["localH1_ratio"],
            0.5,
            f"tail fraction {report['tail_fraction']:.3e}",
        )


class Determinism(PropertyCheck):
    """Identical config and seed give byte-identical CSV text"""

    name = "determinism"

    def evaluate(self):
        overrides = {
            "parameters": UNIT_PARAMETERS,
            "initial_data": {"kind": "random_smooth", "amp_u": 0.05, "width": 10.0},
            "simulator": {"N": 512, "L": 100.0, "T": 2.0},
        }
        texts = []
        for _ in range(2):
            _, result = self.simulate(overrides)
            texts.append(records_frame(result.records).to_csv(index=False, float_format="%.17g"))
        identical = texts[0] == texts[1]
        return self.result(identical, 0.0 if identical else 1.0, 0.0)
