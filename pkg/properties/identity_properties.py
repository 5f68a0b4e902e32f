"""
State-wise identities, independent of the dynamics: evaluated on random
smooth states at N = 1024, L = 100.
"""

import dataclasses

import numpy as np

from diagnostics.canonical import canonical_fields
from diagnostics.local_energy import local_energy, local_energy_rate, local_energy_rate_direct
from diagnostics.local_norms import local_h1, norm_equivalence_ratios
from diagnostics.virials import (
    dH_decomposition,
    quadratic_Q_canonical,
    sq_canonical_rewrite,
    virials,
)
from parameter_space.admissibility import NormalizedParameters, NuB, from_nu_b, normalize
from parameter_space.bands import select_alpha_beta
from parameter_space.virial_coefficients import virial_coefficients
from properties.property_interface import PropertyCheck
from simulators.initial_data import random_smooth_state
from spectral.grid import Grid
from spectral.operators import helmholtz_inverse
from spectral.weights import weight_bound_ratios, weight_family

STATE_N = 1024
STATE_L = 100.0
LAMBDA = 20.0


def _relative(lhs, rhs, floor=1e-300):
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), floor)


def property_parameter_points():
    """Dispersion-like pairs used by the state-wise and positivity checks."""
    return (
        NormalizedParameters(a=-1.0, c=-1.0),
        normalize(from_nu_b(NuB(nu=1.0 / 3.0, b=0.5))),
        normalize(from_nu_b(NuB(nu=0.5, b=0.5))),
    )


class RandomStateProperty(PropertyCheck):
    """Base for checks over settings.num_random_states random smooth states."""

    def states(self):
        grid = Grid(STATE_N, STATE_L)
        for _ in range(self.settings.num_random_states):
            yield random_smooth_state(grid, self.rng)


class RepresentationIdentity(RandomStateProperty):
    """Q in physical variables equals Q in canonical variables"""

    name = "representation_identity"
    tolerance = 1e-9

    def evaluate(self):
        worst = 0.0
        points = property_parameter_points()
        for index, state in enumerate(self.states()):
            parameters = points[index % len(points)]
            ab = select_alpha_beta(parameters)
            coefficients = virial_coefficients(parameters, ab)
            if self.settings.mutation == "a3_sign":
                coefficients = dataclasses.replace(coefficients, A3=-coefficients.A3)
            weights = weight_family("tanh", LAMBDA, state.grid)
            fields = canonical_fields(state)
            direct = dH_decomposition(state, weights, parameters, ab, fields=fields).Q
            canonical = quadratic_Q_canonical(
                state, weights, parameters, ab, coefficients=coefficients, fields=fields
            )
            worst = max(worst, _relative(direct, canonical))
        detail = "A3 sign mutated" if self.settings.mutation == "a3_sign" else ""
        return self.result(worst < self.tolerance, worst, self.tolerance, detail)


class SQRewriteIdentity(RandomStateProperty):
    """The phi'' integrals of SQ equal their phi''' rewrites"""

    name = "sq_rewrite_identity"
    tolerance = 1e-9

    def evaluate(self):
        worst = 0.0
        points = property_parameter_points()
        for index, state in enumerate(self.states()):
            parameters = points[index % len(points)]
            ab = select_alpha_beta(parameters)
            weights = weight_family("tanh", LAMBDA, state.grid)
            rewrite = sq_canonical_rewrite(state, weights, parameters, ab)
            worst = max(
                worst,
                _relative(rewrite.eta_lhs, rewrite.eta_rhs),
                _relative(rewrite.u_lhs, rewrite.u_rhs),
            )
        return self.result(worst < self.tolerance, worst, self.tolerance)


class LocalEnergyRepresentation(RandomStateProperty):
    """The canonical decomposition of dE_loc/dt equals its direct form"""

    name = "local_energy_representation"
    tolerance = 1e-9

    def evaluate(self):
        worst = 0.0
        points = property_parameter_points()
        for index, state in enumerate(self.states()):
            parameters = points[index % len(points)]
            weights = weight_family("sech4", LAMBDA, state.grid)
            fields = canonical_fields(state)
            decomposed = local_energy_rate(state, weights, parameters, fields=fields).total
            direct = local_energy_rate_direct(state, weights, parameters, fields=fields)
            worst = max(worst, _relative(decomposed, direct))
        return self.result(worst < self.tolerance, worst, self.tolerance)


class ReflectionSymmetry(RandomStateProperty):
    """Diagnostics are unchanged when state and weights are reflected together"""

    name = "reflection_symmetry"
    tolerance = 1e-10

    @staticmethod
    def _observables(state, parameters, ab, tanh, sech2, sech4):
        values = virials(state, tanh, ab)
        rates = dH_decomposition(state, tanh, parameters, ab)
        return (
            values.I, values.J, values.K, values.H,
            rates.Q, rates.SQ, rates.NQ,
            quadratic_Q_canonical(state, tanh, parameters, ab),
            local_h1(state, sech2),
            local_energy(state, sech4, parameters),
            local_energy_rate(state, sech4, parameters).total,
        )

    def evaluate(self):
        worst = 0.0
        parameters = NormalizedParameters(a=-1.0, c=-1.0)
        ab = select_alpha_beta(parameters)
        for state in list(self.states())[:20]:
            grid = state.grid
            families = [weight_family(kind, LAMBDA, grid) for kind in ("tanh", "sech2", "sech4")]
            original = self._observables(state, parameters, ab, *families)
            mirrored = self._observables(
                state.reflected(), parameters, ab, *[family.reflected() for family in families]
            )
            scale = max(max(abs(v) for v in original), 1e-300)
            worst = max(worst, max(abs(x - y) for x, y in zip(original, mirrored)) / scale)
        return self.result(worst < self.tolerance, worst, self.tolerance)


class NormEquivalence(RandomStateProperty):
    """Weighted canonical norms sit between the two-sided bounds"""

    name = "norm_equivalence"

    def evaluate(self):
        lowest, highest = np.inf, 0.0
        violations = 0
        for state in self.states():
            ratios = norm_equivalence_ratios(state, weight_family("sech2", LAMBDA, state.grid))
            for key in ("ratio_u", "ratio_eta"):
                lowest = min(lowest, ratios[key])
                highest = max(highest, ratios[key])
                if not ratios["lower"] <= ratios[key] <= ratios["upper"]:
                    violations += 1
        return self.result(
            violations == 0, violations, 0, f"observed ratios in [{lowest:.4f}, {highest:.4f}]"
        )


class WeightBounds(PropertyCheck):
    """lambda|phi''| <= 2 phi' and lambda^2|phi'''| <= 4 phi' for the tanh weight"""

    name = "weight_bounds"

    def evaluate(self):
        grid = Grid(STATE_N, STATE_L)
        excess = 0.0
        for lam in (2.0, 5.0, 20.0, 50.0):
            ratios = weight_bound_ratios(weight_family("tanh", lam, grid), grid)
            excess = max(excess, ratios["dw"] - 1.0, ratios["d2w"] - 2.0, ratios["d3w"] - 4.0)
        return self.result(excess <= 1e-12, excess, 1e-12)


class ComparisonPrinciple(RandomStateProperty):
    """u >= 0 gives 0 <= (1 - d_x^2)^{-1} u <= sup u, up to spectral truncation"""

    name = "comparison_principle"
    tolerance = 1e-10

    def evaluate(self):
        worst = 0.0
        for state in self.states():
            u = state.u**2 + state.eta**2
            f = helmholtz_inverse(u, state.grid)
            scale = max(float(np.max(u)), 1e-300)
            worst = max(worst, -float(np.min(f)) / scale, (float(np.max(f)) - scale) / scale)
        return self.result(worst < self.tolerance, worst, self.tolerance)
