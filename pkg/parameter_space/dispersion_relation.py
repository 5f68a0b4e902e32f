"""
Linear dispersion relation of the normalized system, its group velocity
and the cubic p(mu) deciding whether the group velocity ever vanishes.
"""

import math
from dataclasses import dataclass

import numpy as np

from parameter_space.admissibility import NormalizedParameters


def dispersion_omega(k, n: NormalizedParameters):
    """omega(k) = |k| (1 - a k^2)^(1/2) (1 - c k^2)^(1/2) / (1 + k^2)"""
    k = np.asarray(k, dtype=np.float64)
    k2 = k**2
    return np.abs(k) * np.sqrt((1.0 - n.a * k2) * (1.0 - n.c * k2)) / (1.0 + k2)


def group_velocity(k, n: NormalizedParameters):
    """
    |w'(k)| = |ac k^6 + 3ac k^4 - (1 + 2a + 2c) k^2 + 1|
              / ((1 + k^2)^2 (1 - a k^2)^(1/2) (1 - c k^2)^(1/2))
    """
    k = np.asarray(k, dtype=np.float64)
    k2 = k**2
    ac = n.a * n.c
    numerator = ac * k2**3 + 3.0 * ac * k2**2 - (1.0 + 2.0 * n.a + 2.0 * n.c) * k2 + 1.0
    denominator = (1.0 + k2) ** 2 * np.sqrt((1.0 - n.a * k2) * (1.0 - n.c * k2))
    return np.abs(numerator) / denominator


def cubic_p(mu, b, n: NormalizedParameters):
    """p(mu) = ac mu^3 + 3ac mu^2 + (3 - 2/(3b)) mu + 1, the numerator at mu = k^2."""
    mu = np.asarray(mu, dtype=np.float64)
    ac = n.a * n.c
    return ac * mu**3 + 3.0 * ac * mu**2 + (3.0 - 2.0 / (3.0 * b)) * mu + 1.0


@dataclass(frozen=True)
class GroupVelocityReport:
    b: float
    a: float
    c: float
    kappa: float
    radicand: float
    mu_minus: float
    mu_plus: float
    p_at_mu_plus: float
    everywhere_positive: bool
    verdict: str


def group_velocity_report(b, n: NormalizedParameters, tol=1e-12):
    """
    Decide p(mu) > 0 on mu >= 0 from the critical points
    mu_pm = -1 ± (1 + (2/(3b) - 3)/(3ac))^(1/2).
    p(0) = 1 and the leading coefficient is positive, so p can only dip
    below zero at mu_plus when mu_plus > 0. Critical points within
    `tol` of zero count as non-positive.
    """
    ac = n.a * n.c
    kappa = 3.0 - 2.0 / (3.0 * b)
    radicand = 1.0 - kappa / (3.0 * ac)
    if radicand < 0:
        return GroupVelocityReport(
            b=b, a=n.a, c=n.c, kappa=kappa, radicand=radicand,
            mu_minus=math.nan, mu_plus=math.nan, p_at_mu_plus=math.nan,
            everywhere_positive=True,
            verdict="no real critical point; p increasing, p >= 1",
        )
    root = math.sqrt(radicand)
    mu_minus, mu_plus = -1.0 - root, -1.0 + root
    if mu_plus <= tol:
        return GroupVelocityReport(
            b=b, a=n.a, c=n.c, kappa=kappa, radicand=radicand,
            mu_minus=mu_minus, mu_plus=mu_plus, p_at_mu_plus=float(cubic_p(mu_plus, b, n)),
            everywhere_positive=True,
            verdict="no positive critical point; p >= 1",
        )
    p_min = float(cubic_p(mu_plus, b, n))
    positive = p_min > 0
    return GroupVelocityReport(
        b=b, a=n.a, c=n.c, kappa=kappa, radicand=radicand,
        mu_minus=mu_minus, mu_plus=mu_plus, p_at_mu_plus=p_min,
        everywhere_positive=positive,
        verdict=(
            f"positive critical point mu+={mu_plus:.6g}; p(mu+)={p_min:.6g} "
            + ("> 0" if positive else "<= 0, group velocity vanishes")
        ),
    )


def group_velocity_everywhere_positive(b, n: NormalizedParameters):
    return group_velocity_report(b, n).everywhere_positive
