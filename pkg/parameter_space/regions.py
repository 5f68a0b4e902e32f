"""
Dispersion-like region, the dispersive nu-interval I_b and the
curve gamma(b) bounding the set B4(b).
"""

import math

from parameter_space.admissibility import (
    NormalizedParameters,
    NuB,
    admissible_nu_interval,
    from_nu_b,
    normalize,
)
from parameter_space.exceptions import SingularParameterError
from parameter_space.intervals import Interval


def dispersion_like_sides(n: NormalizedParameters):
    """(3(a+c) + 2, 8ac)."""
    return 3.0 * (n.a + n.c) + 2.0, 8.0 * n.a * n.c


def is_dispersion_like(n: NormalizedParameters, tol=0.0):
    """Strict 3(a+c) + 2 < 8ac, with an optional margin `tol`."""
    lhs, rhs = dispersion_like_sides(n)
    return lhs < rhs - tol


def dispersion_like_status(n: NormalizedParameters, tol=0.0):
    """'dispersion_like', 'boundary' or 'not_dispersion_like'."""
    lhs, rhs = dispersion_like_sides(n)
    if abs(lhs - rhs) <= tol:
        return "boundary"
    return "dispersion_like" if lhs < rhs else "not_dispersion_like"


def dispersive_radicand(b):
    """6b^2 - (11/6)b + 1/9, factored so its roots 1/12 and 2/9 are exact."""
    return 6.0 * (b - 1.0 / 12.0) * (b - 2.0 / 9.0)


def dispersive_nu_interval(b) -> Interval:
    """
    I_b: admissible nu for which the normalized pair is dispersion-like.
    Equivalent to (nu - 1/3)^2 < 6b^2 - (11/6)b + 1/9 on the admissible set,
    which reproduces the case split at b = 1/4, 1/3 and 1/2.
    """
    radicand = dispersive_radicand(b)
    if radicand <= 0:
        return Interval.empty()
    r = math.sqrt(radicand)
    return admissible_nu_interval(b).intersect(Interval.open(1.0 / 3.0 - r, 1.0 / 3.0 + r))


def region_status(nu, b, tol=0.0):
    """
    Classify a chart point as 'inadmissible', 'admissible',
    'boundary' or 'dispersion_like'.
    """
    if b <= 1.0 / 6.0 or not admissible_nu_interval(b).contains(nu):
        return "inadmissible"
    status = dispersion_like_status(normalize(from_nu_b(NuB(nu, b))), tol=tol)
    if status == "not_dispersion_like":
        return "admissible"
    return status


def b4_value(b, a, c):
    """3b(a+c) + 2b^2 - 8ac; B4(b) is where it is negative."""
    return 3.0 * b * (a + c) + 2.0 * b**2 - 8.0 * a * c


def gamma_boundary(b, a):
    """c on gamma(b): c = -b(2b + 3a)/(3b - 8a)."""
    denominator = 3.0 * b - 8.0 * a
    if denominator == 0:
        raise SingularParameterError(f"gamma(b) is singular at a = 3b/8 = {a}")
    return -b * (2.0 * b + 3.0 * a) / denominator


def gamma_segment_discriminant(b):
    """
    Discriminant of 8a^2 + (16b - 8/3)a + (b - 4b^2) = 0, the intersection of
    gamma(b) with a + c = 1/3 - 2b. Equals (3456b^2 - 1056b + 64)/9.
    """
    return 384.0 * (b - 2.0 / 9.0) * (b - 1.0 / 12.0)


def gamma_segment_roots(b):
    """
    Points (a, c) where gamma(b) meets the segment a + c = 1/3 - 2b,
    sorted by a. Empty when the discriminant is negative, a single
    tangency point when it vanishes (b = 2/9).
    """
    disc = gamma_segment_discriminant(b)
    if disc < 0:
        return ()
    centre = (8.0 / 3.0 - 16.0 * b) / 16.0
    if disc == 0:
        roots = (centre,)
    else:
        half = math.sqrt(disc) / 16.0
        roots = (centre - half, centre + half)
    return tuple((a, 1.0 / 3.0 - 2.0 * b - a) for a in roots)
