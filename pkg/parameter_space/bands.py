"""
Diagonal bands in the (alpha, beta) plane on which the virial
coefficients are positive, and the selection of (alpha, beta).
"""

from dataclasses import dataclass

from parameter_space.admissibility import NormalizedParameters
from parameter_space.exceptions import EmptyBandIntersectionError


@dataclass(frozen=True)
class Band:
    """{(alpha, beta): alpha + lower < beta < alpha + upper}"""

    lower: float
    upper: float

    def is_empty(self):
        return not self.lower < self.upper

    def contains(self, alpha, beta):
        offset = beta - alpha
        return self.lower < offset < self.upper

    def intersect(self, other):
        return Band(max(self.lower, other.lower), min(self.upper, other.upper))

    def midpoint(self):
        return 0.5 * (self.lower + self.upper)


@dataclass(frozen=True)
class AlphaBeta:
    alpha: float
    beta: float

    @property
    def offset(self):
        return self.beta - self.alpha


def alpha_beta_bands(n: NormalizedParameters):
    """
    (A2, A3, A4):
        A2 = (3a/2, -3c/2)
        A3 = ((1+4a)/(2(1-a)), -(1+4c)/(2(1-c)))
        A4 = (-1/2, 1/2)
    """
    a, c = n.a, n.c
    a2 = Band(1.5 * a, -1.5 * c)
    a3 = Band((1.0 + 4.0 * a) / (2.0 * (1.0 - a)), -(1.0 + 4.0 * c) / (2.0 * (1.0 - c)))
    a4 = Band(-0.5, 0.5)
    return a2, a3, a4


def intersect_bands(bands):
    result = bands[0]
    for band in bands[1:]:
        result = result.intersect(band)
    return result


def select_alpha_beta(n: NormalizedParameters) -> AlphaBeta:
    """alpha = 0 and beta at the midpoint of A2 ∩ A3 ∩ A4."""
    bands = alpha_beta_bands(n)
    common = intersect_bands(bands)
    if common.is_empty():
        empty = [name for name, band in zip(("A2", "A3", "A4"), bands) if band.is_empty()]
        raise EmptyBandIntersectionError(
            f"no admissible (alpha, beta) for a={n.a}, c={n.c}: "
            f"intersection ({common.lower}, {common.upper}) is empty"
            + (f", empty bands: {', '.join(empty)}" if empty else "")
        )
    return AlphaBeta(alpha=0.0, beta=common.midpoint())


def band_inequalities(n: NormalizedParameters, ab: AlphaBeta):
    """The six strict inequalities of the three bands, by name."""
    a2, a3, a4 = alpha_beta_bands(n)
    s = ab.offset
    return {
        "A2_lower": a2.lower < s,
        "A2_upper": s < a2.upper,
        "A3_lower": a3.lower < s,
        "A3_upper": s < a3.upper,
        "A4_lower": a4.lower < s,
        "A4_upper": s < a4.upper,
    }
