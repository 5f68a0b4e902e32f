"""Coefficients of the quadratic form Q written in canonical variables"""

from dataclasses import astuple, dataclass

from parameter_space.admissibility import NormalizedParameters
from parameter_space.bands import AlphaBeta


@dataclass(frozen=True)
class VirialCoefficients:
    A1: float
    A2: float
    A3: float
    A4: float
    B1: float
    B2: float
    B3: float
    B4: float
    D11: float
    D12: float
    D21: float
    D22: float

    def positive_part(self):
        return (self.A1, self.A2, self.A3, self.A4, self.B1, self.B2, self.B3, self.B4)

    def minimum(self):
        """Smallest of the A and B coefficients."""
        return min(self.positive_part())

    def as_tuple(self):
        return astuple(self)


def virial_coefficients(n: NormalizedParameters, ab: AlphaBeta) -> VirialCoefficients:
    a, c = n.a, n.c
    s = ab.beta - ab.alpha
    return VirialCoefficients(
        A1=0.5,
        A2=s - 1.5 * a,
        A3=(1.0 - a) * s - 2.0 * a - 0.5,
        A4=a * (-s - 0.5),
        B1=0.5,
        B2=-s - 1.5 * c,
        B3=(1.0 - c) * (-s) - 2.0 * c - 0.5,
        B4=c * (s - 0.5),
        D11=-(1.0 + a) * (s - 1.0) / 2.0 - 0.5,
        D12=-a * (-s - 0.5),
        D21=-(1.0 + c) * (-s - 1.0) / 2.0 - 0.5,
        D22=-c * (s - 0.5),
    )
