"""
Physical (a, b, c, d) parameters of the abcd system, their admissibility
ledger, the (nu, b) chart and the b = d = 1 stretching to normalized (a, c).

Admissibility is checked through the interval conditions B2, B3 instead
of storing theta.
"""

import math
from dataclasses import dataclass, field

from parameter_space.exceptions import InadmissibleParametersError
from parameter_space.intervals import UNIT_INTERVAL, Interval

ZERO_SURFACE_TENSION = 1.0 / 3.0


@dataclass(frozen=True)
class PhysicalParameters:
    """(a, b, c, d); d is stored explicitly so b = d can be checked."""

    a: float
    b: float
    c: float
    d: float


@dataclass(frozen=True)
class NormalizedParameters:
    """
    (a, c) of the normalized system, b_origin is the pre-stretching b
    (None when the pair was given directly).
    """

    a: float
    c: float
    b_origin: float | None = None

    def __post_init__(self):
        if not (self.a < 0 and self.c < 0):
            raise InadmissibleParametersError(
                f"normalized parameters need a < 0 and c < 0, got a={self.a}, c={self.c}"
            )


@dataclass(frozen=True)
class NuB:
    nu: float
    b: float


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check.name for check in self.checks if not check.passed]

    def __getitem__(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def validate_physical(p: PhysicalParameters, tol=1e-12) -> ValidationReport:
    """
    Report the membership tests B0, B1(b), B2(b), B3(b) together with
    b = d, b > 0, the zero surface tension sum and the derived b > 1/6.
    Equalities and closed-set memberships use the tolerance `tol`,
    the sign conditions are exact.
    """
    a, b, c, d = p.a, p.b, p.c, p.d
    finite = all(math.isfinite(v) for v in (a, b, c, d))
    checks = [
        CheckResult("finite", finite, f"(a,b,c,d)=({a}, {b}, {c}, {d})"),
        CheckResult("b_equals_d", finite and abs(b - d) <= tol, f"b-d={b - d:.3e}"),
        CheckResult("b_positive", finite and b > 0, f"b={b}"),
        CheckResult(
            "zero_surface_tension",
            finite and abs(a + b + c + d - ZERO_SURFACE_TENSION) <= tol,
            f"a+b+c+d={a + b + c + d:.15g}",
        ),
        CheckResult("B0", finite and a < 0 and c < 0, f"a={a}, c={c}"),
        CheckResult(
            "B1",
            finite and abs(a + c - (1.0 / 3.0 - 2.0 * b)) <= tol,
            f"a+c={a + c:.15g}, 1/3-2b={1.0 / 3.0 - 2.0 * b:.15g}",
        ),
        CheckResult(
            "B2",
            finite and -b - 1.0 / 6.0 - tol <= a <= -b + 1.0 / 3.0 + tol,
            f"{-b - 1.0 / 6.0:.15g} <= a={a} <= {-b + 1.0 / 3.0:.15g}",
        ),
        CheckResult(
            "B3",
            finite and -b - tol <= c <= -b + 0.5 + tol,
            f"{-b:.15g} <= c={c} <= {-b + 0.5:.15g}",
        ),
        CheckResult("b_above_one_sixth", finite and b > 1.0 / 6.0, f"b={b}"),
    ]
    return ValidationReport(tuple(checks))


def from_nu_b(q: NuB) -> PhysicalParameters:
    """(a, b, c, d) = (-nu/2 + 1/3 - b, b, nu/2 - b, b)."""
    a = -q.nu / 2.0 + 1.0 / 3.0 - q.b
    c = q.nu / 2.0 - q.b
    return PhysicalParameters(a=a, b=q.b, c=c, d=q.b)


def theta_of_nu(nu):
    """theta in [0, 1] with nu = 1 - theta^2."""
    return math.sqrt(1.0 - nu)


def admissible_nu_interval(b) -> Interval:
    """[0, 1] intersected with (2/3 - 2b, 2b); empty iff b <= 1/6."""
    return UNIT_INTERVAL.intersect(Interval.open(2.0 / 3.0 - 2.0 * b, 2.0 * b))


def normalize(p: PhysicalParameters, tol=1e-12) -> NormalizedParameters:
    """Stretch to b = d = 1: (a', c') = (a/b, c/b)."""
    report = validate_physical(p, tol=tol)
    if not report.passed:
        raise InadmissibleParametersError(
            f"cannot normalize {p}: failed {', '.join(report.failures())}", report=report
        )
    return NormalizedParameters(a=p.a / p.b, c=p.c / p.b, b_origin=p.b)


def b_from_normalized(n: NormalizedParameters):
    """
    Recover b from a normalized pair through a + c = 1/(3b) - 2.
    Uses b_origin when it is known.
    """
    if n.b_origin is not None:
        return n.b_origin
    total = n.a + n.c + 2.0
    if total <= 0:
        raise InadmissibleParametersError(
            f"a + c = {n.a + n.c} <= -2 has no zero surface tension preimage"
        )
    return 1.0 / (3.0 * total)
