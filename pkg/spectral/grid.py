"""
Uniform periodic grid on [-L, L) and its real Fourier transform.
The torus stands in for the real line; every observable in the lab
is weighted by an exponentially localized function, so wraparound
stays below quadrature tolerance for decaying states.
"""

import numpy as np


class GridMismatchError(ValueError):
    """Raised when a field is not sampled on the expected grid."""


def _frozen(values):
    values = np.array(values, dtype=np.float64)
    values.setflags(write=False)
    return values


class Grid:
    """Uniform grid with N points (power of two) on [-L, L)."""

    def __init__(self, N, L):
        N = int(N)
        if N < 4 or N & (N - 1):
            raise ValueError(f"N must be a power of two >= 4, got {N}")
        if L <= 0:
            raise ValueError(f"L must be positive, got {L}")
        self.N = N
        self.L = float(L)
        self.dx = 2.0 * self.L / N
        self.nodes = _frozen(-self.L + self.dx * np.arange(N))
        # k_m = pi m / L, in numpy's fftfreq ordering
        self.wavenumbers = _frozen(2.0 * np.pi * np.fft.fftfreq(N, d=self.dx))
        # non-negative half used by the real transform
        self.rwavenumbers = _frozen(2.0 * np.pi * np.fft.rfftfreq(N, d=self.dx))

        ik = 1j * self.rwavenumbers
        ik[-1] = 0.0  # odd derivatives drop the Nyquist mode
        ik.setflags(write=False)
        self.ik = ik

        helmholtz = 1.0 / (1.0 + self.rwavenumbers**2)
        helmholtz.setflags(write=False)
        self.helmholtz_symbol = helmholtz

        mask = np.arange(self.rwavenumbers.size) <= N // 3
        mask.setflags(write=False)
        self.dealias_mask = mask

    def __eq__(self, other):
        return isinstance(other, Grid) and self.N == other.N and self.L == other.L

    def __hash__(self):
        return hash((self.N, self.L))

    def __repr__(self):
        return f"Grid(N={self.N}, L={self.L})"

    def check(self, *fields):
        """Raise GridMismatchError unless every field has shape (N,)."""
        for field in fields:
            if np.ndim(field) != 1 or np.shape(field)[0] != self.N:
                raise GridMismatchError(
                    f"field of shape {np.shape(field)} is not sampled on {self!r}"
                )

    def check_weights(self, *families):
        """Raise GridMismatchError unless every weight family was sampled on this grid."""
        for family in families:
            if family.grid != self:
                raise GridMismatchError(
                    f"{family.kind} weight sampled on {family.grid!r} is used on {self!r}"
                )

    def forward(self, values):
        """Real FFT of a sampled field."""
        return np.fft.rfft(values)

    def backward(self, coefficients):
        """Inverse of forward."""
        return np.fft.irfft(coefficients, n=self.N)

    def l2_norm(self, values):
        """Grid L2 norm sqrt(dx * sum f^2)."""
        return float(np.sqrt(self.dx * np.sum(np.asarray(values) ** 2)))

    def spectral_l2_norm(self, coefficients):
        """The same norm computed from rfft coefficients (Parseval)."""
        power = np.abs(coefficients) ** 2
        total = power[0] + power[-1] + 2.0 * np.sum(power[1:-1])
        return float(np.sqrt(self.dx * total / self.N))

    def outer_region(self, fraction=0.1):
        """Boolean mask of nodes in the outer `fraction` of the domain."""
        return np.abs(self.nodes) > (1.0 - fraction) * self.L
