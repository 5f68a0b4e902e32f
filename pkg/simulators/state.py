"""The simulation state: (u, eta) sampled on a periodic grid"""

from dataclasses import dataclass

import numpy as np

from spectral.grid import Grid


def _snapshot(values):
    values = np.array(values, dtype=np.float64)
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class FieldPair:
    """
    Immutable (u, eta) pair. Arrays are copied and marked read-only,
    so a FieldPair handed to a callback is a snapshot.
    """

    u: np.ndarray
    eta: np.ndarray
    grid: Grid

    def __post_init__(self):
        u, eta = _snapshot(self.u), _snapshot(self.eta)
        self.grid.check(u, eta)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "eta", eta)

    @classmethod
    def zeros(cls, grid):
        return cls(np.zeros(grid.N), np.zeros(grid.N), grid)

    def axpy(self, scale, other):
        """self + scale * other"""
        return FieldPair(self.u + scale * other.u, self.eta + scale * other.eta, self.grid)

    def is_finite(self):
        return bool(np.all(np.isfinite(self.u)) and np.all(np.isfinite(self.eta)))

    def sup_norm(self):
        """sup|u| + sup|eta|"""
        return float(np.max(np.abs(self.u)) + np.max(np.abs(self.eta)))

    def outer_amplitude(self, fraction=0.1):
        """max |u|, |eta| over the outer `fraction` of the domain."""
        mask = self.grid.outer_region(fraction)
        return float(max(np.max(np.abs(self.u[mask])), np.max(np.abs(self.eta[mask]))))

    def reflected(self):
        """(u(-x), eta(-x)) on the same nodes."""
        index = (-np.arange(self.grid.N)) % self.grid.N
        return FieldPair(self.u[index], self.eta[index], self.grid)

    def distance(self, other):
        """sup|u - u'| + sup|eta - eta'|"""
        return float(np.max(np.abs(self.u - other.u)) + np.max(np.abs(self.eta - other.eta)))
