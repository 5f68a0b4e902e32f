"""Real intervals with open/closed endpoints"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Interval:
    """Interval between lower and upper; each endpoint open or closed."""

    lower: float
    upper: float
    lower_closed: bool = False
    upper_closed: bool = False

    @classmethod
    def open(cls, lower, upper):
        return cls(lower, upper, False, False)

    @classmethod
    def closed(cls, lower, upper):
        return cls(lower, upper, True, True)

    @classmethod
    def empty(cls):
        return cls(0.0, 0.0, False, False)

    def is_empty(self):
        if self.lower > self.upper:
            return True
        if self.lower == self.upper:
            return not (self.lower_closed and self.upper_closed)
        return False

    def contains(self, x):
        if self.is_empty():
            return False
        above = x >= self.lower if self.lower_closed else x > self.lower
        below = x <= self.upper if self.upper_closed else x < self.upper
        return above and below

    def intersect(self, other):
        """Intersection; returns Interval.empty() when disjoint."""
        if self.lower > other.lower:
            lower, lower_closed = self.lower, self.lower_closed
        elif other.lower > self.lower:
            lower, lower_closed = other.lower, other.lower_closed
        else:
            lower, lower_closed = self.lower, self.lower_closed and other.lower_closed

        if self.upper < other.upper:
            upper, upper_closed = self.upper, self.upper_closed
        elif other.upper < self.upper:
            upper, upper_closed = other.upper, other.upper_closed
        else:
            upper, upper_closed = self.upper, self.upper_closed and other.upper_closed

        result = Interval(lower, upper, lower_closed, upper_closed)
        return Interval.empty() if result.is_empty() else result

    def midpoint(self):
        if self.is_empty():
            return math.nan
        return 0.5 * (self.lower + self.upper)

    def length(self):
        return 0.0 if self.is_empty() else self.upper - self.lower

    def bounds(self):
        """(lower, upper), or (nan, nan) when empty; used by the CSV exports."""
        if self.is_empty():
            return math.nan, math.nan
        return self.lower, self.upper

    def __str__(self):
        if self.is_empty():
            return "empty"
        left = "[" if self.lower_closed else "("
        right = "]" if self.upper_closed else ")"
        return f"{left}{self.lower:.12g}, {self.upper:.12g}{right}"


UNIT_INTERVAL = Interval.closed(0.0, 1.0)
