"""Closed float intervals with outward padding.

Every arithmetic result is widened by ``PAD_ULPS`` units in the last place on
each side. This is a desk-scale safeguard against rounding, not a formally
rigorous interval library (no directed rounding modes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

__all__ = ["Interval", "PAD_ULPS", "monotone"]

PAD_ULPS = 4


def _down(x: float, k: int = PAD_ULPS) -> float:
    for _ in range(k):
        x = math.nextafter(x, -math.inf)
    return x


def _up(x: float, k: int = PAD_ULPS) -> float:
    for _ in range(k):
        x = math.nextafter(x, math.inf)
    return x


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: float) -> Interval:
        return cls(x, x)

    @classmethod
    def padded(cls, lo: float, hi: float) -> Interval:
        return cls(_down(lo), _up(hi))

    @classmethod
    def around(cls, center: Interval | float, radius: float) -> Interval:
        c = center if isinstance(center, Interval) else cls.point(center)
        return c + cls(-radius, radius)

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def radius(self) -> float:
        return 0.5 * self.width

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def hull(self, other: Interval) -> Interval:
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def _coerce(self, other) -> Interval:
        return other if isinstance(other, Interval) else Interval.point(float(other))

    def __add__(self, other) -> Interval:
        o = self._coerce(other)
        return Interval.padded(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other) -> Interval:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Interval:
        return self._coerce(other) - self

    def __mul__(self, other) -> Interval:
        o = self._coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval.padded(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other) -> Interval:
        o = self._coerce(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("divisor interval contains 0")
        return self * Interval.padded(1.0 / o.hi, 1.0 / o.lo)

    def __rtruediv__(self, other) -> Interval:
        return self._coerce(other) / self

    def sqr(self) -> Interval:
        if self.lo >= 0:
            return Interval.padded(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Interval.padded(self.hi * self.hi, self.lo * self.lo)
        return Interval(0.0, _up(max(self.lo * self.lo, self.hi * self.hi)))

    def __pow__(self, k: int) -> Interval:
        if k == 2:
            return self.sqr()
        if k < 0:
            return 1.0 / (self**-k)
        out = Interval.point(1.0)
        for _ in range(k):
            out = out * self
        return out

    def sqrt(self) -> Interval:
        if self.lo < 0:
            raise ValueError("sqrt of an interval reaching below 0")
        return Interval.padded(math.sqrt(self.lo), math.sqrt(self.hi))

    def __abs__(self) -> Interval:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0.0, max(-self.lo, self.hi))


def monotone(f: Callable[[float], float], x: Interval, increasing: bool = True) -> Interval:
    """Enclosure of a monotone function over an interval."""
    a, b = f(x.lo), f(x.hi)
    return Interval.padded(a, b) if increasing else Interval.padded(b, a)


PI = Interval.padded(math.pi, math.pi)
