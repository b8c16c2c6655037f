"""Flat-torus cusp model and checkers for the coarse cusp inequalities.

A maximal cusp boundary is the Euclidean torus R^2 / <(a, 0), (b, c)>, with
(a, 0) the boundary slope of the fibre and (b, c) the lateral slope. Every
certificate records both sides of its inequality and the slack rhs - lhs so
callers can see how sharp an instance is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

__all__ = [
    "FlatTorus",
    "BoundCertificate",
    "skew",
    "slope_length",
    "normalized_length",
    "lemma8_certificate",
    "lemma9_certificate",
    "thm2_certificate",
    "thm10_certificate",
    "lemma18_certificate",
    "cor19_certificate",
]


@dataclass(frozen=True)
class FlatTorus:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (self.a > 0 and self.c > 0):
            raise ValueError(f"need a > 0 and c > 0, got a={self.a}, c={self.c}")

    @property
    def area(self) -> float:
        return self.a * self.c

    @property
    def height(self) -> float:
        return self.c

    def remark(self, twists: int = 1) -> FlatTorus:
        """Same torus with the lateral slope replaced by lateral + twists * boundary."""
        return FlatTorus(self.a, self.b + twists * self.a, self.c)


@dataclass(frozen=True)
class BoundCertificate:
    name: str
    inputs: dict
    lhs: float
    rhs: float
    holds: bool
    strict: bool = False
    details: dict = field(default_factory=dict)

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "inputs": dict(self.inputs),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "slack": self.slack,
        }
        if self.details:
            out["details"] = dict(self.details)
        return out


def _leq(name: str, inputs: dict, lhs: float, rhs: float, **details) -> BoundCertificate:
    return BoundCertificate(name, inputs, lhs, rhs, lhs <= rhs, False, details)


def _need_negative_chi(chi: int) -> None:
    if chi >= 0:
        raise ValueError(f"Euler characteristic must be negative, got {chi}")


def skew(t: FlatTorus) -> float:
    return t.b / t.a


def slope_length(t: FlatTorus, p: int, q: int) -> float:
    """Length of p*(a,0) + q*(b,c)."""
    if p == 0 and q == 0:
        raise ValueError("(0, 0) is not a slope")
    return math.hypot(p * t.a + q * t.b, q * t.c)


def normalized_length(t: FlatTorus, p: int, q: int) -> float:
    return slope_length(t, p, q) / math.sqrt(t.area)


def lemma8_certificate(t: FlatTorus, slopes: Iterable[tuple[int, int]]) -> BoundCertificate:
    """Every slope on a maximal cusp has length at least 1."""
    slopes = [tuple(s) for s in slopes]
    if not slopes:
        raise ValueError("need at least one slope")
    shortest = min(slopes, key=lambda s: slope_length(t, *s))
    length = slope_length(t, *shortest)
    inputs = {"a": t.a, "b": t.b, "c": t.c, "slopes": [list(s) for s in slopes]}
    # lhs <= rhs form: 1 <= min length
    return _leq("lemma8", inputs, 1.0, length, shortest=list(shortest))


def lemma9_certificate(l_bdy: float, chi: int) -> BoundCertificate:
    _need_negative_chi(chi)
    if not l_bdy > 0:
        raise ValueError("boundary length must be positive")
    return _leq("lemma9", {"l": l_bdy, "chi": chi}, l_bdy, 6 * abs(chi))


def thm2_certificate(fd: float, sk: float, chi: int, d_arc: float) -> BoundCertificate:
    """|fD - sk| <= 6|chi| d + 3."""
    _need_negative_chi(chi)
    if d_arc < 0:
        raise ValueError("arc-graph distance must be non-negative")
    inputs = {"fd": fd, "sk": sk, "chi": chi, "d": d_arc}
    return _leq("thm2", inputs, abs(fd - sk), 6 * abs(chi) * d_arc + 3)


def thm10_certificate(height: float, chi: int, d_arc: float) -> BoundCertificate:
    """d / (536 chi^4) < height <= 3|chi| d.

    Two-sided: lhs/rhs describe the upper inequality, the lower one is
    reported in ``details``. ``holds`` requires both.
    """
    _need_negative_chi(chi)
    if not d_arc > 0 or not height > 0:
        raise ValueError("need d > 0 and height > 0")
    lower = d_arc / (536 * chi**4)
    upper = 3 * abs(chi) * d_arc
    lower_ok = lower < height
    upper_ok = height <= upper
    return BoundCertificate(
        "thm10",
        {"height": height, "chi": chi, "d": d_arc},
        height,
        upper,
        lower_ok and upper_ok,
        False,
        {"lower": lower, "lower_holds": lower_ok, "upper_holds": upper_ok,
         "lower_slack": height - lower},
    )


def lemma18_certificate(l_lat: float, chi: int, d_pointed: float) -> BoundCertificate:
    _need_negative_chi(chi)
    if d_pointed < 0:
        raise ValueError("pointed arc distance must be non-negative")
    inputs = {"l": l_lat, "chi": chi, "d": d_pointed}
    return _leq("lemma18", inputs, l_lat, 6 * abs(chi) * d_pointed)


def cor19_certificate(
    sk_uv: float,
    sk_u: float,
    sk_v: float,
    chi: int,
    d_u: float,
    d_v: float,
    d_uv: float,
) -> BoundCertificate:
    """Skew is additive up to 6|chi|(d_u + d_v + d_uv) + 10."""
    _need_negative_chi(chi)
    if min(d_u, d_v, d_uv) < 0:
        raise ValueError("distances must be non-negative")
    inputs = {"sk_uv": sk_uv, "sk_u": sk_u, "sk_v": sk_v, "chi": chi,
              "d_u": d_u, "d_v": d_v, "d_uv": d_uv}
    defect = abs(sk_uv - sk_u - sk_v)
    return _leq("cor19", inputs, defect, 6 * abs(chi) * (d_u + d_v + d_uv) + 10)
