"""Explicit Dehn-filling constants and hypothesis gates.

Everything here is closed-form double-precision arithmetic; the formulas are
benign enough that a relative tolerance of 1e-9 is honest without intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .cone_flow import derive_hypothesis_constants
from .cusp_model import BoundCertificate

__all__ = [
    "FillingParams",
    "TightnessInput",
    "K_squared",
    "K_squared_branches",
    "F_constant",
    "prop22_threshold",
    "prop22_gate",
    "prop22_factor",
    "prop22_volume_interval",
    "fdtc_geometric_lower_bound",
    "tightness_certificate",
]

LOG3 = math.log(3)
# the drift of the skew estimate, 92 = ceil((2 pi)^2 * 2.3089)
SKEW_DRIFT = 92


@dataclass(frozen=True)
class FillingParams:
    epsilon: float = LOG3
    J: float = 2.0

    def __post_init__(self):
        if not 0 < self.epsilon <= LOG3 * (1 + 1e-15):
            raise ValueError(f"epsilon must lie in (0, log 3], got {self.epsilon}")
        if not self.J > 1:
            raise ValueError(f"J must exceed 1, got {self.J}")


@dataclass(frozen=True)
class TightnessInput:
    l: float
    tau: float
    chi: int

    def __post_init__(self):
        if not self.l > 0:
            raise ValueError("l must be positive")
        if self.chi >= 0:
            raise ValueError("chi must be negative")
        if not -math.pi < self.tau <= math.pi:
            raise ValueError("tau must lie in (-pi, pi]")


def _need_negative_chi(chi: int) -> None:
    if chi >= 0:
        raise ValueError(f"Euler characteristic must be negative, got {chi}")


def K_squared_branches(p: FillingParams) -> tuple[float, float]:
    eps = p.epsilon
    first = 2 * math.pi * 6771 * math.cosh(0.6 * eps + 0.1475) ** 5 / eps**5 + 11.7
    second = 2 * math.pi * 11.35 / (eps**2.5 * math.log(p.J)) + 11.7
    return first, second


def K_squared(p: FillingParams) -> float:
    """Square of the normalised-length threshold for a J-bi-Lipschitz filling."""
    return max(K_squared_branches(p))


def F_constant(chi: int, p: FillingParams) -> float:
    _need_negative_chi(chi)
    a = abs(chi)
    return K_squared(p) * (2 + a) * (1 + 19296 * a**6) + 3


def prop22_threshold(chi: int, c: float) -> float:
    _need_negative_chi(chi)
    return c * (1 + 3216 * abs(chi) ** 5) + 3


def prop22_gate(fd_values: Iterable[float], chi: int, c: float) -> BoundCertificate:
    """Every |fD| must strictly exceed c (1 + 3216 |chi|^5) + 3.

    lhs is the threshold and rhs the smallest |fD| so that slack is the
    margin; an empty list holds vacuously with rhs = inf.
    """
    if not c > 2 * math.pi:
        raise ValueError("c must exceed 2 pi")
    fds = [float(x) for x in fd_values]
    thr = prop22_threshold(chi, c)
    smallest = min((abs(x) for x in fds), default=math.inf)
    return BoundCertificate(
        "prop22",
        {"fd": fds, "chi": chi, "c": c},
        thr,
        smallest,
        smallest > thr,
        True,
    )


def prop22_factor(c: float) -> float:
    if not c > 2 * math.pi:
        raise ValueError("c must exceed 2 pi")
    return (1 - (2 * math.pi / c) ** 2) ** 1.5


def prop22_volume_interval(vol_mapping_torus: float, c: float) -> tuple[float, float]:
    """Filled volume lies in [(1 - (2pi/c)^2)^(3/2) vol, vol]."""
    if not vol_mapping_torus > 0:
        raise ValueError("volume must be positive")
    return prop22_factor(c) * vol_mapping_torus, vol_mapping_torus


def fdtc_geometric_lower_bound(t: TightnessInput) -> float:
    """Lower bound on fD from the length and torsion of a short geodesic."""
    if not t.tau > 0:
        raise ValueError("tau must be positive")
    k = 19296 * abs(t.chi) ** 6
    q = t.l**2 + t.tau**2
    return (2 * math.pi * t.tau / q) * (1 - k * t.l / t.tau) - SKEW_DRIFT * (1 + k) - 3


def tightness_certificate(t: TightnessInput) -> BoundCertificate:
    """fD >= 1 from geometry, valid only inside the small (l, tau) regime.

    The regime is the derived (A, B) for chi; it is one valid choice of the
    existence-only constants, flagged in ``details``.
    """
    bound = fdtc_geometric_lower_bound(t)
    hc = derive_hypothesis_constants(t.chi)
    q = t.l**2 + t.tau**2
    gate_A = q <= hc.A
    gate_B = abs(t.tau) / t.l >= hc.B
    fd_ok = bound >= 1
    hyp_ok = gate_A and gate_B
    reason = None
    if not hyp_ok:
        reason = "hypothesis"
    elif not fd_ok:
        reason = "fdtc"
    return BoundCertificate(
        "tight",
        {"l": t.l, "tau": t.tau, "chi": t.chi},
        1.0,
        bound,
        fd_ok and hyp_ok,
        False,
        {
            "fdtc_bound_holds": fd_ok,
            "hypothesis_holds": hyp_ok,
            "gate_A": gate_A,
            "gate_B": gate_B,
            "A": hc.A,
            "B": hc.B,
            "constants": "derived instantiation",
            "reason": reason,
        },
    )
