"""Cone-angle deformation of a short geodesic and the resulting cusp estimates.

As the cone angle alpha around a short geodesic shrinks from 2*pi to 0, its
length l and torsion tau obey

    dl/dalpha   = (l / alpha) * (1 + 4 alpha^2 x)
    dtau/dalpha = tau / alpha + 4 alpha y l

with |x|, |y| <= 1 / (4 alpha^2 sinh^2 R), R the tube radius. The quantity
omega = alpha tau / (l^2 + tau^2) tends to the cusp skew as alpha -> 0, so a
bound on |d omega / dt| with t = alpha^2 encloses the skew in terms of the
data at alpha = 2*pi. The companion quantity alpha l / (l^2 + tau^2) (which
tends to height / boundary length) obeys the same rate bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cusp_model import FlatTorus
from .errors import HypothesisViolation
from .interval import PI, Interval, monotone

__all__ = [
    "ConeState",
    "TubeBoundary",
    "HypothesisConstants",
    "R_MIN",
    "ALPHA_L_COEFF",
    "SUP_RATIO_BOUND",
    "DOMEGA_BOUND",
    "AUX_RATE_BOUND",
    "DRIFT_BOUND",
    "AUX_DRIFT_BOUND",
    "tube_boundary",
    "tube_to_def1_torus",
    "omega",
    "height_quantity",
    "ratio_function",
    "sup_ratio_constant",
    "alpha_l_lower",
    "rate_profile",
    "domega_dt_global_bound",
    "aux_rate_bound",
    "drift_enclosure",
    "central_solution",
    "domega_dalpha",
    "deformation_rhs",
    "perturbation_bound",
    "minimal_radius",
    "adversarial_flow",
    "hypothesis_limits",
    "derive_hypothesis_constants",
    "check_hypothesis_gates",
    "lemma28_estimates",
    "constant_chain",
]

TWO_PI = 2 * math.pi

# Published constants of the deformation estimate.
R_MIN = 0.531
ALPHA_L_COEFF = 3.3957
SUP_RATIO_BOUND = 1.4572
DOMEGA_BOUND = 2.3089
AUX_RATE_BOUND = 1.5845
DRIFT_BOUND = 92.0
AUX_DRIFT_BOUND = 62.5536
LENGTH_CEILING = 0.111
LAT_NORMALIZED_LOSS = 16.17
MIN_CUSP_AREA = math.sqrt(3) / 4


@dataclass(frozen=True)
class ConeState:
    alpha: float
    l: float
    tau: float
    R: float

    def __post_init__(self):
        if not 0 < self.alpha <= TWO_PI:
            raise ValueError(f"alpha must lie in (0, 2pi], got {self.alpha}")
        if not self.l > 0:
            raise ValueError("l must be positive")
        if not self.R > 0:
            raise ValueError("R must be positive")


@dataclass(frozen=True)
class TubeBoundary:
    m: float
    h: float
    tw: float

    def __post_init__(self):
        if not (self.m > 0 and self.h > 0):
            raise ValueError("m and h must be positive")


@dataclass(frozen=True)
class HypothesisConstants:
    """Smallness constants: l^2 + tau^2 <= A and |tau| / l >= B at alpha = 2pi."""

    A: float
    B: float
    chi: int

    def __post_init__(self):
        if self.chi >= 0:
            raise ValueError("chi must be negative")
        if not 0 < self.A < LENGTH_CEILING**2:
            raise ValueError(f"A must lie in (0, {LENGTH_CEILING**2})")
        if not self.B > 1:
            raise ValueError("B must exceed 1")


def tube_boundary(s: ConeState) -> TubeBoundary:
    return TubeBoundary(
        s.alpha * math.sinh(s.R), s.l * math.cosh(s.R), s.tau * math.sinh(s.R)
    )


def tube_to_def1_torus(t: TubeBoundary) -> FlatTorus:
    """Rewrite the lattice <(m, 0), (tw, h)> with the meridian-free generator first.

    (tw, h) is the boundary slope; rotating it onto the x-axis gives
    a = |(tw, h)| and puts the meridian (m, 0) at (m tw / a, m h / a).
    """
    a = math.hypot(t.tw, t.h)
    return FlatTorus(a, t.m * t.tw / a, t.m * t.h / a)


def omega(s: ConeState) -> float:
    return s.alpha * s.tau / (s.l**2 + s.tau**2)


def height_quantity(s: ConeState) -> float:
    """alpha l / (l^2 + tau^2), the limit of height over boundary length."""
    return s.alpha * s.l / (s.l**2 + s.tau**2)


def ratio_function(l, tau):
    """l^2 (l^2 + 2 tau l + tau^2) / (l^2 + tau^2)^2; works on arrays."""
    return l**2 * (l + tau) ** 2 / (l**2 + tau**2) ** 2


def sup_ratio_constant() -> float:
    """Supremum of |ratio_function|.

    With u = tau / l the function is (1 + u)^2 / (1 + u^2)^2; its derivative
    vanishes at u = sqrt(2) - 1, where the value is (3 + 2 sqrt 2) / 4.
    """
    value = (3 + 2 * math.sqrt(2)) / 4
    assert value <= SUP_RATIO_BOUND
    return value


def _sup_ratio_enclosure() -> Interval:
    r2 = Interval.point(2.0).sqrt()
    return (3 + 2 * r2) / 4


def alpha_l_lower(R: float) -> float:
    """Lower bound 3.3957 tanh R / cosh 2R on alpha * l along the deformation."""
    if not R > 0:
        raise ValueError("R must be positive")
    return ALPHA_L_COEFF * math.tanh(R) / math.cosh(2 * R)


def rate_profile(z):
    """(1 + z^2) / z^3, decreasing on (0, 1); works on arrays."""
    return (1 + z * z) / z**3


def _rate_enclosure(numerator: Interval) -> Interval:
    # |d omega/dt| <= numerator * |x| * 4 alpha^2 ... collapses to
    # numerator / (alpha l) * 1/sinh^2 R, with alpha l >= 3.3957 tanh R / cosh 2R
    # and cosh 2R / (tanh R sinh^2 R) = (1 + tanh^2 R) / tanh^3 R.
    z = monotone(math.tanh, Interval.point(R_MIN))
    profile = (1 + z.sqr()) / (z**3)
    return numerator / (2 * Interval.point(ALPHA_L_COEFF)) * profile


def domega_dt_global_bound() -> float:
    """Upper end of the enclosure of 1.4572 / (2 * 3.3957) * (1 + z^2) / z^3 at z = tanh 0.531."""
    value = _rate_enclosure(Interval.point(SUP_RATIO_BOUND)).hi
    assert value <= DOMEGA_BOUND, value
    return value


def aux_rate_bound() -> float:
    """The same pipeline with numerator 1 (|x| and |y| bounded separately)."""
    value = _rate_enclosure(Interval.point(1.0)).hi
    assert value <= AUX_RATE_BOUND, value
    return value


def drift_enclosure(q_end: float, rate_bound: float) -> Interval:
    """Enclosure of a quantity at t = 0 given its value at t = (2 pi)^2."""
    if rate_bound < 0:
        raise ValueError("rate bound must be non-negative")
    if rate_bound == 0:
        return Interval.point(q_end)
    half = (Interval.point(rate_bound) * (2 * PI).sqr()).hi
    return Interval.around(q_end, half)


def central_solution(alpha: float, l0: float, tau0: float) -> tuple[float, float]:
    """Unperturbed flow (x = y = 0) from (l0, tau0) at alpha = 2 pi."""
    if not 0 < alpha <= TWO_PI:
        raise ValueError("alpha must lie in (0, 2pi]")
    r = alpha / TWO_PI
    return l0 * r, tau0 * r


def domega_dalpha(alpha, l, tau, x, y):
    """d omega / d alpha along the deformation; works on arrays."""
    q = l * l + tau * tau
    return 4 * alpha**2 / q**2 * (l**3 * y - 2 * tau * l**2 * x - tau**2 * l * y)


def deformation_rhs(alpha, l, tau, x, y):
    """(dl/dalpha, dtau/dalpha); works on arrays."""
    return l / alpha * (1 + 4 * alpha**2 * x), tau / alpha + 4 * alpha * y * l


def perturbation_bound(alpha, R):
    """Bound on |x| and |y|: 1 / (4 alpha^2 sinh^2 R)."""
    return 1.0 / (4 * alpha**2 * np.sinh(R) ** 2)


def minimal_radius(alpha_l, iters: int = 80):
    """Smallest R >= R_MIN compatible with the alpha*l lower bound; works on arrays.

    alpha_l_lower is decreasing on [R_MIN, inf), so this is the root of
    alpha_l_lower(R) = alpha_l when alpha_l is below alpha_l_lower(R_MIN),
    and R_MIN otherwise. Bisection keeps the upper end, which is admissible.
    """
    al = np.asarray(alpha_l, dtype=float)
    lo = np.full(al.shape, R_MIN)
    hi = np.maximum(R_MIN, 0.5 * np.log(4 * ALPHA_L_COEFF / np.maximum(al, 1e-300)) + 1.0)

    def g(r):
        return ALPHA_L_COEFF * np.tanh(r) / np.cosh(2 * r)

    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        ok = g(mid) <= al
        hi = np.where(ok, mid, hi)
        lo = np.where(ok, lo, mid)
    return np.where(g(np.full(al.shape, R_MIN)) <= al, R_MIN, hi)


def adversarial_flow(
    l0: np.ndarray,
    tau0: np.ndarray,
    xs: np.ndarray,
    ys: np.ndarray,
    alpha_min: float = 1e-3 * TWO_PI,
    steps: int = 1000,
    greedy: np.ndarray | None = None,
) -> dict[str, np.ndarray]:
    """Integrate the perturbed flow from alpha = 2 pi down to alpha_min.

    Trajectories run in parallel along axis 0. The perturbations are
    x = xs * bound, y = ys * bound with xs, ys in [-1, 1] of shape
    (trajectories, segments): piecewise constant over equal segments in
    log alpha. Rows flagged in ``greedy`` instead pick, at every step, the
    signs that push omega up fastest. R is the smallest radius allowed by the
    alpha * l bound. Uses RK4 in s = log alpha with dl/ds = l (1 + 4 a^2 x),
    dtau/ds = tau + 4 a^2 y l, controls frozen over each step.
    """
    l = np.array(l0, dtype=float)
    tau = np.array(tau0, dtype=float)
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    ntraj, nseg = xs.shape
    if greedy is None:
        greedy = np.zeros(ntraj, dtype=bool)
    s_grid = np.linspace(math.log(TWO_PI), math.log(alpha_min), steps + 1)
    alphas = np.exp(s_grid)
    h = s_grid[1] - s_grid[0]
    om = np.empty((steps + 1, ntraj))
    ht = np.empty((steps + 1, ntraj))
    om[0] = TWO_PI * tau / (l * l + tau * tau)
    ht[0] = TWO_PI * l / (l * l + tau * tau)
    R_used = np.empty((steps, ntraj))

    def rhs(s, l, tau, xh, yh, R):
        # xh, yh are the normalised controls; 4 a^2 x = xh / sinh^2 R
        k = 1.0 / np.sinh(R) ** 2
        return l * (1 + xh * k), tau + yh * l * k

    for i in range(steps):
        a = alphas[i]
        seg = min(int(i * nseg / steps), nseg - 1)
        xh, yh = xs[:, seg], ys[:, seg]
        if greedy.any():
            # moving towards smaller alpha, omega grows when d omega/d alpha < 0
            gx = np.sign(tau)
            gy = -np.sign(l * l - tau * tau)
            xh = np.where(greedy, gx, xh)
            yh = np.where(greedy, gy, yh)
        # R is fixed per step from the smallest alpha*l over the step's stages
        R = minimal_radius(np.minimum(a * l, alphas[i + 1] * l) * 0.999)
        R_used[i] = R
        s = s_grid[i]
        k1 = rhs(s, l, tau, xh, yh, R)
        k2 = rhs(s + h / 2, l + h / 2 * k1[0], tau + h / 2 * k1[1], xh, yh, R)
        k3 = rhs(s + h / 2, l + h / 2 * k2[0], tau + h / 2 * k2[1], xh, yh, R)
        k4 = rhs(s + h, l + h * k3[0], tau + h * k3[1], xh, yh, R)
        l = l + h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
        tau = tau + h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
        b = alphas[i + 1]
        q = l * l + tau * tau
        om[i + 1] = b * tau / q
        ht[i + 1] = b * l / q
    return {"alpha": alphas, "omega": om, "height": ht, "R": R_used, "l": l, "tau": tau}


def hypothesis_limits(chi: int) -> dict[str, tuple[float, bool]]:
    """Upper limits on A from each gate, with a flag for strict gates."""
    ln2 = math.log(2)
    # C1 = 2pi/sqrt(A) - 62.5536 with exp(-1.5845 (2pi)^2 / C1) >= 1/2
    c1_min = AUX_RATE_BOUND * TWO_PI**2 / ln2
    # (2pi/sqrt(A) - 16.17) * (sqrt(3)/4)^(1/2) > 12|chi|
    lat_min = LAT_NORMALIZED_LOSS + 2 * 6 * abs(chi) / math.sqrt(MIN_CUSP_AREA)
    return {
        "length": (LENGTH_CEILING**2, True),
        "pi": (math.pi**2, True),
        "C1": ((TWO_PI / (AUX_DRIFT_BOUND + c1_min)) ** 2, False),
        "chi": ((TWO_PI / lat_min) ** 2, True),
    }


def check_hypothesis_gates(A: float, B: float, chi: int) -> dict[str, bool]:
    """Re-evaluate every smallness requirement on (A, B) directly."""
    root = math.sqrt(A)
    c1 = TWO_PI / root - AUX_DRIFT_BOUND
    c2 = (B - 1) / 2
    return {
        "A<0.111^2": A < LENGTH_CEILING**2,
        "A<pi^2": A < math.pi**2,
        "C1>0": c1 > 0,
        "C1 drift": c1 > 0 and math.exp(-AUX_RATE_BOUND * TWO_PI**2 / c1) >= 0.5,
        "C2": c2 > 0 and TWO_PI / root - AUX_DRIFT_BOUND / c2**2 > 2,
        "lat>2bdy": (TWO_PI / root - LAT_NORMALIZED_LOSS) * math.sqrt(MIN_CUSP_AREA)
        > 2 * 6 * abs(chi),
    }


@lru_cache(maxsize=None)
def derive_hypothesis_constants(chi: int, margin: float = 0.01) -> HypothesisConstants:
    """Constants (A, B) meeting every gate of the cusp estimate.

    A is the binding minimum of the gate limits shrunk by ``margin``; B comes
    from the least C2 with 2pi/sqrt(A) - 62.5536/C2^2 > 2, grown by ``margin``.
    """
    if chi >= 0:
        raise ValueError("chi must be negative")
    if not 0 < margin < 1:
        raise ValueError("margin must lie in (0, 1)")
    A = (1 - margin) * min(v for v, _ in hypothesis_limits(chi).values())
    c2_min = math.sqrt(AUX_DRIFT_BOUND / (TWO_PI / math.sqrt(A) - 2))
    B = 1 + 2 * (1 + margin) * c2_min
    gates = check_hypothesis_gates(A, B, chi)
    failed = [k for k, ok in gates.items() if not ok]
    assert not failed, failed
    return HypothesisConstants(A, B, chi)


def lemma28_estimates(
    l2pi: float, tau2pi: float, hc: HypothesisConstants
) -> tuple[Interval, Interval]:
    """Enclosures of the cusp skew and of height / boundary length.

    Centres are 2 pi tau / (l^2 + tau^2) and 2 pi l / (l^2 + tau^2), the
    values of omega and its companion at alpha = 2 pi; the half-width is 92.
    """
    if not l2pi > 0:
        raise ValueError("l must be positive")
    q = l2pi**2 + tau2pi**2
    if not q <= hc.A:
        raise HypothesisViolation("A", f"l^2 + tau^2 = {q:.6g} exceeds A = {hc.A:.6g}")
    if not abs(tau2pi) / l2pi >= hc.B:
        raise HypothesisViolation(
            "B", f"|tau|/l = {abs(tau2pi) / l2pi:.6g} is below B = {hc.B:.6g}"
        )
    L = Interval.point(l2pi)
    T = Interval.point(tau2pi)
    Q = L.sqr() + T.sqr()
    sk = Interval.around(2 * PI * T / Q, DRIFT_BOUND)
    hr = Interval.around(2 * PI * L / Q, DRIFT_BOUND)
    return sk, hr


def constant_chain() -> list[tuple[str, float, float, bool]]:
    """Every numeric link of the estimate as (name, computed, published, ok)."""
    sup = _sup_ratio_enclosure().hi
    rate = domega_dt_global_bound()
    aux = aux_rate_bound()
    two_pi_sq = (2 * PI).sqr()
    aux_drift = (Interval.point(AUX_RATE_BOUND) * two_pi_sq).hi
    drift = (Interval.point(DOMEGA_BOUND) * two_pi_sq).hi
    z = np.linspace(1e-3, 1 - 1e-3, 2001)
    decreasing = bool(np.all(np.diff(rate_profile(z)) < 0))
    rows = [
        ("sup_ratio", sup, SUP_RATIO_BOUND, sup <= SUP_RATIO_BOUND),
        ("domega_dt", rate, DOMEGA_BOUND, rate <= DOMEGA_BOUND),
        ("aux_rate", aux, AUX_RATE_BOUND, aux <= AUX_RATE_BOUND),
        ("aux_drift", aux_drift, AUX_DRIFT_BOUND, aux_drift <= AUX_DRIFT_BOUND + 1e-3),
        ("drift", drift, DRIFT_BOUND, drift <= DRIFT_BOUND),
        ("profile_decreasing", float(decreasing), 1.0, decreasing),
    ]
    return rows
