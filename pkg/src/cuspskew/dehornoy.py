"""Dehornoy order, Dehornoy floor and FDTC intervals for braids.

The order is decided by handle reduction: a sigma_i-handle is a subword
sigma_i^e v sigma_i^-e in which v only uses generators of index > i. Replacing
each sigma_{i+1}^d in v by sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e and deleting
the two ends gives an equivalent word. When no handles remain, the
lowest-index generator occurs with a single sign, and that sign is the sign of
the braid (beta > 1 iff it has such a sigma-positive word).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, GarsideForm, compose, normal_form
from .errors import BudgetExceeded

__all__ = [
    "SigmaClass",
    "FdtcInterval",
    "DEFAULT_BUDGET",
    "handle_reduce",
    "sigma_class",
    "compare",
    "dehornoy_floor",
    "fdtc_interval",
]

DEFAULT_BUDGET = 10**6


class SigmaClass(enum.Enum):
    POSITIVE = 1
    NEGATIVE = -1
    TRIVIAL = 0


@dataclass(frozen=True)
class FdtcInterval:
    """Rational enclosure [lo, hi] of the fractional Dehn twist coefficient."""

    lo: Fraction
    hi: Fraction
    depth: int

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        if self.hi - self.lo != Fraction(1, self.depth):
            raise ValueError("interval width must equal 1/depth")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def intersects(self, other: FdtcInterval) -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)


def handle_reduce(w: BraidWord, budget: int = DEFAULT_BUDGET) -> BraidWord:
    """Reduce handles, leftmost-ending first, until none remain.

    Reducing the handle whose right end is leftmost means its interior holds no
    complete handle, which is what Dehornoy's termination argument needs.
    """
    n = w.strands
    word = list(w.letters)
    # state[j] = sign of the last sigma_j not yet shielded by a smaller index
    # (or 0); states[q] is the state before position q.
    state = [0] * n
    positions = [0] * n
    states: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    q = 0
    steps = 0
    while q < len(word):
        if len(states) <= q:
            states.append((tuple(state), tuple(positions)))
        x = word[q]
        j = abs(x)
        s = 1 if x > 0 else -1
        for k in range(j + 1, n):
            state[k] = 0
        if state[j] == -s:
            p = positions[j]
            steps += 1
            if steps > budget:
                raise BudgetExceeded("handle reduction", budget)
            e = -s
            interior: list[int] = []
            up = j + 1
            for y in word[p + 1 : q]:
                if abs(y) == up:
                    d = 1 if y > 0 else -1
                    interior.extend((-e * up, d * j, e * up))
                else:
                    interior.append(y)
            word[p : q + 1] = interior
            del states[p + 1 :]
            saved_state, saved_pos = states[p]
            state = list(saved_state)
            positions = list(saved_pos)
            q = p
            continue
        state[j] = s
        positions[j] = q
        q += 1
    return BraidWord(n, tuple(word))


def sigma_class(w: BraidWord, budget: int = DEFAULT_BUDGET) -> SigmaClass:
    reduced = handle_reduce(w, budget)
    if not reduced.letters:
        return SigmaClass.TRIVIAL
    lowest = min(reduced.letters, key=abs)
    return SigmaClass.POSITIVE if lowest > 0 else SigmaClass.NEGATIVE


def compare(u: BraidWord, v: BraidWord, budget: int = DEFAULT_BUDGET) -> int:
    """-1, 0 or 1 as u < v, u == v or u > v in the Dehornoy order."""
    return -sigma_class(compose(u.inverse(), v), budget).value


def _delta_shifted(form: GarsideForm, m: int) -> BraidWord:
    """Word for Delta^(-2m) * beta, built from beta's normal form."""
    return GarsideForm(form.strands, form.infimum - 2 * m, form.factors).to_word()


def dehornoy_floor(beta: BraidWord, budget: int = DEFAULT_BUDGET) -> int:
    """The m with Delta^2m <= beta < Delta^(2m+2).

    Delta^inf <= beta <= Delta^sup for the Garside infimum and supremum, which
    seeds the bracket [floor(inf/2), ceil(sup/2)]; both ends are re-checked
    and widened by doubling if needed, then bisected.
    """
    form = normal_form(beta)

    def at_least(m: int) -> bool:
        return sigma_class(_delta_shifted(form, m), budget) is not SigmaClass.NEGATIVE

    lo = form.infimum // 2
    hi = -((-form.supremum) // 2)
    step = 1
    while not at_least(lo):
        hi = lo
        lo -= step
        step *= 2
    step = 1
    while at_least(hi + 1):
        lo = hi + 1
        hi += step
        step *= 2
    # invariant: at_least(lo) and not at_least(hi + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if at_least(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def fdtc_interval(beta: BraidWord, k: int, budget: int = DEFAULT_BUDGET) -> FdtcInterval:
    """[floor(beta^k)/k, (floor(beta^k)+1)/k], which contains fD(beta)."""
    if k < 1:
        raise ValueError("depth k must be >= 1")
    f = dehornoy_floor(beta**k, budget)
    return FdtcInterval(Fraction(f, k), Fraction(f + 1, k), k)
