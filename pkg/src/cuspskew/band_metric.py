"""Syllable length over the band-twist generating set.

The generators are the half twists Delta_{i..j} on consecutive strands
i..j, written (s_i ... s_{j-1})(s_i ... s_{j-2}) ... (s_i s_{i+1}) s_i. The
syllable length of a braid is the least l such that it is a product of l
powers of generators. Deciding it exactly is a shortest-word problem in an
infinite group, so only the values 0 and 1 (and 2, once 0 and 1 are excluded)
are reported as exact; everything else is an upper bound from a
power-bounded breadth-first search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import inf

from .braid import (
    BraidWord,
    GarsideForm,
    exponent_sum,
    normal_form,
    permutation_of,
)
from .dehornoy import DEFAULT_BUDGET, dehornoy_floor
from .errors import BudgetExceeded

__all__ = [
    "BandGenerator",
    "SyllableBound",
    "band_generators",
    "generator_power_root",
    "syllable_lower_bound",
    "lt_length",
    "conj_min_lt",
    "thm4_threshold",
    "thm4_volume_interval",
]


@dataclass(frozen=True)
class BandGenerator:
    i: int
    j: int
    word: BraidWord

    @property
    def exponent(self) -> int:
        """Exponent sum of the generator, (j-i)(j-i+1)/2."""
        return len(self.word)


@dataclass
class SyllableBound:
    value: int | None  # None means the search budget ran out
    exact: bool
    lower_bound: int = 0
    nodes: int = 0
    depth_reached: int = 0
    witness: list[tuple[int, int, int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "lower_bound": self.lower_bound,
            "budget_used": {"nodes": self.nodes, "depth": self.depth_reached},
            "witness": [list(t) for t in self.witness],
        }


def band_generators(n: int) -> list[BandGenerator]:
    if n < 2:
        raise ValueError("need n >= 2")
    gens = []
    for span in range(1, n):
        for i in range(1, n - span + 1):
            j = i + span
            letters = [k for top in range(j - 1, i - 1, -1) for k in range(i, top + 1)]
            gens.append(BandGenerator(i, j, BraidWord(n, tuple(letters))))
    return gens


def generator_power_root(beta: BraidWord) -> tuple[BandGenerator, int] | None:
    """Return (rho, a) with beta == rho^a, a != 0, if one exists.

    The exponent sum pins a down: exponent_sum(beta) = a * exponent(rho), so
    there is at most one candidate per generator.
    """
    e = exponent_sum(beta)
    if e == 0:
        return None
    target = normal_form(beta)
    for g in band_generators(beta.strands):
        if e % g.exponent:
            continue
        a = e // g.exponent
        if normal_form(g.word**a) == target:
            return g, a
    return None


def _cycle_type(perm) -> tuple[int, ...]:
    seen = set()
    lengths = []
    for start in range(1, perm.n + 1):
        if start in seen:
            continue
        k = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm(x)
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def syllable_lower_bound(beta: BraidWord) -> int:
    """Conjugacy-invariant lower bound on the syllable length (0, 1 or 2).

    rho^a for a generator on k strands has exponent sum a*k(k-1)/2 and its
    permutation is the reversal of k strands (a odd) or trivial (a even).
    Exponent sum and cycle type are conjugacy invariants, so a braid whose pair
    of invariants matches no generator power needs at least two syllables.
    """
    if normal_form(beta).is_identity():
        return 0
    n = beta.strands
    e = exponent_sum(beta)
    ctype = _cycle_type(permutation_of(beta))
    for k in range(2, n + 1):
        ek = k * (k - 1) // 2
        if e == 0 or e % ek:
            continue
        a = e // ek
        swaps = k // 2 if a % 2 else 0
        if ctype == (2,) * swaps + (1,) * (n - 2 * swaps):
            return 1
    return 2


def lt_length(
    beta: BraidWord,
    max_syllables: int,
    max_power: int,
    budget: int = 200_000,
) -> SyllableBound:
    """Syllable length by iterative deepening over bounded-power products.

    Lengths 0 and 1 are decided exactly. Deeper levels use Garside normal forms
    as visited-set keys, so each level holds exactly the elements first reached
    with that many syllables.
    """
    if max_syllables < 0 or max_power < 1:
        raise ValueError("need max_syllables >= 0 and max_power >= 1")
    n = beta.strands
    target = normal_form(beta)
    if target.is_identity():
        return SyllableBound(0, True, 0)
    root = generator_power_root(beta)
    if root is not None:
        g, a = root
        return SyllableBound(1, True, 1, witness=[(g.i, g.j, a)])
    lower = 2

    gens = band_generators(n)
    syllables = []
    for gi, g in enumerate(gens):
        for a in range(1, max_power + 1):
            for sgn in (1, -1):
                syllables.append((gi, sgn * a, g.word ** (sgn * a)))

    start = GarsideForm(n)
    frontier: dict[GarsideForm, tuple] = {start: ()}
    seen = {start}
    nodes = 0
    for depth in range(1, max_syllables + 1):
        nxt: dict[GarsideForm, tuple] = {}
        for form, path in frontier.items():
            for gi, a, word in syllables:
                nodes += 1
                if nodes > budget:
                    return SyllableBound(None, False, lower, nodes, depth - 1)
                new = normal_form(word, form)
                if new in seen:
                    continue
                seen.add(new)
                new_path = path + ((gens[gi].i, gens[gi].j, a),)
                if new == target:
                    # lengths 0 and 1 were excluded exactly, so 2 is sharp
                    return SyllableBound(
                        depth, depth <= lower, lower, nodes, depth, list(new_path)
                    )
                nxt[new] = new_path
        frontier = nxt
    return SyllableBound(None, False, lower, nodes, max_syllables)


def _conjugate(word: BraidWord, letter: int) -> BraidWord:
    g = BraidWord(word.strands, (letter,))
    return g * word * g.inverse()


def _cycle(word: BraidWord) -> BraidWord:
    if not word.letters:
        return word
    return BraidWord(word.strands, word.letters[1:] + word.letters[:1]).reduced()


def conj_min_lt(
    beta: BraidWord,
    budget: int = 500,
    *,
    max_syllables: int = 3,
    max_power: int = 2,
    restarts: int = 3,
    seed: int = 0,
) -> SyllableBound:
    """Upper bound on the minimal syllable length over the conjugacy class.

    Hill climbing over conjugation by sigma_i^(+-1) and cyclic rotation of the
    word. A candidate only has to beat the current best, so it is searched to
    depth best-1; when nothing improves, the climb moves to the shortest
    strictly shorter neighbour. Restarts begin from random conjugates and
    ``budget`` caps the number of candidate searches. Exact only when the
    result meets the conjugacy-invariant lower bound.
    """
    rng = random.Random(seed)
    n = beta.strands
    lower = syllable_lower_bound(beta)
    best = lt_length(beta, max_syllables, max_power)
    best_val = inf if best.value is None else best.value
    used = 1
    tried: set[GarsideForm] = {normal_form(beta)}

    def try_improve(w: BraidWord) -> bool:
        nonlocal best, best_val, used
        key = normal_form(w)
        if key in tried:
            return False
        tried.add(key)
        depth = max_syllables if best_val == inf else int(best_val) - 1
        used += 1
        b = lt_length(w, depth, max_power)
        if b.value is not None and b.value < best_val:
            best, best_val = b, b.value
            return True
        return False

    for attempt in range(restarts + 1):
        if best_val <= lower or used >= budget:
            break
        cur = beta.reduced()
        if attempt:
            for _ in range(rng.randint(1, 3)):
                cur = _conjugate(cur, rng.choice((1, -1)) * rng.randint(1, n - 1))
            try_improve(cur)
        while used < budget and best_val > lower:
            moves = [_cycle(cur)] + [
                _conjugate(cur, s * i) for i in range(1, n) for s in (1, -1)
            ]
            step = None
            for cand in moves:
                if used >= budget:
                    break
                if try_improve(cand):
                    step = cand
                    break
            if step is None:
                shorter = [m for m in moves if len(m) < len(cur)]
                if not shorter:
                    break
                step = min(shorter, key=len)
            cur = step
    return SyllableBound(
        None if best_val == inf else int(best_val),
        best_val == lower,
        lower,
        used,
        best.depth_reached,
        list(best.witness),
    )


def thm4_threshold(n: int) -> int:
    """Floor size beyond which the volume is coarsely the syllable length."""
    if n < 2:
        raise ValueError("need n >= 2")
    return 7 * (1 + 3216 * (n - 1) ** 5) + 4


def thm4_volume_interval(
    beta: BraidWord,
    A: float,
    budget: int = 500,
    *,
    seed: int = 0,
    floor_budget: int = DEFAULT_BUDGET,
) -> dict:
    """Bracket the closure volume by [L/A, A*U] when the floor gate passes.

    A is the (non-constructive) comparison constant for this strand count and
    has to be supplied. L is the invariant lower bound on the conjugacy
    minimum, U the hill-climbing upper bound.
    """
    if not A > 0:
        raise ValueError("A must be positive")
    n = beta.strands
    floor = dehornoy_floor(beta, floor_budget)
    threshold = thm4_threshold(n)
    out = {"applicable": abs(floor) >= threshold, "floor": floor, "threshold": threshold}
    if not out["applicable"]:
        return out
    upper = conj_min_lt(beta, budget, seed=seed)
    if upper.value is None:
        raise BudgetExceeded("conjugacy search", budget)
    lower = upper.lower_bound
    out.update(lower=lower, upper=upper.value, interval=(lower / A, A * upper.value))
    return out
