"""Exact arithmetic in the Artin braid group B_n.

A braid is stored as a flat tuple of signed generator indices: ``2`` is
sigma_2, ``-2`` its inverse. Equality of braids is decided through the left
Garside normal form

    Delta^inf * A_1 * ... * A_k,

where each A_i is a permutation braid (a positive braid in which every pair of
strands crosses at most once) different from 1 and Delta, and every adjacent
pair (A_i, A_{i+1}) is left-weighted: the starting set of A_{i+1} is contained
in the finishing set of A_i. Permutation braids are in bijection with
permutations, so the factors are stored as permutations.

Permutation conventions: one-line notation with 1-based images, and the
product (u * v)(j) = u(v(j)). Under sigma_i -> s_i = (i i+1) braid products map
to permutation products. Right multiplication by s_i swaps the entries in
positions i, i+1; left multiplication swaps the values i, i+1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ParseError, StrandMismatch

__all__ = [
    "BraidWord",
    "Permutation",
    "GarsideForm",
    "compose",
    "half_twist",
    "normal_form",
    "braids_equal",
    "exponent_sum",
    "parse_braid",
    "free_reduce",
]


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent ``e, -e`` pairs until none remain."""
    out: list[int] = []
    for e in letters:
        if out and out[-1] == -e:
            out.pop()
        else:
            out.append(e)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise ValueError(f"need at least 2 strands, got {self.strands!r}")
        letters = tuple(int(e) for e in self.letters)
        for e in letters:
            if e == 0 or abs(e) >= self.strands:
                raise ValueError(f"letter {e} out of range for B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        # repeated squaring keeps the intermediate free reductions cheap
        result = BraidWord.identity(self.strands)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-e for e in reversed(self.letters)))

    def reduced(self) -> BraidWord:
        return BraidWord(self.strands, free_reduce(self.letters))

    def __str__(self) -> str:
        body = " ".join(str(e) for e in self.letters)
        return f"B{self.strands}: {body}".rstrip()


_BRAID_RE = re.compile(r"^\s*(?:[Bb](\d+)\s*:)?(.*)$", re.S)


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"B3: 1 -2 1"``.

    Without a ``Bn:`` prefix the strand count is ``strands`` if given, else one
    more than the largest generator index (at least 2).
    """
    m = _BRAID_RE.match(text)
    if m is None:
        raise ParseError(f"cannot parse braid {text!r}")
    prefix, body = m.groups()
    tokens = body.replace(",", " ").split()
    try:
        letters = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer letter in {text!r}") from exc
    if any(e == 0 for e in letters):
        raise ParseError("letter 0 is not a generator")
    if prefix is not None:
        n = int(prefix)
    elif strands is not None:
        n = strands
    else:
        n = max([abs(e) for e in letters], default=1) + 1
    if n < 2:
        raise ParseError("a braid needs at least 2 strands")
    bad = [e for e in letters if abs(e) >= n]
    if bad:
        raise ParseError(f"letters {bad} out of range for B_{n}")
    return BraidWord(n, tuple(letters))


def _check_same(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise StrandMismatch(f"B_{u.strands} vs B_{v.strands}")


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """Product u*v (u first), freely reduced."""
    _check_same(u, v)
    return BraidWord(u.strands, free_reduce(u.letters + v.letters))


def half_twist(n: int) -> BraidWord:
    """Positive word for Delta_n: (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1)."""
    if n < 2:
        raise ValueError("half twist needs n >= 2")
    letters = [i for top in range(n - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord(n, tuple(letters))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


# --------------------------------------------------------------------------
# permutations / simple braids


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.images, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def length(self) -> int:
        w = self.images
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def right_descents(self) -> frozenset[int]:
        """Finishing set: the i with sigma_i a right divisor."""
        w = self.images
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def left_descents(self) -> frozenset[int]:
        """Starting set: the i with sigma_i a left divisor."""
        return self.inverse().right_descents()

    def times_generator(self, i: int) -> Permutation:
        w = list(self.images)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def generator_times(self, i: int) -> Permutation:
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(x, x) for x in self.images))

    def flip(self) -> Permutation:
        """Conjugation by Delta: sigma_i -> sigma_{n-i}."""
        n = self.n
        return Permutation(tuple(n + 1 - self.images[n - j] for j in range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def is_longest(self) -> bool:
        n = self.n
        return all(v == n + 1 - k for k, v in enumerate(self.images, start=1))

    def positive_word(self) -> tuple[int, ...]:
        """A reduced positive word for the permutation braid."""
        w = self
        letters: list[int] = []
        while True:
            desc = w.right_descents()
            if not desc:
                break
            i = min(desc)
            letters.append(i)
            w = w.times_generator(i)
        return tuple(reversed(letters))


def _left_weight(a: Permutation, b: Permutation) -> tuple[Permutation, Permutation]:
    while True:
        movable = b.left_descents() - a.right_descents()
        if not movable:
            return a, b
        i = min(movable)
        a = a.times_generator(i)
        b = b.generator_times(i)


@dataclass(frozen=True)
class GarsideForm:
    strands: int
    infimum: int = 0
    factors: tuple[Permutation, ...] = field(default=())

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def to_word(self) -> BraidWord:
        """Render as a (not freely reduced across Delta powers) braid word."""
        n = self.strands
        delta = half_twist(n).letters
        if self.infimum >= 0:
            letters = list(delta * self.infimum)
        else:
            inv = tuple(-e for e in reversed(delta))
            letters = list(inv * (-self.infimum))
        for f in self.factors:
            letters.extend(f.positive_word())
        return BraidWord(n, tuple(letters))

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors


class _NormalFormBuilder:
    """Right-multiplies a left normal form by generators one at a time."""

    def __init__(self, form: GarsideForm):
        self.n = form.strands
        self.inf = form.infimum
        self.factors = list(form.factors)
        self._delta = Permutation.longest(self.n)
        self._id = Permutation.identity(self.n)

    def push(self, letter: int) -> None:
        i = abs(letter)
        if letter > 0:
            self._append(self._id.times_generator(i))
        else:
            # w * s_i^-1 = Delta^-1 * tau(w) * (Delta s_i^-1)
            self.inf -= 1
            self.factors = [f.flip() for f in self.factors]
            self._append(self._delta.times_generator(i))

    def _append(self, x: Permutation) -> None:
        fs = self.factors
        fs.append(x)
        changed = True
        while changed:
            changed = False
            for k in range(len(fs) - 2, -1, -1):
                a, b = _left_weight(fs[k], fs[k + 1])
                if a != fs[k] or b != fs[k + 1]:
                    fs[k], fs[k + 1] = a, b
                    changed = True
        start = 0
        while start < len(fs) and fs[start].is_longest():
            start += 1
        end = len(fs)
        while end > start and fs[end - 1].is_identity():
            end -= 1
        self.inf += start
        self.factors = fs[start:end]

    def form(self) -> GarsideForm:
        return GarsideForm(self.n, self.inf, tuple(self.factors))


def normal_form(w: BraidWord, start: GarsideForm | None = None) -> GarsideForm:
    """Left normal form of ``w``, or of ``start * w`` when ``start`` is given."""
    if start is None:
        start = GarsideForm(w.strands)
    elif start.strands != w.strands:
        raise StrandMismatch(f"B_{start.strands} vs B_{w.strands}")
    builder = _NormalFormBuilder(start)
    for e in w.letters:
        builder.push(e)
    return builder.form()


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    _check_same(u, v)
    return normal_form(u) == normal_form(v)


def permutation_of(w: BraidWord) -> Permutation:
    """Image of the braid in the symmetric group."""
    p = Permutation.identity(w.strands)
    for e in w.letters:
        p = p.times_generator(abs(e))
    return p


def random_word(rng, strands: int, length: int) -> BraidWord:
    """Uniform random word (not reduced) with ``length`` letters."""
    letters = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
    return BraidWord(strands, tuple(letters))

