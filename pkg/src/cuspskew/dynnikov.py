"""Dynnikov coordinates: B_n acting on integral laminations.

This is the second, independent route to the Dehornoy order. It shares no
code with handle reduction: a braid acts piecewise-linearly on integer vectors
(a_1, b_1, ..., a_n, b_n), and the sign of the braid is read off the first
nonzero entry of ``beta . E - E`` where E = (0, 1, 0, 1, ..., 0, 1) is the
coordinate vector of the standard curve diagram. One extra puncture is used
so that every generator sigma_i (1 <= i <= n-1) acts on the pairs i and i+1
by the same formula.
"""

from __future__ import annotations

from .braid import BraidWord

__all__ = ["standard_lamination", "act", "coordinates", "dynnikov_sign"]


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


def standard_lamination(strands: int) -> tuple[int, ...]:
    return (0, 1) * strands


def act(coords: tuple[int, ...], letter: int) -> tuple[int, ...]:
    """Apply one generator sigma_|letter|^(sign) to a coordinate vector."""
    v = list(coords)
    k = 2 * (abs(letter) - 1)
    a1, b1, a2, b2 = v[k], v[k + 1], v[k + 2], v[k + 3]
    if letter > 0:
        c = a1 - _neg(b1) - a2 + _pos(b2)
        v[k] = a1 + _pos(b1) + _pos(_pos(b2) - c)
        v[k + 1] = b2 - _pos(c)
        v[k + 2] = a2 + _neg(b2) + _neg(_neg(b1) + c)
        v[k + 3] = b1 + _pos(c)
    else:
        d = a1 + _neg(b1) - a2 - _pos(b2)
        v[k] = a1 - _pos(b1) - _pos(_pos(b2) + d)
        v[k + 1] = b2 + _neg(d)
        v[k + 2] = a2 - _neg(b2) - _neg(_neg(b1) - d)
        v[k + 3] = b1 - _neg(d)
    return tuple(v)


def coordinates(w: BraidWord) -> tuple[int, ...]:
    v = standard_lamination(w.strands)
    for e in w.letters:
        v = act(v, e)
    return v


def dynnikov_sign(w: BraidWord) -> int:
    """+1 if w > 1 in the Dehornoy order, -1 if w < 1, 0 if trivial."""
    base = standard_lamination(w.strands)
    for x, y in zip(coordinates(w), base):
        if x != y:
            return 1 if x > y else -1
    return 0
