"""Independent reference computations used only by the tests."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from cuspskew.braid import BraidWord, free_reduce, half_twist
from cuspskew.dynnikov import dynnikov_sign


def relator_variants(n: int) -> list[tuple[int, ...]]:
    """Cyclic conjugates of the braid relators and their inverses."""
    rels = []
    for i in range(1, n):
        for j in range(i + 1, n):
            rels.append((i, j, i, -j, -i, -j) if j == i + 1 else (i, j, -i, -j))
    out = set()
    for r in rels:
        for rr in (r, tuple(-x for x in reversed(r))):
            for k in range(len(rr)):
                out.add(rr[k:] + rr[:k])
    return sorted(out)


def reduced_words(n: int, max_len: int) -> list[tuple[int, ...]]:
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    layer: list[tuple[int, ...]] = [()]
    out = [()]
    for _ in range(max_len):
        layer = [w + (x,) for w in layer for x in letters if not (w and w[-1] == -x)]
        out += layer
    return out


@lru_cache(maxsize=None)
def relation_classes(n: int, short: int, horizon: int) -> dict[tuple[int, ...], int]:
    """Equivalence classes of the reduced words of length <= short.

    Words up to length ``horizon`` are joined (union-find) whenever one is
    obtained from the other by replacing a piece of a relator with the inverse
    of the rest and freely reducing. This only certifies equalities it finds,
    so it can under-merge if ``horizon`` is too small, never over-merge.
    """
    words = reduced_words(n, horizon)
    index = {w: i for i, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    variants = relator_variants(n)
    for w in words:
        iw = index[w]
        for v in variants:
            for k in range(1, len(v)):
                piece = v[:k]
                repl = tuple(-x for x in reversed(v[k:]))
                for p in range(len(w) - k + 1):
                    if w[p : p + k] == piece:
                        j = index.get(free_reduce(w[:p] + repl + w[p + k :]))
                        if j is not None:
                            a, b = find(iw), find(j)
                            if a != b:
                                parent[a] = b
    return {w: find(index[w]) for w in words if len(w) <= short}


def floor_by_laminations(beta: BraidWord, search: int = 200) -> int:
    """Dehornoy floor via the Dynnikov sign, by linear search from 0."""
    d2 = half_twist(beta.strands) ** 2

    def at_least(m):
        return dynnikov_sign((d2 ** (-m)) * beta) >= 0

    m = 0
    if at_least(0):
        while at_least(m + 1):
            m += 1
            assert m < search
        return m
    while not at_least(m):
        m -= 1
        assert m > -search
    return m


def gram_torus_form(m: float, h: float, tw: float) -> tuple[float, float, float]:
    """(a, b, c) of the basis ((tw, h), (m, 0)) read off its Gram matrix."""
    basis = np.array([[tw, h], [m, 0.0]])
    gram = basis @ basis.T
    a = math.sqrt(gram[0, 0])
    b = gram[0, 1] / a
    c = abs(np.linalg.det(basis)) / a
    return a, b, c


def gauss_reduce(u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Lagrange-Gauss reduction of a planar lattice basis."""
    u, v = np.array(u, float), np.array(v, float)
    if u @ u > v @ v:
        u, v = v, u
    while True:
        k = round((u @ v) / (u @ u))
        v = v - k * u
        if v @ v >= u @ u:
            return u, v
        u, v = v, u


def shortest_lengths(u, v) -> tuple[float, float]:
    r1, r2 = gauss_reduce(np.asarray(u), np.asarray(v))
    return float(np.linalg.norm(r1)), float(np.linalg.norm(r2))
