"""Pointed arc graphs over a finite base arc graph.

Vertices are pairs (arc, offset): the offset counts how far the basepoint of
the arc has been twisted around the boundary component. Arcs with one endpoint
on the boundary carry integer offsets, arcs with both endpoints there carry
half-integer offsets.

Two edge models are provided. ``G`` joins offsets of one arc differing by at
most 1 and joins distinct base-adjacent arcs at equal offsets. ``Ap`` is the
finer pointed model: on a two-endpoint arc the offset must change by strictly
less than 1, so offsets 0 and 1 are two steps apart. Across distinct arcs the
finer model only knows a necessary condition; ``cross_arc="certified"`` keeps
the equal-offset edges that are known to exist, ``"coarse"`` admits every
base-adjacent pair with |offset change| <= 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Literal

from .errors import ParseError

__all__ = [
    "BaseArcGraph",
    "PointedVertex",
    "ActionSpec",
    "g_adjacent",
    "ap_adjacent",
    "neighbours",
    "distance",
    "translation_distance",
    "lemma17_fdtc_interval",
    "parse_base_graph",
    "parse_action",
    "load_base_graph",
    "load_action",
]

Mode = Literal["G", "Ap"]
CrossArc = Literal["certified", "coarse"]
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BaseArcGraph:
    labels: dict[str, int]
    edges: frozenset[frozenset[str]] = frozenset()
    _adj: dict[str, frozenset[str]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for v, lab in self.labels.items():
            if lab not in (1, 2):
                raise ValueError(f"arc {v!r}: label must be 1 or 2, got {lab}")
        adj: dict[str, set[str]] = {v: set() for v in self.labels}
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {sorted(e)} is a loop")
            a, b = tuple(e)
            for x in (a, b):
                if x not in self.labels:
                    raise ValueError(f"edge uses unknown arc {x!r}")
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    @classmethod
    def build(cls, labels: dict[str, int], edges: Iterable[tuple[str, str]]) -> BaseArcGraph:
        return cls(dict(labels), frozenset(frozenset(e) for e in edges))

    @property
    def arcs(self) -> list[str]:
        return list(self.labels)

    def label(self, arc: str) -> int:
        try:
            return self.labels[arc]
        except KeyError:
            raise KeyError(f"unknown arc {arc!r}") from None

    def adjacent(self, a: str, b: str) -> bool:
        return b in self._adj[a]

    def neighbours(self, arc: str) -> frozenset[str]:
        self.label(arc)
        return self._adj[arc]


@dataclass(frozen=True, order=True)
class PointedVertex:
    arc: str
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "offset", Fraction(self.offset))
        if self.offset.denominator not in (1, 2):
            raise ValueError("offset must be an integer or a half-integer")

    def check(self, base: BaseArcGraph) -> None:
        if base.label(self.arc) == 1 and self.offset.denominator != 1:
            raise ValueError(f"arc {self.arc!r} has one endpoint, offset must be an integer")

    def twisted(self, k: Fraction | int = 1) -> PointedVertex:
        return PointedVertex(self.arc, self.offset + k)


@dataclass(frozen=True)
class ActionSpec:
    """(arc, n) -> (arc_map[arc], n + shift[arc])."""

    arc_map: dict[str, str]
    shift: dict[str, Fraction]

    def check(self, base: BaseArcGraph) -> None:
        arcs = set(base.labels)
        if set(self.arc_map) != arcs or set(self.arc_map.values()) != arcs:
            raise ValueError("arc_map must be a permutation of the base arcs")
        if set(self.shift) != arcs:
            raise ValueError("shift must be given for every arc")
        for a, b in self.arc_map.items():
            if base.label(a) != base.label(b):
                raise ValueError(f"arc_map sends {a!r} to {b!r} with a different label")
            step = Fraction(self.shift[a])
            if base.label(b) == 1 and step.denominator != 1:
                raise ValueError(f"shift of {a!r} must be an integer")
            if step.denominator not in (1, 2):
                raise ValueError(f"shift of {a!r} must be a half-integer")
        for e in base.edges:
            a, b = tuple(e)
            if not base.adjacent(self.arc_map[a], self.arc_map[b]):
                raise ValueError("arc_map is not a graph automorphism")

    def __call__(self, v: PointedVertex) -> PointedVertex:
        return PointedVertex(self.arc_map[v.arc], v.offset + Fraction(self.shift[v.arc]))

    @classmethod
    def identity(cls, base: BaseArcGraph) -> ActionSpec:
        return cls({a: a for a in base.labels}, {a: Fraction(0) for a in base.labels})

    def then_twist(self, k: int = 1) -> ActionSpec:
        """Compose with k global boundary twists."""
        return ActionSpec(dict(self.arc_map), {a: Fraction(s) + k for a, s in self.shift.items()})


def _check_pair(u: PointedVertex, v: PointedVertex, base: BaseArcGraph) -> None:
    u.check(base)
    v.check(base)


def g_adjacent(u: PointedVertex, v: PointedVertex, base: BaseArcGraph) -> bool:
    _check_pair(u, v, base)
    if u.arc == v.arc:
        return u != v and abs(u.offset - v.offset) <= 1
    return u.offset == v.offset and base.adjacent(u.arc, v.arc)


def ap_adjacent(
    u: PointedVertex,
    v: PointedVertex,
    base: BaseArcGraph,
    cross_arc: CrossArc = "certified",
) -> bool:
    _check_pair(u, v, base)
    gap = abs(u.offset - v.offset)
    if u.arc == v.arc:
        if u == v:
            return False
        return gap <= 1 if base.label(u.arc) == 1 else gap < 1
    if not base.adjacent(u.arc, v.arc):
        return False
    if cross_arc == "certified":
        return gap == 0
    if cross_arc == "coarse":
        return gap <= 1
    raise ValueError(f"unknown cross_arc rule {cross_arc!r}")


def _offsets_near(label: int, centre: Fraction, radius: Fraction) -> Iterator[Fraction]:
    step = Fraction(1, label)
    k = -(-(centre - radius) // step)  # ceil
    x = k * step
    while x <= centre + radius:
        yield x
        x += step


def neighbours(
    v: PointedVertex,
    base: BaseArcGraph,
    mode: Mode = "G",
    cross_arc: CrossArc = "certified",
) -> list[PointedVertex]:
    """All vertices adjacent to v in the chosen model."""
    out = []
    lab = base.label(v.arc)
    if mode == "G":
        same = [HALF, Fraction(1)] if lab == 2 else [Fraction(1)]
    elif mode == "Ap":
        same = [HALF] if lab == 2 else [Fraction(1)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for d in same:
        out.append(PointedVertex(v.arc, v.offset - d))
        out.append(PointedVertex(v.arc, v.offset + d))
    for w in sorted(base.neighbours(v.arc)):
        wl = base.label(w)
        if mode == "Ap" and cross_arc == "coarse":
            out.extend(PointedVertex(w, x) for x in _offsets_near(wl, v.offset, Fraction(1)))
        elif wl == 2 or v.offset.denominator == 1:
            out.append(PointedVertex(w, v.offset))
    return out


def distance(
    u: PointedVertex,
    v: PointedVertex,
    base: BaseArcGraph,
    mode: Mode = "G",
    cap: int = 10,
    cross_arc: CrossArc = "certified",
) -> int | None:
    """Breadth-first distance, or None if v is not reached within ``cap`` steps.

    Every edge changes the offset by at most 1, so the search never needs
    offsets further than cap + max(|u.offset|, |v.offset|) + 1 from zero.
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    _check_pair(u, v, base)
    if u == v:
        return 0
    window = cap + max(abs(u.offset), abs(v.offset)) + 1
    seen = {u}
    frontier = deque([u])
    for depth in range(1, cap + 1):
        nxt: deque[PointedVertex] = deque()
        for x in frontier:
            for y in neighbours(x, base, mode, cross_arc):
                if y in seen or abs(y.offset) > window:
                    continue
                if y == v:
                    return depth
                seen.add(y)
                nxt.append(y)
        if not nxt:
            return None
        frontier = nxt
    return None


def translation_distance(
    act: ActionSpec,
    base: BaseArcGraph,
    cap: int = 10,
    mode: Mode = "G",
    cross_arc: CrossArc = "certified",
    seed_offset: Fraction | int = 0,
) -> int | None:
    """min over seed vertices v of d(v, act(v)).

    Seeds are every arc at ``seed_offset`` and, for two-endpoint arcs, also at
    ``seed_offset + 1/2``: those offsets are not related by a global twist, so
    both classes are needed for the infimum.
    """
    act.check(base)
    best = None
    base_off = Fraction(seed_offset)
    for arc in base.arcs:
        offs = [base_off, base_off + HALF] if base.label(arc) == 2 else [base_off]
        for off in offs:
            v = PointedVertex(arc, off)
            try:
                v.check(base)
            except ValueError:
                continue
            limit = cap if best is None else min(cap, best)
            d = distance(v, act(v), base, mode, limit, cross_arc)
            if d is not None and (best is None or d < best):
                best = d
            if best == 0:
                return 0
    return best


def lemma17_fdtc_interval(act: ActionSpec, arc: str) -> tuple[Fraction, Fraction]:
    """The twisting of an arc's basepoint pins fD down to within 5."""
    if arc not in act.shift:
        raise KeyError(f"unknown arc {arc!r}")
    s = Fraction(act.shift[arc])
    return s - 5, s + 5


def _tokens(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_base_graph(text: str) -> BaseArcGraph:
    """Lines ``v <id> <1|2>`` and ``e <id> <id>``; '#' starts a comment."""
    labels: dict[str, int] = {}
    edges = []
    for lineno, parts in _tokens(text):
        kind = parts[0]
        if kind == "v" and len(parts) == 3:
            if parts[2] not in ("1", "2"):
                raise ParseError(f"line {lineno}: label must be 1 or 2")
            if parts[1] in labels:
                raise ParseError(f"line {lineno}: duplicate arc {parts[1]!r}")
            labels[parts[1]] = int(parts[2])
        elif kind == "e" and len(parts) == 3:
            edges.append((parts[1], parts[2]))
        else:
            raise ParseError(f"line {lineno}: cannot parse {' '.join(parts)!r}")
    try:
        return BaseArcGraph.build(labels, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_action(text: str, base: BaseArcGraph) -> ActionSpec:
    """Lines ``m <source> <image> <shift>``; shift may be a fraction like 3/2."""
    arc_map: dict[str, str] = {}
    shift: dict[str, Fraction] = {}
    for lineno, parts in _tokens(text):
        if parts[0] != "m" or len(parts) != 4:
            raise ParseError(f"line {lineno}: cannot parse {' '.join(parts)!r}")
        try:
            s = Fraction(parts[3])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad shift {parts[3]!r}") from exc
        arc_map[parts[1]] = parts[2]
        shift[parts[1]] = s
    act = ActionSpec(arc_map, shift)
    try:
        act.check(base)
    except (ValueError, KeyError) as exc:
        raise ParseError(str(exc)) from exc
    return act


def load_base_graph(path: str | Path) -> BaseArcGraph:
    return parse_base_graph(Path(path).read_text())


def load_action(path: str | Path, base: BaseArcGraph) -> ActionSpec:
    return parse_action(Path(path).read_text(), base)
