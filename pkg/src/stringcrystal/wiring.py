"""Wiring diagrams of reduced words and their (a, a+1) orientations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .typea import ReducedWord

__all__ = ["Crossing", "WiringDiagram", "OrientedDiagram", "build_diagram",
           "crossing_of_pair", "orient", "to_dot"]


@dataclass(frozen=True)
class Crossing:
    """
    Crossing number `position` (1-based word position) at height `level`.

    `wires` is (p, q) where p was at height `level` (below) just before the
    crossing and q at height `level` + 1.
    """
    position: int
    level: int
    wires: tuple[int, int]

    @property
    def pair(self) -> frozenset:
        return frozenset(self.wires)

    def other(self, wire: int) -> int:
        p, q = self.wires
        if wire == p:
            return q
        if wire == q:
            return p
        raise ValueError(f"wire {wire} does not pass crossing {self.position}")


@dataclass(frozen=True)
class WiringDiagram:
    word: ReducedWord
    crossings: tuple[Crossing, ...]
    # wire label -> crossing positions met by the wire, left to right
    wire_routes: dict

    @property
    def n(self) -> int:
        return self.word.n

    def crossing(self, position: int) -> Crossing:
        return self.crossings[position - 1]

    @cached_property
    def by_pair(self) -> dict:
        return {c.pair: c for c in self.crossings}

    def right_heights(self) -> dict:
        """Wire label -> height at the right boundary."""
        heights = list(range(1, self.n + 1))
        for c in self.crossings:
            h = c.level - 1
            heights[h], heights[h + 1] = heights[h + 1], heights[h]
        return {w: h + 1 for h, w in enumerate(heights)}

    def __hash__(self):
        return hash(self.word)

    def __eq__(self, other):
        return isinstance(other, WiringDiagram) and self.word == other.word


def build_diagram(word: ReducedWord) -> WiringDiagram:
    n = word.n
    at_height = list(range(1, n + 1))  # at_height[h-1] = wire at height h
    crossings = []
    routes = {w: [] for w in range(1, n + 1)}
    for k, level in enumerate(word.letters, start=1):
        p, q = at_height[level - 1], at_height[level]
        crossings.append(Crossing(k, level, (p, q)))
        routes[p].append(k)
        routes[q].append(k)
        at_height[level - 1], at_height[level] = q, p
    return WiringDiagram(word, tuple(crossings),
                         {w: tuple(r) for w, r in routes.items()})


def crossing_of_pair(d: WiringDiagram, p: int, q: int) -> Crossing:
    if p == q:
        raise ValueError("a wire does not cross itself")
    for w in (p, q):
        if not 1 <= w <= d.n:
            raise ValueError(f"wire {w} out of range")
    return d.by_pair[frozenset((p, q))]


@dataclass(frozen=True)
class OrientedDiagram:
    """A diagram with each wire pointing right (+1) or left (-1)."""
    diagram: WiringDiagram
    a: int
    opposite: bool

    def direction(self, wire: int) -> int:
        d = 1 if wire <= self.a else -1
        return -d if self.opposite else d

    def rightward(self, wire: int) -> bool:
        return self.direction(wire) > 0


def orient(d: WiringDiagram, a: int, opposite: bool = False) -> OrientedDiagram:
    """Wires 1..a point right and a+1..n left; `opposite` flips all of them."""
    if not 1 <= a <= d.n - 1:
        raise ValueError(f"orientation index {a} out of range [1, {d.n - 1}]")
    return OrientedDiagram(d, a, opposite)


def to_dot(d: WiringDiagram | OrientedDiagram) -> str:
    """Crossings as nodes, wire segments as edges (directed if oriented)."""
    od = d if isinstance(d, OrientedDiagram) else None
    diagram = od.diagram if od else d
    lines = ["digraph wiring {", "  rankdir=LR;"]
    for w in range(1, diagram.n + 1):
        lines.append(f'  L{w} [shape=plaintext, label="l{w}"];')
        lines.append(f'  R{w} [shape=plaintext, label="l{w}"];')
    for c in diagram.crossings:
        lines.append(f'  v{c.position} [label="{c.position}: {c.wires[0]},{c.wires[1]}"];')
    for w in range(1, diagram.n + 1):
        stops = [f"L{w}"] + [f"v{k}" for k in diagram.wire_routes[w]] + [f"R{w}"]
        for u, v in zip(stops, stops[1:]):
            if od is not None and not od.rightward(w):
                u, v = v, u
            arrow = "" if od is not None else ", dir=none"
            lines.append(f'  {u} -> {v} [label="{w}"{arrow}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
