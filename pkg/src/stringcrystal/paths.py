"""
Rigorous (Gleizer-Postnikov) paths in oriented wiring diagrams and their
r- and s-vectors.

A left path for index a lives in the (l_a, l_{a+1}) orientation and runs from
the left end of l_a to the left end of l_{a+1}.  A right path lives in the
opposite orientation and runs from the right end of l_a to the right end of
l_{a+1}.  Along the way a path follows wires in their direction and may switch
to the other wire at any crossing; passing straight through a crossing is
forbidden in the configurations listed in `_forbidden`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property

from .wiring import OrientedDiagram, WiringDiagram, orient

__all__ = ["GPPath", "enumerate_paths", "r_vector", "s_vector",
           "path_from_turning_points", "is_rigorous", "minimal_path", "LEFT", "RIGHT"]

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class GPPath:
    """
    `steps` lists (position, in_wire, out_wire) for each crossing visited, in
    travel order.  A crossing is a turning point iff in_wire != out_wire.
    """
    diagram: WiringDiagram
    a: int
    side: str
    steps: tuple[tuple[int, int, int], ...]

    @property
    def visited(self) -> tuple[int, ...]:
        return tuple(k for k, _, _ in self.steps)

    @property
    def turning_points(self) -> frozenset:
        return frozenset(k for k, i, o in self.steps if i != o)

    @cached_property
    def r(self) -> tuple[int, ...]:
        return r_vector(self)

    @cached_property
    def s(self) -> tuple[int, ...]:
        return s_vector(self)

    def __hash__(self):
        return hash((self.diagram.word, self.a, self.side, self.steps))

    def __eq__(self, other):
        return (isinstance(other, GPPath) and self.steps == other.steps
                and self.a == other.a and self.side == other.side
                and self.diagram == other.diagram)


def _forbidden(side: str, wire: int, other: int, od: OrientedDiagram) -> bool:
    """Straight passage along `wire` through its crossing with `other`."""
    r_wire, r_other = od.rightward(wire), od.rightward(other)
    if r_wire != r_other:
        return False
    if side == LEFT:
        return (wire < other and r_wire) or (wire > other and not r_wire)
    return (wire < other and not r_wire) or (wire > other and r_wire)


def _termini(d: WiringDiagram, a: int, side: str):
    if side == LEFT:
        return (a, "L"), (a + 1, "L")
    return (a, "R"), (a + 1, "R")


def _next_stop(d: WiringDiagram, od: OrientedDiagram, wire: int, position: int | None):
    """The stop after `position` along `wire` (None = the wire's start end)."""
    route = d.wire_routes[wire]
    step = 1 if od.rightward(wire) else -1
    if position is None:
        idx = 0 if step > 0 else len(route) - 1
    else:
        idx = route.index(position) + step
    if 0 <= idx < len(route):
        return route[idx]
    return (wire, "R" if step > 0 else "L")


_cache: dict = {}
_cache_lock = threading.Lock()


def enumerate_paths(d: WiringDiagram, a: int, side: str = LEFT) -> tuple[GPPath, ...]:
    """
    All rigorous paths of the given side for index a, sorted by their r-vectors.

    Exhaustive search over (crossing, incoming wire) states with memoised
    suffixes; the oriented diagram is acyclic so every suffix set is finite.
    """
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
    key = (d.word, a, side)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit

    od = orient(d, a, opposite=(side == RIGHT))
    start, target = _termini(d, a, side)
    start_wire, start_end = start
    if od.rightward(start_wire) != (start_end == "L"):
        raise AssertionError("start terminus is not a source of its wire")

    memo: dict = {}
    on_stack: set = set()

    def suffixes(position: int, in_wire: int):
        state = (position, in_wire)
        if state in memo:
            return memo[state]
        if position in on_stack:
            raise AssertionError(f"oriented diagram has a cycle through {position}")
        on_stack.add(position)
        other = d.crossing(position).other(in_wire)
        out = []
        for out_wire in (in_wire, other):
            if out_wire == in_wire and _forbidden(side, in_wire, other, od):
                continue
            nxt = _next_stop(d, od, out_wire, position)
            head = (position, in_wire, out_wire)
            if isinstance(nxt, tuple):
                if nxt == target:
                    out.append((head,))
                continue
            for tail in suffixes(nxt, out_wire):
                out.append((head,) + tail)
        on_stack.discard(position)
        memo[state] = out
        return out

    first = _next_stop(d, od, start_wire, None)
    found = suffixes(first, start_wire) if not isinstance(first, tuple) else []
    paths = tuple(sorted((GPPath(d, a, side, steps) for steps in found),
                         key=lambda p: p.r))
    with _cache_lock:
        _cache.setdefault(key, paths)
    return paths


def is_rigorous(p: GPPath) -> bool:
    od = orient(p.diagram, p.a, opposite=(p.side == RIGHT))
    for k, i, o in p.steps:
        if i == o and _forbidden(p.side, i, p.diagram.crossing(k).other(i), od):
            return False
    return True


def path_from_turning_points(d: WiringDiagram, a: int, side: str, turning) -> GPPath | None:
    """Walk from the start terminus, switching wires exactly at `turning`."""
    turning = frozenset(turning)
    od = orient(d, a, opposite=(side == RIGHT))
    start, target = _termini(d, a, side)
    wire = start[0]
    stop = _next_stop(d, od, wire, None)
    steps = []
    while not isinstance(stop, tuple):
        if len(steps) > len(d.crossings):
            return None
        out_wire = d.crossing(stop).other(wire) if stop in turning else wire
        steps.append((stop, wire, out_wire))
        wire = out_wire
        stop = _next_stop(d, od, wire, stop)
    if stop != target or {k for k, i, o in steps if i != o} != set(turning):
        return None
    return GPPath(d, a, side, tuple(steps))


def minimal_path(d: WiringDiagram, a: int, side: str = LEFT) -> GPPath | None:
    """The path whose only turning point is the crossing of l_a and l_{a+1}."""
    c = d.by_pair[frozenset((a, a + 1))]
    return path_from_turning_points(d, a, side, {c.position})


def r_vector(p: GPPath) -> tuple[int, ...]:
    """+-1 at turning points: sign of (leaving wire - arriving wire)."""
    vec = [0] * len(p.diagram.crossings)
    for k, i, o in p.steps:
        if i != o:
            vec[k - 1] = 1 if o > i else -1
    return tuple(vec)


def s_vector(p: GPPath) -> tuple[int, ...]:
    """
    +1 at visited crossings whose wires straddle a (one <= a < other);
    -1 at visited non-turning crossings whose wires are both > a or both <= a.
    """
    a = p.a
    vec = [0] * len(p.diagram.crossings)
    for k, i, o in p.steps:
        lo, hi = sorted(p.diagram.crossing(k).wires)
        if lo <= a < hi:
            vec[k - 1] = 1
        elif i == o and (lo > a or hi <= a):
            vec[k - 1] = -1
    return tuple(vec)
