"""
String cones and string polytopes as integer inequality systems, and their
lattice points.

Two independent routes to S_i(lam) are provided:

* the path form: the cone cut out by r-vectors of right GP-paths, intersected
  with the lam-bounds;
* the Littelmann form: the triangular lam-bounds intersected with the string
  cone as *defined* (adapted strings in a large highest-weight crystal), checked
  with the tableaux oracle.

The lam-bounds are Littelmann's rows
    x_r + sum_{j > r} <alpha_{i_j}, alpha_{i_r}^vee> x_j <= lam_{i_r}
in both routes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import oracle
from .paths import RIGHT, enumerate_paths
from .typea import ReducedWord, Weight, cartan_entry, is_dominant, weyl_dimension
from .wiring import WiringDiagram, build_diagram

__all__ = [
    "InequalitySystem", "StringPolytope", "UnboundedSystemError",
    "cone_inequalities", "lambda_bounds", "polytope_inequalities",
    "littelmann_inequalities", "enumerate_lattice_points",
    "in_string_cone", "littelmann_points", "string_polytope", "polytope_json",
]


class UnboundedSystemError(ValueError):
    pass


@dataclass(frozen=True)
class InequalitySystem:
    """Rows <normal, x> <= bound."""
    dim: int
    normals: tuple[tuple[int, ...], ...]
    bounds: tuple[int, ...]

    def __post_init__(self):
        if len(self.normals) != len(self.bounds):
            raise ValueError("normals and bounds differ in length")
        if any(len(v) != self.dim for v in self.normals):
            raise ValueError("normal of wrong length")

    def contains(self, x) -> bool:
        return all(sum(a * b for a, b in zip(v, x)) <= c
                   for v, c in zip(self.normals, self.bounds))

    def violated(self, x) -> list[int]:
        return [k for k, (v, c) in enumerate(zip(self.normals, self.bounds))
                if sum(a * b for a, b in zip(v, x)) > c]

    def __and__(self, other: "InequalitySystem") -> "InequalitySystem":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return _dedup(self.dim, list(zip(self.normals, self.bounds))
                      + list(zip(other.normals, other.bounds)))

    def rows(self):
        return [{"normal": list(v), "bound": c} for v, c in zip(self.normals, self.bounds)]


def _dedup(dim, rows) -> InequalitySystem:
    rows = sorted(set((tuple(v), int(c)) for v, c in rows))
    return InequalitySystem(dim, tuple(v for v, _ in rows), tuple(c for _, c in rows))


def _diagram(x) -> WiringDiagram:
    return x if isinstance(x, WiringDiagram) else build_diagram(x)


@lru_cache(maxsize=None)
def cone_inequalities(d: WiringDiagram | ReducedWord) -> InequalitySystem:
    """<x, r(gamma)> >= 0 for every right path gamma, stored as <x, -r> <= 0."""
    d = _diagram(d)
    rows = []
    for a in range(1, d.n):
        for p in enumerate_paths(d, a, RIGHT):
            rows.append((tuple(-v for v in p.r), 0))
    return _dedup(len(d.crossings), rows)


def _check_lambda(word: ReducedWord, lam: Weight):
    lam = tuple(lam)
    if len(lam) != word.n - 1:
        raise ValueError(f"weight {lam} has wrong length for n={word.n}")
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    return lam


def lambda_bounds(word: ReducedWord, lam: Weight) -> InequalitySystem:
    """Littelmann's N rows."""
    lam = _check_lambda(word, lam)
    letters = word.letters
    N = len(letters)
    rows = []
    for r in range(N):
        v = [0] * N
        v[r] = 1
        for j in range(r + 1, N):
            v[j] = cartan_entry(letters[j], letters[r])
        rows.append((tuple(v), lam[letters[r] - 1]))
    return InequalitySystem(N, tuple(v for v, _ in rows), tuple(c for _, c in rows))


def _nonnegativity(N) -> InequalitySystem:
    return InequalitySystem(N, tuple(tuple(-1 if j == k else 0 for j in range(N))
                                     for k in range(N)), (0,) * N)


def polytope_inequalities(d: WiringDiagram | ReducedWord, lam: Weight) -> InequalitySystem:
    """Path cone plus the lam-bounds."""
    d = _diagram(d)
    return cone_inequalities(d) & lambda_bounds(d.word, lam)


def littelmann_inequalities(word: ReducedWord, lam: Weight) -> InequalitySystem:
    """Littelmann's rows together with x >= 0."""
    rows = lambda_bounds(word, lam)
    nonneg = _nonnegativity(len(word))
    return InequalitySystem(rows.dim, rows.normals + nonneg.normals,
                            rows.bounds + nonneg.bounds)


def enumerate_lattice_points(system: InequalitySystem) -> list[tuple[int, ...]]:
    """
    All integer solutions, lexicographically sorted.

    Coordinates are fixed from the last to the first.  Coordinate k is bounded
    by the rows supported on {k, ..., N-1} with a nonzero entry at k; every
    coordinate needs an upper bound from some such row, otherwise the system
    is reported unbounded.  Rows not used for bounding are checked on the
    finished point.
    """
    N = system.dim
    by_lead: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(N)]
    for v, c in zip(system.normals, system.bounds):
        support = [j for j in range(N) if v[j]]
        if support:
            by_lead[support[0]].append((v, c))
        elif c < 0:
            return []
    for k in range(N):
        if not any(v[k] > 0 for v, _ in by_lead[k]):
            raise UnboundedSystemError(f"coordinate {k + 1} has no upper bound")
        if not any(v[k] < 0 for v, _ in by_lead[k]):
            raise UnboundedSystemError(f"coordinate {k + 1} has no lower bound")

    out = []
    x = [0] * N

    def place(k):
        if k < 0:
            out.append(tuple(x))
            return
        lo, hi = None, None
        for v, c in by_lead[k]:
            rest = c - sum(v[j] * x[j] for j in range(k + 1, N))
            if v[k] > 0:
                b = rest // v[k]
                hi = b if hi is None else min(hi, b)
            else:
                b = -((rest) // (-v[k]))
                lo = b if lo is None else max(lo, b)
        for val in range(lo, hi + 1):
            x[k] = val
            place(k - 1)
        x[k] = 0

    place(N - 1)
    out.sort()
    return out


@lru_cache(maxsize=None)
def in_string_cone(x: tuple[int, ...], word: ReducedWord) -> bool:
    """
    Membership in the string cone straight from the definition: x is the
    string of f_x b_Lam in B(Lam) for Lam = (2|x|, ..., 2|x|), which is large
    enough for every string of total size |x|.
    """
    big = 2 * sum(x)
    return oracle.is_adapted_string(x, word, (big,) * (word.n - 1))


def littelmann_points(word: ReducedWord, lam: Weight) -> list[tuple[int, ...]]:
    """Littelmann rows and x >= 0, filtered by `in_string_cone`."""
    pts = enumerate_lattice_points(littelmann_inequalities(word, lam))
    return [x for x in pts if in_string_cone(x, word)]


@dataclass(frozen=True)
class StringPolytope:
    word: ReducedWord
    lam: Weight

    @cached_property
    def diagram(self) -> WiringDiagram:
        return build_diagram(self.word)

    @cached_property
    def system(self) -> InequalitySystem:
        return polytope_inequalities(self.diagram, self.lam)

    @cached_property
    def points(self) -> tuple[tuple[int, ...], ...]:
        # the lam-rows plus x >= 0 are triangular; the cone rows filter
        box = enumerate_lattice_points(littelmann_inequalities(self.word, self.lam))
        cone = cone_inequalities(self.diagram)
        return tuple(x for x in box if cone.contains(x))

    @cached_property
    def point_set(self) -> frozenset:
        return frozenset(self.points)

    def __contains__(self, x) -> bool:
        x = tuple(x)
        return (len(x) == len(self.word) and all(v >= 0 for v in x)
                and self.system.contains(x))

    def dimension_check(self) -> bool:
        return len(self.points) == weyl_dimension(self.lam)


@lru_cache(maxsize=None)
def string_polytope(word: ReducedWord, lam: Weight) -> StringPolytope:
    return StringPolytope(word, _check_lambda(word, lam))


def polytope_json(p: StringPolytope, include_points: bool = True) -> str:
    doc = {
        "word": list(p.word.letters),
        "lambda": list(p.lam),
        "inequalities": p.system.rows(),
    }
    if include_points:
        doc["points"] = [list(x) for x in p.points]
    return json.dumps(doc, sort_keys=True)
