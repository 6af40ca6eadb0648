"""
Crystal structure on the lattice points of a string polytope, computed purely
from GP-paths of the wiring diagram.

For a point x and index a let M_a(x) be the set of left paths gamma for a with
<x, r(gamma)> maximal.  Then

    eps_a(x) = max(0, max_gamma <x, r(gamma)>)
    f_a(x)   = x + s(gamma_f),   gamma_f = the element of M_a(x) with the
                                  lexicographically smallest r-vector
    e_a(x)   = x - s(gamma_e),   gamma_e = the element of M_a(x) with the
                                  lexicographically largest r-vector

f_a(x) (resp. e_a(x)) is 0 when it leaves the polytope (resp. eps_a(x) = 0).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .paths import LEFT, GPPath, enumerate_paths
from .polytope import StringPolytope, string_polytope
from .typea import ReducedWord, Weight, cartan_entry
from .wiring import WiringDiagram, build_diagram

__all__ = ["StringCrystal", "CrystalAssertionError", "F_TAKES_LEX_SMALLEST_R",
           "crystal_graph", "graph_json", "graph_dot"]

# Which maximiser each operator uses.  f takes the maximiser whose r-vector is
# lexicographically smallest and e the one whose r-vector is largest; the
# opposite choice fails already for n = 3.
F_TAKES_LEX_SMALLEST_R = True


class CrystalAssertionError(AssertionError):
    """An operator produced a point violating a crystal invariant."""

    def __init__(self, message: str, diagnostics: dict):
        super().__init__(f"{message}: {json.dumps(diagnostics, sort_keys=True)}")
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class StringCrystal:
    word: ReducedWord
    lam: Weight
    check: bool = field(default=True, compare=False)

    @cached_property
    def diagram(self) -> WiringDiagram:
        return build_diagram(self.word)

    @cached_property
    def polytope(self) -> StringPolytope:
        return string_polytope(self.word, tuple(self.lam))

    @property
    def points(self):
        return self.polytope.points

    def paths(self, a: int) -> tuple[GPPath, ...]:
        return enumerate_paths(self.diagram, a, LEFT)

    def _maximisers(self, x, a):
        best, out = None, []
        for p in self.paths(a):
            v = sum(xi * ri for xi, ri in zip(x, p.r))
            if best is None or v > best:
                best, out = v, [p]
            elif v == best:
                out.append(p)
        return best, out

    def epsilon(self, x, a: int) -> int:
        best, _ = self._maximisers(x, a)
        return max(0, best)

    def weight(self, x) -> Weight:
        """lam - sum_k x_k alpha_{i_k}."""
        wt = list(self.lam)
        for xk, ik in zip(x, self.word.letters):
            for b in range(len(wt)):
                wt[b] -= xk * cartan_entry(ik, b + 1)
        return tuple(wt)

    def phi(self, x, a: int) -> int:
        return self.epsilon(x, a) + self.weight(x)[a - 1]

    def _chosen_path(self, x, a, largest: bool) -> GPPath:
        _, maxi = self._maximisers(x, a)
        key = lambda p: p.r
        return max(maxi, key=key) if largest else min(maxi, key=key)

    def f(self, x, a: int):
        x = tuple(x)
        p = self._chosen_path(x, a, largest=not F_TAKES_LEX_SMALLEST_R)
        y = tuple(u + v for u, v in zip(x, p.s))
        if y not in self.polytope:
            return None
        if self.check:
            self._verify(y, x, a, p, "f")
        return y

    def e(self, x, a: int):
        x = tuple(x)
        if self.epsilon(x, a) == 0:
            return None
        p = self._chosen_path(x, a, largest=F_TAKES_LEX_SMALLEST_R)
        y = tuple(u - v for u, v in zip(x, p.s))
        if self.check:
            self._verify(x, y, a, p, "e")
        return y

    def _verify(self, lower, upper, a, p, op):
        """upper = e_a(lower) must be a polytope point one alpha_a above."""
        diag = {"word": list(self.word.letters), "lambda": list(self.lam), "a": a,
                "op": op, "from": list(lower if op == "e" else upper),
                "path_r": list(p.r), "path_s": list(p.s)}
        if lower not in self.polytope or upper not in self.polytope:
            raise CrystalAssertionError("operator left the polytope", diag)
        wl, wu = self.weight(lower), self.weight(upper)
        alpha = tuple(cartan_entry(a, b) for b in range(1, self.word.n))
        if tuple(u - v for u, v in zip(wu, wl)) != alpha:
            raise CrystalAssertionError("weight changed by something other than alpha_a", diag)
        if self.epsilon(lower, a) != self.epsilon(upper, a) + 1:
            raise CrystalAssertionError("epsilon did not change by one", diag)

    def edges(self):
        """Sorted (x, a, f_a(x)) for every point x and index a."""
        out = []
        for x in self.points:
            for a in range(1, self.word.n):
                y = self.f(x, a)
                if y is not None:
                    out.append((x, a, y))
        return out


def crystal_graph(word: ReducedWord, lam: Weight, check: bool = True):
    c = StringCrystal(word, tuple(lam), check)
    return c.points, c.edges()


def graph_json(word: ReducedWord, lam: Weight) -> str:
    """The polytope export plus an "edges" list."""
    c = StringCrystal(word, tuple(lam))
    return json.dumps({
        "word": list(word.letters),
        "lambda": list(c.lam),
        "inequalities": c.polytope.system.rows(),
        "points": [list(x) for x in c.points],
        "edges": [{"from": list(x), "to": list(y), "i": a} for x, a, y in c.edges()],
    }, sort_keys=True)


def graph_dot(word: ReducedWord, lam: Weight) -> str:
    c = StringCrystal(word, tuple(lam))
    name = lambda x: '"' + ",".join(map(str, x)) + '"'
    lines = ["digraph crystal {"]
    for x in c.points:
        wt = ",".join(map(str, c.weight(x)))
        lines.append(f'  {name(x)} [label="({",".join(map(str, x))})\\nwt=({wt})"];')
    lines += [f'  {name(x)} -> {name(y)} [label="{a}"];' for x, a, y in c.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
