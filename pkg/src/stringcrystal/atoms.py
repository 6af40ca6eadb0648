"""
Atoms in string-polytope crystals: subsets whose weight multiset is the weight
set of some V(mu), each weight taken once.  A big atom has mu = lam.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from . import oracle
from .crystal import StringCrystal
from .embed import z_vector
from .typea import (ReducedWord, Weight, dominant_weights_below, highest_root,
                    weights_of_irrep)

__all__ = ["AtomReport", "weight_multiset", "is_atom", "conjecture_atom",
           "weyl_action", "patimo_atom_n3", "verdict_json"]


@dataclass
class AtomReport:
    size: int
    lam: Weight
    mu: Weight | None
    is_atom: bool
    is_big_atom: bool
    # weight -> multiplicity, for every weight where the subset differs from
    # N(lam) taken once (missing weights have multiplicity 0)
    discrepancies: dict = field(default_factory=dict)

    def __post_init__(self):
        assert self.is_atom or not self.is_big_atom


def weight_multiset(points, lam: Weight, word: ReducedWord) -> Counter:
    c = StringCrystal(word, tuple(lam), check=False)
    out = Counter()
    for x in points:
        x = tuple(x)
        if x not in c.polytope:
            raise ValueError(f"{list(x)} is not a point of S({list(lam)})")
        out[c.weight(x)] += 1
    return out


def is_atom(subset, lam: Weight, word: ReducedWord) -> AtomReport:
    lam = tuple(lam)
    subset = set(map(tuple, subset))
    mult = weight_multiset(subset, lam, word)
    mu = None
    if mult and all(m == 1 for m in mult.values()):
        support = set(mult)
        for cand in dominant_weights_below(lam):
            if cand in support and weights_of_irrep(cand) == support:
                mu = cand
                break
    expected = weights_of_irrep(lam)
    disc = {w: mult.get(w, 0) for w in sorted(expected | set(mult))
            if mult.get(w, 0) != (1 if w in expected else 0)}
    return AtomReport(len(subset), lam, mu, mu is not None,
                      mu is not None and mu == lam, disc)


def _shift(lam, k):
    return tuple(k * t for t in lam)


def conjecture_atom(word: ReducedWord, k: int, i: int) -> dict:
    """
    Remove from S(k theta) the translates x + z_j of S((k-1) theta) for all
    j != i and test whether what is left is a big atom.
    """
    n = word.n
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 1 <= i <= n - 1:
        raise ValueError(f"i={i} out of range [1, {n - 1}]")
    theta = highest_root(n)
    big = StringCrystal(word, _shift(theta, k), check=False)
    small = StringCrystal(word, _shift(theta, k - 1), check=False)
    images = {}
    for j in range(1, n):
        if j == i:
            continue
        z = z_vector(word, j).coords
        images[j] = {tuple(a + b for a, b in zip(x, z)) for x in small.points}
    union = set().union(*images.values()) if images else set()
    if not union <= big.polytope.point_set:
        raise AssertionError("a translate left S(k theta)")
    atom = big.polytope.point_set - union
    rep = is_atom(atom, big.lam, word)
    assert len(atom) + len(union) == len(big.points)
    return {
        "n": n, "word": list(word.letters), "k": k, "i": i,
        "atom": rep.is_atom, "big_atom": rep.is_big_atom,
        "mu": list(rep.mu) if rep.mu is not None else None,
        "atom_size": rep.size,
        "counterexample_weights": [{"weight": list(w), "multiplicity": m}
                                   for w, m in rep.discrepancies.items()],
        "image_sizes": {str(j): len(v) for j, v in images.items()},
        "union_size": len(union),
        "overlap": sum(len(v) for v in images.values()) - len(union),
    }


def weyl_action(c: StringCrystal, x, a: int):
    """s_a on a crystal point: reverse its a-string."""
    return oracle.weyl_reflection(tuple(x), a, c.f, c.e, c.epsilon, c.phi)


def patimo_atom_n3(word: ReducedWord, lam: Weight) -> set:
    """Closure of the highest point under f_2, s_1 and s_2 (sl_3 only)."""
    lam = tuple(lam)
    if word.n != 3:
        raise ValueError("defined for n = 3 only")
    if not (lam[0] > 0 and lam[1] > 0):
        raise ValueError(f"{list(lam)} is not strictly dominant")
    c = StringCrystal(word, lam)
    start = (0,) * len(word)
    seen, todo = {start}, [start]
    while todo:
        x = todo.pop()
        nxt = [c.f(x, 2)]
        for a in (1, 2):
            y = weyl_action(c, x, a)
            assert weyl_action(c, y, a) == x
            nxt.append(y)
        for y in nxt:
            if y is not None and y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def verdict_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True)
