"""
Weight-zero points z_j of B(theta), the translations psi_j: x -> x + z_j from
S(lam) to S(lam + theta), and projections that delete the first or last wire.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from . import oracle
from .crystal import StringCrystal
from .polytope import lambda_bounds, string_polytope
from .typea import ReducedWord, Weight, highest_root
from .wiring import build_diagram

__all__ = ["ZVector", "ZVectorError", "z_defining_sequence", "z_vector",
           "greedy_commutation_support", "psi", "check_morphism", "project",
           "tightest_weight", "check_projection_theorem", "report_json", "FIRST", "LAST"]

FIRST = "first"
LAST = "last"


class ZVectorError(AssertionError):
    def __init__(self, message: str, diagnostics: dict):
        super().__init__(f"{message}: {json.dumps(diagnostics, sort_keys=True)}")
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class ZVector:
    j: int
    coords: tuple[int, ...]


def z_defining_sequence(n: int, j: int) -> tuple[int, ...]:
    """Operator word f_j f_{j+1} ... f_{n-1} f_{j-1} ... f_1, as written."""
    if not 1 <= j <= n - 1:
        raise ValueError(f"j={j} out of range [1, {n - 1}]")
    return tuple(range(j, n)) + tuple(range(j - 1, 0, -1))


def _noncommuting(a, b):
    return abs(a - b) <= 1


def greedy_commutation_support(word: ReducedWord, ops) -> tuple[int, ...] | None:
    """
    Positions (1-based) picked by scanning `word` left to right and taking a
    letter whenever it can be moved to the front of what remains of `ops`
    by commuting letters.  None if `ops` is not exhausted.
    """
    remaining = list(ops)
    picked = []
    for pos, letter in enumerate(word.letters, start=1):
        for idx, op in enumerate(remaining):
            if op == letter:
                remaining.pop(idx)
                picked.append(pos)
                break
            if _noncommuting(op, letter):
                break
        if not remaining:
            break
    return tuple(picked) if not remaining else None


@lru_cache(maxsize=None)
def z_vector(word: ReducedWord, j: int) -> ZVector:
    n = word.n
    ops = z_defining_sequence(n, j)
    theta = highest_root(n)
    t = oracle.apply_f_sequence(oracle.highest_tableau(theta), ops)
    if t is None:
        raise ZVectorError("defining sequence vanished", {"word": list(word.letters), "j": j})
    coords = oracle.adapted_string(t, word)
    diag = {"word": list(word.letters), "j": j, "oracle": list(coords)}

    if set(coords) - {0, 1} or sum(coords) != n - 1:
        raise ZVectorError("z is not a 0/1 vector with n-1 ones", diag)
    if StringCrystal(word, theta, check=False).weight(coords) != (0,) * (n - 1):
        raise ZVectorError("z does not have weight zero", diag)

    greedy = greedy_commutation_support(word, ops)
    greedy_vec = tuple(1 if k in (greedy or ()) else 0 for k in range(1, len(word) + 1))
    if greedy_vec != coords:
        raise ZVectorError("greedy subword disagrees", {**diag, "greedy": list(greedy_vec)})

    if j in (1, n - 1):
        wire = 1 if j == 1 else n
        d = build_diagram(word)
        wire_vec = tuple(1 if wire in c.wires else 0 for c in d.crossings)
        if wire_vec != coords:
            raise ZVectorError("z is not the wire indicator", {**diag, "wire": list(wire_vec)})
    return ZVector(j, coords)


def psi(word: ReducedWord, lam: Weight, j: int, x) -> tuple[int, ...]:
    """x + z_j, checked to lie in S(lam + theta)."""
    z = z_vector(word, j).coords
    y = tuple(a + b for a, b in zip(x, z))
    target = tuple(a + b for a, b in zip(lam, highest_root(word.n)))
    if y not in string_polytope(word, target):
        raise AssertionError(f"psi_{j}({list(x)}) = {list(y)} is not in S({list(target)})")
    return y


def _violation(kind, x, a, **extra):
    return {"kind": kind, "x": list(x), "a": a, **extra}


def check_morphism(word: ReducedWord, lam: Weight, j: int) -> dict:
    """Positivity and commutation checks of psi_j on every point of S(lam)."""
    lam = tuple(lam)
    n = word.n
    big = tuple(a + b for a, b in zip(lam, highest_root(n)))
    src, dst = StringCrystal(word, lam), StringCrystal(word, big)
    violations = []
    for x in src.points:
        try:
            px = psi(word, lam, j, x)
        except AssertionError:
            violations.append(_violation("membership", x, None))
            continue
        for a in range(1, n):
            if src.epsilon(x, a) > 0 and not dst.epsilon(px, a) > 0:
                violations.append(_violation("epsilon", x, a))
            if src.phi(x, a) > 0 and not dst.phi(px, a) > 0:
                violations.append(_violation("phi", x, a))
            for name in ("f", "e"):
                y = getattr(src, name)(x, a)
                if y is None:
                    continue
                lhs = getattr(dst, name)(px, a)
                rhs = tuple(u + v for u, v in zip(y, z_vector(word, j).coords))
                if lhs != rhs:
                    violations.append(_violation(name, x, a, got=lhs and list(lhs),
                                                 expected=list(rhs)))
    return {"word": list(word.letters), "lambda": list(lam), "j": j,
            "violations": violations, "status": "pass" if not violations else "fail"}


def project(word: ReducedWord, x, which: str):
    """
    Delete the crossings of wire 1 (`first`) or wire n (`last`).  The letter
    of a surviving crossing is its height among the surviving wires.
    """
    n = word.n
    if n < 3:
        raise ValueError("projection needs n >= 3")
    if which not in (FIRST, LAST):
        raise ValueError(f"which must be {FIRST!r} or {LAST!r}")
    gone = 1 if which == FIRST else n
    x = tuple(x)
    if len(x) != len(word):
        raise ValueError("point and word differ in length")
    at_height = list(range(1, n + 1))
    letters, coords = [], []
    for k, level in enumerate(word.letters):
        p, q = at_height[level - 1], at_height[level]
        if gone not in (p, q):
            below = at_height.index(gone) < level - 1
            letters.append(level - 1 if below else level)
            coords.append(x[k])
        at_height[level - 1], at_height[level] = q, p
    return ReducedWord(n - 1, tuple(letters)), tuple(coords)


def tightest_weight(word: ReducedWord, x) -> Weight:
    """The smallest dominant lam with x in S(lam), read off the lam-rows."""
    zero = (0,) * (word.n - 1)
    rows = lambda_bounds(word, zero)
    lam = [0] * (word.n - 1)
    for v, letter in zip(rows.normals, word.letters):
        lam[letter - 1] = max(lam[letter - 1], sum(a * b for a, b in zip(v, x)))
    return tuple(lam)


def _find_projection_sequence(word: ReducedWord, j: int):
    """Breadth-first over first/last removals until z_j lands on an extremal z."""
    z = z_vector(word, j).coords
    frontier = [((), word, z)]
    for _ in range(word.n - 1):
        for seq, w, img in frontier:
            m = w.n
            for jj in (1, m - 1):
                if img == z_vector(w, jj).coords:
                    return seq, w, jj
        nxt = []
        for seq, w, img in frontier:
            if w.n < 3:
                continue
            for which in (FIRST, LAST):
                w2, img2 = project(w, img, which)
                nxt.append((seq + (which,), w2, img2))
        frontier = nxt
    return None


def _project_all(word, x, seq):
    for which in seq:
        word, x = project(word, x, which)
    return word, x


def _implication_violations(word: ReducedWord, lam: Weight, j: int, seq) -> list:
    """
    eps/phi implications between pr(x) and pr(x + z_j) over S(lam).  phi is
    taken with respect to the smallest weight containing pr(x), and that
    weight plus theta for pr(x + z_j).
    """
    z = z_vector(word, j).coords
    small = _project_all(word, z, seq)[0]
    violations = []
    for x in string_polytope(word, lam).points:
        _, px = _project_all(word, x, seq)
        _, pxz = _project_all(word, tuple(a + b for a, b in zip(x, z)), seq)
        mu = tightest_weight(small, px)
        nu = tuple(a + b for a, b in zip(mu, highest_root(small.n)))
        lo, hi = StringCrystal(small, mu), StringCrystal(small, nu)
        if px not in lo.polytope or pxz not in hi.polytope:
            violations.append(_violation("membership", x, None))
            continue
        for a in range(1, small.n):
            if lo.epsilon(px, a) > 0 and not hi.epsilon(pxz, a) > 0:
                violations.append(_violation("epsilon", x, a))
            if lo.phi(px, a) > 0 and not hi.phi(pxz, a) > 0:
                violations.append(_violation("phi", x, a))
    return violations


def _tried(word: ReducedWord, lam: Weight, j: int):
    """Every removal sequence of length 1..n-2: image of z_j and implication check."""
    out = []
    frontier = [((), word, z_vector(word, j).coords)]
    for _ in range(word.n - 2):
        frontier = [(seq + (which,),) + project(w, img, which)
                    for seq, w, img in frontier for which in (FIRST, LAST)]
        for seq, w, img in frontier:
            bad = _implication_violations(word, lam, j, seq)
            out.append({"sequence": list(seq), "word": list(w.letters), "image": list(img),
                        "implications_hold": not bad})
    return out


def check_projection_theorem(word: ReducedWord, lam: Weight, j: int) -> dict:
    """
    Find a removal sequence sending z_j to an extremal z of the smaller rank,
    then check the eps/phi implications for pr(x) and pr(x + z_j).  When no
    such sequence exists the report is a failure and lists, for every
    sequence tried, the image of z_j and whether the implications hold anyway.
    """
    lam = tuple(lam)
    report = {"word": list(word.letters), "lambda": list(lam), "j": j}
    found = _find_projection_sequence(word, j)
    if found is None:
        return {**report, "sequence": None, "tried": _tried(word, lam, j),
                "violations": [], "status": "fail"}
    seq, small, jj = found
    violations = _implication_violations(word, lam, j, seq)
    return {**report, "sequence": list(seq), "projected_word": list(small.letters),
            "extremal_j": jj, "violations": violations,
            "status": "pass" if not violations else "fail"}


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True)
