"""
Type A_{n-1} root data: reduced words for the longest permutation, weights in
the fundamental-weight basis, the Cartan pairing and dominance order.

Weights are plain tuples of ints of length n-1 (coordinates with respect to
omega_1, ..., omega_{n-1}).  Simple roots, simple-root indices and word letters
are 1-based throughout, matching the usual labelling of sl_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

__all__ = [
    "Weight", "ReducedWord",
    "num_positive_roots", "longest_permutation", "is_reduced_longest",
    "all_reduced_words", "lex_least_reduced_word", "standard_word",
    "cartan_entry", "simple_root", "pairing", "root_to_weight", "weight_to_root",
    "highest_root", "zero_weight", "fundamental_weight", "is_dominant",
    "dominance_leq", "weyl_dimension", "weight_to_partition",
    "partition_to_weight", "dominant_weights_below", "weight_orbit",
    "weights_of_irrep", "dominant_weights_in_box",
]

Weight = tuple[int, ...]


def num_positive_roots(n: int) -> int:
    return n * (n - 1) // 2


def longest_permutation(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _check_letters(letters, n):
    if n < 2:
        raise ValueError(f"rank parameter n must be >= 2, got {n}")
    for letter in letters:
        if not 1 <= letter <= n - 1:
            raise ValueError(f"letter {letter} out of range [1, {n - 1}]")


def is_reduced_longest(letters, n: int) -> bool:
    """
    True iff `letters` is a reduced word for the longest element of S_n.

    Runs the permutation product letter by letter: each adjacent transposition
    must create a new inversion, and the total must reach n(n-1)/2.
    """
    letters = tuple(letters)
    if not letters:
        raise ValueError("empty word")
    _check_letters(letters, n)
    if len(letters) != num_positive_roots(n):
        return False
    perm = list(range(1, n + 1))
    for letter in letters:
        i = letter - 1
        if perm[i] > perm[i + 1]:
            return False
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm) == longest_permutation(n)


@dataclass(frozen=True)
class ReducedWord:
    """A validated reduced expression (i_1, ..., i_N) of w_0 in S_n."""
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if not is_reduced_longest(self.letters, self.n):
            raise ValueError(
                f"{self.letters} is not a reduced word for w_0 in S_{self.n}")

    @classmethod
    def of(cls, letters, n: int | None = None) -> "ReducedWord":
        letters = tuple(letters)
        if n is None:
            n = max(letters) + 1
        return cls(n, letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]


@lru_cache(maxsize=None)
def all_reduced_words(n: int) -> tuple[tuple[int, ...], ...]:
    """All reduced words of w_0 in S_n, in lexicographic order."""
    if n < 2:
        raise ValueError("n must be >= 2")
    target = num_positive_roots(n)
    out = []

    def extend(perm, word):
        if len(word) == target:
            out.append(tuple(word))
            return
        for i in range(n - 1):
            if perm[i] < perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                word.append(i + 1)
                extend(perm, word)
                word.pop()
                perm[i], perm[i + 1] = perm[i + 1], perm[i]

    extend(list(range(1, n + 1)), [])
    return tuple(out)


def lex_least_reduced_word(n: int) -> tuple[int, ...]:
    # greedy: the smallest letter that still creates an inversion
    perm = list(range(1, n + 1))
    word = []
    for _ in range(num_positive_roots(n)):
        for i in range(n - 1):
            if perm[i] < perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                word.append(i + 1)
                break
    return tuple(word)


def standard_word(n: int) -> tuple[int, ...]:
    """(1, 2, ..., n-1, 1, ..., n-2, ..., 1, 2, 1)."""
    return tuple(x for top in range(n - 1, 0, -1) for x in range(1, top + 1))


def cartan_entry(a: int, b: int) -> int:
    if a == b:
        return 2
    if abs(a - b) == 1:
        return -1
    return 0


def _check_index(a, n):
    if not 1 <= a <= n - 1:
        raise ValueError(f"simple root index {a} out of range [1, {n - 1}]")


def simple_root(a: int, n: int) -> Weight:
    """alpha_a written in fundamental-weight coordinates (a Cartan matrix row)."""
    _check_index(a, n)
    return tuple(cartan_entry(a, b) for b in range(1, n))


def pairing(lam: Weight, a: int) -> int:
    """<lam, alpha_a^vee> for lam in fundamental-weight coordinates."""
    _check_index(a, len(lam) + 1)
    return lam[a - 1]


def root_to_weight(coeffs) -> Weight:
    """sum_b c_b alpha_b, from simple-root coordinates to fundamental ones."""
    r = len(coeffs)
    return tuple(sum(coeffs[b] * cartan_entry(a + 1, b + 1) for b in range(r))
                 for a in range(r))


@lru_cache(maxsize=None)
def _inverse_cartan(r: int) -> tuple[tuple[Fraction, ...], ...]:
    # (A^{-1})_{ab} = min(a,b) (n - max(a,b)) / n for type A_{n-1}, n = r + 1
    n = r + 1
    return tuple(tuple(Fraction(min(a, b) * (n - max(a, b)), n)
                       for b in range(1, n)) for a in range(1, n))


def weight_to_root(lam: Weight) -> tuple[Fraction, ...]:
    """Simple-root coordinates of lam; exact rationals."""
    inv = _inverse_cartan(len(lam))
    return tuple(sum(inv[a][b] * lam[b] for b in range(len(lam)))
                 for a in range(len(lam)))


def zero_weight(n: int) -> Weight:
    return (0,) * (n - 1)


def fundamental_weight(a: int, n: int) -> Weight:
    _check_index(a, n)
    return tuple(1 if b == a else 0 for b in range(1, n))


def highest_root(n: int) -> Weight:
    if n < 2:
        raise ValueError("n must be >= 2")
    if n == 2:
        return (2,)
    return tuple(1 if a in (1, n - 1) else 0 for a in range(1, n))


def is_dominant(lam: Weight) -> bool:
    return all(x >= 0 for x in lam)


def dominance_leq(mu: Weight, lam: Weight) -> bool:
    """mu <= lam iff lam - mu is a nonnegative integer sum of simple roots."""
    if len(mu) != len(lam):
        raise ValueError("rank mismatch")
    diff = tuple(x - y for x, y in zip(lam, mu))
    coeffs = weight_to_root(diff)
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


def weyl_dimension(lam: Weight) -> int:
    """dim V(lam) = prod_{a<=b} (lam_a + ... + lam_b + b - a + 1) / (b - a + 1)."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    r = len(lam)
    num, den = 1, 1
    for a in range(r):
        for b in range(a, r):
            num *= sum(lam[a:b + 1]) + b - a + 1
            den *= b - a + 1
    assert num % den == 0
    return num // den


def weight_to_partition(lam: Weight) -> tuple[int, ...]:
    """Length-n vector (p_1, ..., p_n) with p_r = lam_r + ... + lam_{n-1}, p_n = 0."""
    return tuple(sum(lam[r:]) for r in range(len(lam))) + (0,)


def partition_to_weight(vec) -> Weight:
    """Inverse of `weight_to_partition`, also valid for unsorted vectors."""
    return tuple(vec[r] - vec[r + 1] for r in range(len(vec) - 1))


def dominant_weights_below(lam: Weight) -> list[Weight]:
    """All dominant mu <= lam, sorted lexicographically."""
    p = weight_to_partition(lam)
    n, total = len(p), sum(p)
    bounds = [sum(p[:k + 1]) for k in range(n)]
    out = []

    def build(prefix, remaining, cap):
        k = len(prefix)
        if k == n:
            if remaining == 0:
                q = tuple(prefix)
                out.append(partition_to_weight(tuple(x - q[-1] for x in q)))
            return
        for x in range(min(cap, remaining), -1, -1):
            if sum(prefix) + x > bounds[k]:
                continue
            if x * (n - k) < remaining:
                break
            build(prefix + [x], remaining - x, x)

    build([], total, total)
    return sorted(set(out))


def weight_orbit(mu: Weight) -> set[Weight]:
    """The Weyl group orbit of mu."""
    from itertools import permutations
    vec = weight_to_partition(mu)
    return {partition_to_weight(v) for v in set(permutations(vec))}


def weights_of_irrep(lam: Weight) -> set[Weight]:
    """The weight set N(lam) of V(lam): orbits of all dominant mu <= lam."""
    out = set()
    for mu in dominant_weights_below(lam):
        out |= weight_orbit(mu)
    return out


def dominant_weights_in_box(n: int, bound: int):
    """Every dominant weight of sl_n with all coordinates <= bound."""
    return [tuple(c) for c in product(range(bound + 1), repeat=n - 1)]

