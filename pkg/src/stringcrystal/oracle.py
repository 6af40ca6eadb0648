"""
Ground-truth crystals: semistandard tableaux, tensor products of crystal
elements, adapted strings and the Lascoux-Schuetzenberger charge.

Nothing here looks at wiring diagrams or paths.  Tensor products follow the
anti-Kashiwara convention: f_i(x (x) y) = f_i(x) (x) y when phi_i(y) <= eps_i(x).
A tableau is identified with the tensor product of the letters of its row
reading word (rows left to right, bottom row first), so on a word the
bracketing rule reads: an i+1 cancels against a later i, f_i changes the
rightmost uncancelled i, e_i the leftmost uncancelled i+1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .typea import ReducedWord, Weight, partition_to_weight, weight_to_partition

__all__ = [
    "Tableau", "highest_tableau", "all_tableaux", "crystal_elements",
    "word_signature", "word_f", "word_e", "tableau_f", "tableau_e",
    "tableau_epsilon", "tableau_phi", "tableau_weight",
    "Letter", "TensorElement", "tensor", "tensor_f", "tensor_e", "tensor_epsilon",
    "tensor_phi", "tensor_weight",
    "apply_f_sequence", "adapted_string", "string_to_tableau",
    "is_adapted_string", "charge", "word_charge", "dominant_representative",
    "kostka_foulkes",
    "add_theta_column",
    "weyl_reflection",
]


@dataclass(frozen=True, order=True)
class Tableau:
    """A semistandard tableau with entries in [1, n], stored as a tuple of rows."""
    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in reversed(self.rows) for x in row)

    def content(self) -> tuple[int, ...]:
        c = [0] * self.n
        for row in self.rows:
            for x in row:
                c[x - 1] += 1
        return tuple(c)

    def weight(self) -> Weight:
        return partition_to_weight(self.content())

    def is_semistandard(self) -> bool:
        rows = self.rows
        for r, row in enumerate(rows):
            if any(not 1 <= x <= self.n for x in row):
                return False
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                return False
            if r and len(row) > len(rows[r - 1]):
                return False
            if r and any(rows[r - 1][c] >= row[c] for c in range(len(row))):
                return False
        return True

    def with_reading_word(self, word) -> "Tableau":
        rows, k = [], len(word)
        for length in self.shape:
            rows.append(tuple(word[k - length:k]))
            k -= length
        return Tableau(tuple(rows), self.n)

    def to_json(self):
        return [list(r) for r in self.rows]


def highest_tableau(lam: Weight) -> Tableau:
    """b_lam: row r filled with the letter r."""
    p = weight_to_partition(lam)
    return Tableau(tuple((r + 1,) * p[r] for r in range(len(p)) if p[r]),
                   len(lam) + 1)


def word_signature(word, i: int) -> tuple[list[int], list[int]]:
    """Positions of uncancelled i's and uncancelled (i+1)'s, left to right."""
    open_ip1 = []
    free_i = []
    for pos, x in enumerate(word):
        if x == i + 1:
            open_ip1.append(pos)
        elif x == i:
            if open_ip1:
                open_ip1.pop()
            else:
                free_i.append(pos)
    return free_i, open_ip1


def word_f(word, i: int):
    free_i, _ = word_signature(word, i)
    if not free_i:
        return None
    w = list(word)
    w[free_i[-1]] = i + 1
    return tuple(w)


def word_e(word, i: int):
    _, free_ip1 = word_signature(word, i)
    if not free_ip1:
        return None
    w = list(word)
    w[free_ip1[0]] = i
    return tuple(w)


def tableau_f(t: Tableau, i: int) -> Tableau | None:
    w = word_f(t.reading_word(), i)
    return None if w is None else t.with_reading_word(w)


def tableau_e(t: Tableau, i: int) -> Tableau | None:
    w = word_e(t.reading_word(), i)
    return None if w is None else t.with_reading_word(w)


def tableau_epsilon(t: Tableau, i: int) -> int:
    return len(word_signature(t.reading_word(), i)[1])


def tableau_phi(t: Tableau, i: int) -> int:
    return len(word_signature(t.reading_word(), i)[0])


def tableau_weight(t: Tableau) -> Weight:
    return t.weight()


@lru_cache(maxsize=None)
def crystal_elements(lam: Weight) -> tuple[Tableau, ...]:
    """B(lam) generated from b_lam by the lowering operators (BFS), sorted."""
    n = len(lam) + 1
    start = highest_tableau(lam)
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for i in range(1, n):
            u = tableau_f(t, i)
            if u is not None and u not in seen:
                seen.add(u)
                queue.append(u)
    return tuple(sorted(seen))


def all_tableaux(lam: Weight) -> list[Tableau]:
    """Every SSYT of shape lam with entries <= n, by direct filling."""
    n = len(lam) + 1
    shape = [x for x in weight_to_partition(lam) if x]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    out = []

    def fill(k):
        if k == len(cells):
            out.append(Tableau(tuple(tuple(r) for r in grid), n))
            return
        r, c = cells[k]
        lo = 1
        if c:
            lo = max(lo, grid[r][c - 1])
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        for x in range(lo, n + 1):
            grid[r][c] = x
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return sorted(out)


# -- tensor products ---------------------------------------------------------

@dataclass(frozen=True, order=True)
class Letter:
    """The single-box crystal B(omega_1) of sl_n."""
    value: int
    n: int


def _letter_f(x: Letter, i):
    return Letter(i + 1, x.n) if x.value == i else None


def _letter_e(x: Letter, i):
    return Letter(i, x.n) if x.value == i + 1 else None


@dataclass(frozen=True)
class TensorElement:
    """left (x) right; each side is a Letter, a Tableau or another TensorElement."""
    left: object
    right: object

    def flatten(self) -> tuple:
        out = []
        for side in (self.left, self.right):
            out.extend(side.flatten() if isinstance(side, TensorElement) else (side,))
        return tuple(out)


def tensor(*factors) -> TensorElement:
    """Left-nested product ((x_1 (x) x_2) (x) x_3) ..."""
    if len(factors) < 2:
        raise ValueError("need at least two factors")
    out = TensorElement(factors[0], factors[1])
    for fac in factors[2:]:
        out = TensorElement(out, fac)
    return out


def _ops(x):
    if isinstance(x, Letter):
        return (_letter_f, _letter_e,
                lambda y, i: int(y.value == i + 1),
                lambda y, i: int(y.value == i),
                lambda y: partition_to_weight(
                    tuple(int(k == y.value) for k in range(1, y.n + 1))))
    if isinstance(x, Tableau):
        return tableau_f, tableau_e, tableau_epsilon, tableau_phi, tableau_weight
    if isinstance(x, TensorElement):
        return tensor_f, tensor_e, tensor_epsilon, tensor_phi, tensor_weight
    raise TypeError(f"not a crystal element: {x!r}")


def _f(x, i):
    return _ops(x)[0](x, i)


def _e(x, i):
    return _ops(x)[1](x, i)


def _eps(x, i):
    return _ops(x)[2](x, i)


def _phi(x, i):
    return _ops(x)[3](x, i)


def _wt(x):
    return _ops(x)[4](x)


def tensor_epsilon(x: TensorElement, i: int) -> int:
    # eps(x (x) y) = max(eps(y), eps(x) - <wt(y), alpha_i>)
    return max(_eps(x.right, i), _eps(x.left, i) - _wt(x.right)[i - 1])


def tensor_phi(x: TensorElement, i: int) -> int:
    # phi(x (x) y) = max(phi(x), phi(y) + <wt(x), alpha_i>)
    return max(_phi(x.left, i), _phi(x.right, i) + _wt(x.left)[i - 1])


def tensor_weight(x: TensorElement) -> Weight:
    return tuple(a + b for a, b in zip(_wt(x.left), _wt(x.right)))


def tensor_f(x: TensorElement, i: int):
    if _phi(x.right, i) <= _eps(x.left, i):
        y = _f(x.left, i)
        return None if y is None else TensorElement(y, x.right)
    y = _f(x.right, i)
    return None if y is None else TensorElement(x.left, y)


def tensor_e(x: TensorElement, i: int):
    # second branch acts by e_i on the right factor (the printed f_i there
    # would break e_i f_i = id)
    if _phi(x.right, i) < _eps(x.left, i):
        y = _e(x.left, i)
        return None if y is None else TensorElement(y, x.right)
    y = _e(x.right, i)
    return None if y is None else TensorElement(x.left, y)


# -- adapted strings -----------------------------------------------------------

def apply_f_sequence(t: Tableau, ops) -> Tableau | None:
    """Apply f_{a} for a in `ops`, rightmost first (operator-composition order)."""
    for a in reversed(ops):
        t = tableau_f(t, a)
        if t is None:
            return None
    return t


def adapted_string(t: Tableau, word: ReducedWord) -> tuple[int, ...]:
    """
    String coordinates of t with respect to `word`.

    x_k is the length of the i_k-string above the current element, which is
    then raised to its top; k runs left to right.
    """
    coords = []
    cur = t
    for a in word.letters:
        k = 0
        while True:
            nxt = tableau_e(cur, a)
            if nxt is None:
                break
            cur, k = nxt, k + 1
        coords.append(k)
    if any(tableau_epsilon(cur, a) for a in range(1, t.n)):
        raise RuntimeError(f"string extraction of {t} did not reach a highest weight")
    if cur.shape != t.shape or cur != _highest_of_shape(t):
        raise RuntimeError(f"string extraction of {t} ended at {cur}")
    coords = tuple(coords)
    if string_to_tableau(coords, word, _shape_weight(t)) != t:
        raise RuntimeError(f"string {coords} does not rebuild {t}")
    return coords


def _shape_weight(t: Tableau) -> Weight:
    shape = list(t.shape) + [0] * (t.n - len(t.shape))
    return partition_to_weight(shape)


def _highest_of_shape(t: Tableau) -> Tableau:
    return highest_tableau(_shape_weight(t))


def string_to_tableau(coords, word: ReducedWord, lam: Weight) -> Tableau | None:
    """f_{i_1}^{x_1} ... f_{i_N}^{x_N} b_lam, or None if some step vanishes."""
    t = highest_tableau(lam)
    for a, x in zip(reversed(word.letters), reversed(tuple(coords))):
        for _ in range(x):
            t = tableau_f(t, a)
            if t is None:
                return None
    return t


def is_adapted_string(coords, word: ReducedWord, lam: Weight) -> bool:
    """
    The defining condition: f_x b_lam != 0 and, for every k, e_{i_k} kills
    f_{i_{k+1}}^{x_{k+1}} ... f_{i_N}^{x_N} b_lam.
    """
    coords = tuple(coords)
    t = highest_tableau(lam)
    letters = word.letters
    for k in range(len(letters) - 1, -1, -1):
        if tableau_e(t, letters[k]) is not None:
            return False
        for _ in range(coords[k]):
            t = tableau_f(t, letters[k])
            if t is None:
                return False
    return True


# -- charge ----------------------------------------------------------------------

def _standard_charge(word) -> int:
    # letter 1 has index 0; r+1 gets index(r) + 1 iff it sits right of r
    pos = {x: p for p, x in enumerate(word)}
    idx, total = 0, 0
    for r in range(2, len(word) + 1):
        if pos[r] > pos[r - 1]:
            idx += 1
        total += idx
    return total


def word_charge(word) -> int:
    """
    Charge of a word with partition content.

    Standard subwords are peeled off by scanning leftward (cyclically) from the
    right end for 1, 2, 3, ...; the charge is the sum of their charges.
    """
    word = list(word)
    if not word:
        return 0
    m = max(word)
    counts = [word.count(x) for x in range(1, m + 1)]
    if any(counts[k] < counts[k + 1] for k in range(m - 1)):
        raise ValueError("charge needs partition content")
    total = 0
    items = list(word)
    while items:
        chosen = []
        p = len(items)
        for letter in range(1, max(items) + 1):
            for step in range(1, len(items) + 1):
                q = (p - step) % len(items)
                if items[q] == letter:
                    chosen.append(q)
                    p = q
                    break
        chosen_set = set(chosen)
        total += _standard_charge([x for q, x in enumerate(items) if q in chosen_set])
        items = [x for q, x in enumerate(items) if q not in chosen_set]
    return total


def dominant_representative(t: Tableau) -> Tableau:
    """Apply string reversals s_a until the content is a partition."""
    while True:
        c = t.content()
        for a in range(1, t.n):
            if c[a - 1] < c[a]:
                t = weyl_reflection(t, a, tableau_f, tableau_e, tableau_epsilon, tableau_phi)
                break
        else:
            return t


def charge(t: Tableau) -> int:
    """
    Charge of the reading word of t.  Tableaux whose content is not a
    partition are first moved to partition content by the Weyl group action
    (charge is constant on these orbits by definition).
    """
    return word_charge(dominant_representative(t).reading_word())


def _q_kostant(gamma: tuple[int, ...], r: int = 0) -> dict:
    """
    Sum of q^(number of roots) over ways of writing gamma (a vector in Z^n
    summing to 0) as a multiset of positive roots e_i - e_j, i < j.
    """
    return _q_kostant_cached(tuple(gamma), r)


@lru_cache(maxsize=None)
def _q_kostant_cached(gamma, r):
    n = len(gamma)
    roots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if r == len(roots):
        return {0: 1} if not any(gamma) else {}
    i, j = roots[r]
    g = list(gamma)
    out: dict = {}
    m = 0
    # the i-th coordinate can only drop below zero once the remaining
    # roots cannot restore it
    while g[i] >= 0:
        for d, c in _q_kostant_cached(tuple(g), r + 1).items():
            out[d + m] = out.get(d + m, 0) + c
        g[i] -= 1
        g[j] += 1
        m += 1
    return out


def kostka_foulkes(lam: tuple[int, ...], mu: tuple[int, ...]) -> dict:
    """
    K_{lam, mu}(q) for partitions of equal length, as {degree: coefficient},
    from Lusztig's formula sum_w sgn(w) P_q(w(lam + rho) - (mu + rho)).
    """
    from itertools import permutations

    n = len(lam)
    if len(mu) != n or sum(lam) != sum(mu):
        raise ValueError("partitions must have equal length and size")
    lr = [lam[k] + n - 1 - k for k in range(n)]
    mr = [mu[k] + n - 1 - k for k in range(n)]
    out: dict = {}
    for perm in permutations(range(n)):
        sign = 1
        for x in range(n):
            for y in range(x + 1, n):
                if perm[x] > perm[y]:
                    sign = -sign
        gamma = tuple(lr[perm[k]] - mr[k] for k in range(n))
        for d, c in _q_kostant(gamma).items():
            out[d] = out.get(d, 0) + sign * c
    return {d: c for d, c in sorted(out.items()) if c}


def add_theta_column(t: Tableau) -> Tableau:
    """Prepend the column 1, ..., n-1 and append a box n to the first row."""
    n = t.n
    rows = [list(r) for r in t.rows] + [[] for _ in range(n - 1 - len(t.rows))]
    new = [[r + 1] + rows[r] for r in range(n - 1)]
    new[0].append(n)
    return Tableau(tuple(tuple(r) for r in new), n)


def weyl_reflection(x, a: int, f, e, epsilon, phi):
    """s_a: reverse x inside its a-string."""
    d = phi(x, a) - epsilon(x, a)
    for _ in range(abs(d)):
        x = f(x, a) if d > 0 else e(x, a)
    return x
