"""Classical tableau combinatorics used as an independent oracle.

Straight tableaux are tuples of rows in English notation (top row first).
Skew tableaux carry their outer/inner shapes and one tuple of entries per
row covering the columns ``inner[r] .. outer[r]-1``.  Contratableaux store
their rows bottom-up, each row read left to right in the 180-degree
rotated, right-aligned diagram.
"""
from __future__ import annotations

import random
from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .hive_core import HiveError, Partition, as_partition

Tableau = tuple[tuple[int, ...], ...]
Word = tuple[int, ...]


def is_reverse_lattice(word: Sequence[int]) -> bool:
    """Every suffix contains no more ``i`` than ``i-1`` for all ``i >= 2``."""
    counts: Counter[int] = Counter()
    for x in reversed(word):
        if x < 1:
            raise ValueError(f"letters must be positive, got {x}")
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def is_lattice(word: Sequence[int]) -> bool:
    """Prefix (Yamanouchi) version: every prefix has #i >= #(i+1)."""
    return is_reverse_lattice(tuple(reversed(word)))


def content(word: Iterable[int]) -> Counter[int]:
    return Counter(word)


# --- straight tableaux ------------------------------------------------------

def shape_of(t: Tableau) -> Partition:
    return Partition(len(row) for row in t)


def reading_word(t: Tableau) -> Word:
    """Rows bottom to top, each left to right."""
    return tuple(x for row in reversed(t) for x in row)


def is_semistandard(t: Tableau) -> bool:
    for r, row in enumerate(t):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if r and (len(row) > len(t[r - 1]) or any(t[r - 1][c] >= row[c] for c in range(len(row)))):
            return False
    return True


def superstandard(mu) -> tuple[Tableau, Word]:
    """U(mu): row ``i`` holds ``mu_i`` copies of ``i``; returned with its word."""
    mu = as_partition(mu)
    t = tuple((i,) * m for i, m in enumerate(mu.parts, 1))
    return t, reading_word(t)


def row_insert(t: Tableau, x: int) -> Tableau:
    rows = [list(r) for r in t]
    for row in rows:
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return tuple(tuple(r) for r in rows)
        row[j], x = x, row[j]
    rows.append([x])
    return tuple(tuple(r) for r in rows)


def column_insert(t: Tableau, x: int) -> Tableau:
    """Column bumping: ``x`` bumps the smallest entry ``>= x`` of a column
    into the next column."""
    rows = [list(r) for r in t]
    c = 0
    while True:
        col = [row[c] for row in rows if len(row) > c]
        j = bisect_left(col, x)
        if j == len(col):
            if j == len(rows):
                rows.append([x])
            else:
                rows[j].append(x)
            return tuple(tuple(r) for r in rows)
        rows[j][c], x = x, col[j]
        c += 1


def insertion_tableau(word: Iterable[int]) -> Tableau:
    """P(word) by row insertion left to right."""
    t: Tableau = ()
    for x in word:
        t = row_insert(t, x)
    return t


def knuth_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    return insertion_tableau(u) == insertion_tableau(v)


def plactic_product(r: Tableau, s: Tableau) -> Tableau:
    """``r * s`` by column-inserting the letters of w(r), last first, into s."""
    out = tuple(tuple(row) for row in s)
    for x in reversed(reading_word(r)):
        out = column_insert(out, x)
    return out


# --- skew tableaux ----------------------------------------------------------

@dataclass(frozen=True)
class SkewTableau:
    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def cells(self) -> dict[tuple[int, int], int]:
        return {(r, self.inner[r + 1] + j): x
                for r, row in enumerate(self.rows) for j, x in enumerate(row)}

    def lr_word(self) -> Word:
        """Rows top to bottom, each right to left."""
        return tuple(x for row in self.rows for x in reversed(row))

    def word(self) -> Word:
        """Rows bottom to top, each left to right."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def to_json(self) -> list[list[int | None]]:
        return [[None] * self.inner[r + 1] + list(row) for r, row in enumerate(self.rows)]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[int | None]]) -> "SkewTableau":
        inner = Partition(sum(1 for x in row if x is None) for row in rows)
        outer = Partition(len(row) for row in rows)
        return cls(outer, inner, tuple(tuple(x for x in row if x is not None) for row in rows))


def parse_skew_shape(text: str) -> tuple[Partition, Partition]:
    outer, _, inner = text.partition("/")
    return Partition.parse(outer), Partition.parse(inner)


def _skew_fillings(outer: Partition, inner: Partition, weights: Sequence[int],
                   lattice: bool) -> Iterator[SkewTableau]:
    if not outer.contains(inner):
        raise HiveError(f"{inner} is not contained in {outer}")
    if outer.size - inner.size != sum(weights):
        raise HiveError("shape size and content size differ")
    nrows = len(outer)
    order = [(r, c) for r in range(nrows) for c in range(outer[r + 1] - 1, inner[r + 1] - 1, -1)]
    letters = len(weights)
    grid: dict[tuple[int, int], int] = {}
    used = [0] * (letters + 2)

    def rec(idx: int) -> Iterator[SkewTableau]:
        if idx == len(order):
            yield SkewTableau(outer, inner, tuple(
                tuple(grid[(r, c)] for c in range(inner[r + 1], outer[r + 1]))
                for r in range(nrows)))
            return
        r, c = order[idx]
        hi = grid.get((r, c + 1), letters)
        lo = grid[(r - 1, c)] + 1 if (r - 1, c) in grid else 1
        for x in range(lo, hi + 1):
            if used[x] >= weights[x - 1]:
                continue
            if lattice and x > 1 and used[x] + 1 > used[x - 1]:
                continue
            used[x] += 1
            grid[(r, c)] = x
            yield from rec(idx + 1)
            used[x] -= 1
            del grid[(r, c)]

    yield from rec(0)


def enumerate_lr_skew(outer, inner, content_) -> list[SkewTableau]:
    """LR skew tableaux of shape outer/inner with the given content: semistandard
    fillings whose right-to-left, top-to-bottom word is a lattice word."""
    outer, inner, mu = as_partition(outer), as_partition(inner), as_partition(content_)
    return list(_skew_fillings(outer, inner, mu.parts, lattice=True))


def enumerate_semistandard_skew(outer, inner, weights: Sequence[int]) -> list[SkewTableau]:
    return list(_skew_fillings(as_partition(outer), as_partition(inner), list(weights), lattice=False))


def lr_coefficient_oracle(lam, mu, nu) -> int:
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if nu.size != lam.size + mu.size or not nu.contains(lam):
        return 0
    return sum(1 for _ in _skew_fillings(nu, lam, mu.parts, lattice=True))


# --- jeu de taquin ----------------------------------------------------------

def _inner_corners(inner: list[int]) -> list[tuple[int, int]]:
    out = []
    for r, length in enumerate(inner):
        if length and (r + 1 == len(inner) or inner[r + 1] < length):
            out.append((r, length - 1))
    return out


def _slide(cells: dict[tuple[int, int], int], hole: tuple[int, int]) -> None:
    r, c = hole
    while True:
        right = cells.get((r, c + 1))
        below = cells.get((r + 1, c))
        if right is None and below is None:
            return
        if below is not None and (right is None or below <= right):
            cells[(r, c)] = cells.pop((r + 1, c))
            r += 1
        else:
            cells[(r, c)] = cells.pop((r, c + 1))
            c += 1


def rectify_skew(t: SkewTableau, rng: random.Random | None = None) -> Tableau:
    """Jeu-de-taquin rectification.  ``rng`` picks among the available inner
    corners at each step; the result does not depend on the choice."""
    cells = t.cells()
    inner = list(t.inner.parts)
    while any(inner):
        corners = _inner_corners(inner)
        r, c = rng.choice(corners) if rng else corners[-1]
        inner[r] -= 1
        _slide(cells, (r, c))
    nrows = max((r for r, _ in cells), default=-1) + 1
    return tuple(tuple(cells[(r, c)] for c in range(sum(1 for rr, _ in cells if rr == r)))
                 for r in range(nrows))


# --- contratableaux ---------------------------------------------------------

@dataclass(frozen=True)
class ContraTableau:
    """``rows[k-1]`` is row ``k`` counted from the bottom, read left to right."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def word(self) -> Word:
        return tuple(x for row in self.rows for x in row)

    def content(self) -> Counter[int]:
        return Counter(self.word())

    def to_skew(self) -> SkewTableau:
        """English-notation skew tableau of the rotated diagram."""
        lam = self.shape
        width = lam[1]
        m = len(lam)
        outer = Partition([width] * m)
        inner = Partition(width - lam[m - r] for r in range(m))
        return SkewTableau(outer, inner, tuple(reversed(self.rows)))

    def is_valid(self) -> bool:
        if any(x < 1 for x in self.word()):
            return False
        sk = self.to_skew()
        cells = sk.cells()
        for (r, c), x in cells.items():
            if (r, c + 1) in cells and cells[(r, c + 1)] < x:
                return False
            if (r + 1, c) in cells and cells[(r + 1, c)] <= x:
                return False
        return True

    def to_json(self) -> dict:
        return {"rows_from_bottom": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data) -> "ContraTableau":
        rows = data["rows_from_bottom"] if isinstance(data, dict) else data
        return cls(tuple(tuple(r) for r in rows))


def rectify(t: ContraTableau | SkewTableau | Tableau, rng: random.Random | None = None) -> Tableau:
    if isinstance(t, ContraTableau):
        t = t.to_skew()
    elif not isinstance(t, SkewTableau):
        rows = tuple(tuple(r) for r in t)
        t = SkewTableau(Partition(len(r) for r in rows), Partition(), rows)
    return rectify_skew(t, rng)
