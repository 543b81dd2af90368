"""Hive triangle indexing, labelings, rhombus inequalities and borders.

Vertices are addressed as ``(i, k)`` with ``1 <= i <= n+1`` and
``0 <= k <= n+1-i``.  Row ``i`` is the ``i``-th northwest-to-southeast
diagonal row (row 1 is the boundary row carrying lambda), ``k`` counts
along the row.  ``(i, 0)`` runs down the northeast-to-southwest side
(nu) and ``(i, n+1-i)`` runs along the bottom (mu, right to left).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

HiveCoord = tuple[int, int]


class HiveError(ValueError):
    """Invalid partitions, borders or labelings."""


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point labels are not allowed")
    return Fraction(value)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise HiveError(f"partition {parts} has a negative part")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise HiveError(f"partition {parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0", "()", "[]", "-"):
            return cls()
        try:
            return cls(int(p) for p in text.split(","))
        except ValueError as exc:
            if isinstance(exc, HiveError):
                raise
            raise HiveError(f"cannot parse partition {text!r}") from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, idx: int) -> int:
        """1-based part access; parts past the length are 0."""
        if idx < 1:
            raise IndexError(idx)
        return self.parts[idx - 1] if idx <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise HiveError(f"partition {self.parts} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def scaled(self, factor: int) -> "Partition":
        return Partition(factor * p for p in self.parts)

    def __add__(self, other: "Partition") -> "Partition":
        m = max(len(self), len(other))
        return Partition(a + b for a, b in zip(self.padded(m), other.padded(m)))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(
            a >= b for a, b in zip(self.parts, other.parts))

    def is_strict(self, n: int) -> bool:
        p = self.padded(n)
        return all(a > b for a, b in zip(p, p[1:]))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "()"


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


# --- coordinates -----------------------------------------------------------

@lru_cache(maxsize=None)
def coords(n: int) -> tuple[HiveCoord, ...]:
    """All hive vertices, row-major."""
    return tuple((i, k) for i in range(1, n + 2) for k in range(n + 2 - i))


def is_valid(n: int, c: HiveCoord) -> bool:
    i, k = c
    return 1 <= i <= n + 1 and 0 <= k <= n + 1 - i


def is_border(n: int, c: HiveCoord) -> bool:
    i, k = c
    return i == 1 or k == 0 or k == n + 1 - i


@lru_cache(maxsize=None)
def border_coords(n: int) -> tuple[HiveCoord, ...]:
    return tuple(c for c in coords(n) if is_border(n, c))


@lru_cache(maxsize=None)
def interior_coords(n: int) -> tuple[HiveCoord, ...]:
    return tuple(c for c in coords(n) if not is_border(n, c))


@lru_cache(maxsize=None)
def border_sides(n: int) -> tuple[tuple[HiveCoord, ...], ...]:
    """The three straight sides as ordered vertex runs (lambda, nu, mu)."""
    right = tuple((1, k) for k in range(n + 1))
    left = tuple((i, 0) for i in range(1, n + 2))
    bottom = tuple((i, n + 1 - i) for i in range(1, n + 2))
    return right, left, bottom


# --- rhombi ----------------------------------------------------------------

@dataclass(frozen=True)
class Rhombus:
    """One rhombus inequality: sum(obtuse) >= sum(acute)."""

    orientation: str
    anchor: HiveCoord
    obtuse: tuple[HiveCoord, HiveCoord]
    acute: tuple[HiveCoord, HiveCoord]

    @property
    def vertices(self) -> tuple[HiveCoord, ...]:
        return self.obtuse + self.acute

    def slack(self, values) -> Fraction:
        """Obtuse sum minus acute sum; ``values`` is indexable by coord."""
        (o1, o2), (a1, a2) = self.obtuse, self.acute
        return values[o1] + values[o2] - values[a1] - values[a2]

    def to_json(self) -> dict:
        return {"orientation": self.orientation, "anchor": list(self.anchor)}


def _r1(i: int, k: int) -> Rhombus:
    # a^{i+1}_k - a^{i+1}_{k-1} >= a^i_{k+1} - a^i_k
    return Rhombus("R1", (i, k), ((i + 1, k), (i, k)), ((i + 1, k - 1), (i, k + 1)))


def _r2(i: int, k: int) -> Rhombus:
    # a^i_k - a^i_{k-1} >= a^{i+1}_k - a^{i+1}_{k-1}
    return Rhombus("R2", (i, k), ((i, k), (i + 1, k - 1)), ((i, k - 1), (i + 1, k)))


def _r3(i: int, k: int) -> Rhombus:
    # a^{i+1}_{k-1} - a^i_{k-1} <= a^i_k - a^{i-1}_k
    return Rhombus("R3", (i, k), ((i, k - 1), (i, k)), ((i + 1, k - 1), (i - 1, k)))


def make_rhombus(orientation: str, anchor: HiveCoord) -> Rhombus:
    try:
        return {"R1": _r1, "R2": _r2, "R3": _r3}[orientation](*anchor)
    except KeyError:
        raise HiveError(f"unknown rhombus orientation {orientation!r}") from None


@lru_cache(maxsize=None)
def all_rhombi(n: int, families: str = "123") -> tuple[Rhombus, ...]:
    """Every rhombus of the side-``n`` triangle, optionally restricted to
    some of the families R1/R2/R3."""
    if n < 0:
        raise HiveError("side size must be nonnegative")
    out = []
    pairs = [(i, k) for i in range(1, n) for k in range(1, n + 1 - i)]
    if "1" in families:
        out += [_r1(i, k) for i, k in pairs]
    if "2" in families:
        out += [_r2(i, k) for i, k in pairs]
    if "3" in families:
        out += [_r3(i + 1, k) for i, k in pairs]
    return tuple(out)


@lru_cache(maxsize=None)
def rhombi_at(n: int) -> dict[HiveCoord, tuple[Rhombus, ...]]:
    table: dict[HiveCoord, list[Rhombus]] = {c: [] for c in coords(n)}
    for r in all_rhombi(n):
        for v in r.vertices:
            table[v].append(r)
    return {c: tuple(rs) for c, rs in table.items()}


# --- labelings -------------------------------------------------------------

@dataclass(frozen=True)
class Labeling:
    """Exact rational labels on all hive vertices; ``rows[i-1][k] = a^i_k``."""

    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise HiveError("side size must be nonnegative")
        rows = tuple(tuple(to_fraction(v) for v in row) for row in self.rows)
        if len(rows) != self.n + 1 or any(
                len(row) != self.n + 2 - i for i, row in enumerate(rows, 1)):
            raise HiveError(f"row lengths do not match a side-{self.n} hive")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_values(cls, n: int, values: Mapping[HiveCoord, object]) -> "Labeling":
        try:
            rows = [[values[(i, k)] for k in range(n + 2 - i)] for i in range(1, n + 2)]
        except KeyError as exc:
            raise HiveError(f"missing label for vertex {exc.args[0]}") from None
        return cls(n, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, n: int) -> "Labeling":
        return cls(n, tuple((0,) * (n + 2 - i) for i in range(1, n + 2)))

    def __getitem__(self, c: HiveCoord) -> Fraction:
        i, k = c
        if not is_valid(self.n, c):
            raise KeyError(c)
        return self.rows[i - 1][k]

    def values(self) -> dict[HiveCoord, Fraction]:
        return {c: self[c] for c in coords(self.n)}

    def replace(self, updates: Mapping[HiveCoord, object]) -> "Labeling":
        vals = self.values()
        vals.update(updates)
        return Labeling.from_values(self.n, vals)

    def border(self) -> "Border":
        return Border(self.n, {c: self[c] for c in border_coords(self.n)})

    def __add__(self, other: "Labeling") -> "Labeling":
        return Labeling(self.n, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scale(self, factor) -> "Labeling":
        f = to_fraction(factor)
        return Labeling(self.n, tuple(tuple(f * a for a in r) for r in self.rows))


def rhombus_deficits(labeling: Labeling, families: str = "123") -> list[tuple[Rhombus, Fraction]]:
    """Violated rhombi with their deficit (acute sum minus obtuse sum)."""
    out = []
    for r in all_rhombi(labeling.n, families):
        s = r.slack(labeling)
        if s < 0:
            out.append((r, -s))
    return out


def check_labeling(labeling: Labeling) -> list[Rhombus]:
    """Violated rhombi; empty iff ``labeling`` is a hive."""
    return [r for r, _ in rhombus_deficits(labeling)]


def is_hive(labeling: Labeling) -> bool:
    return all(r.slack(labeling) >= 0 for r in all_rhombi(labeling.n))


def is_integral(labeling: Labeling) -> bool:
    return all(v.denominator == 1 for row in labeling.rows for v in row)


# --- borders ---------------------------------------------------------------

@dataclass(frozen=True)
class Border:
    n: int
    values: Mapping[HiveCoord, Fraction] = field(compare=False)

    def __post_init__(self):
        vals = {c: to_fraction(v) for c, v in self.values.items()}
        if set(vals) != set(border_coords(self.n)):
            raise HiveError(f"border values must cover exactly the {len(border_coords(self.n))} border vertices")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, c: HiveCoord) -> Fraction:
        return self.values[c]

    def __eq__(self, other) -> bool:
        return isinstance(other, Border) and self.n == other.n and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.values.items()))))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values.values())

    def side_differences(self) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
        """Consecutive differences down each side: (lambda, nu, mu)."""
        out = []
        for side in border_sides(self.n):
            vals = [self.values[c] for c in side]
            out.append([b - a for a, b in zip(vals, vals[1:])])
        return tuple(out)

    def is_concave(self) -> bool:
        return all(all(x >= y for x, y in zip(d, d[1:])) for d in self.side_differences())

    def extend(self, interior: Mapping[HiveCoord, object]) -> Labeling:
        vals = dict(self.values)
        vals.update(interior)
        return Labeling.from_values(self.n, vals)

    def triple(self) -> tuple[Partition, Partition, Partition] | None:
        """(lambda, mu, nu) if the border comes from a partition triple."""
        if self.values[(1, 0)] != 0:
            return None
        lam, nu, mu = self.side_differences()
        try:
            if any(d.denominator != 1 for d in lam + nu + mu):
                return None
            return (Partition(int(d) for d in lam), Partition(int(d) for d in mu),
                    Partition(int(d) for d in nu))
        except HiveError:
            return None


def validate_triple(lam, mu, nu, n: int) -> tuple[Partition, Partition, Partition]:
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    for name, p in (("lambda", lam), ("mu", mu), ("nu", nu)):
        if len(p) > n:
            raise HiveError(f"{name}={p} has {len(p)} parts but n={n}")
    return lam, mu, nu


def border_from_triple(lam, mu, nu, n: int) -> Border:
    lam, mu, nu = validate_triple(lam, mu, nu, n)
    if nu.size != lam.size + mu.size:
        raise HiveError(f"|nu|={nu.size} differs from |lambda|+|mu|={lam.size + mu.size}")
    values: dict[HiveCoord, int] = {}
    acc = 0
    for k in range(n + 1):
        values[(1, k)] = acc
        acc += lam[k + 1]
    acc = 0
    for i in range(1, n + 2):
        values[(i, 0)] = acc
        acc += nu[i]
    acc = lam.size
    for i in range(1, n + 2):
        values[(i, n + 1 - i)] = acc
        acc += mu[i]
    return Border(n, values)


def min_side(*parts: Sequence) -> int:
    return max([1] + [len(as_partition(p)) for p in parts])
