"""Small triangles, flat rhombi, flatspaces and increasable subsets.

Geometry uses three line families through the vertex lattice: ``u = i``
(lines along the rows), ``v = k`` and ``w = i + k`` (horizontal lines).
The big triangle is ``u >= 1, v >= 0, w <= n + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .hive_core import (
    Border, HiveCoord, Labeling, Rhombus, all_rhombi, interior_coords, is_border,
)

Edge = tuple[HiveCoord, HiveCoord]


@dataclass(frozen=True, order=True)
class SmallTriangle:
    orientation: str  # "up" or "down"
    i: int
    k: int

    @property
    def vertices(self) -> tuple[HiveCoord, HiveCoord, HiveCoord]:
        i, k = self.i, self.k
        if self.orientation == "up":
            return (i, k), (i, k + 1), (i + 1, k)
        return (i, k + 1), (i + 1, k), (i + 1, k + 1)

    @property
    def edges(self) -> tuple[Edge, Edge, Edge]:
        a, b, c = self.vertices
        return edge(a, b), edge(a, c), edge(b, c)


def edge(p: HiveCoord, q: HiveCoord) -> Edge:
    return (p, q) if p < q else (q, p)


def edge_direction(e: Edge) -> str:
    """Lattice direction class: ``k`` (along rows), ``i`` or ``e``."""
    (i1, k1), (i2, k2) = e
    if i1 == i2:
        return "k"
    if k1 == k2:
        return "i"
    return "e"


def oriented(e: Edge) -> tuple[HiveCoord, HiveCoord]:
    """(tail, head) under the fixed global orientation of each direction."""
    p, q = e
    d = edge_direction(e)
    if d in ("k", "i"):
        return p, q
    # p = (i, k+1), q = (i+1, k): orient from (i+1, k) to (i, k+1)
    return q, p


@lru_cache(maxsize=None)
def small_triangles(n: int) -> tuple[SmallTriangle, ...]:
    ups = [SmallTriangle("up", i, k) for i in range(1, n + 1) for k in range(0, n + 1 - i)]
    downs = [SmallTriangle("down", i, k) for i in range(1, n) for k in range(0, n - i)]
    return tuple(ups + downs)


@lru_cache(maxsize=None)
def _triangle_by_vertices(n: int) -> dict[frozenset, SmallTriangle]:
    return {frozenset(t.vertices): t for t in small_triangles(n)}


@lru_cache(maxsize=None)
def rhombus_triangles(n: int) -> dict[Rhombus, tuple[SmallTriangle, SmallTriangle]]:
    table = _triangle_by_vertices(n)
    out = {}
    for r in all_rhombi(n):
        t1 = table[frozenset(r.obtuse + (r.acute[0],))]
        t2 = table[frozenset(r.obtuse + (r.acute[1],))]
        out[r] = (t1, t2)
    return out


@lru_cache(maxsize=None)
def edge_triangles(n: int) -> dict[Edge, tuple[SmallTriangle, ...]]:
    table: dict[Edge, list[SmallTriangle]] = {}
    for t in small_triangles(n):
        for e in t.edges:
            table.setdefault(e, []).append(t)
    return {e: tuple(ts) for e, ts in table.items()}


def on_big_border(n: int, e: Edge) -> bool:
    (i1, k1), (i2, k2) = e
    return (i1 == i2 == 1) or (k1 == k2 == 0) or (i1 + k1 == i2 + k2 == n + 1)


def flat_rhombi(h: Labeling) -> set[Rhombus]:
    return {r for r in all_rhombi(h.n) if r.slack(h) == 0}


# --- flatspaces ------------------------------------------------------------

@dataclass(frozen=True)
class Side:
    line: tuple[str, int]      # ("u"|"v"|"w", value)
    edges: frozenset[Edge]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Flatspace:
    triangles: frozenset[SmallTriangle]
    shape_class: str
    side_lengths: tuple[int, ...]
    sides: tuple[Side, ...]

    @property
    def vertices(self) -> set[HiveCoord]:
        return {v for t in self.triangles for v in t.vertices}

    def interior_vertices(self) -> set[HiveCoord]:
        """Vertices not on the flatspace's own boundary."""
        bd = {v for s in self.sides for e in s.edges for v in e}
        return self.vertices - bd

    @property
    def is_small_triangle(self) -> bool:
        return len(self.triangles) == 1

    @property
    def is_small_rhombus(self) -> bool:
        return len(self.triangles) == 2

    def to_json(self) -> dict:
        return {"shape": self.shape_class, "side_lengths": list(self.side_lengths),
                "triangles": [[t.orientation, t.i, t.k] for t in sorted(self.triangles)]}


class ShapeError(RuntimeError):
    """A flatspace that is not one of the convex lattice shapes."""


def _line_sides(u0, u1, v0, v1, w0, w1) -> list[tuple[tuple[str, int], int, int]]:
    """The six hull sides in cyclic order with their parameter ranges."""
    return [
        (("w", w0), max(u0, w0 - v1), min(u1, w0 - v0)),
        (("u", u0), max(v0, w0 - u0), min(v1, w1 - u0)),
        (("v", v1), max(u0, w0 - v1), min(u1, w1 - v1)),
        (("w", w1), max(u0, w1 - v1), min(u1, w1 - v0)),
        (("u", u1), max(v0, w0 - u1), min(v1, w1 - u1)),
        (("v", v0), max(u0, w0 - v0), min(u1, w1 - v0)),
    ]


def _side_edges(line: tuple[str, int], lo: int, hi: int) -> frozenset[Edge]:
    kind, val = line
    out = []
    for t in range(lo, hi):
        if kind == "u":
            out.append(edge((val, t), (val, t + 1)))
        elif kind == "v":
            out.append(edge((t, val), (t + 1, val)))
        else:
            out.append(edge((t, val - t), (t + 1, val - t - 1)))
    return frozenset(out)


def classify_region(n: int, triangles: Iterable[SmallTriangle]) -> Flatspace:
    tris = frozenset(triangles)
    verts = {v for t in tris for v in t.vertices}
    us = [i for i, _ in verts]
    vs = [k for _, k in verts]
    ws = [i + k for i, k in verts]
    u0, u1, v0, v1, w0, w1 = min(us), max(us), min(vs), max(vs), min(ws), max(ws)
    hull = [t for t in small_triangles(n)
            if all(u0 <= i <= u1 and v0 <= k <= v1 and w0 <= i + k <= w1 for i, k in t.vertices)]
    if len(hull) != len(tris):
        raise ShapeError(f"region of {len(tris)} triangles is not convex (hull has {len(hull)})")
    sides = []
    for line, lo, hi in _line_sides(u0, u1, v0, v1, w0, w1):
        if hi > lo:
            sides.append(Side(line, _side_edges(line, lo, hi)))
    lengths = tuple(s.length for s in sides)
    kinds = [s.line[0] for s in sides]
    if len(sides) == 3:
        shape = "triangle"
    elif len(sides) == 4:
        if len(set(kinds)) == 2:
            shape = "rhombus" if len(set(lengths)) == 1 else "parallelogram"
        else:
            shape = "trapezoid"
    elif len(sides) == 5:
        shape = "pentagon"
    elif len(sides) == 6:
        shape = "hexagon"
    else:
        raise ShapeError(f"degenerate region with {len(sides)} sides")
    return Flatspace(tris, shape, lengths, tuple(sides))


def flatspace_partition(h: Labeling) -> list[frozenset[SmallTriangle]]:
    n = h.n
    parent = {t: t for t in small_triangles(n)}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for r, (t1, t2) in rhombus_triangles(n).items():
        if r.slack(h) == 0:
            a, b = find(t1), find(t2)
            if a != b:
                parent[a] = b
    groups: dict[SmallTriangle, set[SmallTriangle]] = {}
    for t in small_triangles(n):
        groups.setdefault(find(t), set()).add(t)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: min(g))


def flatspaces(h: Labeling) -> list[Flatspace]:
    """Flatspace decomposition; raises ShapeError if a region is not convex."""
    return [classify_region(h.n, g) for g in flatspace_partition(h)]


def flatspace_summary(fs: list[Flatspace]) -> dict[str, int]:
    out: dict[str, int] = {}
    for f in fs:
        key = "small triangle" if f.is_small_triangle else f.shape_class
        out[key] = out.get(key, 0) + 1
    return out


def side_sharing_violations(h: Labeling, fs: list[Flatspace] | None = None) -> list[str]:
    """Sides not on the big border that are not a full side of exactly one
    neighbouring flatspace."""
    n = h.n
    fs = flatspaces(h) if fs is None else fs
    owner = {t: idx for idx, f in enumerate(fs) for t in f.triangles}
    problems = []
    for idx, f in enumerate(fs):
        for s in f.sides:
            if all(on_big_border(n, e) for e in s.edges):
                continue
            nbrs = set()
            for e in s.edges:
                for t in edge_triangles(n)[e]:
                    if t not in f.triangles:
                        nbrs.add(owner[t])
            if len(nbrs) != 1:
                problems.append(f"flatspace {idx} side {s.line} touches {len(nbrs)} neighbours")
                continue
            other = fs[nbrs.pop()]
            if not any(o.edges == s.edges for o in other.sides):
                problems.append(f"flatspace {idx} side {s.line} is not a full side of its neighbour")
    return problems


def long_border_sides(h: Labeling, fs: list[Flatspace] | None = None) -> list[Side]:
    fs = flatspaces(h) if fs is None else fs
    return [s for f in fs for s in f.sides
            if s.length >= 2 and all(on_big_border(h.n, e) for e in s.edges)]


def is_regular_border(b: Border) -> bool:
    """Strict concavity along all three sides."""
    return all(all(x > y for x, y in zip(d, d[1:])) for d in b.side_differences())


# --- increasable subsets ---------------------------------------------------

def _tight_constraints(h: Labeling) -> list[tuple[tuple[HiveCoord, ...], tuple[HiveCoord, ...]]]:
    n = h.n
    out = []
    for r in flat_rhombi(h):
        ob = tuple(v for v in r.obtuse if not is_border(n, v))
        ac = tuple(v for v in r.acute if not is_border(n, v))
        if ac:
            out.append((ob, ac))
    return out


def is_increasable(h: Labeling, subset: Iterable[HiveCoord]) -> bool:
    """Raising every label in ``subset`` by a small common amount keeps a hive."""
    s = set(subset)
    if not s:
        raise ValueError("increasable subsets are nonempty")
    if any(is_border(h.n, v) for v in s):
        raise ValueError("increasable subsets contain interior vertices only")
    for r in flat_rhombi(h):
        if sum(v in s for v in r.obtuse) < sum(v in s for v in r.acute):
            return False
    return True


def find_increasable_subset(h: Labeling) -> frozenset[HiveCoord] | None:
    """Some increasable subset, or None.  Exact backtracking over 0/1
    assignments, checking each tight rhombus once all its interior vertices
    are decided."""
    order = interior_coords(h.n)
    pos = {v: idx for idx, v in enumerate(order)}
    due: list[list[tuple]] = [[] for _ in order]
    for ob, ac in _tight_constraints(h):
        due[max(pos[v] for v in ob + ac)].append((ob, ac))
    chosen: dict[HiveCoord, bool] = {}

    def rec(idx: int) -> frozenset | None:
        if idx == len(order):
            s = frozenset(v for v, on in chosen.items() if on)
            return s or None
        v = order[idx]
        for on in (True, False):
            chosen[v] = on
            if all(sum(chosen[x] for x in ob) >= sum(chosen[x] for x in ac) for ob, ac in due[idx]):
                found = rec(idx + 1)
                if found:
                    return found
        del chosen[v]
        return None

    return rec(0)


def has_increasable_subset(h: Labeling) -> bool:
    return find_increasable_subset(h) is not None


def has_increasable_subset_brute(h: Labeling) -> bool:
    order = interior_coords(h.n)
    return any(is_increasable(h, s)
               for size in range(1, len(order) + 1) for s in combinations(order, size))
