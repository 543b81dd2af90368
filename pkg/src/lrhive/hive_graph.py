"""The red/blue graph of a hive whose flatspaces are small triangles and
small rhombi, and the leaf-peeling that writes every label as an integer
combination of border labels."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .flatspaces import (
    Edge, Flatspace, SmallTriangle, edge_direction, flatspaces, on_big_border, oriented,
)
from .hive_core import HiveCoord, Labeling, border_coords, interior_coords, is_border

# sign of each direction class in the per-triangle zero sum
DIRECTION_SIGN = {"k": 1, "i": -1, "e": -1}

LinearForm = dict[HiveCoord, int]


class GraphPreconditionError(ValueError):
    def __init__(self, message: str, flatspace: Flatspace | None = None):
        super().__init__(message)
        self.flatspace = flatspace


class PeelStall(RuntimeError):
    """Peeling could not resolve every red vertex (the graph has a cycle)."""


@dataclass
class HiveGraph:
    n: int
    blue: list[SmallTriangle]
    red: list[Edge]
    blue_red: list[tuple[SmallTriangle, Edge]]
    red_red: list[tuple[Edge, Edge]]
    labels: dict[Edge, Fraction] = field(default_factory=dict)

    def degree(self) -> dict:
        deg: dict = {("b", t): 0 for t in self.blue}
        deg.update({("r", e): 0 for e in self.red})
        for t, e in self.blue_red:
            deg[("b", t)] += 1
            deg[("r", e)] += 1
        for e1, e2 in self.red_red:
            deg[("r", e1)] += 1
            deg[("r", e2)] += 1
        return deg

    def edges(self) -> list[tuple]:
        return ([(("b", t), ("r", e)) for t, e in self.blue_red]
                + [(("r", a), ("r", b)) for a, b in self.red_red])

    def to_json(self) -> dict:
        return {
            "blue": [[t.orientation, t.i, t.k] for t in self.blue],
            "red": [{"edge": [list(e[0]), list(e[1])], "label": str(self.labels.get(e))}
                    for e in self.red],
            "blue_red": [[[t.orientation, t.i, t.k], [list(e[0]), list(e[1])]] for t, e in self.blue_red],
            "red_red": [[[list(a[0]), list(a[1])], [list(b[0]), list(b[1])]] for a, b in self.red_red],
            "acyclic": is_acyclic(self),
        }


def red_label(h: Labeling, e: Edge) -> Fraction:
    tail, head = oriented(e)
    return h[head] - h[tail]


def build_hive_graph(h: Labeling, fs: list[Flatspace] | None = None) -> HiveGraph:
    fs = flatspaces(h) if fs is None else fs
    blue, blue_red, red_red = [], [], []
    diagonals = set()
    for f in fs:
        if f.is_small_triangle:
            (t,) = f.triangles
            blue.append(t)
            blue_red += [(t, e) for e in t.edges]
        elif f.is_small_rhombus:
            t1, t2 = f.triangles
            (diag,) = set(t1.edges) & set(t2.edges)
            diagonals.add(diag)
            outer = [e for e in t1.edges + t2.edges if e != diag]
            for d in ("k", "i", "e"):
                pair = [e for e in outer if edge_direction(e) == d]
                if len(pair) == 2:
                    red_red.append((pair[0], pair[1]))
        else:
            raise GraphPreconditionError(
                f"flatspace {f.shape_class} {f.side_lengths} is not a small triangle or rhombus", f)
    red = sorted({e for t in _all_triangles(fs) for e in t.edges} - diagonals)
    g = HiveGraph(h.n, sorted(blue), red, blue_red, red_red)
    g.labels = {e: red_label(h, e) for e in red}
    return g


def _all_triangles(fs: list[Flatspace]):
    for f in fs:
        yield from f.triangles


def is_acyclic(g: HiveGraph) -> bool:
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges():
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def zero_circulation_violations(g: HiveGraph) -> list[SmallTriangle]:
    bad = []
    for t in g.blue:
        if sum(DIRECTION_SIGN[edge_direction(e)] * g.labels[e] for e in t.edges) != 0:
            bad.append(t)
    return bad


def _combine(*terms: tuple[int, LinearForm]) -> LinearForm:
    out: LinearForm = {}
    for coef, form in terms:
        for v, c in form.items():
            out[v] = out.get(v, 0) + coef * c
    return {v: c for v, c in out.items() if c}


def evaluate(form: LinearForm, h: Labeling) -> Fraction:
    return sum((c * h[v] for v, c in form.items()), Fraction(0))


def peel_integer_coefficients(g: HiveGraph, h: Labeling) -> dict[HiveCoord, LinearForm]:
    """Express every interior label of ``h`` as an integer combination of
    border labels by peeling the (acyclic) graph from its border leaves."""
    n = h.n
    resolved: dict[Edge, LinearForm] = {}
    for e in g.red:
        if on_big_border(n, e):
            tail, head = oriented(e)
            resolved[e] = _combine((1, {head: 1}), (-1, {tail: 1}))
    red_links: dict[Edge, list[Edge]] = {e: [] for e in g.red}
    for a, b in g.red_red:
        red_links[a].append(b)
        red_links[b].append(a)
    pending_blue = set(g.blue)
    queue = deque(resolved)
    while True:
        while queue:
            e = queue.popleft()
            for other in red_links[e]:
                if other not in resolved:
                    resolved[other] = resolved[e]
                    queue.append(other)
        progress = False
        for t in sorted(pending_blue):
            known = [e for e in t.edges if e in resolved]
            if len(known) == 2:
                (missing,) = [e for e in t.edges if e not in resolved]
                s = DIRECTION_SIGN[edge_direction(missing)]
                resolved[missing] = _combine(
                    *[(-s * DIRECTION_SIGN[edge_direction(e)], resolved[e]) for e in known])
                queue.append(missing)
            if len(known) >= 2:
                pending_blue.discard(t)
                progress = True
        if not queue and not progress:
            break
    missing = [e for e in g.red if e not in resolved]
    if missing:
        raise PeelStall(f"{len(missing)} red vertices unresolved, e.g. {missing[0]}")
    for e, form in resolved.items():
        if evaluate(form, h) != g.labels[e]:
            raise AssertionError(f"peeled label of {e} does not reproduce the hive")
    # propagate to hive vertices along red edges
    forms: dict[HiveCoord, LinearForm] = {v: {v: 1} for v in border_coords(n)}
    adj: dict[HiveCoord, list[tuple[HiveCoord, int, Edge]]] = {}
    for e in g.red:
        tail, head = oriented(e)
        adj.setdefault(tail, []).append((head, 1, e))
        adj.setdefault(head, []).append((tail, -1, e))
    todo = deque(forms)
    while todo:
        v = todo.popleft()
        for w, sign, e in adj.get(v, ()):
            if w not in forms:
                forms[w] = _combine((1, forms[v]), (sign, resolved[e]))
                todo.append(w)
    out = {}
    for v in interior_coords(n):
        if v not in forms:
            raise PeelStall(f"interior vertex {v} unreachable through red edges")
        if evaluate(forms[v], h) != h[v]:
            raise AssertionError(f"combination for {v} does not evaluate to its label")
        out[v] = forms[v]
    return out


def is_border_only_form(form: LinearForm, n: int) -> bool:
    return all(is_border(n, v) for v in form)
