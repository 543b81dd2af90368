"""Integral points of hive polytopes: Littlewood-Richardson coefficients by
backtracking over the interior labels with interval propagation."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .hive_core import (
    Border, HiveCoord, Labeling, Partition, Rhombus, all_rhombi, as_partition,
    border_from_triple, interior_coords, validate_triple,
)

Bound = tuple[Fraction | None, Fraction | None]


@dataclass(frozen=True)
class HivePolytopeInstance:
    border: Border
    families: str = "123"

    @property
    def n(self) -> int:
        return self.border.n

    @property
    def order(self) -> tuple[HiveCoord, ...]:
        return interior_coords(self.border.n)


@dataclass(frozen=True)
class LRQuery:
    lam: Partition
    mu: Partition
    nu: Partition
    n: int | None = None

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            object.__setattr__(self, name, as_partition(getattr(self, name)))
        if self.n is None:
            object.__setattr__(self, "n", max(1, len(self.lam), len(self.mu), len(self.nu)))
        validate_triple(self.lam, self.mu, self.nu, self.n)


@lru_cache(maxsize=None)
def _closing_rhombi(n: int, families: str) -> tuple[tuple[Rhombus, ...], tuple[tuple[Rhombus, ...], ...]]:
    """Split rhombi by the interior vertex that completes them in row-major
    order.  First item: border-only rhombi."""
    order = interior_coords(n)
    pos = {c: idx for idx, c in enumerate(order)}
    border_only: list[Rhombus] = []
    closing: list[list[Rhombus]] = [[] for _ in order]
    for r in all_rhombi(n, families):
        inner = [pos[v] for v in r.vertices if v in pos]
        if not inner:
            border_only.append(r)
        else:
            closing[max(inner)].append(r)
    return tuple(border_only), tuple(tuple(c) for c in closing)


def _bound_from(r: Rhombus, v: HiveCoord, values) -> tuple[str, Fraction]:
    """Bound on vertex ``v`` implied by rhombus ``r`` when the other three
    labels are known."""
    (o1, o2), (a1, a2) = r.obtuse, r.acute
    if v == o1:
        return "lo", values[a1] + values[a2] - values[o2]
    if v == o2:
        return "lo", values[a1] + values[a2] - values[o1]
    if v == a1:
        return "hi", values[o1] + values[o2] - values[a2]
    return "hi", values[o1] + values[o2] - values[a1]


def interior_bounds(instance: HivePolytopeInstance,
                    partial: Mapping[HiveCoord, object] | None = None) -> dict[HiveCoord, Bound]:
    """Interval for the next unassigned interior vertex.

    ``partial`` assigns a prefix of the interior order (border labels come
    from the instance).  Returns ``{}`` when every interior vertex is
    assigned.  ``None`` means unbounded on that side; ``lo > hi`` signals a
    dead branch.
    """
    n = instance.n
    values: dict[HiveCoord, Fraction] = dict(instance.border.values)
    values.update({c: Fraction(v) for c, v in (partial or {}).items()})
    nxt = next((c for c in instance.order if c not in values), None)
    if nxt is None:
        return {}
    lo: Fraction | None = None
    hi: Fraction | None = None
    for r in all_rhombi(n, instance.families):
        if nxt not in r.vertices:
            continue
        others = [v for v in r.vertices if v != nxt]
        if any(v not in values for v in others):
            continue
        side, val = _bound_from(r, nxt, values)
        if side == "lo":
            lo = val if lo is None else max(lo, val)
        else:
            hi = val if hi is None else min(hi, val)
    return {nxt: (lo, hi)}


def _walk(border: Border, families: str,
          first_range: tuple[int, int] | None = None) -> Iterator[dict[HiveCoord, int]]:
    """Yield the (shared, mutated) label dict at every integral leaf."""
    n = border.n
    if not border.is_integral():
        raise ValueError("integral enumeration needs an integral border")
    values: dict[HiveCoord, int] = {c: int(v) for c, v in border.values.items()}
    border_only, closing = _closing_rhombi(n, families)
    if any(r.slack(values) < 0 for r in border_only):
        return
    order = interior_coords(n)
    if not order:
        yield values
        return
    plans = []
    for v, rs in zip(order, closing):
        plan = []
        for r in rs:
            (o1, o2), (a1, a2) = r.obtuse, r.acute
            if v == o1:
                plan.append((True, a1, a2, o2))
            elif v == o2:
                plan.append((True, a1, a2, o1))
            elif v == a1:
                plan.append((False, o1, o2, a2))
            else:
                plan.append((False, o1, o2, a1))
        plans.append(plan)
    last = len(order) - 1

    def rec(depth: int) -> Iterator[dict[HiveCoord, int]]:
        lo = hi = None
        for is_lo, p, q, s in plans[depth]:
            b = values[p] + values[q] - values[s]
            if is_lo:
                if lo is None or b > lo:
                    lo = b
            elif hi is None or b < hi:
                hi = b
        if lo is None or hi is None:
            raise RuntimeError(f"unbounded interior vertex {order[depth]}")
        if depth == 0 and first_range is not None:
            lo, hi = max(lo, first_range[0]), min(hi, first_range[1])
        v = order[depth]
        for x in range(lo, hi + 1):
            values[v] = x
            if depth == last:
                yield values
            else:
                yield from rec(depth + 1)
        values.pop(v, None)

    yield from rec(0)


def _to_labeling(n: int, values: Mapping[HiveCoord, int]) -> Labeling:
    return Labeling(n, tuple(
        tuple(values[(i, k)] for k in range(n + 2 - i)) for i in range(1, n + 2)))


def _first_interval(border: Border, families: str) -> tuple[int, int] | None:
    inst = HivePolytopeInstance(border, families)
    bounds = interior_bounds(inst)
    if not bounds:
        return None
    (lo, hi), = bounds.values()
    return math.ceil(lo), math.floor(hi)


def _count_chunk(args) -> int:
    border, families, rng = args
    return sum(1 for _ in _walk(border, families, rng))


def count_integral_hives(border: Border, families: str = "123", workers: int | None = None) -> int:
    """Number of integral labelings over ``border`` satisfying the rhombus
    families given (all three by default: the integral hives).

    With ``workers > 1`` the search is split over the range of the first
    interior vertex and the partial counts are summed.
    """
    if workers and workers > 1 and interior_coords(border.n):
        rng = _first_interval(border, families)
        if rng is None or rng[0] > rng[1]:
            return 0
        lo, hi = rng
        step = max(1, (hi - lo + 1) // workers)
        chunks = [(border, families, (a, min(hi, a + step - 1))) for a in range(lo, hi + 1, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_count_chunk, chunks))
    return sum(1 for _ in _walk(border, families))


def enumerate_integral_hives(border: Border, families: str = "123") -> Iterator[Labeling]:
    """Integral hives over ``border``, lexicographic in the interior order."""
    for values in _walk(border, families):
        yield _to_labeling(border.n, values)


def lr_coefficient(lam, mu, nu, n: int | None = None) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam,mu} as a hive count."""
    q = LRQuery(lam, mu, nu, n)
    if q.nu.size != q.lam.size + q.mu.size:
        return 0
    return count_integral_hives(border_from_triple(q.lam, q.mu, q.nu, q.n))


def hives_for_triple(lam, mu, nu, n: int | None = None) -> list[Labeling]:
    q = LRQuery(lam, mu, nu, n)
    if q.nu.size != q.lam.size + q.mu.size:
        return []
    return list(enumerate_integral_hives(border_from_triple(q.lam, q.mu, q.nu, q.n)))


__all__ = [
    "HivePolytopeInstance", "LRQuery", "interior_bounds", "count_integral_hives",
    "enumerate_integral_hives", "lr_coefficient", "hives_for_triple",
]
