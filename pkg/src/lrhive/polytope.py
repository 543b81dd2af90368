"""Hive polytopes as exact linear systems: corners, vertex enumeration and
maximization of positive functionals."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .exact import Infeasible, maximize, rank, solve_square
from .hive_core import Border, HiveCoord, Labeling, all_rhombi, interior_coords, to_fraction


class EmptyPolytope(ValueError):
    pass


class NonGenericFunctional(ValueError):
    """The functional is maximized on a face of positive dimension."""


@dataclass(frozen=True)
class PositiveFunctional:
    coefficients: Mapping[HiveCoord, Fraction]

    def __post_init__(self):
        coeffs = {c: to_fraction(v) for c, v in self.coefficients.items()}
        if any(v <= 0 for v in coeffs.values()):
            raise ValueError("functional coefficients must be strictly positive")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def random(cls, n: int, rng: random.Random, spread: int = 10**6) -> "PositiveFunctional":
        inner = interior_coords(n)
        values = rng.sample(range(1, spread + 1), len(inner))
        return cls(dict(zip(inner, values)))

    def __call__(self, h: Labeling) -> Fraction:
        return sum((c * h[v] for v, c in self.coefficients.items()), Fraction(0))


def constraint_rows(border: Border) -> tuple[list[list[int]], list[Fraction], bool]:
    """Rhombus inequalities over the interior unknowns as ``A x <= b``.
    Third item is False when a border-only rhombus already fails."""
    n = border.n
    inner = interior_coords(n)
    pos = {v: j for j, v in enumerate(inner)}
    a_rows, b_vals, ok = [], [], True
    for r in all_rhombi(n):
        coef = [0] * len(inner)
        const = Fraction(0)
        for v, s in ((r.obtuse[0], 1), (r.obtuse[1], 1), (r.acute[0], -1), (r.acute[1], -1)):
            if v in pos:
                coef[pos[v]] += s
            else:
                const += s * border[v]
        # slack = coef.x + const >= 0  <=>  -coef.x <= const
        if any(coef):
            a_rows.append([-c for c in coef])
            b_vals.append(const)
        elif const < 0:
            ok = False
    return a_rows, b_vals, ok


def tight_system_rank(h: Labeling) -> tuple[int, int]:
    """(rank of the tight rhombus equalities on interior unknowns, #unknowns)."""
    inner = interior_coords(h.n)
    pos = {v: j for j, v in enumerate(inner)}
    rows = []
    for r in all_rhombi(h.n):
        if r.slack(h) != 0:
            continue
        coef = [0] * len(inner)
        for v, s in ((r.obtuse[0], 1), (r.obtuse[1], 1), (r.acute[0], -1), (r.acute[1], -1)):
            if v in pos:
                coef[pos[v]] += s
        if any(coef):
            rows.append(coef)
    return rank(rows), len(inner)


def is_corner(h: Labeling) -> bool:
    """``h`` (a hive) is a vertex of its hive polytope."""
    r, m = tight_system_rank(h)
    return r == m


def _labeling(border: Border, x) -> Labeling:
    return border.extend(dict(zip(interior_coords(border.n), x)))


def optimize_linear(border: Border, weights: Mapping[HiveCoord, object]) -> Labeling:
    """A vertex maximizing an arbitrary linear functional (any signs)."""
    a, b, ok = constraint_rows(border)
    if not ok:
        raise EmptyPolytope("hive polytope is empty: the border violates a rhombus inequality")
    inner = interior_coords(border.n)
    c = [to_fraction(weights.get(v, 0)) for v in inner]
    try:
        res = maximize(c, a, b)
    except Infeasible:
        raise EmptyPolytope("hive polytope is empty") from None
    return _labeling(border, res.x)


def maximize_functional(border: Border, omega: PositiveFunctional) -> Labeling:
    """The unique maximizer of ``omega`` over the hive polytope of ``border``.

    Raises EmptyPolytope, or NonGenericFunctional when the optimal face is
    not a single point.
    """
    a, b, ok = constraint_rows(border)
    if not ok:
        raise EmptyPolytope("hive polytope is empty: the border violates a rhombus inequality")
    inner = interior_coords(border.n)
    if not inner:
        return border.extend({})
    c = [omega.coefficients.get(v, Fraction(0)) for v in inner]
    try:
        best = maximize(c, a, b)
    except Infeasible:
        raise EmptyPolytope("hive polytope is empty") from None
    # optimal face: add  -c.x <= -opt  and check every coordinate is pinned
    face_a = a + [[-x for x in c]]
    face_b = b + [-best.value]
    for j in range(len(inner)):
        e = [Fraction(0)] * len(inner)
        e[j] = Fraction(1)
        hi = maximize(e, face_a, face_b).value
        lo = -maximize([-x for x in e], face_a, face_b).value
        if hi != lo:
            raise NonGenericFunctional(
                f"optimal face is not a point: {inner[j]} ranges over [{lo}, {hi}]")
    h = _labeling(border, best.x)
    if not is_corner(h):
        raise AssertionError("simplex returned a non-vertex optimum")
    return h


def maximize_generic(border: Border, rng: random.Random, retries: int = 20) -> tuple[Labeling, PositiveFunctional]:
    """Maximize a freshly sampled generic positive functional, resampling
    when the sample turns out non-generic for this border."""
    for _ in range(retries):
        omega = PositiveFunctional.random(border.n, rng)
        try:
            return maximize_functional(border, omega), omega
        except NonGenericFunctional:
            continue
    raise NonGenericFunctional(f"no generic functional found in {retries} samples")


@lru_cache(maxsize=None)
def _interior_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Interior coefficient rows of the ``A x <= b`` form, one per rhombus
    touching the interior (same order as ``constraint_rows``)."""
    inner = interior_coords(n)
    pos = {v: j for j, v in enumerate(inner)}
    rows = []
    for r in all_rhombi(n):
        coef = [0] * len(inner)
        for v, s in ((r.obtuse[0], 1), (r.obtuse[1], 1), (r.acute[0], -1), (r.acute[1], -1)):
            if v in pos:
                coef[pos[v]] -= s
        if any(coef):
            rows.append(tuple(coef))
    return tuple(rows)


@lru_cache(maxsize=None)
def _bases(n: int) -> tuple[tuple[tuple[int, ...], tuple[tuple[int, ...], ...], int], ...]:
    """Every nonsingular square subsystem of the interior rows, stored as
    (row indices, integer adjugate-like matrix ``adj``, positive ``det``)
    with ``inverse = adj / det``."""
    rows = _interior_rows(n)
    m = len(interior_coords(n))
    out = []
    for combo in combinations(range(len(rows)), m):
        mat = [rows[j] for j in combo]
        cols = []
        for t in range(m):
            unit = [0] * m
            unit[t] = 1
            col = solve_square(mat, unit)
            if col is None:
                break
            cols.append(col)
        else:
            inv = [[cols[t][r] for t in range(m)] for r in range(m)]
            det = 1
            for row in inv:
                for q in row:
                    det = det * q.denominator // gcd(det, q.denominator)
            adj = tuple(tuple(int(q * det) for q in row) for row in inv)
            out.append((combo, adj, det))
    return tuple(out)


def polytope_corners(border: Border) -> list[Labeling]:
    """All vertices of the hive polytope by exhaustive basis enumeration."""
    a, b, ok = constraint_rows(border)
    if not ok:
        return []
    inner = interior_coords(border.n)
    if not inner:
        return [border.extend({})]
    if all(v.denominator == 1 for v in b):
        b = [int(v) for v in b]
    found: set[tuple[Fraction, ...]] = set()
    for combo, adj, det in _bases(border.n):
        rhs = [b[j] for j in combo]
        y = [sum(p * q for p, q in zip(row, rhs)) for row in adj]   # x = y / det
        if all(sum(ai * yi for ai, yi in zip(r, y)) <= c * det for r, c in zip(a, b)):
            found.add(tuple(Fraction(yi) / det for yi in y))
    return [_labeling(border, x) for x in sorted(found)]
