"""Exact rational linear algebra and a two-phase simplex (Bland's rule)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((j for j in range(r, len(m)) if m[j][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for j in range(r + 1, len(m)):
            if m[j][c] != 0:
                f = m[j][c] / m[r][c]
                m[j] = [a - f * b for a, b in zip(m[j], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve_square(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Unique solution of a square system, or None when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for c in range(n):
        piv = next((j for j in range(c, n) if m[j][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for j in range(n):
            if j != c and m[j][c] != 0:
                f = m[j][c]
                m[j] = [x - f * y for x, y in zip(m[j], m[c])]
    return [m[j][n] for j in range(n)]


class LPError(Exception):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass
class LPResult:
    x: list[Fraction]
    value: Fraction


def _pivot(t: Matrix, basis: list[int], r: int, c: int) -> None:
    p = t[r][c]
    if p != 1:
        t[r] = [x / p for x in t[r]]
    row = t[r]
    for j, other in enumerate(t):
        if j != r and other[c] != 0:
            f = other[c]
            t[j] = [x - f * y for x, y in zip(other, row)]
    basis[r] = c


def _run(t: Matrix, basis: list[int], allowed: int) -> None:
    """Maximize the objective stored (negated) in the last row over the
    first ``allowed`` columns; Bland's rule."""
    obj = t[-1]
    while True:
        obj = t[-1]
        entering = next((c for c in range(allowed) if obj[c] < 0), None)
        if entering is None:
            return
        best = None
        for r in range(len(t) - 1):
            a = t[r][entering]
            if a > 0:
                ratio = t[r][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            raise Unbounded("objective is unbounded")
        _pivot(t, basis, best[1], entering)


def maximize(c: Sequence, a_ub: Sequence[Sequence], b_ub: Sequence) -> LPResult:
    """max c.x subject to a_ub x <= b_ub with x free, exactly."""
    nv = len(c)
    m = len(a_ub)
    c = [Fraction(x) for x in c]
    if m == 0:
        if any(c):
            raise Unbounded("no constraints")
        return LPResult([Fraction(0)] * nv, Fraction(0))
    # columns: x+ (nv), x- (nv), slacks (m), artificials (<= m), rhs
    rows = []
    art_rows = []
    for r, (arow, b) in enumerate(zip(a_ub, b_ub)):
        arow = [Fraction(x) for x in arow]
        b = Fraction(b)
        slack = [Fraction(0)] * m
        slack[r] = Fraction(1)
        row = arow + [-x for x in arow] + slack
        if b < 0:
            row = [-x for x in row]
            b = -b
            art_rows.append(r)
        rows.append((row, b))
    na = len(art_rows)
    width = 2 * nv + m + na
    t: Matrix = []
    basis: list[int] = []
    for r, (row, b) in enumerate(rows):
        art = [Fraction(0)] * na
        if r in art_rows:
            art[art_rows.index(r)] = Fraction(1)
            basis.append(2 * nv + m + art_rows.index(r))
        else:
            basis.append(2 * nv + r)
        t.append(row + art + [b])
    if na:
        # phase 1: maximize -sum(artificials)
        obj = [Fraction(0)] * (width + 1)
        for r in art_rows:
            obj = [o - x for o, x in zip(obj, t[r])]
        for j in range(2 * nv + m, width):
            obj[j] = Fraction(0)
        t.append(obj)
        _run(t, basis, width)
        if t[-1][-1] != 0:
            raise Infeasible("constraints are infeasible")
        t.pop()
        # drive artificials out of the basis
        for r, bcol in enumerate(basis):
            if bcol >= 2 * nv + m:
                c_in = next((j for j in range(2 * nv + m) if t[r][j] != 0), None)
                if c_in is not None:
                    _pivot(t, basis, r, c_in)
        keep = [r for r, bcol in enumerate(basis) if bcol < 2 * nv + m]
        t = [t[r][:2 * nv + m] + [t[r][-1]] for r in keep]
        basis = [basis[r] for r in keep]
        width = 2 * nv + m
    cost = c + [-x for x in c] + [Fraction(0)] * m
    obj = [-x for x in cost] + [Fraction(0)]
    for r, bcol in enumerate(basis):
        if obj[bcol] != 0:
            f = obj[bcol]
            obj = [o - f * x for o, x in zip(obj, t[r])]
    t.append(obj)
    _run(t, basis, width)
    sol = [Fraction(0)] * width
    for r, bcol in enumerate(basis):
        sol[bcol] = t[r][-1]
    x = [sol[j] - sol[nv + j] for j in range(nv)]
    return LPResult(x, sum(ci * xi for ci, xi in zip(c, x)))
