from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lrhive.exact import Infeasible, Unbounded, maximize, rank, solve_square


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1], [1, 1]]) == 2
    assert rank([]) == 0


def test_solve_square():
    assert solve_square([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve_square([[1, 2], [2, 4]], [1, 2]) is None


def test_maximize_small():
    res = maximize([1, 2], [[1, 0], [0, 1], [-1, -1]], [3, 4, -1])
    assert res.x == [3, 4] and res.value == 11


def test_maximize_free_negative_optimum():
    # x free: max -x subject to x >= -5/2
    res = maximize([-1], [[-1]], [Fraction(5, 2)])
    assert res.x == [Fraction(-5, 2)]


def test_infeasible_and_unbounded():
    with pytest.raises(Infeasible):
        maximize([1], [[1], [-1]], [1, -2])
    with pytest.raises(Unbounded):
        maximize([1], [[-1]], [0])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2),
       st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 6)),
                min_size=1, max_size=5))
def test_maximize_against_vertex_enumeration(c, cons):
    # box keeps every instance bounded; compare with brute force over 2x2 bases
    rows = [[a, b] for a, b, _ in cons] + [[1, 0], [-1, 0], [0, 1], [0, -1]]
    rhs = [r for _, _, r in cons] + [5, 5, 5, 5]
    best = None
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            x = solve_square([rows[i], rows[j]], [rhs[i], rhs[j]])
            if x is None:
                continue
            if all(sum(p * q for p, q in zip(r, x)) <= b for r, b in zip(rows, rhs)):
                v = sum(p * q for p, q in zip(c, x))
                best = v if best is None else max(best, v)
    res = maximize(c, rows, rhs)
    assert res.value == best
    assert all(sum(p * q for p, q in zip(r, res.x)) <= b for r, b in zip(rows, rhs))
