from fractions import Fraction

import pytest

from lrhive.enumeration import (
    HivePolytopeInstance, LRQuery, count_integral_hives, enumerate_integral_hives,
    hives_for_triple, interior_bounds, lr_coefficient,
)
from lrhive.hive_core import HiveError, Labeling, border_from_triple, is_hive
from lrhive.saturation import partitions_of
from lrhive.tableaux import lr_coefficient_oracle

# s_21 * s_21, a standard expansion
S21_SQUARED = {
    (4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1,
    (2, 2, 2): 1, (2, 2, 1, 1): 1,
}


def test_example_interval(example_border):
    inst = HivePolytopeInstance(example_border)
    assert interior_bounds(inst, {}) == {(2, 1): (Fraction(4), Fraction(5))}


def test_no_interior_vertices():
    b = border_from_triple((1,), (1,), (1, 1), 2)
    assert interior_bounds(HivePolytopeInstance(b), {}) == {}
    assert count_integral_hives(b) == 1
    assert interior_bounds(HivePolytopeInstance(border_from_triple((), (), (), 2)), {}) == {}


def test_example_count_and_hives(example_border):
    assert count_integral_hives(example_border) == 2
    hives = list(enumerate_integral_hives(example_border))
    assert [h[(2, 1)] for h in hives] == [4, 5]
    assert all(is_hive(h) for h in hives)


def test_enumeration_is_lazy(example_border):
    stream = enumerate_integral_hives(example_border)
    assert not isinstance(stream, (list, tuple))
    assert next(stream)[(2, 1)] == 4


@pytest.mark.parametrize("lam,mu,nu,c", [
    ((2, 1), (2, 1), (3, 2, 1), 2),
    ((1,), (1,), (2,), 1),
    ((1,), (1, 1), (2, 1), 1),
    ((3, 1), (), (3, 1), 1),
    ((1,), (1,), (3,), 0),
    ((2,), (1,), (4,), 0),
    ((2,), (2,), (3, 1), 1),
    ((2, 1), (2, 1), (2, 2, 2), 1),
])
def test_lr_coefficient_values(lam, mu, nu, c):
    assert lr_coefficient(lam, mu, nu) == c


def test_s21_squared_expansion():
    for total in [6]:
        for nu in partitions_of(total, 6):
            assert lr_coefficient((2, 1), (2, 1), nu) == S21_SQUARED.get(nu.parts, 0), nu


def test_all_zero_triple():
    hives = hives_for_triple((), (), ())
    assert len(hives) == 1 and hives[0] == Labeling.zero(1)
    assert hives_for_triple((), (), (), n=3) == [Labeling.zero(3)]


def test_padding_does_not_change_count():
    for n in (3, 4, 5):
        assert lr_coefficient((2, 1), (2, 1), (3, 2, 1), n=n) == 2


def test_parallel_count_matches():
    b = border_from_triple((3, 2, 1), (2, 1, 1), (4, 3, 2, 1), 5)
    assert count_integral_hives(b, workers=2) == count_integral_hives(b) == lr_coefficient_oracle(
        (3, 2, 1), (2, 1, 1), (4, 3, 2, 1))


def test_lrquery_defaults_and_validation():
    q = LRQuery((2, 1), (1,), (3, 1))
    assert q.n == 2
    assert LRQuery((), (), ()).n == 1
    with pytest.raises(HiveError):
        LRQuery((1, 1, 1), (), (1, 1, 1), n=2)


def test_family_subsets_grow_the_count(example_border):
    assert count_integral_hives(example_border, families="12") >= 2


@pytest.mark.parametrize("total", range(0, 7))
def test_small_sweep_against_oracle(total):
    for a in range(total + 1):
        for lam in partitions_of(a, 3):
            for mu in partitions_of(total - a, 3):
                for nu in partitions_of(total, 3):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient_oracle(lam, mu, nu)
