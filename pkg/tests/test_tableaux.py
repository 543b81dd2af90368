import random

import pytest
from hypothesis import given, strategies as st

from lrhive.hive_core import HiveError, Partition
from lrhive.tableaux import (
    ContraTableau, SkewTableau, column_insert, enumerate_lr_skew, insertion_tableau,
    is_lattice, is_reverse_lattice, is_semistandard, knuth_equivalent, lr_coefficient_oracle,
    parse_skew_shape, plactic_product, reading_word, rectify, row_insert, shape_of, superstandard,
)

APPENDIX_WORD = (1, 1, 3, 3, 4, 4, 2, 2, 3, 3, 1, 1, 1, 2, 1)
U4432_WORD = (4, 4, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1)


def test_reverse_lattice_examples():
    assert is_reverse_lattice(APPENDIX_WORD + U4432_WORD)
    assert not is_reverse_lattice((1, 2))   # the suffix "2" has a 2 and no 1
    assert is_reverse_lattice((2, 1))
    assert is_reverse_lattice(())
    assert not is_reverse_lattice(APPENDIX_WORD)
    with pytest.raises(ValueError):
        is_reverse_lattice((0, 1))


def test_lattice_is_prefix_form():
    assert is_lattice((1, 2)) and not is_lattice((2, 1))


def test_superstandard():
    assert superstandard((4, 4, 3, 2))[1] == U4432_WORD
    assert superstandard(())[1] == ()
    assert superstandard((1,))[1] == (1,)
    assert superstandard((2, 1))[0] == ((1, 1), (2,))


def test_reading_word_and_semistandard():
    t = ((1, 1, 2), (2, 3))
    assert reading_word(t) == (2, 3, 1, 1, 2)
    assert is_semistandard(t) and not is_semistandard(((1, 2), (1,)))
    assert shape_of(t) == Partition((3, 2))


def test_insertion():
    assert row_insert(((1, 2),), 1) == ((1, 1), (2,))
    assert insertion_tableau((3, 1, 2)) == ((1, 2), (3,))
    assert column_insert(((1,),), 1) == ((1, 1),)
    assert knuth_equivalent((2, 1, 3), (2, 3, 1))
    assert not knuth_equivalent((1, 2, 3), (3, 2, 1))


def test_plactic_product_golden():
    # U((1)) * U((1)): column-inserting 1 into the column [1] bumps 1 to the next column
    assert plactic_product(((1,),), ((1,),)) == ((1, 1),)
    assert plactic_product((), ((1, 2), (3,))) == ((1, 2), (3,))


@given(st.lists(st.integers(1, 4), max_size=8), st.lists(st.integers(1, 4), max_size=8))
def test_plactic_product_is_insertion_of_concatenation(u, v):
    r, s = insertion_tableau(u), insertion_tableau(v)
    assert plactic_product(r, s) == insertion_tableau(reading_word(r) + reading_word(s))


@pytest.mark.parametrize("shape,content,count", [
    ("3,2,1/2,1", (2, 1), 2),
    ("2,1/2,1", (), 1),
    ("2,1/1", (1, 1), 1),
    ("2,1/1", (2,), 1),
    ("3/1", (1, 1), 0),
])
def test_lr_skew_counts(shape, content, count):
    outer, inner = parse_skew_shape(shape)
    tabs = enumerate_lr_skew(outer, inner, content)
    assert len(tabs) == count
    for t in tabs:
        assert is_lattice(t.lr_word())


def test_skew_json_round_trip():
    outer, inner = parse_skew_shape("3,2,1/2,1")
    for t in enumerate_lr_skew(outer, inner, (2, 1)):
        rows = t.to_json()
        assert rows[0][:2] == [None, None]
        assert SkewTableau.from_json(rows) == t


def test_skew_shape_errors():
    with pytest.raises(HiveError):
        enumerate_lr_skew(Partition((1,)), Partition((2,)), ())


def test_oracle_zero_for_wide_nu():
    assert lr_coefficient_oracle((1,), (1,), (3,)) == 0
    assert lr_coefficient_oracle((2,), (1,), (4,)) == 0


def test_contratableau_structure():
    t = ContraTableau(((1, 1, 3), (2,)))
    assert t.shape == Partition((3, 1))
    assert t.word() == (1, 1, 3, 2)
    assert t.is_valid()
    assert not ContraTableau(((2, 1),)).is_valid()
    assert ContraTableau.from_json(t.to_json()) == t


def test_rectify_trivial_cases():
    assert rectify(ContraTableau(((3,),))) == ((3,),)
    straight = ((1, 1, 2), (2, 3))
    assert rectify(straight) == straight


def test_rectify_is_order_independent():
    t = ContraTableau(((1, 1), (2, 3)))
    results = {rectify(t, random.Random(s)) for s in range(10)}
    assert len(results) == 1
    (r,) = results
    assert knuth_equivalent(reading_word(r), t.word())
