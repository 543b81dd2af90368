from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lrhive.hive_core import HiveError, Labeling, coords
from lrhive.jsonio import (
    dumps_labeling, labeling_from_json, labeling_to_json, load_labeling, rational_from_json,
    rational_to_str, save_labeling,
)


def test_rational_strings():
    assert rational_to_str(Fraction(7, 2)) == "7/2"
    assert rational_to_str(Fraction(-3)) == "-3"
    assert rational_from_json("7/2") == Fraction(7, 2)
    assert rational_from_json(4) == 4


@pytest.mark.parametrize("bad", [0.5, True, "x", "1/0", None])
def test_rational_rejects(bad):
    with pytest.raises(HiveError):
        rational_from_json(bad)


def test_schema_layout():
    h = Labeling.zero(2).replace({(2, 1): Fraction(1, 3)})
    data = labeling_to_json(h)
    assert data == {"n": 2, "rows": [["0", "0", "0"], ["0", "1/3"], ["0"]]}


def test_bad_documents():
    with pytest.raises(HiveError):
        labeling_from_json({"rows": []})
    with pytest.raises(HiveError):
        labeling_from_json({"n": "3", "rows": []})
    with pytest.raises(HiveError):
        labeling_from_json({"n": 2, "rows": [["0"]]})


@given(st.lists(st.fractions(max_denominator=7).filter(lambda q: abs(q) < 100), min_size=10, max_size=10))
def test_round_trip(vals):
    h = Labeling.from_values(3, dict(zip(coords(3), vals)))
    assert labeling_from_json(labeling_to_json(h)) == h


def test_file_round_trip(tmp_path):
    h = Labeling.zero(3).replace({(2, 1): Fraction(9, 2)})
    path = tmp_path / "h.json"
    save_labeling(h, str(path))
    assert load_labeling(str(path)) == h
    assert '"9/2"' in dumps_labeling(h)
