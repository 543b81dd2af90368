import json
from importlib import resources
from itertools import combinations

import pytest

from lrhive.enumeration import enumerate_integral_hives
from lrhive.flatspaces import (
    classify_region, find_increasable_subset, flat_rhombi, flatspace_summary, flatspaces,
    has_increasable_subset, has_increasable_subset_brute, is_increasable, is_regular_border,
    long_border_sides, side_sharing_violations, small_triangles,
)
from lrhive.hive_core import Labeling, all_rhombi, border_from_triple, interior_coords
from lrhive.jsonio import labeling_from_json
from lrhive.polytope import maximize_generic
from lrhive.saturation import regular_triple, triples


def strict_hive(n):
    return Labeling.from_values(n, {(i, k): -(i * i + i * k + k * k)
                                    for i in range(1, n + 2) for k in range(0, n + 2 - i)})


def witness():
    text = resources.files("lrhive").joinpath("data/nonintegral_corner_n5.json").read_text()
    return labeling_from_json(json.loads(text))


def test_flat_rhombi(example_hive):
    h4, h5 = example_hive(4), example_hive(5)
    # the rhombi forcing x <= 5 are tight at x = 5 and slack at x = 4
    upper = [r for r in flat_rhombi(h5) if r.slack(h4) == 1]
    assert len(upper) == 3 and not set(upper) & flat_rhombi(h4)
    assert flat_rhombi(Labeling.zero(3)) == set(all_rhombi(3))
    assert flat_rhombi(strict_hive(4)) == set()


def test_example_flatspaces(example_hive):
    assert flatspace_summary(flatspaces(example_hive(4))) == {"hexagon": 1, "small triangle": 3}
    assert flatspace_summary(flatspaces(example_hive(5))) == {"rhombus": 3, "small triangle": 3}


@pytest.mark.parametrize("n", [1, 2, 4])
def test_zero_hive_is_one_triangle(n):
    (f,) = flatspaces(Labeling.zero(n))
    assert f.shape_class == "triangle" and f.side_lengths == (n, n, n)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_strict_hive_has_unit_flatspaces(n):
    fs = flatspaces(strict_hive(n))
    assert len(fs) == n * n and all(f.is_small_triangle for f in fs)


def test_classify_shapes():
    tri = {(t.orientation, t.i, t.k): t for t in small_triangles(3)}
    par = classify_region(3, [tri[("up", 1, 0)], tri[("down", 1, 0)], tri[("up", 1, 1)],
                              tri[("down", 1, 1)]])
    assert par.shape_class in ("parallelogram", "trapezoid")
    trap = classify_region(3, [tri[("up", 1, 0)], tri[("down", 1, 0)], tri[("up", 1, 1)]])
    assert trap.shape_class == "trapezoid"


def test_regular_border():
    assert is_regular_border(border_from_triple((2, 1), (2, 1), (3, 2, 1), 3))
    assert not is_regular_border(border_from_triple((1, 1), (1,), (2, 1), 3))
    assert not is_regular_border(border_from_triple((), (), (), 2))


def test_increasable_examples(example_hive):
    h4 = example_hive(4)
    (hexagon,) = [f for f in flatspaces(h4) if f.shape_class == "hexagon"]
    assert hexagon.interior_vertices() == {(2, 1)}
    assert is_increasable(h4, {(2, 1)})
    assert find_increasable_subset(h4) == {(2, 1)}
    assert not has_increasable_subset(example_hive(5))
    # a flat big triangle: the vertex next to a sharp corner cannot be lifted
    assert not is_increasable(Labeling.zero(4), {(2, 1)})
    s = strict_hive(4)
    for size in (1, 2, 3):
        for sub in combinations(interior_coords(4), size):
            assert is_increasable(s, sub)


def test_increasable_rejects_border_vertices(example_hive):
    with pytest.raises(ValueError):
        is_increasable(example_hive(4), {(1, 1)})
    with pytest.raises(ValueError):
        is_increasable(example_hive(4), set())


def test_zero_hive_golden():
    # frozen from brute force
    assert has_increasable_subset(Labeling.zero(2)) is False
    assert has_increasable_subset_brute(Labeling.zero(2)) is False
    assert has_increasable_subset(Labeling.zero(4)) is False
    assert has_increasable_subset_brute(Labeling.zero(4)) is False


def test_search_matches_brute_force():
    checked = 0
    for t in triples(4, 7):
        n = max(1, len(t.lam), len(t.mu), len(t.nu))
        for h in enumerate_integral_hives(border_from_triple(t.lam, t.mu, t.nu, n)):
            assert has_increasable_subset(h) == has_increasable_subset_brute(h)
            checked += 1
    assert checked > 500


@pytest.mark.parametrize("seed", range(4))
def test_maximizer_has_no_increasable_subset(seed):
    import random
    rng = random.Random(seed)
    h, _ = maximize_generic(regular_triple(rng, 4).border(), rng)
    assert not has_increasable_subset(h)


def test_properties_on_witness():
    h = witness()
    fs = flatspaces(h)
    assert sum(len(f.triangles) for f in fs) == 25
    assert side_sharing_violations(h, fs) == []
    for f in fs:
        if f.shape_class == "hexagon":
            assert is_increasable(h, f.interior_vertices())


def test_property_four_on_regular_example():
    b = border_from_triple((2, 1), (2, 1), (3, 2, 1), 3)
    for h in enumerate_integral_hives(b):
        assert long_border_sides(h) == []
