"""Acceptance criteria, one test each.  The terminal summary (see conftest)
prints one pass/fail line per criterion."""
import json
import random
import shutil
import subprocess
import time
from importlib import resources

import pytest

from lrhive.bijection import (
    chain_to_contratableau, contratableau_to_hive, enumerate_contratableaux, hive_to_chain,
    joined_word, lattice_routes,
)
from lrhive.cli import main
from lrhive.enumeration import enumerate_integral_hives
from lrhive.flatspaces import (
    ShapeError, flatspaces, has_increasable_subset, is_increasable, is_regular_border,
    long_border_sides, side_sharing_violations,
)
from lrhive.hive_core import Labeling, border_from_triple, is_hive, is_integral
from lrhive.jsonio import labeling_from_json, load_labeling, save_labeling
from lrhive.polytope import is_corner
from lrhive.saturation import (
    corner_scan, integrality_suite, random_partition, saturation_suite, triples,
)
from lrhive.tableaux import is_reverse_lattice, lr_coefficient_oracle, superstandard


def min_n(t):
    return max(1, len(t.lam), len(t.mu), len(t.nu))


@pytest.fixture(scope="module")
def sweep12():
    """Every triple with at most 4 parts and |nu| <= 12, with its hives at
    every side length from the minimal one up to 4."""
    out = []
    for t in triples(4, 12):
        for n in range(min_n(t), 5):
            hives = list(enumerate_integral_hives(border_from_triple(t.lam, t.mu, t.nu, n)))
            out.append((t, n, hives))
    return out


def test_criterion_1_example_count(capsys):
    t0 = time.perf_counter()
    code = main(["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"])
    elapsed = time.perf_counter() - t0
    assert code == 0 and capsys.readouterr().out == "2\n"
    assert elapsed < 1.0
    hives = list(enumerate_integral_hives(border_from_triple((2, 1), (2, 1), (3, 2, 1), 3)))
    assert [h[(2, 1)] for h in hives] == [4, 5]
    if shutil.which("hive"):
        t0 = time.perf_counter()
        proc = subprocess.run(["hive", "lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"],
                              capture_output=True, text=True)
        assert proc.stdout == "2\n" and time.perf_counter() - t0 < 1.0


def test_criterion_2_oracle_equivalence(sweep12):
    t0 = time.perf_counter()
    mismatches = []
    for t, n, hives in sweep12:
        if len(hives) != lr_coefficient_oracle(t.lam, t.mu, t.nu):
            mismatches.append((t.to_json(), n, len(hives)))
    assert mismatches == []
    assert len({(t.lam, t.mu, t.nu) for t, _, _ in sweep12}) == 52111
    assert time.perf_counter() - t0 < 600


def test_criterion_3_bijection_round_trip():
    t0 = time.perf_counter()
    checked = 0
    for t in triples(4, 10):
        n = min_n(t)
        hives = list(enumerate_integral_hives(border_from_triple(t.lam, t.mu, t.nu, n)))
        images = set()
        for h in hives:
            tab = chain_to_contratableau(hive_to_chain(h))
            assert contratableau_to_hive(tab, t.mu, n) == h
            images.add(tab)
            checked += 1
        assert images == set(enumerate_contratableaux(t.lam, t.mu, t.nu, n))
        assert len(images) == len(hives)
    assert checked > 3000
    assert time.perf_counter() - t0 < 600


def test_criterion_4_appendix_words():
    h = Labeling(4, ((0, 6, 10, 14, 15), (10, 14, 18, 19), (17, 21, 23), (24, 26), (28,)))
    assert is_hive(h)
    chain = hive_to_chain(h)
    assert [p.parts for p in chain.partitions()] == [(6, 4, 4, 1), (4, 4, 1), (4, 2), (2,)]
    tab = chain_to_contratableau(chain)
    assert tab.word() == (1, 1, 3, 3, 4, 4, 2, 2, 3, 3, 1, 1, 1, 2, 1)
    assert superstandard((4, 4, 3, 2))[1] == (4, 4, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1)
    assert is_reverse_lattice(joined_word(tab, (4, 4, 3, 2)))


def test_criterion_5_saturation():
    t0 = time.perf_counter()
    for n in (1, 2, 3):
        rep = saturation_suite(n, 8, 4)
        assert rep.failures == [], rep.failures[:3]
        assert rep.samples > 0
    assert time.perf_counter() - t0 < 900


def test_criterion_6_maximizer_integrality():
    rep = integrality_suite(200, (2, 3, 4), seed=20240601)
    assert rep.samples == 200
    assert rep.failures == [], rep.failures[:3]


def test_criterion_7_corner_integrality(tmp_path):
    for n in (1, 2, 3, 4):
        rep = corner_scan(n, max_size=8)
        assert rep.failures == [], rep.failures[:3]
    rep = corner_scan(5, seed=3, tries=300)
    assert rep.witness is not None
    path = tmp_path / "witness.json"
    save_labeling(rep.witness, str(path))
    for h in (load_labeling(str(path)), labeling_from_json(json.loads(
            resources.files("lrhive").joinpath("data/nonintegral_corner_n5.json").read_text()))):
        assert h.n == 5 and is_hive(h) and is_corner(h)
        assert h.border().is_integral() and not is_integral(h)


def test_criterion_8_flatspace_properties(sweep12):
    failures = []
    hives_seen = regular_seen = 0
    for t, n, hives in sweep12:
        regular = is_regular_border(border_from_triple(t.lam, t.mu, t.nu, n))
        for h in hives:
            hives_seen += 1
            regular_seen += regular
            try:
                fs = flatspaces(h)                          # Properties 1 and 2
            except ShapeError as exc:
                failures.append((t.to_json(), n, f"shape: {exc}"))
                continue
            if side_sharing_violations(h, fs):              # Property 3
                failures.append((t.to_json(), n, "side sharing"))
            if regular and long_border_sides(h, fs):        # Property 4
                failures.append((t.to_json(), n, "long border side"))
            for f in fs:                                    # Property 5
                if f.shape_class == "hexagon" and f.interior_vertices() \
                        and not is_increasable(h, f.interior_vertices()):
                    failures.append((t.to_json(), n, "hexagon not increasable"))
            if regular and not all(f.is_small_triangle or f.is_small_rhombus for f in fs) \
                    and not has_increasable_subset(h):
                failures.append((t.to_json(), n, "large flatspace without increasable subset"))
    assert failures == []
    assert hives_seen > 10000 and regular_seen > 1000


def test_criterion_9_lattice_word_equivalence():
    rng = random.Random(9)
    disagreements, fails3, drawn = [], 0, 0
    while drawn < 1000:
        n = rng.choice((2, 3, 4))
        lam = random_partition(rng, rng.randint(0, 5), n)
        mu = random_partition(rng, rng.randint(0, 5), n)
        nu = random_partition(rng, lam.size + mu.size, n)
        pool = list(enumerate_integral_hives(border_from_triple(lam, mu, nu, n), families="12"))
        if not pool:
            continue
        h = rng.choice(pool)
        drawn += 1
        by_rhombi, by_word = lattice_routes(h)
        fails3 += not by_rhombi
        if by_rhombi != by_word:
            disagreements.append(h)
    assert disagreements == []
    assert fails3 > 50     # the sample exercises both outcomes
