"""Desk-scale checks of saturation, semigroup closure, corner integrality
and the coefficient-one conjecture, plus the maximizer integrality pipeline.

Every suite returns a ``Report``; failures carry enough data to reproduce
the sample (triple, N, seed)."""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from typing import Callable, Iterable, Iterator, Sequence

from .enumeration import enumerate_integral_hives
from .flatspaces import (
    ShapeError, flatspace_summary, flatspaces, has_increasable_subset, is_regular_border,
)
from .hive_core import (
    Border, HiveError, Labeling, Partition, all_rhombi, border_from_triple, interior_coords,
    is_hive, is_integral,
)
from .hive_graph import (
    GraphPreconditionError, PeelStall, build_hive_graph, evaluate, is_acyclic,
    is_border_only_form, peel_integer_coefficients, zero_circulation_violations,
)
from .jsonio import labeling_to_json
from .polytope import EmptyPolytope, constraint_rows, is_corner, maximize_generic, optimize_linear, polytope_corners


@dataclass(frozen=True)
class TripleSample:
    lam: Partition
    mu: Partition
    nu: Partition
    n: int
    provenance: str = ""

    def __post_init__(self):
        if self.nu.size != self.lam.size + self.mu.size:
            raise HiveError("|nu| must equal |lambda| + |mu|")
        for p in (self.lam, self.mu, self.nu):
            p.padded(self.n)

    @classmethod
    def of(cls, lam, mu, nu, n: int | None = None, provenance: str = "") -> "TripleSample":
        lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
        n = max(1, len(lam), len(mu), len(nu)) if n is None else n
        return cls(lam, mu, nu, n, provenance)

    def scaled(self, factor: int) -> "TripleSample":
        return TripleSample(self.lam.scaled(factor), self.mu.scaled(factor), self.nu.scaled(factor),
                            self.n, f"{self.provenance} x{factor}")

    def __add__(self, other: "TripleSample") -> "TripleSample":
        n = max(self.n, other.n)
        return TripleSample(self.lam + other.lam, self.mu + other.mu, self.nu + other.nu, n,
                            f"({self.provenance}) + ({other.provenance})")

    def border(self) -> Border:
        return border_from_triple(self.lam, self.mu, self.nu, self.n)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu), "nu": list(self.nu),
                "n": self.n, "provenance": self.provenance}


@dataclass
class Report:
    claim: str
    samples: int = 0
    failures: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)
    runtime: float = 0.0
    seed: int | None = None
    witness: Labeling | None = None
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "Report") -> None:
        self.samples += other.samples
        self.failures += other.failures
        self.findings += other.findings
        if self.witness is None:
            self.witness = other.witness

    def to_json(self) -> dict:
        return {
            "claim": self.claim, "samples": self.samples, "ok": self.ok,
            "failures": self.failures, "findings": self.findings,
            "runtime": round(self.runtime, 3), "seed": self.seed, "params": self.params,
            "witness": None if self.witness is None else labeling_to_json(self.witness),
        }


# --- sample sources ----------------------------------------------------------

def partitions_of(size: int, max_len: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``size`` with at most ``max_len`` parts, reverse lex order."""
    max_part = size if max_part is None else max_part
    if size == 0:
        yield Partition()
        return
    if max_len == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, max_len - 1, first):
            yield Partition((first,) + rest.parts)


def triples(n: int, max_size: int, min_size: int = 0) -> Iterator[TripleSample]:
    """Every triple with at most ``n`` parts each and ``min_size <= |nu| <= max_size``."""
    for total in range(min_size, max_size + 1):
        nus = list(partitions_of(total, n))
        for a in range(total + 1):
            for lam in partitions_of(a, n):
                for mu in partitions_of(total - a, n):
                    for nu in nus:
                        yield TripleSample(lam, mu, nu, n, f"exhaustive n={n} |nu|<={max_size}")


def random_partition(rng: random.Random, size: int, max_len: int) -> Partition:
    """Sorted composition of ``size`` into ``max_len`` nonnegative parts."""
    cuts = sorted(rng.randint(0, size) for _ in range(max_len - 1))
    return Partition(sorted((b - a for a, b in zip([0] + cuts, cuts + [size])), reverse=True))


def random_strict_partition(rng: random.Random, n: int, spread: int = 3) -> Partition:
    """Strictly decreasing after padding to ``n`` parts (the last may be 0)."""
    parts, acc = [], rng.randint(0, 1)
    for _ in range(n):
        parts.append(acc)
        acc += rng.randint(1, spread)
    return Partition(reversed(parts))


def nonzero(t: TripleSample) -> bool:
    if t.nu.size != t.lam.size + t.mu.size:
        return False
    return next(enumerate_integral_hives(t.border()), None) is not None


def count_upto(t: TripleSample, limit: int) -> int:
    """min(c, limit); enough to decide zero / one / at least two."""
    return sum(1 for _ in islice(enumerate_integral_hives(t.border()), limit))


def _run(claim: str, items: Iterable, fn: Callable[..., Report], workers: int | None,
         seed: int | None, params: dict) -> Report:
    t0 = time.perf_counter()
    report = Report(claim, seed=seed, params=params)
    items = list(items)
    if workers and workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))
    else:
        parts = [fn(x) for x in items]
    for part in parts:   # map preserves input order, so merging is deterministic
        report.merge(part)
    report.runtime = time.perf_counter() - t0
    return report


# --- saturation ---------------------------------------------------------------

def check_saturation(t: TripleSample, n_max: int = 3) -> Report:
    """nonzero(c) <=> nonzero(c_N) for 2 <= N <= n_max, plus N*h lying in the
    scaled polytope for one hive h."""
    if n_max < 2:
        raise ValueError("N_max must be at least 2")
    rep = Report("saturation", samples=1)
    first = next(enumerate_integral_hives(t.border()), None)
    for factor in range(2, n_max + 1):
        scaled = t.scaled(factor)
        nz = nonzero(scaled)
        if nz != (first is not None):
            rep.failures.append({"triple": t.to_json(), "N": factor,
                                 "c_nonzero": first is not None, "cN_nonzero": nz})
        if first is not None:
            big = first.scale(factor)
            if not is_hive(big) or big.border() != scaled.border():
                rep.failures.append({"triple": t.to_json(), "N": factor,
                                     "error": "N*h is not a hive over the scaled border"})
    return rep


def _saturation_item(args) -> Report:
    t, n_max = args
    return check_saturation(t, n_max)


def saturation_suite(n: int = 3, max_size: int = 8, n_max: int = 4, workers: int | None = None) -> Report:
    items = [(t, n_max) for t in triples(n, max_size)]
    return _run("saturation", items, _saturation_item, workers, None,
                {"n": n, "max_size": max_size, "N_max": n_max})


# --- semigroup -----------------------------------------------------------------

def check_semigroup(pairs: Iterable[tuple[TripleSample, TripleSample]]) -> Report:
    rep = Report("semigroup")
    for a, b in pairs:
        rep.samples += 1
        if not (nonzero(a) and nonzero(b)):
            continue
        s = a + b
        if not nonzero(s):
            rep.failures.append({"a": a.to_json(), "b": b.to_json(), "sum": s.to_json()})
    return rep


def semigroup_suite(n: int = 3, max_size: int = 6, pairs: int = 500, seed: int = 0) -> Report:
    t0 = time.perf_counter()
    pool = [t for t in triples(n, max_size) if nonzero(t)]
    rng = random.Random(seed)
    chosen = [tuple(rng.sample(pool, 2)) for _ in range(pairs)] if len(pool) >= 2 else []
    rep = check_semigroup(chosen)
    rep.seed, rep.params = seed, {"n": n, "max_size": max_size, "pairs": pairs}
    rep.runtime = time.perf_counter() - t0
    return rep


# --- corners ------------------------------------------------------------------

def _hexagon_rhombi(n: int, center) -> list:
    return [r for r in all_rhombi(n) if center in r.obtuse]


def _adjacent(p, q) -> bool:
    return (q[0] - p[0], q[1] - p[1]) in {(0, 1), (0, -1), (1, 0), (-1, 0), (1, -1), (-1, 1)}


def search_nonintegral_corner(n: int, rng: random.Random, tries: int = 2000,
                              max_size: int = 20) -> tuple[Labeling, TripleSample, int] | None:
    """Look for a non-integral corner over an integral border.

    Each try samples a nonempty border and two non-adjacent interior vertices,
    then minimizes the total slack of the rhombi around both (plus a small
    random tilt) so that the optimum tends to have two hexagonal flatspaces,
    the configuration that carries half-integral corners.  Returns the
    corner, its triple and the number of tries used."""
    inner = interior_coords(n)
    centers = [(p, q) for p, q in combinations(inner, 2) if not _adjacent(p, q)]
    if not centers:
        return None
    for attempt in range(1, tries + 1):
        lam = random_partition(rng, rng.randint(5, max_size), n)
        mu = random_partition(rng, rng.randint(5, max_size), n)
        nu = random_partition(rng, lam.size + mu.size, n)
        b = border_from_triple(lam, mu, nu, n)
        if not constraint_rows(b)[2]:
            continue
        weights: dict = {v: rng.randint(-3, 3) for v in inner}
        for c in rng.choice(centers):
            for r in _hexagon_rhombi(n, c):
                for v, s in ((r.obtuse[0], 1), (r.obtuse[1], 1), (r.acute[0], -1), (r.acute[1], -1)):
                    if v in weights:
                        weights[v] -= 1000 * s
        try:
            h = optimize_linear(b, weights)
        except EmptyPolytope:
            continue
        if not is_integral(h) and is_corner(h):
            return h, TripleSample(lam, mu, nu, n, "corner search"), attempt
    return None


def corner_failure(h: Labeling, t: TripleSample) -> dict:
    return {"triple": t.to_json(), "corner": labeling_to_json(h)}


def _corner_item(t: TripleSample) -> Report:
    rep = Report("corners", samples=1)
    for h in polytope_corners(t.border()):
        if not is_integral(h):
            rep.failures.append(corner_failure(h, t))
    return rep


def corner_scan(n: int, max_size: int | None = 8, seed: int | None = None, samples: int = 200,
                tries: int = 4000, workers: int | None = None) -> Report:
    """n <= 4: every corner over the sampled integral borders is integral
    (exhaustive triples when ``max_size`` is given, else ``samples`` random
    ones).  n >= 5: search for a non-integral corner; finding one is the
    expected outcome and not finding one within ``tries`` is a failure."""
    params = {"n": n, "max_size": max_size, "samples": samples, "tries": tries}
    if n <= 4:
        if max_size is not None:
            items: list = list(triples(n, max_size))
        else:
            rng = random.Random(seed)
            items = []
            for _ in range(samples):
                lam = random_partition(rng, rng.randint(0, 10), n)
                mu = random_partition(rng, rng.randint(0, 10), n)
                items.append(TripleSample(lam, mu, random_partition(rng, lam.size + mu.size, n), n,
                                          f"seed {seed}"))
        return _run("corners", items, _corner_item, workers, seed, params)
    t0 = time.perf_counter()
    rng = random.Random(seed)
    rep = Report("corners", samples=tries, seed=seed, params=params)
    found = search_nonintegral_corner(n, rng, tries)
    if found is None:
        rep.failures.append({"error": f"no non-integral corner found in {tries} tries", "seed": seed})
    else:
        h, t, rep.samples = found
        rep.witness = h
        rep.findings.append({"witness_triple": t.to_json(),
                             "flatspaces": flatspace_summary(flatspaces(h))})
    rep.runtime = time.perf_counter() - t0
    return rep


# --- coefficient-one conjecture ----------------------------------------------------

def fulton_check(t: TripleSample, n_max: int = 4, budget: int = 24) -> Report:
    """c = 1 <=> c_N = 1 for 2 <= N <= n_max with N*|nu| <= budget.

    Disagreements are findings, not failures.  Also records when c >= 2 but
    some c_N < 2."""
    rep = Report("fulton", samples=1, params={"budget": budget})
    c = count_upto(t, 2)
    for factor in range(2, n_max + 1):
        if factor * t.nu.size > budget:
            break
        cn = count_upto(t.scaled(factor), 2)
        if (c == 1) != (cn == 1) or (c >= 2 and cn < 2):
            rep.findings.append({"triple": t.to_json(), "N": factor,
                                 "c": c if c < 2 else ">=2", "cN": cn if cn < 2 else ">=2"})
    return rep


def _fulton_item(args) -> Report:
    t, n_max, budget = args
    return fulton_check(t, n_max, budget)


def fulton_suite(n: int = 3, max_size: int = 8, n_max: int = 4, budget: int = 24,
                 workers: int | None = None) -> Report:
    items = [(t, n_max, budget) for t in triples(n, min(max_size, budget // 2)) if nonzero(t)]
    return _run("fulton", items, _fulton_item, workers, None,
                {"n": n, "max_size": max_size, "N_max": n_max, "budget": budget})


# --- maximizer integrality pipeline ------------------------------------------

def regular_triple(rng: random.Random, n: int, max_tries: int = 200) -> TripleSample:
    """A random triple with strictly decreasing (padded) partitions and c > 0."""
    for _ in range(max_tries):
        lam = random_strict_partition(rng, n)
        mu = random_strict_partition(rng, n)
        total = lam.size + mu.size
        cands = [nu for nu in partitions_of(total, n)
                 if nu.is_strict(n) and nu.contains(lam) and nu.contains(mu)]
        rng.shuffle(cands)
        for nu in cands:
            t = TripleSample(lam, mu, nu, n, "regular sampler")
            if nonzero(t):
                return t
    raise RuntimeError("could not sample a regular triple")


def integrality_pipeline(b: Border, rng: random.Random) -> list[str]:
    """Run maximize -> flatspaces -> graph -> peel on one integral regular
    border; return the list of broken conclusions (empty when all hold)."""
    problems = []
    h, omega = maximize_generic(b, rng)
    if not is_integral(h):
        problems.append("maximizer is not integral")
    if has_increasable_subset(h):
        problems.append("maximizer has an increasable subset")
    try:
        fs = flatspaces(h)
    except ShapeError as exc:
        return problems + [f"flatspace classification failed: {exc}"]
    if is_regular_border(b) and not all(f.is_small_triangle or f.is_small_rhombus for f in fs):
        return problems + [f"large flatspace: {flatspace_summary(fs)}"]
    try:
        g = build_hive_graph(h, fs)
    except GraphPreconditionError as exc:
        return problems + [str(exc)]
    if not is_acyclic(g):
        return problems + ["hive graph has a cycle"]
    if zero_circulation_violations(g):
        problems.append("zero circulation fails")
    try:
        forms = peel_integer_coefficients(g, h)
    except (PeelStall, AssertionError) as exc:
        return problems + [f"peeling failed: {exc}"]
    for v, form in forms.items():
        if not is_border_only_form(form, h.n) or evaluate(form, h) != h[v]:
            problems.append(f"bad combination for {v}")
    return problems


def integrality_suite(samples: int = 200, n_values: Sequence[int] = (2, 3, 4), seed: int = 0) -> Report:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    rep = Report("integrality", seed=seed, params={"samples": samples, "n": list(n_values)})
    for idx in range(samples):
        t = regular_triple(rng, n_values[idx % len(n_values)])
        rep.samples += 1
        problems = integrality_pipeline(t.border(), rng)
        if problems:
            rep.failures.append({"sample": idx, "triple": t.to_json(), "problems": problems})
    rep.runtime = time.perf_counter() - t0
    return rep


SUITES = ("saturation", "semigroup", "corners", "fulton", "integrality")


def run_suite(name: str, n: int, max_size: int | None, seed: int, n_max: int = 4,
              budget: int = 24, samples: int = 200, workers: int | None = None) -> Report:
    if name == "saturation":
        return saturation_suite(n, 8 if max_size is None else max_size, n_max, workers)
    if name == "semigroup":
        return semigroup_suite(n, 6 if max_size is None else max_size, samples, seed)
    if name == "corners":
        return corner_scan(n, max_size, seed, samples, workers=workers)
    if name == "fulton":
        return fulton_suite(n, 8 if max_size is None else max_size, n_max, budget, workers)
    if name == "integrality":
        return integrality_suite(samples, tuple(range(2, max(2, n) + 1)), seed)
    raise ValueError(f"unknown suite {name!r}")
