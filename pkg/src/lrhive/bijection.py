"""Integral hives <-> chains of interlacing partitions <-> contratableaux."""
from __future__ import annotations

from dataclasses import dataclass

from .hive_core import (
    HiveError, Labeling, Partition, all_rhombi, as_partition, border_from_triple,
    is_integral,
)
from .tableaux import (
    ContraTableau, enumerate_semistandard_skew, is_reverse_lattice, superstandard,
)


@dataclass(frozen=True)
class PartitionChain:
    """``parts[i-1]`` is lambda^(i) padded to length n+1-i."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.parts)

    def part(self, i: int, k: int) -> int:
        if 1 <= i <= self.n and 1 <= k <= len(self.parts[i - 1]):
            return self.parts[i - 1][k - 1]
        return 0

    def partitions(self) -> list[Partition]:
        return [Partition(p) for p in self.parts]

    def is_interlacing(self) -> bool:
        for i in range(1, self.n):
            for k in range(1, self.n + 1 - i):
                if not self.part(i, k) >= self.part(i + 1, k) >= self.part(i, k + 1):
                    return False
        return all(p >= 0 for row in self.parts for p in row)


def hive_to_chain(h: Labeling) -> PartitionChain:
    if not is_integral(h):
        raise HiveError("hive_to_chain needs an integral labeling")
    n = h.n
    return PartitionChain(tuple(
        tuple(int(h[(i, k)] - h[(i, k - 1)]) for k in range(1, n + 2 - i))
        for i in range(1, n + 1)))


def chain_to_contratableau(chain: PartitionChain) -> ContraTableau:
    n = chain.n
    rows = []
    for k in range(1, n + 1):
        row: list[int] = []
        for i in range(1, n + 1):
            row += [i] * (chain.part(i, k) - chain.part(i + 1, k))
        rows.append(tuple(row))
    return ContraTableau(tuple(rows))


def bottom_partition(h: Labeling) -> list:
    """Differences across the bottom border, right to left (mu)."""
    n = h.n
    return [h[(i + 1, n - i)] - h[(i, n + 1 - i)] for i in range(1, n + 1)]


def joined_word(t: ContraTableau, mu) -> tuple[int, ...]:
    return t.word() + superstandard(mu)[1]


def contratableau_to_hive(t: ContraTableau, mu, n: int) -> Labeling:
    """Inverse map.  ``nu`` is derived: nu_i = (# of i in t) + mu_i."""
    mu = as_partition(mu)
    lam = t.shape
    if len(lam) > n or len(mu) > n:
        raise HiveError(f"shape {lam} or mu {mu} does not fit n={n}")
    if not t.is_valid():
        raise HiveError("not a contratableau (rows weak, columns strict)")
    if not is_reverse_lattice(joined_word(t, mu)):
        raise HiveError("w(T)w(U(mu)) is not a reverse lattice word")
    letters = t.content()
    if letters and max(letters) > n:
        raise HiveError(f"entry {max(letters)} exceeds n={n}")
    nu = Partition(letters[i] + mu[i] for i in range(1, n + 1))
    for k, row in enumerate(t.rows, 1):
        if row and row[-1] > n + 1 - k:
            raise HiveError(f"row {k} holds {row[-1]} > n+1-k; no hive of side {n}")
    values = {}
    for i in range(1, n + 2):
        acc = sum(nu[j] for j in range(1, i))
        values[(i, 0)] = acc
        for k in range(1, n + 2 - i):
            acc += sum(1 for x in (t.rows[k - 1] if k <= len(t.rows) else ()) if x >= i)
            values[(i, k)] = acc
    h = Labeling.from_values(n, values)
    if h.border() != border_from_triple(lam, mu, nu, n):
        raise HiveError("reconstructed border does not match (lambda, mu, nu)")
    return h


def division_counts(h: Labeling, i: int, k: int) -> tuple[int, int]:
    """Counts of ``i`` and ``i-1`` to the right of the division in row ``k``
    (from the bottom) of T separating letters < i from letters >= i, inside
    w(T)w(U(mu))."""
    t = chain_to_contratableau(hive_to_chain(h))
    mu = Partition(int(x) for x in bottom_partition(h))
    word = joined_word(t, mu)
    rows = t.rows
    offset = sum(len(r) for r in rows[:k - 1])
    if k <= len(rows):
        offset += sum(1 for x in rows[k - 1] if x < i)
    suffix = word[offset:]
    return suffix.count(i), suffix.count(i - 1)


def lattice_routes(h: Labeling) -> tuple[bool, bool]:
    """(family-3 inequalities hold, w(T)w(U(mu)) is reverse lattice).

    ``h`` must be integral, satisfy families (1) and (2), and have a bottom
    border whose differences form a partition.
    """
    by_rhombi = all(r.slack(h) >= 0 for r in all_rhombi(h.n, "3"))
    diffs = bottom_partition(h)
    if any(d.denominator != 1 for d in diffs):
        raise HiveError("bottom border differences are not integers")
    mu = Partition(int(d) for d in diffs)
    t = chain_to_contratableau(hive_to_chain(h))
    return by_rhombi, is_reverse_lattice(joined_word(t, mu))


def lattice_equivalence_check(h: Labeling) -> bool:
    by_rhombi, by_word = lattice_routes(h)
    if by_rhombi != by_word:
        raise AssertionError(f"routes disagree on {h}: rhombi={by_rhombi} word={by_word}")
    return by_rhombi


def enumerate_contratableaux(lam, mu, nu, n: int) -> list[ContraTableau]:
    """Contratableaux of shape lam, content nu - mu, entries <= n, with
    w(T)w(U(mu)) reverse lattice; built directly from semistandard fillings."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    weights = [nu[i] - mu[i] for i in range(1, n + 1)]
    if any(w < 0 for w in weights) or sum(weights) != lam.size:
        return []
    if not lam.parts:
        return [ContraTableau(())] if is_reverse_lattice(superstandard(mu)[1]) else []
    skew = ContraTableau(tuple((1,) * p for p in lam.parts)).to_skew()
    out = []
    for s in enumerate_semistandard_skew(skew.outer, skew.inner, weights):
        t = ContraTableau(tuple(reversed(s.rows)))
        if is_reverse_lattice(joined_word(t, mu)):
            out.append(t)
    return out
