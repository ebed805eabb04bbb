"""Spanning trees, admissible indegree sequences and a WZ-checked sum.

Trees on the vertices ``v_1..v_d`` of the complete graph are oriented from
the lower index to the higher one, so ``v_1`` always has indegree zero and
a tree is summarised by the indegrees of ``v_2..v_d``.  Such a tuple
``(i_1, ..., i_{d-1})`` is *admissible* when every partial sum satisfies
``i_1 + ... + i_j <= j``.
"""
from __future__ import annotations

import functools
import heapq
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .exact import binomial, factorial

__all__ = [
    "TREE_CAP",
    "catalan",
    "IndegreeTuple",
    "Partition",
    "admissible",
    "admissible_tuples",
    "prufer_decode",
    "spanning_trees",
    "indegree_tuple",
    "indegree_distribution",
    "tree_count",
    "spanning_tree_weight_sum",
    "distinct_permutations",
    "phi_count",
    "phi_formula",
    "partitions",
    "a_lambda_count",
    "a_lambda_formula",
    "wz_term",
    "wz_sum",
    "wz_identity_check",
]

TREE_CAP = 8


def catalan(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(math.comb(2 * n, n), n + 1)


def admissible(entries: Sequence[int]) -> bool:
    total = 0
    for j, x in enumerate(entries, start=1):
        total += x
        if total > j:
            return False
    return True


@dataclass(frozen=True)
class IndegreeTuple:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if any(x < 0 for x in self.entries):
            raise ValueError("indegrees are nonnegative")

    @property
    def d(self) -> int:
        return len(self.entries) + 1

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def admissible(self) -> bool:
        return admissible(self.entries)

    def content(self) -> "Partition":
        return Partition.from_entries(self.entries)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; zeros are discarded on construction."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts if p), reverse=True))
        if any(p < 0 for p in parts):
            raise ValueError("parts must be positive")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "Partition":
        return cls(tuple(entries))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        """Number of nonzero parts, i.e. the sum of the multiplicities."""
        return len(self.parts)

    @property
    def multiplicities(self) -> dict:
        return dict(sorted(Counter(self.parts).items(), reverse=True))

    def padded(self, length: int) -> tuple:
        if length < self.k:
            raise ValueError("partition has more parts than slots")
        return self.parts + (0,) * (length - self.k)


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(n, n if largest is None else largest):
        yield Partition(parts)


def admissible_tuples(d: int) -> list:
    """Admissible (d-1)-tuples summing to d-1; there are C(d-1) of them."""
    if d < 1:
        raise ValueError("d must be positive")
    n = d - 1
    out = []

    def rec(prefix, total):
        j = len(prefix)
        if j == n:
            if total == n:
                out.append(tuple(prefix))
            return
        for x in range(0, j + 1 - total + 1):
            rec(prefix + [x], total + x)

    rec([], 0)
    return out


# --- trees --------------------------------------------------------------------


def _check_tree_cap(d: int) -> None:
    if d < 2:
        raise ValueError("need d >= 2")
    if d > TREE_CAP:
        raise ValueError(f"d = {d} exceeds the enumeration cap {TREE_CAP}")


def prufer_decode(seq: Sequence[int], d: int) -> list:
    """Edges (low, high), 1-based, of the tree on d vertices with Prüfer code seq."""
    if len(seq) != d - 2:
        raise ValueError("a Prüfer code on d vertices has length d-2")
    degree = [1] * (d + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, d + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, w), max(u, w)))
    return sorted(edges)


def spanning_trees(d: int) -> Iterator[list]:
    _check_tree_cap(d)
    for seq in itertools.product(range(1, d + 1), repeat=d - 2):
        yield prufer_decode(seq, d)


def indegree_tuple(edges, d: int) -> tuple:
    deg = [0] * (d + 1)
    for _, high in edges:
        deg[high] += 1
    return tuple(deg[2:])


@functools.lru_cache(maxsize=None)
def _indegree_counter(d: int) -> Counter:
    return Counter(indegree_tuple(t, d) for t in spanning_trees(d))


def indegree_distribution(d: int) -> Counter:
    """How many trees of K_d realise each indegree tuple of v_2..v_d."""
    _check_tree_cap(d)
    return Counter(_indegree_counter(d))


def tree_count(d: int) -> int:
    return sum(indegree_distribution(d).values())


def _weight(t: Sequence[int]) -> int:
    w = 1
    for x in t:
        w *= math.factorial(x)
    return w


def spanning_tree_weight_sum(d: int) -> Fraction:
    """Sum over spanning trees of K_d of the product of indegree factorials."""
    total = Fraction(sum(n * _weight(t) for t, n in indegree_distribution(d).items()))
    expected = factorial(2 * d - 2) / factorial(d)
    if total != expected:
        raise AssertionError(f"tree weight sum {total} != (2d-2)!/d! = {expected}")
    return total


# --- admissible permutations ----------------------------------------------------


def distinct_permutations(entries: Sequence[int]) -> set:
    return set(itertools.permutations(entries))


def phi_count(t: IndegreeTuple | Sequence[int]) -> Fraction:
    """Number of distinct admissible rearrangements of t."""
    entries = t.entries if isinstance(t, IndegreeTuple) else tuple(t)
    return Fraction(sum(1 for p in distinct_permutations(entries) if admissible(p)))


def phi_formula(lam: Partition, d: int) -> Fraction:
    if lam.k > d - 1:
        raise ValueError("partition has more parts than d-1 slots")
    out = factorial(d - 1) / factorial(d - lam.k)
    for e in lam.multiplicities.values():
        out /= factorial(e)
    return out


def a_lambda_count(lam: Partition, d: int) -> Fraction:
    """Trees of K_d whose indegree tuple is an admissible rearrangement of lam."""
    if lam.size != d - 1:
        raise ValueError("need |lambda| = d - 1")
    dist = indegree_distribution(d)
    return Fraction(sum(dist.get(p, 0) for p in distinct_permutations(lam.padded(d - 1)) if admissible(p)))


def a_lambda_formula(lam: Partition, d: int) -> Fraction:
    if lam.size != d - 1:
        raise ValueError("need |lambda| = d - 1")
    out = phi_formula(lam, d) * factorial(d - 1)
    for part, e in lam.multiplicities.items():
        out /= factorial(part) ** e
    return out


# --- WZ identity ------------------------------------------------------------------


def wz_term(n: int, i: int) -> Fraction:
    if i < 0 or i > n - 2:
        return Fraction(0)
    return (
        (Fraction(n, i + 1) - Fraction(n, i + 2) + 2)
        * factorial(n)
        * factorial(i)
        / factorial(n + 1 + i)
        * binomial(n - 2, i)
    )


def wz_sum(n: int) -> Fraction:
    if n < 2:
        raise ValueError("need n >= 2")
    return sum((wz_term(n, i) for i in range(n - 1)), Fraction(0))


def wz_identity_check(n: int) -> bool:
    return wz_sum(n) == 1
