"""Instance generation: seeded random hypergraphs, exhaustive enumeration,
and the list-assignment modes used by the sweep harness."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Iterator, Sequence

from .hypergraph import Hypergraph
from .weighting import ListAssignment

LIST_MODES = ("random-rational", "constant-12-123", "adversarial-equal-lists")


def candidate_edges(n: int, size_range: tuple[int, int]) -> list[tuple[int, ...]]:
    """All possible edges on vertices 0..n-1 with sizes in the inclusive range."""
    lo, hi = size_range
    if lo < 2:
        raise ValueError(f"edge size minimum must be >= 2, got {lo}")
    if hi < lo:
        raise ValueError(f"empty size range: {size_range}")
    out: list[tuple[int, ...]] = []
    for size in range(lo, min(hi, n) + 1):
        out.extend(itertools.combinations(range(n), size))
    return out


def random_hypergraph(n: int, m: int, size_range: tuple[int, int], seed: int) -> Hypergraph:
    """Seeded random hypergraph with ``m`` distinct edges (no repeats)."""
    lo, hi = size_range
    if lo < 2:
        raise ValueError(f"edge size minimum must be >= 2, got {lo}")
    total = sum(math.comb(n, s) for s in range(lo, min(hi, n) + 1))
    if m > total:
        raise ValueError(f"cannot place {m} distinct edges: only {total} possible")
    rng = random.Random(seed)
    sizes = list(range(lo, min(hi, n) + 1))
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    while len(edges) < m:
        size = rng.choice(sizes)
        edge = tuple(sorted(rng.sample(range(n), size)))
        if edge not in seen:
            seen.add(edge)
            edges.append(edge)
    return Hypergraph.from_edges(n, edges)


def enumerate_hypergraphs(
    n: int, m_max: int, size_range: tuple[int, int]
) -> Iterator[Hypergraph]:
    """All hypergraphs on the fixed vertex set 0..n-1 with 1..m_max distinct
    edges of allowed sizes, each edge set emitted exactly once.

    Edges within an instance appear in canonical order (by size, then
    lexicographically), which becomes the instance's input order.
    """
    candidates = candidate_edges(n, size_range)
    candidates.sort(key=lambda e: (len(e), e))
    for m in range(1, m_max + 1):
        for combo in itertools.combinations(candidates, m):
            yield Hypergraph.from_edges(n, combo)


def _rational_pool() -> tuple[Fraction, ...]:
    values = {Fraction(p, q) for p in range(-6, 7) for q in range(1, 5)}
    return tuple(sorted(values))


_POOL = _rational_pool()


def random_list_assignment(hg: Hypergraph, rng: random.Random) -> ListAssignment:
    """Distinct random rationals: 2 per vertex, 3 per edge."""
    vertex_lists = tuple(tuple(rng.sample(_POOL, 2)) for _ in range(hg.n))
    edge_lists = tuple(tuple(rng.sample(_POOL, 3)) for _ in range(hg.m))
    return ListAssignment(vertex_lists, edge_lists)


def constant_list_assignment(hg: Hypergraph) -> ListAssignment:
    """The fixed lists {1,2} on vertices and {1,2,3} on edges."""
    return ListAssignment(((1, 2),) * hg.n, ((1, 2, 3),) * hg.m)


def adversarial_list_assignment(hg: Hypergraph) -> ListAssignment:
    """Identical lists everywhere ({0,1} / {0,1,2}): no help from offsets."""
    return ListAssignment(((0, 1),) * hg.n, ((0, 1, 2),) * hg.m)


def make_list_assignment(hg: Hypergraph, mode: str, rng: random.Random) -> ListAssignment:
    if mode == "random-rational":
        return random_list_assignment(hg, rng)
    if mode == "constant-12-123":
        return constant_list_assignment(hg)
    if mode == "adversarial-equal-lists":
        return adversarial_list_assignment(hg)
    raise ValueError(f"unknown list mode: {mode!r} (expected one of {LIST_MODES})")
