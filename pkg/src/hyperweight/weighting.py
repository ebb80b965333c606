"""Total weightings, candidate lists, induced vertex totals, verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .hypergraph import Hypergraph, edge_pairs
from .rationals import Rat


class ListFormatError(ValueError):
    """A candidate-weight list violates the size-2 / size-3 contract."""


@dataclass(frozen=True)
class ListAssignment:
    """Candidate weights: exactly 2 distinct values per vertex, 3 per edge.

    Lists are aligned positionally with the hypergraph's vertex order and
    edge input order.
    """

    vertex_lists: tuple[tuple[Rat, ...], ...]
    edge_lists: tuple[tuple[Rat, ...], ...]

    def shifted_vertex(self, index: int, offset: Rat) -> "ListAssignment":
        """Add ``offset`` to both candidates of one vertex list."""
        updated = list(self.vertex_lists)
        updated[index] = tuple(x + offset for x in updated[index])
        return ListAssignment(tuple(updated), self.edge_lists)


def check_lists(hg: Hypergraph, lists: ListAssignment) -> None:
    if len(lists.vertex_lists) != hg.n:
        raise ListFormatError(
            f"expected {hg.n} vertex lists, got {len(lists.vertex_lists)}"
        )
    if len(lists.edge_lists) != hg.m:
        raise ListFormatError(f"expected {hg.m} edge lists, got {len(lists.edge_lists)}")
    for i, values in enumerate(lists.vertex_lists):
        if len(values) != 2:
            raise ListFormatError(f"vertex {i}: list must have size 2, got {len(values)}")
        if len(set(values)) != 2:
            raise ListFormatError(f"vertex {i}: repeated value in list {values}")
    for j, values in enumerate(lists.edge_lists):
        if len(values) != 3:
            raise ListFormatError(f"edge {j}: list must have size 3, got {len(values)}")
        if len(set(values)) != 3:
            raise ListFormatError(f"edge {j}: repeated value in list {values}")


@dataclass(frozen=True)
class TotalWeighting:
    """One weight per vertex (by order position) and per edge (input order)."""

    vertex_weights: tuple[Rat, ...]
    edge_weights: tuple[Rat, ...]


def total_weights(hg: Hypergraph, omega: TotalWeighting) -> tuple[Rat, ...]:
    """Induced totals: own weight plus the weights of all incident edges."""
    if len(omega.vertex_weights) != hg.n or len(omega.edge_weights) != hg.m:
        raise ValueError("weighting does not cover every vertex and edge")
    pos = hg.position
    totals = list(omega.vertex_weights)
    for j, edge in enumerate(hg.edges):
        w = omega.edge_weights[j]
        for v in edge:
            totals[pos[v]] += w
    return tuple(totals)


@dataclass(frozen=True)
class VerifyReport:
    totals: tuple[Rat, ...]
    pair_violations: tuple[int, ...]
    monochromatic_edges: tuple[int, ...]
    membership_violations: tuple[tuple[str, int], ...]

    @property
    def pair_distinct_ok(self) -> bool:
        return not self.pair_violations

    @property
    def proper_ok(self) -> bool:
        return not self.monochromatic_edges

    @property
    def lists_ok(self) -> bool:
        return not self.membership_violations

    def ok(self, mode: str = "pair-distinct") -> bool:
        clean = self.pair_distinct_ok if mode == "pair-distinct" else self.proper_ok
        return clean and self.lists_ok


def verify(
    hg: Hypergraph, omega: TotalWeighting, lists: ListAssignment | None = None
) -> VerifyReport:
    """Check both conditions on the induced totals.

    The pair condition (the totals of each edge's two order-first vertices
    differ) implies properness (no edge has all totals equal), but not the
    other way round; both are reported.
    """
    totals = total_weights(hg, omega)
    pos = hg.position
    pair_violations = []
    mono = []
    for p in edge_pairs(hg):
        if totals[pos[p.u]] == totals[pos[p.v]]:
            pair_violations.append(p.edge)
    for j, edge in enumerate(hg.edges):
        values = {totals[pos[v]] for v in edge}
        if len(values) == 1:
            mono.append(j)
    membership: list[tuple[str, int]] = []
    if lists is not None:
        for i, value in enumerate(omega.vertex_weights):
            if value not in lists.vertex_lists[i]:
                membership.append(("v", i))
        for j, value in enumerate(omega.edge_weights):
            if value not in lists.edge_lists[j]:
                membership.append(("e", j))
    return VerifyReport(totals, tuple(pair_violations), tuple(mono), tuple(membership))
