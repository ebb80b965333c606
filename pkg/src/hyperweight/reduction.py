"""Duplicate-pair reduction and its replay.

Two edges whose order-first vertex pairs coincide impose the same pair
constraint, so one of them can be removed: fix a weight c for the removed
edge (first candidate in its list) and add c to the lists of all its
vertices. Replaying a solution of the reduced instance undoes the shifts
and reinstates the removed edges with their fixed weights; every vertex
total is preserved exactly, so constraint outcomes carry over.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Hypergraph, EdgePair, edge_pairs
from .rationals import Rat
from .weighting import ListAssignment, TotalWeighting, check_lists


class ReplayError(ValueError):
    """The weighting being replayed is inconsistent with the reduction log."""


@dataclass(frozen=True)
class ReductionRecord:
    edge: int  # index of the removed edge in the original instance
    pair: EdgePair
    weight: Rat  # the fixed weight c, taken from the removed edge's list
    vertices: tuple[int, ...]  # members of the removed edge


@dataclass(frozen=True)
class ReductionLog:
    records: tuple[ReductionRecord, ...]
    kept_edges: tuple[int, ...]  # original indices of surviving edges, in order
    vertex_order: tuple[int, ...]

    @property
    def original_edge_count(self) -> int:
        return len(self.records) + len(self.kept_edges)


def reduce_duplicate_pairs(
    hg: Hypergraph, lists: ListAssignment
) -> tuple[Hypergraph, ListAssignment, ReductionLog]:
    """Remove later edges whose unordered pair repeats an earlier edge's.

    Edges are scanned in input order; the earliest edge of each pair class
    survives. Vertex lists of a removed edge are shifted by its fixed
    weight; list sizes are unchanged.
    """
    check_lists(hg, lists)
    pairs = edge_pairs(hg)
    pos = hg.position
    seen: set[frozenset[int]] = set()
    kept: list[int] = []
    records: list[ReductionRecord] = []
    vertex_lists = list(lists.vertex_lists)
    for e, pair in enumerate(pairs):
        key = frozenset((pair.u, pair.v))
        if key not in seen:
            seen.add(key)
            kept.append(e)
            continue
        c = lists.edge_lists[e][0]
        members = hg.edges[e]
        for v in members:
            vertex_lists[pos[v]] = tuple(x + c for x in vertex_lists[pos[v]])
        records.append(ReductionRecord(e, pair, c, members))
    reduced = Hypergraph(hg.vertices, [hg.edges[e] for e in kept])
    reduced_lists = ListAssignment(
        tuple(vertex_lists), tuple(lists.edge_lists[e] for e in kept)
    )
    return reduced, reduced_lists, ReductionLog(tuple(records), tuple(kept), hg.vertices)


def replay_reduction(
    log: ReductionLog,
    reduced_weighting: TotalWeighting,
    original_lists: ListAssignment | None = None,
) -> TotalWeighting:
    """Lift a weighting of the reduced instance back to the original one.

    Records are unwound in reverse order: the removed edge gets its fixed
    weight c and each of its vertices loses c. Every vertex total is
    unchanged, so any pair/properness outcome of the reduced solution holds
    verbatim in the original instance.
    """
    if len(reduced_weighting.edge_weights) != len(log.kept_edges):
        raise ReplayError(
            f"weighting has {len(reduced_weighting.edge_weights)} edge weights, "
            f"log expects {len(log.kept_edges)}"
        )
    vertex_weights = list(reduced_weighting.vertex_weights)
    edge_weights: list[Rat | None] = [None] * log.original_edge_count
    for j, original_index in enumerate(log.kept_edges):
        edge_weights[original_index] = reduced_weighting.edge_weights[j]
    pos = {v: i for i, v in enumerate(log.vertex_order)}
    for record in reversed(log.records):
        edge_weights[record.edge] = record.weight
        for v in record.vertices:
            vertex_weights[pos[v]] -= record.weight
    assert all(w is not None for w in edge_weights)
    result = TotalWeighting(tuple(vertex_weights), tuple(edge_weights))
    if original_lists is not None:
        for i, value in enumerate(result.vertex_weights):
            if value not in original_lists.vertex_lists[i]:
                raise ReplayError(f"vertex {i}: replayed value {value} not in its list")
        for j, value in enumerate(result.edge_weights):
            if value not in original_lists.edge_lists[j]:
                raise ReplayError(f"edge {j}: replayed value {value} not in its list")
    return result
