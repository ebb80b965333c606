"""Hypergraph data model: vertex order, edge pairs, deletion, twins.

A hypergraph here is an ordered sequence of vertex ids plus a sequence of
edges (vertex subsets). The vertex order is structural: the "pair" of an
edge is its two order-smallest members, and everything downstream (the
coefficient matrix, the witness construction, the solvers) is defined
relative to that order. Edge order is input order and is stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class EdgePair:
    """The two order-smallest vertices of one edge, in order (u before v)."""

    edge: int
    u: int
    v: int


@dataclass(frozen=True)
class Violation:
    kind: str
    index: int
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def messages(self) -> list[str]:
        return [v.detail for v in self.violations]


class Hypergraph:
    """Immutable hypergraph with an explicit vertex order.

    Construction is permissive (undersized edges and unknown vertex ids are
    stored as-is) so that :func:`validate` can report violations instead of
    raising. Edges are normalized to tuples sorted by the vertex order.
    """

    __slots__ = ("vertices", "edges", "__dict__")

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, vertices: Iterable[int], edges: Iterable[Iterable[int]]):
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("vertex ids must be distinct")
        object.__setattr__(self, "vertices", vs)
        pos = {v: i for i, v in enumerate(vs)}
        n = len(vs)
        norm = []
        for edge in edges:
            members = set(edge)
            # Unknown ids sort after known ones; validate() reports them.
            norm.append(tuple(sorted(members, key=lambda w: (0, pos[w]) if w in pos else (1, w))))
        object.__setattr__(self, "edges", tuple(norm))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Hypergraph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Canonical form: vertices are 0..n-1 in natural order."""
        return cls(range(n), edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def position(self) -> dict[int, int]:
        """Vertex id -> position in the global order."""
        return {v: i for i, v in enumerate(self.vertices)}

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.edges) if v in e)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(vertices={self.vertices!r}, edges={self.edges!r})"


def validate(hg: Hypergraph) -> ValidationReport:
    """Report structural violations: undersized edges, unknown vertex ids.

    Repeated identical edges are permitted; they are removable by the
    duplicate-pair reduction downstream.
    """
    known = set(hg.vertices)
    violations = []
    for i, edge in enumerate(hg.edges):
        if len(edge) < 2:
            violations.append(
                Violation("edge-too-small", i, f"edge {i} has size {len(edge)} (edge of size 0 or 1)")
            )
        for w in edge:
            if w not in known:
                violations.append(
                    Violation("vertex-out-of-range", i, f"edge {i}: vertex id out of range: {w}")
                )
    return ValidationReport(tuple(violations))


def edge_pair(hg: Hypergraph, e: int) -> EdgePair:
    """The ordered pair of the two order-smallest vertices of edge ``e``."""
    if not 0 <= e < hg.m:
        raise IndexError(f"edge index out of range: {e}")
    edge = hg.edges[e]
    if len(edge) < 2:
        raise ValueError(f"edge {e} has no vertex pair (size {len(edge)})")
    return EdgePair(e, edge[0], edge[1])


def edge_pairs(hg: Hypergraph) -> tuple[EdgePair, ...]:
    return tuple(edge_pair(hg, e) for e in range(hg.m))


def has_duplicate_pairs(hg: Hypergraph) -> bool:
    seen = set()
    for p in edge_pairs(hg):
        key = frozenset((p.u, p.v))
        if key in seen:
            return True
        seen.add(key)
    return False


def delete_first_vertex(hg: Hypergraph) -> tuple[int, int, Hypergraph]:
    """Remove the order-first vertex u.

    Returns (u, degree of u, subhypergraph on the remaining vertices keeping
    exactly the edges that avoid u). Surviving edges keep their members, so
    their pairs are unchanged.
    """
    if hg.n == 0:
        raise ValueError("empty hypergraph has no first vertex")
    u = hg.vertices[0]
    kept = [e for e in hg.edges if u not in e]
    k = hg.m - len(kept)
    return u, k, Hypergraph(hg.vertices[1:], kept)


def find_twins(hg: Hypergraph) -> tuple[tuple[int, ...], ...]:
    """Partition vertices into classes with identical incident edge sets."""
    classes: dict[frozenset[int], list[int]] = {}
    for v in hg.vertices:
        key = frozenset(i for i, e in enumerate(hg.edges) if v in e)
        classes.setdefault(key, []).append(v)
    # Deterministic: classes ordered by their order-first member.
    pos = hg.position
    return tuple(tuple(vs) for vs in sorted(classes.values(), key=lambda vs: pos[vs[0]]))


def subhypergraph_suffix(hg: Hypergraph, start: int) -> Hypergraph:
    """Induced hypergraph on vertices at order positions >= start."""
    kept_vertices = hg.vertices[start:]
    allowed = set(kept_vertices)
    return Hypergraph(kept_vertices, [e for e in hg.edges if all(w in allowed for w in e)])
