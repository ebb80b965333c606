"""The JSON wire formats: instances and weightings.

Instance files carry the hypergraph plus optional candidate lists:

    {"n": 3, "edges": [[0, 1, 2]],
     "vertex_lists": [[0, 1], ...], "edge_lists": [["1/2", 1, 2], ...]}

Rationals are integers or "p/q" strings; floats are rejected. Weightings
serialize as {"vertex_weights": [...], "edge_weights": [...]}.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .hypergraph import Hypergraph
from .rationals import format_rational, parse_rational
from .weighting import ListAssignment, TotalWeighting


class InstanceFormatError(ValueError):
    """The JSON document does not match the instance contract."""


def _parse_values(raw: Any, what: str) -> tuple:
    if not isinstance(raw, list):
        raise InstanceFormatError(f"{what} must be a list, got {type(raw).__name__}")
    try:
        return tuple(parse_rational(x) for x in raw)
    except ValueError as exc:
        raise InstanceFormatError(f"{what}: {exc}") from exc


def instance_from_obj(obj: Any) -> tuple[Hypergraph, ListAssignment | None]:
    if not isinstance(obj, dict):
        raise InstanceFormatError("instance must be a JSON object")
    try:
        n = obj["n"]
        edges = obj["edges"]
    except KeyError as exc:
        raise InstanceFormatError(f"missing required field {exc.args[0]!r}") from exc
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InstanceFormatError(f"'n' must be a nonnegative integer, got {n!r}")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise InstanceFormatError("'edges' must be a list of lists of vertex ids")
    for e in edges:
        for v in e:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InstanceFormatError(f"vertex ids must be integers, got {v!r}")
    hg = Hypergraph.from_edges(n, edges)
    vertex_raw = obj.get("vertex_lists")
    edge_raw = obj.get("edge_lists")
    if vertex_raw is None and edge_raw is None:
        return hg, None
    if vertex_raw is None or edge_raw is None:
        raise InstanceFormatError("vertex_lists and edge_lists must be given together")
    if not isinstance(vertex_raw, list) or not isinstance(edge_raw, list):
        raise InstanceFormatError("vertex_lists and edge_lists must be lists")
    lists = ListAssignment(
        tuple(_parse_values(vs, f"vertex_lists[{i}]") for i, vs in enumerate(vertex_raw)),
        tuple(_parse_values(es, f"edge_lists[{j}]") for j, es in enumerate(edge_raw)),
    )
    return hg, lists


def instance_to_obj(hg: Hypergraph, lists: ListAssignment | None = None) -> dict:
    obj: dict[str, Any] = {"n": hg.n, "edges": [list(e) for e in hg.edges]}
    if lists is not None:
        obj["vertex_lists"] = [[format_rational(x) for x in vs] for vs in lists.vertex_lists]
        obj["edge_lists"] = [[format_rational(x) for x in es] for es in lists.edge_lists]
    return obj


def read_instance(path: str | Path) -> tuple[Hypergraph, ListAssignment | None]:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{path}: invalid JSON: {exc}") from exc
    return instance_from_obj(obj)


def weighting_to_obj(omega: TotalWeighting) -> dict:
    return {
        "vertex_weights": [format_rational(x) for x in omega.vertex_weights],
        "edge_weights": [format_rational(x) for x in omega.edge_weights],
    }


def weighting_from_obj(obj: Any) -> TotalWeighting:
    if not isinstance(obj, dict):
        raise InstanceFormatError("weighting must be a JSON object")
    try:
        vertex = obj["vertex_weights"]
        edge = obj["edge_weights"]
    except KeyError as exc:
        raise InstanceFormatError(f"missing required field {exc.args[0]!r}") from exc
    return TotalWeighting(
        _parse_values(vertex, "vertex_weights"), _parse_values(edge, "edge_weights")
    )


def read_weighting(path: str | Path) -> TotalWeighting:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{path}: invalid JSON: {exc}") from exc
    return weighting_from_obj(obj)


def dump_json(obj: Any) -> str:
    """Canonical JSON rendering: sorted keys, two-space indent, newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
