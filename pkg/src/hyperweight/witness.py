"""Inductive construction of a nonzero-permanent column multiset.

The goal is a multiset B of m matrix columns (each vertex column at most
once, each edge column at most twice) whose permanent is nonzero. For the
jacobian variant such a B certifies a nonzero degree-m coefficient of the
pair polynomial, and by the Combinatorial Nullstellensatz a weighting then
exists from any size-2/size-3 lists.

The construction walks the vertex order backwards. At each vertex u it
lifts the witness of the suffix hypergraph by adding one copy of u's
column per edge whose pair starts at u, then applies two per-edge column
moves:

- switch: if the partner vertex's column is present, swap it for the edge's
  column; the permanent is asserted unchanged.
- assign: trade each added u-column for either the partner vertex's column
  or the edge's column, whichever keeps the permanent nonzero (the vertex
  column is preferred when both do).

Every step asserts the algebraic claim it relies on (the lift multiplies
the permanent by degree-factorial, switches preserve it, some assign option
is nonzero). A failed assertion is recorded as a discrepancy - it is data
about the construction, not a crash - and the current suffix subproblem is
redone by exhaustive search instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .coeffmatrix import CoeffMatrix, ColumnMultiset, build_matrix, normalize_variant
from .hypergraph import Hypergraph, edge_pairs, has_duplicate_pairs, validate
from .matrices import IntMatrix
from .permanent import permanent

WITNESS_MAX_EDGES = 14
SEARCH_MAX_EDGES = 10


class WitnessNotFoundError(Exception):
    """No valid column multiset with nonzero permanent exists.

    For the jacobian variant on a duplicate-pair-free instance this is a
    counterexample candidate for the underlying existence statement, so
    ``critical`` is set.
    """

    def __init__(self, variant: str, message: str, critical: bool):
        super().__init__(message)
        self.variant = variant
        self.critical = critical


@dataclass(frozen=True)
class SwitchRecord:
    edge: int
    removed_column: int
    added_column: int
    per_before: int
    per_after: int


@dataclass(frozen=True)
class AssignRecord:
    edge: int
    vertex_column: int
    edge_column: int
    vertex_option_per: int
    edge_option_per: int
    chosen_column: int


@dataclass(frozen=True)
class Discrepancy:
    stage: str  # lift | switch | assign
    vertex: int
    edge: int | None
    message: str


@dataclass(frozen=True)
class WitnessStep:
    vertex: int
    degree: int
    per_before: int
    per_lift: int
    lift_ok: bool
    switches: tuple[SwitchRecord, ...]
    assigns: tuple[AssignRecord, ...]
    fallback: bool
    per_after: int


@dataclass(frozen=True)
class WitnessResult:
    variant: str
    columns: ColumnMultiset
    permanent: int
    trace: tuple[WitnessStep, ...]
    discrepancies: tuple[Discrepancy, ...]
    used_fallback: bool


def _submatrix(A: CoeffMatrix, rows: Sequence[int], counts: dict[int, int]) -> IntMatrix:
    cols: list[int] = []
    for col in sorted(counts):
        cols.extend([col] * counts[col])
    entries = [[A.matrix.entry(r, c) for c in cols] for r in rows]
    return IntMatrix.from_rows(entries, ncols=len(cols))


def _per(A: CoeffMatrix, rows: Sequence[int], counts: dict[int, int]) -> int:
    return permanent(_submatrix(A, rows, counts))


def _search_counts(
    A: CoeffMatrix, rows: Sequence[int], allowed: Sequence[int], size: int
) -> dict[int, int] | None:
    """Lexicographically first valid multiset of ``size`` columns with
    nonzero permanent, or None."""
    m = A.m
    for combo in combinations_with_replacement(allowed, size):
        counts: dict[int, int] = {}
        ok = True
        for col in combo:
            counts[col] = counts.get(col, 0) + 1
            if counts[col] > (2 if col < m else 1):
                ok = False
                break
        if ok and _per(A, rows, counts) != 0:
            return counts
    return None


def exhaustive_witness_search(hg: Hypergraph, variant: str) -> ColumnMultiset | None:
    """Fallback oracle: scan all valid multisets in lexicographic column
    order (edge columns first) and return the first with nonzero permanent."""
    variant = normalize_variant(variant)
    if hg.m > SEARCH_MAX_EDGES:
        raise ValueError(f"exhaustive_witness_search guard: m={hg.m} > {SEARCH_MAX_EDGES}")
    A = build_matrix(hg, variant)
    counts = _search_counts(A, range(hg.m), range(hg.m + hg.n), hg.m)
    if counts is None:
        return None
    return ColumnMultiset.from_counts(counts, hg.m, hg.n)


def build_witness(hg: Hypergraph, variant: str) -> WitnessResult:
    """Run the inductive construction, asserting every step's claim.

    Requires a valid hypergraph with pairwise-distinct edge pairs (apply the
    duplicate-pair reduction first). Raises WitnessNotFoundError when even
    the exhaustive fallback finds nothing for this variant.
    """
    variant = normalize_variant(variant)
    report = validate(hg)
    if not report.valid:
        raise ValueError(f"invalid hypergraph: {'; '.join(report.messages())}")
    if has_duplicate_pairs(hg):
        raise ValueError("duplicate edge pairs present; reduce the instance first")
    if hg.m > WITNESS_MAX_EDGES:
        raise ValueError(f"build_witness guard: m={hg.m} > {WITNESS_MAX_EDGES}")

    A = build_matrix(hg, variant)
    m, n = hg.m, hg.n
    pairs = edge_pairs(hg)
    pos = hg.position
    # Edges grouped by the order position of their first vertex; peeling the
    # order backwards activates exactly these groups.
    groups: list[list[int]] = [[] for _ in range(n)]
    for e, pair in enumerate(pairs):
        groups[pos[pair.u]].append(e)
    active_rows: list[list[int]] = [[] for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        active_rows[j] = groups[j] + active_rows[j + 1]
    for j in range(n + 1):
        active_rows[j] = sorted(active_rows[j])

    counts: dict[int, int] = {}
    per_current = 1
    trace: list[WitnessStep] = []
    discrepancies: list[Discrepancy] = []
    used_fallback = False

    for j in range(n - 1, -1, -1):
        u = hg.vertices[j]
        edges_here = groups[j]
        k = len(edges_here)
        rows = active_rows[j]
        per_before = per_current
        ucol = m + j

        if k:
            counts[ucol] = counts.get(ucol, 0) + k
        per_lift = _per(A, rows, counts)
        lift_ok = per_lift == math.factorial(k) * per_before
        step_failed = False
        switches: list[SwitchRecord] = []
        assigns: list[AssignRecord] = []

        if not lift_ok or per_lift == 0:
            discrepancies.append(
                Discrepancy(
                    "lift",
                    u,
                    None,
                    f"per(lift)={per_lift}, expected {k}!*{per_before}"
                    f"={math.factorial(k) * per_before}",
                )
            )
            step_failed = True

        per_run = per_lift
        if not step_failed:
            for e in edges_here:
                vcol = m + pos[pairs[e].v]
                if counts.get(vcol, 0) < 1:
                    continue
                counts[vcol] -= 1
                if not counts[vcol]:
                    del counts[vcol]
                counts[e] = counts.get(e, 0) + 1
                per_new = _per(A, rows, counts)
                switches.append(SwitchRecord(e, vcol, e, per_run, per_new))
                if per_new != per_run:
                    discrepancies.append(
                        Discrepancy(
                            "switch",
                            u,
                            e,
                            f"permanent changed {per_run} -> {per_new} when column "
                            f"{A.column_label(vcol)} was swapped for {A.column_label(e)}",
                        )
                    )
                    step_failed = True
                    break
                per_run = per_new

        if not step_failed:
            for e in edges_here:
                vcol = m + pos[pairs[e].v]
                counts[ucol] -= 1
                if not counts[ucol]:
                    del counts[ucol]
                per_v = 0
                # B-validity caps can only bite if an earlier anomaly left a
                # copy behind; treat a capped option as unavailable (per 0).
                if counts.get(vcol, 0) < 1:
                    counts[vcol] = counts.get(vcol, 0) + 1
                    per_v = _per(A, rows, counts)
                    counts[vcol] -= 1
                    if not counts[vcol]:
                        del counts[vcol]
                per_e = 0
                if counts.get(e, 0) < 2:
                    counts[e] = counts.get(e, 0) + 1
                    per_e = _per(A, rows, counts)
                    counts[e] -= 1
                    if not counts[e]:
                        del counts[e]
                if per_v != 0:
                    chosen = vcol  # prefer the vertex column: keeps edge multiplicities low
                elif per_e != 0:
                    chosen = e
                else:
                    discrepancies.append(
                        Discrepancy(
                            "assign",
                            u,
                            e,
                            f"both replacement options for column {A.column_label(ucol)} "
                            f"have permanent 0 (vertex {per_v}, edge {per_e})",
                        )
                    )
                    counts[ucol] = counts.get(ucol, 0) + 1  # undo removal for the record
                    step_failed = True
                    break
                counts[chosen] = counts.get(chosen, 0) + 1
                assigns.append(AssignRecord(e, vcol, e, per_v, per_e, chosen))
                per_run = per_v if chosen == vcol else per_e
            per_current = per_run

        if step_failed:
            used_fallback = True
            allowed = list(rows) + [m + i for i in range(j, n)]
            if len(rows) > SEARCH_MAX_EDGES:
                raise WitnessNotFoundError(
                    variant,
                    f"construction failed at vertex {u} and the subproblem "
                    f"({len(rows)} edges) exceeds the exhaustive-search guard",
                    critical=False,
                )
            found = _search_counts(A, rows, allowed, len(rows))
            if found is None:
                raise WitnessNotFoundError(
                    variant,
                    f"no valid column multiset with nonzero permanent exists for "
                    f"variant {variant} at vertex {u} (subproblem of {len(rows)} edges)",
                    critical=variant == "jacobian",
                )
            counts = found
            per_current = _per(A, rows, counts)

        trace.append(
            WitnessStep(
                u, k, per_before, per_lift, lift_ok,
                tuple(switches), tuple(assigns), step_failed, per_current,
            )
        )

    columns = ColumnMultiset.from_counts(counts, m, n)
    final_per = _per(A, range(m), counts)
    if columns.size != m or not columns.is_b_valid() or final_per == 0:
        raise WitnessNotFoundError(
            variant,
            f"construction ended with an invalid witness (size {columns.size}, "
            f"permanent {final_per})",
            critical=variant == "jacobian",
        )
    return WitnessResult(
        variant, columns, final_per, tuple(trace), tuple(discrepancies), used_fallback
    )


@dataclass(frozen=True)
class IdentityViolation:
    edge: int
    row: int
    lhs: int
    rhs: int


def check_column_identity(hg: Hypergraph, variant: str) -> tuple[IdentityViolation, ...]:
    """Catalog where column(e) != column(u_e) - column(v_e) fails, row by row.

    The switch/assign steps implicitly lean on this identity; it does not
    hold universally for either variant, and the violations are reported as
    data rather than resolved.
    """
    variant = normalize_variant(variant)
    A = build_matrix(hg, variant)
    out: list[IdentityViolation] = []
    for pair in edge_pairs(hg):
        ecol = pair.edge
        ucol = A.column_of_vertex(pair.u)
        vcol = A.column_of_vertex(pair.v)
        for row in range(hg.m):
            lhs = A.matrix.entry(row, ecol)
            rhs = A.matrix.entry(row, ucol) - A.matrix.entry(row, vcol)
            if lhs != rhs:
                out.append(IdentityViolation(pair.edge, row, lhs, rhs))
    return tuple(out)
