"""Finding total weightings from lists: exhaustive backtracking and the
certificate-guided grid search.

The backtracking solver assigns vertices in order, then edges in input
order, pruning a branch as soon as some edge constraint has all of its
asymmetric participants assigned and fails. It is complete: None is
returned only after the whole finite grid is exhausted (which, for the
pair-distinct mode on a valid instance, would be a counterexample to the
existence statement this package exercises - callers flag it as critical).

The certificate-guided solver takes a nonzero-permanent column multiset for
the jacobian matrix, reads it as a monomial, and scans only the tiny
subgrid the Combinatorial Nullstellensatz needs: degree+1 values per
variable, i.e. at most 2 per vertex and 3 per edge.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .coeffmatrix import (
    ColumnMultiset,
    _pair_gradient,
    _phi_at_vector,
    coefficient_interpolation,
)
from .hypergraph import Hypergraph, edge_pairs, validate
from .rationals import Rat
from .reduction import reduce_duplicate_pairs, replay_reduction
from .weighting import ListAssignment, TotalWeighting, check_lists, verify
from .witness import WitnessResult, build_witness

MODE_PAIR_DISTINCT = "pair-distinct"
MODE_PROPER_ONLY = "proper-only"
MODES = (MODE_PAIR_DISTINCT, MODE_PROPER_ONLY)


class _Constraint:
    """One edge's failure test over the variables that can break symmetry."""

    __slots__ = ("forms", "trigger")

    def __init__(self, forms: list[list[tuple[int, int]]]):
        self.forms = forms
        self.trigger = max(var for form in forms for var, _ in form)

    def violated(self, values: list[Rat]) -> bool:
        for form in self.forms:
            acc: Rat = 0
            for var, coeff in form:
                acc += coeff * values[var] if coeff != 1 else values[var]
            if acc != 0:
                return False
        return True


def _pair_form(hg: Hypergraph, pair) -> list[tuple[int, int]]:
    # Variables: vertices at 0..n-1 (by position), edges at n..n+m-1.
    entries = []
    for var, coeff in _pair_gradient(hg, pair):
        if var < hg.m:
            entries.append((hg.n + var, coeff))
        else:
            entries.append((var - hg.m, coeff))
    return entries


def _difference_form(hg: Hypergraph, a: int, b: int) -> list[tuple[int, int]]:
    """Gradient of total(a) - total(b) over solver variables."""
    pos = hg.position
    entries: list[tuple[int, int]] = [(pos[a], 1), (pos[b], -1)]
    for j, edge in enumerate(hg.edges):
        has_a = a in edge
        has_b = b in edge
        if has_a and not has_b:
            entries.append((hg.n + j, 1))
        elif has_b and not has_a:
            entries.append((hg.n + j, -1))
    return entries


class _SolverContext:
    def __init__(self, hg: Hypergraph, mode: str):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
        self.hg = hg
        self.mode = mode
        nvars = hg.n + hg.m
        constraints = []
        for pair in edge_pairs(hg):
            if mode == MODE_PAIR_DISTINCT:
                forms = [_pair_form(hg, pair)]
            else:
                edge = hg.edges[pair.edge]
                head = edge[0]
                forms = [_difference_form(hg, head, other) for other in edge[1:]]
            constraints.append(_Constraint(forms))
        self.by_trigger: list[list[_Constraint]] = [[] for _ in range(nvars)]
        for c in constraints:
            self.by_trigger[c.trigger].append(c)
        self.nvars = nvars

    def solve(self, lists: ListAssignment) -> TotalWeighting | None:
        domains = list(lists.vertex_lists) + list(lists.edge_lists)
        values: list[Rat] = [0] * self.nvars
        n = self.hg.n

        def descend(var: int) -> bool:
            if var == self.nvars:
                return True
            for value in domains[var]:
                values[var] = value
                if any(c.violated(values) for c in self.by_trigger[var]):
                    continue
                if descend(var + 1):
                    return True
            return False

        if not descend(0):
            return None
        return TotalWeighting(tuple(values[:n]), tuple(values[n:]))


def solve_backtracking(
    hg: Hypergraph, lists: ListAssignment, mode: str = MODE_PAIR_DISTINCT
) -> TotalWeighting | None:
    """Depth-first search over the lists; deterministic and complete.

    In pair-distinct mode the duplicate-pair reduction is applied first and
    the solution is replayed onto the original lists. (The reduction is
    sound for the pair condition only: replay preserves every vertex total,
    so surviving-pair distinctness transfers to removed edges that share a
    pair, but mere properness of the reduced instance would not.)
    """
    report = validate(hg)
    if not report.valid:
        raise ValueError(f"invalid hypergraph: {'; '.join(report.messages())}")
    check_lists(hg, lists)
    if mode == MODE_PAIR_DISTINCT:
        reduced, reduced_lists, log = reduce_duplicate_pairs(hg, lists)
        inner = _SolverContext(reduced, mode).solve(reduced_lists)
        if inner is None:
            return None
        result = replay_reduction(log, inner, original_lists=lists)
    else:
        result = _SolverContext(hg, mode).solve(lists)
        if result is None:
            return None
    outcome = verify(hg, result, lists)
    if not outcome.ok(mode):
        raise AssertionError(f"solver produced an invalid weighting: {outcome}")
    return result


def solve_cn_guided(
    hg: Hypergraph, lists: ListAssignment, witness: ColumnMultiset
) -> TotalWeighting:
    """Search the degree+1 subgrid certified by a jacobian witness.

    The witness's monomial must have a nonzero coefficient (cross-checked by
    interpolation before searching); a nonzero point of the pair polynomial
    is then guaranteed to exist on the subgrid, and any nonzero point is a
    valid weighting.
    """
    check_lists(hg, lists)
    if witness.size != hg.m or not witness.is_b_valid():
        raise ValueError(
            f"witness must be a valid multiset of {hg.m} columns, got size {witness.size}"
        )
    degrees = witness.degrees()
    coefficient = coefficient_interpolation(hg, degrees)
    if coefficient == 0:
        raise ValueError("witness monomial has zero coefficient; no certificate")
    # Variables in column order: edges first, then vertices.
    grids: list[Sequence[Rat]] = []
    for col, degree in enumerate(degrees):
        pool = lists.edge_lists[col] if col < hg.m else lists.vertex_lists[col - hg.m]
        if degree + 1 > len(pool):
            raise ValueError(
                f"column {col}: degree {degree} needs {degree + 1} values, "
                f"list has {len(pool)}"
            )
        grids.append(pool[: degree + 1])
    for point in product(*grids):
        if _phi_at_vector(hg, point) != 0:
            result = TotalWeighting(tuple(point[hg.m :]), tuple(point[: hg.m]))
            outcome = verify(hg, result, lists)
            if not outcome.ok(MODE_PAIR_DISTINCT):
                raise AssertionError(f"guided solver produced an invalid weighting: {outcome}")
            return result
    raise AssertionError(
        "no nonzero point on the certified subgrid; the nonzero coefficient "
        "guarantees one exists, so this indicates a defect in the certificate"
    )


def solve_cn(
    hg: Hypergraph, lists: ListAssignment
) -> tuple[TotalWeighting, WitnessResult]:
    """Full certificate pipeline: reduce, build a jacobian witness, search
    the certified subgrid, replay onto the original lists."""
    report = validate(hg)
    if not report.valid:
        raise ValueError(f"invalid hypergraph: {'; '.join(report.messages())}")
    check_lists(hg, lists)
    reduced, reduced_lists, log = reduce_duplicate_pairs(hg, lists)
    witness_result = build_witness(reduced, "jacobian")
    inner = solve_cn_guided(reduced, reduced_lists, witness_result.columns)
    result = replay_reduction(log, inner, original_lists=lists)
    outcome = verify(hg, result, lists)
    if not outcome.ok(MODE_PAIR_DISTINCT):
        raise AssertionError(f"certificate pipeline produced an invalid weighting: {outcome}")
    return result, witness_result
