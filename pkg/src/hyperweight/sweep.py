"""Experiment sweeps over enumerated instances, with discrepancy reporting.

A sweep walks every hypergraph in its strata (exact enumeration, no
sampling), solves each one against seeded list assignments, builds
witnesses for the requested matrix variants, catalogs column-identity
violations, and cross-checks the three coefficient extraction routes where
the expansion oracle's guards allow. Reports are deterministic: the same
config and seed produce byte-identical JSON.

Solver failures in pair-distinct mode are counterexample candidates for the
existence statement; they are flagged CRITICAL and carried in the report
with the full instance for replay.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .coeffmatrix import (
    EXPAND_MAX_EDGES,
    EXPAND_MAX_VARIABLES,
    build_matrix,
    b_valid_monomials,
    coefficient_from_permanent,
    coefficient_interpolation,
    expand_phi,
    normalize_variant,
)
from .generate import LIST_MODES, enumerate_hypergraphs, make_list_assignment
from .hypergraph import Hypergraph
from .instances import instance_to_obj
from .reduction import reduce_duplicate_pairs
from .solver import MODE_PAIR_DISTINCT, MODES, solve_backtracking
from .weighting import verify
from .witness import WitnessNotFoundError, build_witness

MISMATCH_CAP = 200  # catalog entries retained per section


@dataclass(frozen=True)
class SweepConfig:
    n_max: int
    m_max: int
    size_min: int = 2
    size_max: int = 4
    trials: int = 10
    seed: int = 0
    lists: str = "random-rational"
    variants: tuple[str, ...] = ("jacobian", "incidence")
    mode: str = MODE_PAIR_DISTINCT

    def check(self) -> None:
        if self.n_max < 1 or self.m_max < 1:
            raise ValueError("n_max and m_max must be at least 1")
        if self.size_min < 2:
            raise ValueError("size_min must be at least 2")
        if self.size_max < self.size_min:
            raise ValueError("empty size range")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.lists not in LIST_MODES:
            raise ValueError(f"unknown list mode {self.lists!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        for v in self.variants:
            normalize_variant(v)

    def as_obj(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "m_max": self.m_max,
            "size_min": self.size_min,
            "size_max": self.size_max,
            "trials": self.trials,
            "seed": self.seed,
            "lists": self.lists,
            "variants": [normalize_variant(v) for v in self.variants],
            "mode": self.mode,
        }


def _instance_rng(seed: int, index: int) -> random.Random:
    # String seeding hashes with sha512: stable across runs and platforms.
    return random.Random(f"{seed}:{index}")


def _frac_str(value) -> str:
    f = Fraction(value)
    return str(f)


def run_sweep(config: SweepConfig) -> dict[str, Any]:
    config.check()
    variants = tuple(normalize_variant(v) for v in config.variants)

    solver = {"attempts": 0, "successes": 0, "failures": 0}
    witness: dict[str, dict[str, int]] = {
        v: {"built": 0, "sound": 0, "fallbacks": 0, "discrepancies": 0, "missing": 0}
        for v in variants
    }
    identity: dict[str, dict[str, int]] = {
        v: {"instances_with_violations": 0, "total_violations": 0} for v in variants
    }
    bridge: dict[str, dict[str, Any]] = {
        v: {"checked": 0, "agreements": 0, "mismatch_count": 0, "mismatches": [], "skipped_instances": 0}
        for v in variants
    }
    if "jacobian" in variants:
        bridge["jacobian"]["interpolation_checked"] = 0
        bridge["jacobian"]["interpolation_agreements"] = 0
    critical: list[dict[str, Any]] = []
    discrepancy_catalog: list[dict[str, Any]] = []

    instance_count = 0
    index = 0
    for n in range(1, config.n_max + 1):
        for hg in enumerate_hypergraphs(n, config.m_max, (config.size_min, config.size_max)):
            rng = _instance_rng(config.seed, index)
            index += 1
            instance_count += 1
            _sweep_solver(config, hg, rng, solver, critical)
            for v in variants:
                _sweep_witness(config, hg, v, witness[v], discrepancy_catalog, critical)
                _sweep_identity(hg, v, identity[v])
                _sweep_bridge(hg, v, bridge[v])

    report: dict[str, Any] = {
        "config": config.as_obj(),
        "instances": instance_count,
        "solver": solver,
        "witness": witness,
        "identity": identity,
        "coefficient_bridge": bridge,
        "witness_discrepancies": discrepancy_catalog[:MISMATCH_CAP],
        "critical_findings": critical,
    }
    return report


def _sweep_solver(config, hg, rng, solver, critical) -> None:
    for trial in range(config.trials):
        lists = make_list_assignment(hg, config.lists, rng)
        solver["attempts"] += 1
        result = solve_backtracking(hg, lists, config.mode)
        if result is not None and verify(hg, result, lists).ok(config.mode):
            solver["successes"] += 1
        else:
            solver["failures"] += 1
            if config.mode == MODE_PAIR_DISTINCT:
                critical.append(
                    {
                        "kind": "solver-none",
                        "detail": "backtracking exhausted the lists without a weighting",
                        "instance": instance_to_obj(hg, lists),
                        "trial": trial,
                    }
                )


def _sweep_witness(config, hg, variant, stats, catalog, critical) -> None:
    from .generate import constant_list_assignment

    reduced, _, _ = reduce_duplicate_pairs(hg, constant_list_assignment(hg))
    try:
        result = build_witness(reduced, variant)
    except WitnessNotFoundError as exc:
        stats["missing"] += 1
        if exc.critical:
            critical.append(
                {
                    "kind": "witness-missing",
                    "detail": str(exc),
                    "instance": instance_to_obj(reduced),
                    "variant": variant,
                }
            )
        return
    stats["built"] += 1
    if result.permanent != 0 and result.columns.is_b_valid():
        stats["sound"] += 1
    if result.used_fallback:
        stats["fallbacks"] += 1
    if result.discrepancies:
        stats["discrepancies"] += len(result.discrepancies)
        if len(catalog) < MISMATCH_CAP:
            catalog.append(
                {
                    "variant": variant,
                    "instance": instance_to_obj(reduced),
                    "discrepancies": [
                        {"stage": d.stage, "vertex": d.vertex, "edge": d.edge, "message": d.message}
                        for d in result.discrepancies
                    ],
                }
            )


def _sweep_identity(hg, variant, stats) -> None:
    from .witness import check_column_identity

    violations = check_column_identity(hg, variant)
    if violations:
        stats["instances_with_violations"] += 1
        stats["total_violations"] += len(violations)


def _sweep_bridge(hg: Hypergraph, variant: str, stats) -> None:
    if hg.m > EXPAND_MAX_EDGES or hg.m + hg.n > EXPAND_MAX_VARIABLES:
        stats["skipped_instances"] += 1
        return
    expansion = expand_phi(hg)
    A = build_matrix(hg, variant)
    for monomial in b_valid_monomials(hg):
        expected = Fraction(expansion.get(monomial.degrees, 0))
        actual = coefficient_from_permanent(A, monomial)
        stats["checked"] += 1
        if actual == expected:
            stats["agreements"] += 1
        else:
            stats["mismatch_count"] += 1
            if len(stats["mismatches"]) < MISMATCH_CAP:
                stats["mismatches"].append(
                    {
                        "instance": instance_to_obj(hg),
                        "monomial": list(ColumnLabels(hg).labels(monomial.degrees)),
                        "expand": _frac_str(expected),
                        "permanent_bridge": _frac_str(actual),
                    }
                )
        if variant == "jacobian":
            interpolated = coefficient_interpolation(hg, monomial)
            stats["interpolation_checked"] += 1
            if interpolated == expected:
                stats["interpolation_agreements"] += 1


class ColumnLabels:
    """Render a monomial's support as e<j>/v<i> labels with multiplicity."""

    def __init__(self, hg: Hypergraph):
        self.m = hg.m
        self.vertices = hg.vertices

    def labels(self, degrees) -> list[str]:
        out = []
        for col, d in enumerate(degrees):
            name = f"e{col}" if col < self.m else f"v{self.vertices[col - self.m]}"
            out.extend([name] * d)
        return out
