"""Command-line surface over the JSON instance format.

Exit codes are a stable contract:

    0  success
    1  input or validation error
    2  no weighting found / verification failed / critical finding
    3  witness was produced only by the exhaustive fallback
    4  no witness exists for the requested matrix variant

Critical findings (candidate counterexamples to the existence statement)
are appended to a findings file, one JSON object per line, with the full
instance for replay.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .coeffmatrix import (
    EXPAND_MAX_EDGES,
    EXPAND_MAX_VARIABLES,
    ColumnMultiset,
    MonomialIndex,
    build_matrix,
    b_valid_monomials,
    coefficient_from_permanent,
    coefficient_interpolation,
    expand_phi,
    normalize_variant,
)
from .generate import LIST_MODES, make_list_assignment, random_hypergraph
from .hypergraph import Hypergraph, validate
from .instances import (
    InstanceFormatError,
    dump_json,
    instance_to_obj,
    read_instance,
    read_weighting,
    weighting_to_obj,
)
from .rationals import format_rational
from .reduction import reduce_duplicate_pairs
from .solver import MODE_PAIR_DISTINCT, MODES, solve_backtracking, solve_cn
from .sweep import SweepConfig, run_sweep
from .weighting import ListFormatError, verify
from .witness import WitnessNotFoundError, WitnessResult, build_witness, check_column_identity

import random


_VARIANT_CHOICES = ("jacobian", "incidence", "paper")


def _fail(message: str, code: int = 1):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load(instance_path: str, need_lists: bool):
    try:
        hg, lists = read_instance(instance_path)
    except (InstanceFormatError, OSError) as exc:
        _fail(str(exc))
    report = validate(hg)
    if not report.valid:
        _fail("invalid instance: " + "; ".join(report.messages()))
    if need_lists and lists is None:
        _fail("instance has no vertex_lists/edge_lists")
    return hg, lists


def _emit(obj, out: str | None) -> None:
    text = dump_json(obj)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _record_finding(findings: str, payload: dict) -> None:
    with open(findings, "a") as fh:
        fh.write(json.dumps(payload, sort_keys=True) + "\n")


format_option = click.option(
    "--format", "fmt", default="json", show_default=True,
    type=click.Choice(["json"]), help="Output format."
)


@click.group()
def main():
    """Exact total weightings of hypergraphs from candidate lists."""


@main.command()
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", default=MODE_PAIR_DISTINCT, show_default=True, type=click.Choice(MODES))
@click.option("--method", default="backtrack", show_default=True,
              type=click.Choice(["backtrack", "cn"]))
@click.option("--out", type=click.Path(dir_okay=False), help="Write the weighting here.")
@click.option("--findings", default="critical_findings.jsonl", show_default=True,
              type=click.Path(dir_okay=False))
@format_option
def solve(instance, mode, method, out, findings, fmt):
    """Find a weighting from the instance's lists."""
    hg, lists = _load(instance, need_lists=True)
    try:
        if method == "cn":
            if mode != MODE_PAIR_DISTINCT:
                _fail("method=cn only supports pair-distinct mode")
            weighting, _ = solve_cn(hg, lists)
        else:
            weighting = solve_backtracking(hg, lists, mode)
    except (ListFormatError, ValueError) as exc:
        _fail(str(exc))
    except WitnessNotFoundError as exc:
        payload = {"kind": "witness-missing", "detail": str(exc), "instance": instance_to_obj(hg, lists)}
        if exc.critical:
            _record_finding(findings, payload)
            _fail(f"CRITICAL: {exc}", code=2)
        _fail(str(exc), code=4)
    if weighting is None:
        payload = {
            "kind": "solver-none",
            "detail": "backtracking exhausted the lists without a weighting",
            "instance": instance_to_obj(hg, lists),
            "mode": mode,
        }
        if mode == MODE_PAIR_DISTINCT:
            _record_finding(findings, payload)
            _fail("CRITICAL: no weighting exists from these lists", code=2)
        _fail("no weighting found", code=2)
    _emit(weighting_to_obj(weighting), out)


@main.command("verify")
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.argument("weights", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", default=MODE_PAIR_DISTINCT, show_default=True, type=click.Choice(MODES))
@format_option
def verify_cmd(instance, weights, mode, fmt):
    """Check a weighting file against an instance."""
    hg, lists = _load(instance, need_lists=False)
    try:
        omega = read_weighting(weights)
        report = verify(hg, omega, lists)
    except (InstanceFormatError, ValueError) as exc:
        _fail(str(exc))
    obj = {
        "totals": [format_rational(t) for t in report.totals],
        "pair_violations": list(report.pair_violations),
        "monochromatic_edges": list(report.monochromatic_edges),
        "membership_violations": [list(v) for v in report.membership_violations],
        "pair_distinct_ok": report.pair_distinct_ok,
        "proper_ok": report.proper_ok,
        "lists_ok": report.lists_ok,
    }
    _emit(obj, None)
    if not report.ok(mode):
        sys.exit(2)


def _witness_obj(hg: Hypergraph, result: WitnessResult, reduction_info) -> dict:
    A = build_matrix(hg, result.variant)
    steps = []
    for step in result.trace:
        steps.append(
            {
                "vertex": step.vertex,
                "degree": step.degree,
                "per_before": str(step.per_before),
                "per_lift": str(step.per_lift),
                "lift_ok": step.lift_ok,
                "switches": [
                    {
                        "edge": A.column_label(s.edge),
                        "removed": A.column_label(s.removed_column),
                        "added": A.column_label(s.added_column),
                        "per_before": str(s.per_before),
                        "per_after": str(s.per_after),
                    }
                    for s in step.switches
                ],
                "assignments": [
                    {
                        "edge": A.column_label(a.edge),
                        "vertex_option": A.column_label(a.vertex_column),
                        "vertex_option_per": str(a.vertex_option_per),
                        "edge_option_per": str(a.edge_option_per),
                        "chosen": A.column_label(a.chosen_column),
                    }
                    for a in step.assigns
                ],
                "fallback": step.fallback,
                "per_after": str(step.per_after),
            }
        )
    obj = {
        "variant": result.variant,
        "columns": list(result.columns.labels(A)),
        "permanent": str(result.permanent),
        "used_fallback": result.used_fallback,
        "discrepancies": [
            {"stage": d.stage, "vertex": d.vertex, "edge": d.edge, "message": d.message}
            for d in result.discrepancies
        ],
        "steps": steps,
    }
    if reduction_info:
        obj["reduction"] = reduction_info
    return obj


@main.command()
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--variant", default="jacobian", show_default=True,
              type=click.Choice(_VARIANT_CHOICES))
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--findings", default="critical_findings.jsonl", show_default=True,
              type=click.Path(dir_okay=False))
@format_option
def witness(instance, variant, out, findings, fmt):
    """Build a nonzero-permanent column multiset and emit its trace."""
    hg, lists = _load(instance, need_lists=False)
    from .generate import constant_list_assignment

    reduction_info = None
    working = hg
    reduced, _, log = reduce_duplicate_pairs(hg, lists or constant_list_assignment(hg))
    if log.records:
        working = reduced
        reduction_info = {
            "removed_edges": [r.edge for r in log.records],
            "kept_edges": list(log.kept_edges),
        }
    try:
        result = build_witness(working, variant)
    except WitnessNotFoundError as exc:
        if exc.critical:
            _record_finding(
                findings,
                {"kind": "witness-missing", "detail": str(exc), "instance": instance_to_obj(working)},
            )
        _fail(str(exc), code=4)
    except ValueError as exc:
        _fail(str(exc))
    _emit(_witness_obj(working, result, reduction_info), out)
    if result.used_fallback:
        sys.exit(3)


def _parse_monomial(hg: Hypergraph, text: str) -> MonomialIndex:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"--monomial is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValueError('--monomial must be an object like {"v0": 1, "e1": 2}')
    degrees = [0] * (hg.m + hg.n)
    pos = hg.position
    for label, degree in raw.items():
        if not isinstance(degree, int) or degree < 0:
            raise ValueError(f"degree for {label!r} must be a nonnegative integer")
        if not isinstance(label, str) or len(label) < 2 or label[0] not in "ev":
            raise ValueError(f"bad column label {label!r} (want e<j> or v<i>)")
        try:
            ident = int(label[1:])
        except ValueError:
            raise ValueError(f"bad column label {label!r}") from None
        if label[0] == "e":
            if not 0 <= ident < hg.m:
                raise ValueError(f"no such edge column: {label}")
            degrees[ident] = degree
        else:
            if ident not in pos:
                raise ValueError(f"no such vertex column: {label}")
            degrees[hg.m + pos[ident]] = degree
    return MonomialIndex(tuple(degrees), hg.m)


@main.command()
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--monomial", help='JSON object of column degrees, e.g. {"v0": 1}.')
@click.option("--all-bvalid", is_flag=True, help="Check every valid degree-m monomial.")
@click.option("--variant", default="both", show_default=True,
              type=click.Choice(_VARIANT_CHOICES + ("both",)))
@format_option
def coeff(instance, monomial, all_bvalid, variant, fmt):
    """Extract monomial coefficients by expansion, permanent, interpolation."""
    hg, _ = _load(instance, need_lists=False)
    if bool(monomial) == all_bvalid:
        _fail("give exactly one of --monomial or --all-bvalid")
    variants = ("jacobian", "incidence") if variant == "both" else (normalize_variant(variant),)
    expandable = hg.m <= EXPAND_MAX_EDGES and hg.m + hg.n <= EXPAND_MAX_VARIABLES
    expansion = expand_phi(hg) if expandable else None
    matrices = {v: build_matrix(hg, v) for v in variants}
    try:
        monomials = (
            list(b_valid_monomials(hg)) if all_bvalid else [_parse_monomial(hg, monomial)]
        )
    except ValueError as exc:
        _fail(str(exc))
    labeler = matrices[variants[0]]
    rows = []
    for t in monomials:
        entry: dict = {
            "monomial": [
                label
                for col, d in enumerate(t.degrees)
                for label in [labeler.column_label(col)] * d
            ],
        }
        if expansion is not None:
            entry["expand"] = format_rational(expansion.get(t.degrees, 0))
        try:
            entry["interpolation"] = format_rational(coefficient_interpolation(hg, t))
        except ValueError as exc:
            entry["interpolation_error"] = str(exc)
        for v in variants:
            entry[f"permanent_bridge_{v}"] = format_rational(
                coefficient_from_permanent(matrices[v], t)
            )
        if expansion is not None:
            for v in variants:
                entry[f"bridge_{v}_matches_expand"] = (
                    entry[f"permanent_bridge_{v}"] == entry["expand"]
                )
        rows.append(entry)
    _emit({"m": hg.m, "n": hg.n, "monomials": rows, "expand_available": expandable}, None)


@main.command("identity-check")
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--variant", default="both", show_default=True,
              type=click.Choice(_VARIANT_CHOICES + ("both",)))
@format_option
def identity_check(instance, variant, fmt):
    """Catalog rows where column(e) != column(u_e) - column(v_e)."""
    hg, _ = _load(instance, need_lists=False)
    variants = ("jacobian", "incidence") if variant == "both" else (normalize_variant(variant),)
    obj = {}
    for v in variants:
        violations = check_column_identity(hg, v)
        obj[v] = {
            "violations": [
                {"edge": f"e{x.edge}", "row": f"e{x.row}", "lhs": x.lhs, "rhs": x.rhs}
                for x in violations
            ],
            "count": len(violations),
        }
    _emit(obj, None)


@main.command()
@click.option("--n-max", required=True, type=int)
@click.option("--m-max", required=True, type=int)
@click.option("--size-min", default=2, show_default=True, type=int)
@click.option("--size-max", default=4, show_default=True, type=int)
@click.option("--trials", default=10, show_default=True, type=int)
@click.option("--seed", required=True, type=int, help="Mandatory for reproducibility.")
@click.option("--lists", default="random-rational", show_default=True,
              type=click.Choice(LIST_MODES))
@click.option("--variant", default="both", show_default=True,
              type=click.Choice(_VARIANT_CHOICES + ("both",)))
@click.option("--mode", default=MODE_PAIR_DISTINCT, show_default=True, type=click.Choice(MODES))
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--findings", default="critical_findings.jsonl", show_default=True,
              type=click.Path(dir_okay=False))
@format_option
def sweep(n_max, m_max, size_min, size_max, trials, seed, lists, variant, mode, out, findings, fmt):
    """Enumerate instances, solve and audit each, aggregate a report."""
    variants = ("jacobian", "incidence") if variant == "both" else (normalize_variant(variant),)
    config = SweepConfig(
        n_max=n_max, m_max=m_max, size_min=size_min, size_max=size_max,
        trials=trials, seed=seed, lists=lists, variants=variants, mode=mode,
    )
    try:
        config.check()
    except ValueError as exc:
        _fail(str(exc))
    report = run_sweep(config)
    _emit(report, out)
    if report["critical_findings"]:
        for finding in report["critical_findings"]:
            _record_finding(findings, finding)
        click.echo(
            f"CRITICAL: {len(report['critical_findings'])} finding(s) recorded in {findings}",
            err=True,
        )
        sys.exit(2)


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--m", required=True, type=int)
@click.option("--size-min", default=2, show_default=True, type=int)
@click.option("--size-max", default=3, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--lists", default="random-rational", show_default=True,
              type=click.Choice(LIST_MODES + ("none",)))
@click.option("--out", type=click.Path(dir_okay=False))
@format_option
def gen(n, m, size_min, size_max, seed, lists, out, fmt):
    """Generate a seeded random instance."""
    try:
        hg = random_hypergraph(n, m, (size_min, size_max), seed)
    except ValueError as exc:
        _fail(str(exc))
    assignment = None
    if lists != "none":
        assignment = make_list_assignment(hg, lists, random.Random(f"{seed}:lists"))
    _emit(instance_to_obj(hg, assignment), out)


if __name__ == "__main__":
    main()
