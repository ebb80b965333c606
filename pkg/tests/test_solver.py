import random
from fractions import Fraction

import pytest

from hyperweight import (
    Hypergraph,
    ListAssignment,
    TotalWeighting,
    build_witness,
    enumerate_hypergraphs,
    solve_backtracking,
    solve_cn,
    solve_cn_guided,
    total_weights,
    verify,
)
from hyperweight.coeffmatrix import ColumnMultiset
from hyperweight.generate import random_list_assignment
from hyperweight.weighting import ListFormatError

TRIANGLE = Hypergraph.from_edges(3, [[0, 1, 2]])
PATH = Hypergraph.from_edges(3, [[0, 1], [1, 2]])


def simple_lists(hg):
    return ListAssignment(((0, 1),) * hg.n, ((0, 1, 2),) * hg.m)


def test_total_weights_no_edges():
    hg = Hypergraph.from_edges(1, [])
    assert total_weights(hg, TotalWeighting((5,), ())) == (5,)


def test_total_weights_single_edge():
    w = TotalWeighting((1, 0, 0), (2,))
    assert total_weights(TRIANGLE, w) == (3, 2, 2)


def test_total_weights_path():
    w = TotalWeighting((0, 1, 0), (0, 0))
    assert total_weights(PATH, w) == (0, 1, 0)


def test_verify_path_clean():
    report = verify(PATH, TotalWeighting((0, 1, 0), (0, 0)))
    assert report.pair_distinct_ok and report.proper_ok


def test_verify_monochromatic_and_pair_violation():
    report = verify(TRIANGLE, TotalWeighting((1, 1, 1), (0,)))
    assert report.monochromatic_edges == (0,)
    assert report.pair_violations == (0,)


def test_verify_pair_distinct_but_outer_vertices_equal():
    # Totals (0, 1, 0): the pair (first two vertices) differs, so the edge
    # is not monochromatic even though two of its members tie.
    report = verify(TRIANGLE, TotalWeighting((0, 1, 0), (0,)))
    assert report.pair_distinct_ok
    assert report.proper_ok


def test_verify_reports_membership():
    lists = simple_lists(TRIANGLE)
    report = verify(TRIANGLE, TotalWeighting((9, 1, 0), (0,)), lists)
    assert report.membership_violations == (("v", 0),)
    assert not report.ok()


def test_solve_single_edge():
    lists = simple_lists(TRIANGLE)
    w = solve_backtracking(TRIANGLE, lists)
    assert w == TotalWeighting((0, 1, 0), (0,))
    assert verify(TRIANGLE, w, lists).ok()


def test_solve_path():
    lists = simple_lists(PATH)
    w = solve_backtracking(PATH, lists)
    assert w is not None
    assert verify(PATH, w, lists).ok()
    # The example weighting also works, whether or not the solver picks it.
    assert verify(PATH, TotalWeighting((0, 1, 0), (0, 0)), lists).ok()


def test_solve_constant_lists():
    for hg in [TRIANGLE, PATH, Hypergraph.from_edges(4, [[0, 1, 2, 3], [1, 3]])]:
        lists = ListAssignment(((1, 2),) * hg.n, ((1, 2, 3),) * hg.m)
        w = solve_backtracking(hg, lists)
        assert w is not None
        assert verify(hg, w, lists).ok()


def test_solve_deterministic():
    rng = random.Random(1)
    for hg in [PATH, TRIANGLE]:
        lists = random_list_assignment(hg, rng)
        assert solve_backtracking(hg, lists) == solve_backtracking(hg, lists)


def test_solve_rejects_malformed_lists():
    bad = ListAssignment(((0, 0),) * 3, ((0, 1, 2),))
    with pytest.raises(ListFormatError):
        solve_backtracking(TRIANGLE, bad)
    short = ListAssignment(((0, 1),) * 3, ((0, 1),))
    with pytest.raises(ListFormatError):
        solve_backtracking(TRIANGLE, short)


def test_solve_rejects_invalid_hypergraph():
    hg = Hypergraph.from_edges(2, [[0]])
    with pytest.raises(ValueError):
        solve_backtracking(hg, ListAssignment(((0, 1), (0, 1)), ((0, 1, 2),)))


def test_solve_proper_only_mode():
    lists = simple_lists(TRIANGLE)
    w = solve_backtracking(TRIANGLE, lists, mode="proper-only")
    assert w is not None
    assert verify(TRIANGLE, w, lists).ok("proper-only")


def test_solve_proper_only_with_duplicate_pairs():
    hg = Hypergraph.from_edges(4, [[0, 1, 2], [0, 1, 3]])
    lists = simple_lists(hg)
    w = solve_backtracking(hg, lists, mode="proper-only")
    assert w is not None
    assert verify(hg, w, lists).ok("proper-only")


def test_solve_applies_reduction_internally():
    hg = Hypergraph.from_edges(4, [[0, 1, 2], [0, 1, 3]])
    lists = ListAssignment(((0, 1),) * 4, ((0, 1, 2), (5, 6, 7)))
    w = solve_backtracking(hg, lists)
    assert w is not None
    report = verify(hg, w, lists)
    assert report.ok()
    assert report.lists_ok


def test_cn_guided_single_edge():
    lists = simple_lists(TRIANGLE)
    witness = build_witness(TRIANGLE, "jacobian").columns
    w = solve_cn_guided(TRIANGLE, lists, witness)
    assert verify(TRIANGLE, w, lists).ok()


def test_cn_guided_path_subgrid():
    lists = simple_lists(PATH)
    witness = build_witness(PATH, "jacobian").columns
    w = solve_cn_guided(PATH, lists, witness)
    assert verify(PATH, w, lists).ok()


def test_cn_guided_rejects_zero_coefficient_monomial():
    lists = simple_lists(TRIANGLE)
    # The edge column alone has permanent 0, hence coefficient 0.
    bogus = ColumnMultiset.from_columns([0], 1, 3)
    with pytest.raises(ValueError, match="zero coefficient"):
        solve_cn_guided(TRIANGLE, lists, bogus)


def test_cn_guided_rejects_wrong_size():
    lists = simple_lists(PATH)
    small = ColumnMultiset.from_columns([2], 2, 3)
    with pytest.raises(ValueError, match="multiset"):
        solve_cn_guided(PATH, lists, small)


def test_cn_pipeline_with_duplicate_pairs():
    hg = Hypergraph.from_edges(4, [[0, 1, 2], [0, 1, 3]])
    lists = ListAssignment(((0, 1),) * 4, ((0, 1, 2), (5, 6, 7)))
    w, witness_result = solve_cn(hg, lists)
    assert verify(hg, w, lists).ok()
    assert witness_result.permanent != 0


def test_cn_agreement_with_backtracking():
    rng = random.Random(23)
    for hg in enumerate_hypergraphs(4, 2, (2, 4)):
        lists = random_list_assignment(hg, rng)
        w, _ = solve_cn(hg, lists)
        assert verify(hg, w, lists).ok()
        assert solve_backtracking(hg, lists) is not None


def test_global_vertex_shift_preserves_outcomes():
    # Adding the same constant to every vertex list shifts every total by
    # that constant, so pair outcomes and solvability are unchanged.
    rng = random.Random(31)
    shift = Fraction(7, 3)
    for hg in [PATH, TRIANGLE, Hypergraph.from_edges(4, [[0, 1, 2], [2, 3]])]:
        lists = random_list_assignment(hg, rng)
        shifted = ListAssignment(
            tuple(tuple(x + shift for x in vs) for vs in lists.vertex_lists),
            lists.edge_lists,
        )
        w = solve_backtracking(hg, lists)
        assert w is not None
        moved = TotalWeighting(
            tuple(x + shift for x in w.vertex_weights), w.edge_weights
        )
        assert verify(hg, moved, shifted).ok()
        w2 = solve_backtracking(hg, shifted)
        assert w2 is not None
        back = TotalWeighting(
            tuple(x - shift for x in w2.vertex_weights), w2.edge_weights
        )
        assert verify(hg, back, lists).ok()


def test_solver_soundness_random_instances():
    rng = random.Random(8)
    for hg in enumerate_hypergraphs(4, 3, (2, 3)):
        lists = random_list_assignment(hg, rng)
        w = solve_backtracking(hg, lists)
        assert w is not None
        report = verify(hg, w, lists)
        assert report.ok() and report.lists_ok
