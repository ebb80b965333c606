import pytest

from hyperweight import (
    Hypergraph,
    delete_first_vertex,
    edge_pair,
    edge_pairs,
    find_twins,
    validate,
)


def test_validate_accepts_single_triangle_edge():
    hg = Hypergraph.from_edges(3, [[0, 1, 2]])
    assert validate(hg).valid


def test_validate_rejects_size_one_edge():
    hg = Hypergraph.from_edges(1, [[0]])
    report = validate(hg)
    assert not report.valid
    assert [v.kind for v in report.violations] == ["edge-too-small"]
    assert "size 1" in report.violations[0].detail


def test_validate_rejects_out_of_range_vertex():
    hg = Hypergraph.from_edges(3, [[0, 5]])
    report = validate(hg)
    assert not report.valid
    assert report.violations[0].kind == "vertex-out-of-range"
    assert "out of range" in report.violations[0].detail


def test_validate_permits_repeated_edges():
    hg = Hypergraph.from_edges(3, [[0, 1], [0, 1]])
    assert validate(hg).valid


def test_edges_are_stored_sorted_by_order():
    hg = Hypergraph.from_edges(3, [[2, 0, 1]])
    assert hg.edges == ((0, 1, 2),)


def test_edge_pair_sorts_members():
    hg = Hypergraph.from_edges(3, [[2, 0, 1]])
    pair = edge_pair(hg, 0)
    assert (pair.u, pair.v) == (0, 1)


def test_edge_pair_two_vertex_edge():
    hg = Hypergraph.from_edges(3, [[1, 2]])
    pair = edge_pair(hg, 0)
    assert (pair.u, pair.v) == (1, 2)


def test_edge_pair_duplicate_pairs_across_edges():
    hg = Hypergraph.from_edges(4, [[0, 1, 2], [0, 1, 3]])
    pairs = edge_pairs(hg)
    assert (pairs[0].u, pairs[0].v) == (0, 1)
    assert (pairs[1].u, pairs[1].v) == (0, 1)


def test_edge_pair_index_out_of_range():
    hg = Hypergraph.from_edges(2, [[0, 1]])
    with pytest.raises(IndexError):
        edge_pair(hg, 1)


def test_edge_pair_respects_custom_vertex_order():
    hg = Hypergraph([2, 0, 1], [[0, 1, 2]])
    pair = edge_pair(hg, 0)
    assert (pair.u, pair.v) == (2, 0)


def test_delete_first_vertex_path():
    hg = Hypergraph.from_edges(3, [[0, 1], [1, 2]])
    u, k, rest = delete_first_vertex(hg)
    assert (u, k) == (0, 1)
    assert rest.edges == ((1, 2),)
    assert rest.vertices == (1, 2)


def test_delete_first_vertex_single_edge():
    hg = Hypergraph.from_edges(3, [[0, 1, 2]])
    u, k, rest = delete_first_vertex(hg)
    assert (u, k) == (0, 1)
    assert rest.edges == ()


def test_delete_first_vertex_isolated():
    hg = Hypergraph.from_edges(3, [[1, 2]])
    u, k, rest = delete_first_vertex(hg)
    assert (u, k) == (0, 0)
    assert rest.edges == ((1, 2),)


def test_delete_first_vertex_empty_raises():
    with pytest.raises(ValueError):
        delete_first_vertex(Hypergraph.from_edges(0, []))


def test_delete_first_vertex_preserves_pairs():
    # Surviving edges keep their members, hence their pairs.
    hg = Hypergraph.from_edges(5, [[0, 1], [1, 2, 3], [2, 4], [1, 4]])
    original = {tuple(hg.edges[p.edge]): (p.u, p.v) for p in edge_pairs(hg)}
    u, _, rest = delete_first_vertex(hg)
    for p in edge_pairs(rest):
        assert original[tuple(rest.edges[p.edge])] == (p.u, p.v)


def test_find_twins_single_edge():
    hg = Hypergraph.from_edges(3, [[0, 1, 2]])
    assert find_twins(hg) == ((0, 1, 2),)


def test_find_twins_path():
    hg = Hypergraph.from_edges(3, [[0, 1], [1, 2]])
    assert find_twins(hg) == ((0,), (1,), (2,))


def test_find_twins_shared_pair():
    hg = Hypergraph.from_edges(4, [[0, 1, 2], [0, 1, 3]])
    assert find_twins(hg) == ((0, 1), (2,), (3,))
