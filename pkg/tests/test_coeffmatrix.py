import random
from fractions import Fraction

import pytest

from hyperweight import (
    Hypergraph,
    MonomialIndex,
    TotalWeighting,
    assemble,
    b_valid_monomials,
    build_matrix,
    coefficient_from_permanent,
    coefficient_interpolation,
    enumerate_hypergraphs,
    evaluate_phi,
    expand_phi,
    normalize_variant,
    permanent,
    total_weights,
)

TRIANGLE = Hypergraph.from_edges(3, [[0, 1, 2]])
PATH = Hypergraph.from_edges(3, [[0, 1], [1, 2]])


def test_variant_normalization():
    assert normalize_variant("paper") == "incidence"
    assert normalize_variant("JACOBIAN") == "jacobian"
    with pytest.raises(ValueError):
        normalize_variant("mystery")


def test_incidence_row_single_edge():
    A = build_matrix(TRIANGLE, "incidence")
    assert A.matrix.entries == ((0, 1, 1, 1),)


def test_jacobian_row_single_edge():
    A = build_matrix(TRIANGLE, "jacobian")
    assert A.matrix.entries == ((0, 1, -1, 0),)


def test_edge_column_on_path():
    # Row of edge {1,2}: its first vertex 1 lies in edge {0,1}, second does not.
    A = build_matrix(PATH, "jacobian")
    assert A.matrix.entry(1, 0) == 1
    B = build_matrix(PATH, "incidence")
    assert B.matrix.entry(1, 0) == 1


def test_variants_differ_only_in_vertex_columns():
    for hg in (PATH, TRIANGLE):
        A = build_matrix(hg, "jacobian")
        B = build_matrix(hg, "incidence")
        for row in range(hg.m):
            for col in range(hg.m):
                assert A.matrix.entry(row, col) == B.matrix.entry(row, col)


def test_two_uniform_vertex_columns_differ_by_sign_at_second_vertex():
    # On graphs the two variants share support; the sign flips exactly at
    # rows whose pair's second vertex is the column's vertex.
    hg = Hypergraph.from_edges(4, [[0, 1], [1, 2], [2, 3], [0, 3]])
    A = build_matrix(hg, "jacobian")
    B = build_matrix(hg, "incidence")
    from hyperweight import edge_pairs

    pairs = edge_pairs(hg)
    for row, pair in enumerate(pairs):
        for i, v in enumerate(hg.vertices):
            col = hg.m + i
            a, b = A.matrix.entry(row, col), B.matrix.entry(row, col)
            if v == pair.v:
                assert a == -b != 0
            else:
                assert a == b


def test_variants_differ_in_support_on_hyperedges():
    A = build_matrix(TRIANGLE, "jacobian")
    B = build_matrix(TRIANGLE, "incidence")
    col_v2 = 1 + 2  # vertex 2 column
    assert A.matrix.entry(0, col_v2) == 0
    assert B.matrix.entry(0, col_v2) == 1


def test_evaluate_phi_no_edges():
    hg = Hypergraph.from_edges(2, [])
    assert evaluate_phi(hg, TotalWeighting((5, 7), ())) == 1


def test_evaluate_phi_zero_on_equal_pair():
    w = TotalWeighting((3, 3, 1), (9,))
    assert evaluate_phi(TRIANGLE, w) == 0


def test_evaluate_phi_path_example():
    w = TotalWeighting((0, 1, 0), (0, 0))
    assert total_weights(PATH, w) == (0, 1, 0)
    assert evaluate_phi(PATH, w) == -1


def test_expand_phi_single_edge():
    poly = expand_phi(TRIANGLE)
    assert poly == {(0, 1, 0, 0): 1, (0, 0, 1, 0): -1}
    assert poly.get((0, 0, 0, 1), 0) == 0  # third vertex never appears


def test_expand_phi_no_edges():
    hg = Hypergraph.from_edges(2, [])
    assert expand_phi(hg) == {(0, 0): 1}


def test_expand_phi_path_coefficient():
    poly = expand_phi(PATH)
    # omega(v1) * omega(v2) over columns (e0, e1, v0, v1, v2)
    assert poly[(0, 0, 0, 1, 1)] == 1


def test_expand_phi_guard():
    hg = Hypergraph.from_edges(8, [[i, i + 1] for i in range(7)])
    with pytest.raises(ValueError):
        expand_phi(hg)


def test_expand_phi_matches_sympy():
    import sympy

    rng = random.Random(2)
    for hg in [PATH, TRIANGLE, Hypergraph.from_edges(4, [[0, 1, 2], [1, 2, 3], [0, 3]])]:
        nvars = hg.m + hg.n
        xs = sympy.symbols(f"x0:{nvars}")
        totals = []
        for i, v in enumerate(hg.vertices):
            t = xs[hg.m + i]
            for j, edge in enumerate(hg.edges):
                if v in edge:
                    t = t + xs[j]
            totals.append(t)
        phi = sympy.prod(
            totals[hg.position[e[0]]] - totals[hg.position[e[1]]] for e in hg.edges
        )
        expanded = sympy.Poly(sympy.expand(phi), *xs)
        ours = expand_phi(hg)
        theirs = {
            tuple(monom): int(coeff) for monom, coeff in expanded.terms()
        }
        assert ours == theirs


def test_coefficient_bridge_jacobian_single_edge():
    A = build_matrix(TRIANGLE, "jacobian")
    t = MonomialIndex((0, 1, 0, 0), 1)  # first vertex variable
    assert coefficient_from_permanent(A, t) == 1


def test_coefficient_bridge_discriminating_instance():
    # Coefficient of the third vertex's variable: truly 0, but the incidence
    # permanent bridge reports 1.
    t = MonomialIndex((0, 0, 0, 1), 1)
    jac = coefficient_from_permanent(build_matrix(TRIANGLE, "jacobian"), t)
    inc = coefficient_from_permanent(build_matrix(TRIANGLE, "incidence"), t)
    assert jac == 0
    assert inc == 1
    assert expand_phi(TRIANGLE).get(t.degrees, 0) == 0


def test_coefficient_bridge_path():
    A = build_matrix(PATH, "jacobian")
    t = MonomialIndex((0, 0, 0, 1, 1), 2)
    assert coefficient_from_permanent(A, t) == 1


def test_coefficient_bridge_rejects_wrong_degree():
    A = build_matrix(PATH, "jacobian")
    with pytest.raises(ValueError):
        coefficient_from_permanent(A, MonomialIndex((1, 0, 0, 0, 0), 2))


def test_assemble_divides_by_multiplicity_factorial():
    # An edge column used twice: the permanent double-counts the orderings.
    hg = Hypergraph.from_edges(4, [[0, 1], [1, 2], [2, 3]])
    A = build_matrix(hg, "jacobian")
    poly = expand_phi(hg)
    for t in b_valid_monomials(hg):
        assert coefficient_from_permanent(A, t) == poly.get(t.degrees, 0)


def test_assemble_order_insensitive():
    rng = random.Random(4)
    hg = Hypergraph.from_edges(4, [[0, 1, 2], [1, 2, 3], [0, 3]])
    A = build_matrix(hg, "jacobian")
    for t in list(b_valid_monomials(hg))[:20]:
        base = assemble(A, t)
        cols = [base.column(j) for j in range(base.ncols)]
        rng.shuffle(cols)
        shuffled = base
        for j, col in enumerate(cols):
            shuffled = shuffled.with_column(j, col)
        assert permanent(base) == permanent(shuffled)


def test_interpolation_single_edge():
    t = MonomialIndex((0, 1, 0, 0), 1)
    grids = [(0,), (0, 1), (0,), (0,)]
    assert coefficient_interpolation(TRIANGLE, t, grids) == 1
    # Canonical grids give the same value.
    assert coefficient_interpolation(TRIANGLE, t) == 1


def test_interpolation_rejects_vertex_degree_two():
    hg = Hypergraph.from_edges(2, [[0, 1], [0, 1]])
    t = MonomialIndex((0, 0, 2, 0), 2)
    with pytest.raises(ValueError):
        coefficient_interpolation(hg, t)


def test_interpolation_rejects_duplicate_grid_values():
    t = MonomialIndex((0, 1, 0, 0), 1)
    with pytest.raises(ValueError):
        coefficient_interpolation(TRIANGLE, t, [(0,), (1, 1), (0,), (0,)])


def test_interpolation_path():
    t = MonomialIndex((0, 0, 0, 1, 1), 2)
    assert coefficient_interpolation(PATH, t) == 1


def test_interpolation_with_rational_grids():
    t = MonomialIndex((0, 1, 0, 0), 1)
    grids = [
        (Fraction(1, 3),),
        (Fraction(-1, 2), Fraction(5, 7)),
        (Fraction(2),),
        (Fraction(0),),
    ]
    assert coefficient_interpolation(TRIANGLE, t, grids) == 1


def test_jacobian_rows_are_gradients():
    rng = random.Random(9)
    for hg in enumerate_hypergraphs(4, 2, (2, 4)):
        A = build_matrix(hg, "jacobian")
        from hyperweight import edge_pairs

        pairs = edge_pairs(hg)
        for _ in range(3):
            x = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(hg.m + hg.n)]
            w = TotalWeighting(tuple(x[hg.m:]), tuple(x[:hg.m]))
            totals = total_weights(hg, w)
            for row, pair in enumerate(pairs):
                dot = sum(
                    A.matrix.entry(row, col) * x[col] for col in range(hg.m + hg.n)
                )
                assert dot == totals[hg.position[pair.u]] - totals[hg.position[pair.v]]


def test_triple_agreement_small_slice():
    # The full stratum runs in the acceptance suite; spot-check here.
    for hg in enumerate_hypergraphs(3, 2, (2, 3)):
        A = build_matrix(hg, "jacobian")
        poly = expand_phi(hg)
        for t in b_valid_monomials(hg):
            expected = Fraction(poly.get(t.degrees, 0))
            assert coefficient_from_permanent(A, t) == expected
            assert coefficient_interpolation(hg, t) == expected
