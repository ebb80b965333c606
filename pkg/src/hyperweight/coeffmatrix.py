"""The edge/vertex coefficient matrix, column multisets, and three
independent ways to read off monomial coefficients of the pair polynomial.

The pair polynomial phi is the product, over all edges, of the difference
of the induced totals of the edge's two order-first vertices. It is
homogeneous of degree m in the m+n weight variables (edge variables first,
then vertex variables, matching the matrix's column order).

Two matrix variants are built:

- ``jacobian``: row e is the exact gradient of e's factor of phi, so the
  permanent of any m-column multiset, divided by the product of column
  multiplicity factorials, equals the corresponding coefficient of phi.
- ``incidence``: vertex columns are plain membership indicators (1 when the
  vertex lies in the edge). On hyperedges of size >= 3 this is NOT the
  gradient, and its permanent bridge can disagree with phi's coefficients;
  the package measures that disagreement instead of hiding it.

Edge columns are identical in both variants: +1/-1 when the edge variable
appears in the factor with that sign, 0 otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterable, Mapping, Sequence

from .hypergraph import Hypergraph, EdgePair, edge_pairs, validate
from .matrices import IntMatrix
from .permanent import permanent
from .rationals import Rat
from .weighting import TotalWeighting, total_weights

VARIANT_JACOBIAN = "jacobian"
VARIANT_INCIDENCE = "incidence"
VARIANTS = (VARIANT_JACOBIAN, VARIANT_INCIDENCE)

EXPAND_MAX_EDGES = 6
EXPAND_MAX_VARIABLES = 12


def normalize_variant(name: str) -> str:
    """Accept the public tags plus "paper" as an alias for "incidence"."""
    tag = name.strip().lower()
    if tag == "paper":
        return VARIANT_INCIDENCE
    if tag in VARIANTS:
        return tag
    raise ValueError(f"unknown variant {name!r}; expected jacobian, incidence, or paper")


@dataclass(frozen=True)
class CoeffMatrix:
    """m x (m+n) coefficient matrix: edge columns first, then vertex columns."""

    variant: str
    matrix: IntMatrix
    hypergraph: Hypergraph
    pairs: tuple[EdgePair, ...]

    @property
    def m(self) -> int:
        return self.hypergraph.m

    @property
    def n(self) -> int:
        return self.hypergraph.n

    def column_label(self, col: int) -> str:
        if col < self.m:
            return f"e{col}"
        return f"v{self.hypergraph.vertices[col - self.m]}"

    def column_of_vertex(self, v: int) -> int:
        return self.m + self.hypergraph.position[v]

    def column_of_edge(self, e: int) -> int:
        if not 0 <= e < self.m:
            raise IndexError(f"edge index out of range: {e}")
        return e


def _edge_column_entry(pair: EdgePair, other_edge: tuple[int, ...]) -> int:
    has_u = pair.u in other_edge
    has_v = pair.v in other_edge
    if has_u and not has_v:
        return 1
    if has_v and not has_u:
        return -1
    return 0


def build_matrix(hg: Hypergraph, variant: str) -> CoeffMatrix:
    """Construct the coefficient matrix for a valid hypergraph."""
    variant = normalize_variant(variant)
    report = validate(hg)
    if not report.valid:
        raise ValueError(f"invalid hypergraph: {'; '.join(report.messages())}")
    pairs = edge_pairs(hg)
    rows = []
    for pair in pairs:
        row = [_edge_column_entry(pair, other) for other in hg.edges]
        if variant == VARIANT_INCIDENCE:
            edge = hg.edges[pair.edge]
            row.extend(1 if w in edge else 0 for w in hg.vertices)
        else:
            row.extend(1 if w == pair.u else -1 if w == pair.v else 0 for w in hg.vertices)
        rows.append(row)
    matrix = IntMatrix.from_rows(rows, ncols=hg.m + hg.n)
    return CoeffMatrix(variant, matrix, hg, pairs)


@dataclass(frozen=True)
class ColumnMultiset:
    """A multiset of matrix columns with multiplicity bookkeeping.

    Validity for witness purposes: each vertex column at most once, each
    edge column at most twice, total size equal to the number of edges.
    """

    items: tuple[tuple[int, int], ...]  # (column index, multiplicity), ascending
    m: int
    n: int

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], m: int, n: int) -> "ColumnMultiset":
        items = tuple(sorted((c, k) for c, k in counts.items() if k > 0))
        for col, mult in items:
            if not 0 <= col < m + n:
                raise ValueError(f"column index out of range: {col}")
            if mult < 0:
                raise ValueError(f"negative multiplicity for column {col}")
        return cls(items, m, n)

    @classmethod
    def from_columns(cls, columns: Iterable[int], m: int, n: int) -> "ColumnMultiset":
        counts: dict[int, int] = {}
        for col in columns:
            counts[col] = counts.get(col, 0) + 1
        return cls.from_counts(counts, m, n)

    @property
    def size(self) -> int:
        return sum(k for _, k in self.items)

    def counts(self) -> dict[int, int]:
        return dict(self.items)

    def multiplicity(self, col: int) -> int:
        return dict(self.items).get(col, 0)

    def is_b_valid(self) -> bool:
        """Vertex columns at most once, edge columns at most twice."""
        return all(k <= (2 if col < self.m else 1) for col, k in self.items)

    def degrees(self) -> tuple[int, ...]:
        out = [0] * (self.m + self.n)
        for col, mult in self.items:
            out[col] = mult
        return tuple(out)

    def as_monomial(self) -> "MonomialIndex":
        return MonomialIndex(self.degrees(), self.m)

    def labels(self, A: CoeffMatrix | None = None) -> tuple[str, ...]:
        def label(col: int) -> str:
            if A is not None:
                return A.column_label(col)
            return f"e{col}" if col < self.m else f"v{col - self.m}"

        out: list[str] = []
        for col, mult in self.items:
            out.extend([label(col)] * mult)
        return tuple(out)


@dataclass(frozen=True)
class MonomialIndex:
    """Exponent vector over the m+n weight variables (edges first)."""

    degrees: tuple[int, ...]
    m: int

    @property
    def n(self) -> int:
        return len(self.degrees) - self.m

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def is_cn_admissible(self) -> bool:
        """Vertex degrees at most 1, edge degrees at most 2."""
        return all(
            d <= (2 if col < self.m else 1) for col, d in enumerate(self.degrees)
        )


def _as_degrees(t: MonomialIndex | Sequence[int], m: int, n: int) -> tuple[int, ...]:
    degrees = tuple(t.degrees) if isinstance(t, MonomialIndex) else tuple(t)
    if len(degrees) != m + n:
        raise ValueError(f"monomial has {len(degrees)} degrees, expected {m + n}")
    if any(d < 0 for d in degrees):
        raise ValueError("negative degree in monomial")
    return degrees


def evaluate_phi(hg: Hypergraph, omega: TotalWeighting) -> Rat:
    """Product over edges of the pair totals' difference; empty product is 1."""
    totals = total_weights(hg, omega)
    pos = hg.position
    value: Rat = 1
    for pair in edge_pairs(hg):
        value *= totals[pos[pair.u]] - totals[pos[pair.v]]
        if value == 0:
            return 0
    return value


def _phi_at_vector(hg: Hypergraph, x: Sequence[Rat]) -> Rat:
    omega = TotalWeighting(tuple(x[hg.m :]), tuple(x[: hg.m]))
    return evaluate_phi(hg, omega)


def _pair_gradient(hg: Hypergraph, pair: EdgePair) -> list[tuple[int, int]]:
    """Nonzero (variable, coefficient) entries of one factor of phi."""
    entries: list[tuple[int, int]] = []
    for j, other in enumerate(hg.edges):
        coeff = _edge_column_entry(pair, other)
        if coeff:
            entries.append((j, coeff))
    entries.append((hg.m + hg.position[pair.u], 1))
    entries.append((hg.m + hg.position[pair.v], -1))
    return entries


def expand_phi(hg: Hypergraph) -> dict[tuple[int, ...], int]:
    """Brute-force expansion of phi as exponent-tuple -> integer coefficient.

    Desk-scale oracle only; guarded to m <= 6 and m+n <= 12.
    """
    if hg.m > EXPAND_MAX_EDGES or hg.m + hg.n > EXPAND_MAX_VARIABLES:
        raise ValueError(
            f"expand_phi guard: m={hg.m}, variables={hg.m + hg.n} "
            f"(limits {EXPAND_MAX_EDGES} and {EXPAND_MAX_VARIABLES})"
        )
    nvars = hg.m + hg.n
    poly: dict[tuple[int, ...], int] = {(0,) * nvars: 1}
    for pair in edge_pairs(hg):
        factor = _pair_gradient(hg, pair)
        updated: dict[tuple[int, ...], int] = {}
        for expo, coeff in poly.items():
            for var, a in factor:
                bumped = expo[:var] + (expo[var] + 1,) + expo[var + 1 :]
                updated[bumped] = updated.get(bumped, 0) + coeff * a
        poly = {expo: c for expo, c in updated.items() if c != 0}
    return poly


def assemble(A: CoeffMatrix, t: MonomialIndex | Sequence[int]) -> IntMatrix:
    """Square matrix with degree-many copies of each selected column."""
    degrees = _as_degrees(t, A.m, A.n)
    total = sum(degrees)
    if total != A.m:
        raise ValueError(f"monomial degree {total} != edge count {A.m}")
    columns = []
    for col, mult in enumerate(degrees):
        if mult:
            columns.extend([A.matrix.column(col)] * mult)
    rows = [[columns[j][i] for j in range(total)] for i in range(A.m)]
    return IntMatrix.from_rows(rows, ncols=total)


def coefficient_from_permanent(A: CoeffMatrix, t: MonomialIndex | Sequence[int]) -> Fraction:
    """Permanent of the assembled columns over the multiplicity factorials.

    For the jacobian variant this equals phi's coefficient exactly; for the
    incidence variant agreement is an empirical question that the sweep
    quantifies.
    """
    degrees = _as_degrees(t, A.m, A.n)
    per = permanent(assemble(A, degrees))
    norm = 1
    for d in degrees:
        norm *= math.factorial(d)
    return Fraction(per, norm)


def coefficient_interpolation(
    hg: Hypergraph,
    t: MonomialIndex | Sequence[int],
    grids: Sequence[Sequence[Rat]] | None = None,
) -> Fraction:
    """Coefficient of the degree-m monomial x^t via finite-grid evaluation.

    Sums phi(x) / prod_z N'_z(x_z) over the grid, where N_z is the monic
    polynomial vanishing on variable z's grid. Requires one more grid value
    than the degree of each variable, all distinct. Degrees are capped at 1
    for vertices and 2 for edges (the only shapes this package uses, and
    what the canonical {0,1} / {0,1,2} grids cover).
    """
    degrees = _as_degrees(t, hg.m, hg.n)
    if sum(degrees) != hg.m:
        raise ValueError(f"monomial degree {sum(degrees)} != edge count {hg.m}")
    for col, d in enumerate(degrees):
        cap = 2 if col < hg.m else 1
        if d > cap:
            kind = "edge" if col < hg.m else "vertex"
            raise ValueError(f"{kind} variable degree {d} exceeds supported degree {cap}")
    nvars = hg.m + hg.n
    if grids is None:
        grids = [tuple(range(d + 1)) for d in degrees]
    else:
        grids = [tuple(g) for g in grids]
        if len(grids) != nvars:
            raise ValueError(f"expected {nvars} grids, got {len(grids)}")
        for z, grid in enumerate(grids):
            if len(grid) != degrees[z] + 1:
                raise ValueError(
                    f"variable {z}: grid size {len(grid)} != degree+1 = {degrees[z] + 1}"
                )
            if len(set(grid)) != len(grid):
                raise ValueError(f"variable {z}: duplicate grid values {grid}")
    # N'_z(a) = prod over other grid points b of (a - b)
    weights: list[dict[Rat, Fraction]] = []
    for grid in grids:
        table: dict[Rat, Fraction] = {}
        for a in grid:
            denom: Rat = 1
            for b in grid:
                if b != a:
                    denom *= a - b
            table[a] = Fraction(1, 1) / denom
        weights.append(table)
    total = Fraction(0)
    for point in product(*grids):
        value = _phi_at_vector(hg, point)
        if value == 0:
            continue
        factor = Fraction(value)
        for z, a in enumerate(point):
            factor *= weights[z][a]
        total += factor
    return total


def b_valid_monomials(hg: Hypergraph) -> Iterable[MonomialIndex]:
    """All degree-m monomials with vertex degrees <= 1 and edge degrees <= 2."""
    nvars = hg.m + hg.n
    for combo in combinations_with_replacement(range(nvars), hg.m):
        degrees = [0] * nvars
        ok = True
        for col in combo:
            degrees[col] += 1
            if degrees[col] > (2 if col < hg.m else 1):
                ok = False
                break
        if ok:
            yield MonomialIndex(tuple(degrees), hg.m)
