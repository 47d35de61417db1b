"""Uniform hypergraphs, their adjacency tensors, and the two products.

Product adjacency identities are exact rational statements:
  adjacency(G box H) = A (x) I + I (x) B
  adjacency(G cross H) = (k-1)! * (A (x) B)
Both sides are built by unrelated code paths (edge enumeration on the
left, tensor algebra on the right), so equality is a real check.
"""

import itertools
import math

import pytest

import tenprod as tp
from tenprod import (
    EigenPair,
    UniformHypergraph,
    adjacency_tensor,
    cartesian_sum_tensor,
    hypergraph_direct_product,
    kron_vector,
    rational,
    unit_tensor,
)
from tenprod.core import direct_product
from tenprod.errors import ShapeMismatch, UniformityMismatch
from tenprod.hypergraph import pair_vertex


TRIANGLE = UniformHypergraph(3, 3, ((1, 2, 3),))
H4 = UniformHypergraph(4, 3, ((1, 2, 3), (1, 2, 4), (2, 3, 4)))


class TestConstruction:
    def test_edges_sorted_and_deduped(self):
        g = UniformHypergraph(4, 3, ((3, 2, 1), (1, 2, 3), (2, 4, 3)))
        assert g.edges == ((1, 2, 3), (2, 3, 4))

    def test_wrong_edge_size(self):
        with pytest.raises(UniformityMismatch):
            UniformHypergraph(4, 3, ((1, 2),))

    def test_repeated_vertex_within_edge(self):
        with pytest.raises(UniformityMismatch):
            UniformHypergraph(4, 3, ((1, 1, 2),))

    def test_vertex_out_of_range(self):
        with pytest.raises(ShapeMismatch):
            UniformHypergraph(3, 3, ((1, 2, 4),))

    def test_k_must_be_at_least_two(self):
        with pytest.raises(UniformityMismatch):
            UniformHypergraph(3, 1, ((1,),))


class TestAdjacency:
    def test_entry_value_and_symmetry(self):
        a = adjacency_tensor(TRIANGLE)
        w = rational(1, 2)  # 1/(k-1)!
        for perm in itertools.permutations((1, 2, 3)):
            assert a.get(*perm) == w
        assert a.get(1, 1, 2) == 0
        assert tp.is_supersymmetric(a)

    def test_row_sums_are_degrees(self):
        a = adjacency_tensor(H4)
        for i in range(1, 5):
            deg = sum(1 for e in H4.edges if i in e)
            s = sum(a.get(i, j, k) for j in range(1, 5) for k in range(1, 5))
            assert s == deg

    def test_zero_on_diagonal_blocks(self):
        a = adjacency_tensor(H4)
        for i, j in itertools.product(range(1, 5), repeat=2):
            assert a.get(i, i, j) == 0
            assert a.get(i, j, j) == 0


class TestProducts:
    def test_pair_encoding(self):
        assert pair_vertex(1, 1, 4) == 1
        assert pair_vertex(2, 3, 4) == 7
        assert pair_vertex(3, 4, 4) == 12

    def test_cartesian_adjacency_identity(self):
        g, h = TRIANGLE, H4
        prod = tp.cartesian_product(g, h)
        assert prod.n == g.n * h.n
        lhs = adjacency_tensor(prod)
        a, b = adjacency_tensor(g), adjacency_tensor(h)
        rhs = cartesian_sum_tensor(a, b)
        assert lhs.entries == rhs.entries

    def test_cartesian_edge_count(self):
        g, h = TRIANGLE, H4
        prod = tp.cartesian_product(g, h)
        assert len(prod.edges) == len(g.edges) * h.n + len(h.edges) * g.n

    def test_direct_adjacency_identity(self):
        g, h = TRIANGLE, H4
        prod = hypergraph_direct_product(g, h)
        lhs = adjacency_tensor(prod)
        a, b = adjacency_tensor(g), adjacency_tensor(h)
        k = g.k
        rhs = tp.scalar_mul(math.factorial(k - 1), direct_product(a, b))
        assert lhs.entries == rhs.entries

    def test_cartesian_sum_tensor_shape(self):
        a = adjacency_tensor(TRIANGLE)
        s = cartesian_sum_tensor(a, a)
        assert s.order == 3 and s.dim == 9
        # unit blocks: a G-edge at fixed H-vertex 2 appears at offset +1
        e = unit_tensor(3, 3)
        manual = tp.add(direct_product(a, e), direct_product(e, a))
        assert s.entries == manual.entries

    def test_uniformity_must_match_across_factors(self):
        g2 = UniformHypergraph(3, 2, ((1, 2),))
        with pytest.raises(UniformityMismatch):
            tp.cartesian_product(g2, TRIANGLE)
        with pytest.raises(UniformityMismatch):
            hypergraph_direct_product(g2, TRIANGLE)


class TestEigenpairComposition:
    def test_kron_vector(self):
        assert kron_vector((1, 2), (3, 4)) == (3, 4, 6, 8)

    def test_composed_pairs_verify(self):
        a = adjacency_tensor(TRIANGLE).to_float()
        b = adjacency_tensor(H4).to_float()
        ra = tp.power_method_rho(a)
        rb = tp.power_method_rho(b)
        pa = EigenPair(ra.rho, ra.vector)
        pb = EigenPair(rb.rho, rb.vector)
        sum_pair, prod_pair = tp.compose_product_eigenpairs(a, pa, b, pb)
        assert sum_pair.value == pytest.approx(ra.rho + rb.rho)
        assert prod_pair.value == pytest.approx(ra.rho * rb.rho)
        assert sum_pair.vector == kron_vector(pa.vector, pb.vector)

    def test_composition_rejects_bad_pair(self):
        a = adjacency_tensor(TRIANGLE).to_float()
        b = adjacency_tensor(H4).to_float()
        rb = tp.power_method_rho(b)
        bad = EigenPair(2.0, (1.0, 1.0, 1.0))
        with pytest.raises(Exception):
            tp.compose_product_eigenpairs(a, bad, b, EigenPair(rb.rho, rb.vector))
