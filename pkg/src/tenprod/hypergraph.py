"""Uniform hypergraphs, their adjacency tensors, and the two products whose
adjacency algebra mirrors the tensor operations.

input:  k-uniform hypergraphs on 1-based vertex sets
conventions:
    adjacency entry 1/(k-1)! at every permutation of each edge, so row
    slice sums equal vertex degrees; supersymmetric, zero diagonal.
    product vertex (i, j) is encoded as (i-1)*m + j for second factor on
    m vertices, matching the index pairing of the tensor direct product.

identities (checked by the test suite, exact arithmetic):
    adjacency(G box H)    = A (x) I_m + I_n (x) B
    adjacency(G cross H)  = (k-1)! * (A (x) B)
and eigenpair composition (lambda+mu, u(x)v), (lambda*mu, u(x)v) for the
respective right-hand sides.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from gmpy2 import mpq

from .core import DenseTensor, add, unit_tensor
from .core import direct_product as direct_product_tensor
from .errors import (
    DimensionMismatch,
    EigenpairResidualTooLarge,
    OrderMismatch,
    ShapeMismatch,
    UniformityMismatch,
)
from .transforms import EigenPair, verify_eigenpair


@dataclass(frozen=True)
class UniformHypergraph:
    """k-uniform hypergraph: n vertices 1..n, edges as sorted k-tuples."""

    n: int
    k: int
    edges: tuple

    def __post_init__(self):
        if self.k < 2:
            raise UniformityMismatch(f"uniformity must be >= 2, got {self.k}")
        if self.n < 1:
            raise DimensionMismatch(f"need at least one vertex, got {self.n}")
        canon = []
        seen = set()
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) != self.k:
                raise UniformityMismatch(
                    f"edge {e} has {len(t)} vertices, expected {self.k}")
            if len(set(t)) != self.k:
                raise UniformityMismatch(f"edge {e} repeats a vertex")
            if not all(1 <= v <= self.n for v in t):
                raise ShapeMismatch(f"edge {e} leaves vertex range 1..{self.n}")
            if t not in seen:
                seen.add(t)
                canon.append(t)
        object.__setattr__(self, "edges", tuple(sorted(canon)))


def adjacency_tensor(h: UniformHypergraph) -> DenseTensor:
    """Order-k adjacency with weight 1/(k-1)! on every edge permutation."""
    w = mpq(1, math.factorial(h.k - 1))
    ent = [0] * (h.n ** h.k)
    dummy = DenseTensor(h.k, h.n, tuple(ent))  # offset helper only
    for e in h.edges:
        for perm in itertools.permutations(e):
            ent[dummy.offset(perm)] = w
    return DenseTensor(h.k, h.n, tuple(ent))


def pair_vertex(i: int, j: int, m: int) -> int:
    """Encode product vertex (i, j) with second factor on m vertices."""
    return (i - 1) * m + j


def cartesian_product(g: UniformHypergraph,
                      h: UniformHypergraph) -> UniformHypergraph:
    """Edges copy an edge of one factor at a fixed vertex of the other."""
    if g.k != h.k:
        raise UniformityMismatch(f"uniformities differ: {g.k} vs {h.k}")
    edges = []
    for i in range(1, g.n + 1):
        for e in h.edges:
            edges.append(tuple(pair_vertex(i, j, h.n) for j in e))
    for j in range(1, h.n + 1):
        for e in g.edges:
            edges.append(tuple(pair_vertex(i, j, h.n) for i in e))
    return UniformHypergraph(g.n * h.n, g.k, tuple(edges))


def direct_product(g: UniformHypergraph,
                   h: UniformHypergraph) -> UniformHypergraph:
    """Edges pair a G-edge with an H-edge in every relative ordering; both
    projections of each product edge are edges of the factors."""
    if g.k != h.k:
        raise UniformityMismatch(f"uniformities differ: {g.k} vs {h.k}")
    edges = set()
    for eg in g.edges:
        for eh in h.edges:
            for perm in itertools.permutations(eh):
                edges.add(tuple(sorted(
                    pair_vertex(i, j, h.n) for i, j in zip(eg, perm))))
    return UniformHypergraph(g.n * h.n, g.k, tuple(sorted(edges)))


def cartesian_sum_tensor(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    """A (x) I + I (x) B on the paired index set; the adjacency tensor of
    the box product when a, b are hypergraph adjacencies."""
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    left = direct_product_tensor(a, unit_tensor(b.order, b.dim))
    right = direct_product_tensor(unit_tensor(a.order, a.dim), b)
    return add(left, right)


def kron_vector(u, v) -> tuple:
    """Paired-index product vector: entry (i, j) is u_i * v_j."""
    return tuple(ui * vj for ui in u for vj in v)


def compose_product_eigenpairs(a: DenseTensor, pa: EigenPair,
                               b: DenseTensor, pb: EigenPair,
                               tol: float = 1e-8):
    """From eigenpairs (lambda, u) of a and (mu, v) of b, build and verify

        (lambda + mu, u (x) v)  for  A (x) I + I (x) B
        (lambda * mu, u (x) v)  for  A (x) B

    Returns the two pairs; raises if any residual exceeds tol.
    """
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    for name, t, pair in (("first", a, pa), ("second", b, pb)):
        res = verify_eigenpair(t, pair)
        if res > tol:
            raise EigenpairResidualTooLarge(
                f"{name} input pair has residual {float(res)} > {tol}")
    w = kron_vector(pa.vector, pb.vector)
    sum_pair = EigenPair(pa.value + pb.value, w)
    prod_pair = EigenPair(pa.value * pb.value, w)
    sum_res = verify_eigenpair(cartesian_sum_tensor(a, b), sum_pair)
    prod_res = verify_eigenpair(direct_product_tensor(a, b), prod_pair)
    if sum_res > tol:
        raise EigenpairResidualTooLarge(
            f"composed sum pair has residual {float(sum_res)} > {tol}")
    if prod_res > tol:
        raise EigenpairResidualTooLarge(
            f"composed product pair has residual {float(prod_res)} > {tol}")
    return sum_pair, prod_pair
