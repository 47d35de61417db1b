"""Dense tensors over a common dimension and the general tensor product.

A tensor of order m and dimension n has n^m entries indexed by tuples
(i_1, ..., i_m) with 1 <= i_j <= n, stored flat in row-major order:
offset = sum((i_j - 1) * n**(m - j)).  Order 1 is a vector, order 2 a matrix.

The general product of A (order m >= 2) with B (order k >= 1) has order
(m-1)(k-1) + 1 and entries

    c[i, a_1, ..., a_{m-1}] = sum over i_2..i_m of
        a[i, i_2, ..., i_m] * b[i_2, a_1] * ... * b[i_m, a_{m-1}]

where each a_j ranges over (k-1)-tuples.  For matrices this is the ordinary
matrix product; the unit tensor is a two-sided identity for it.

Entries are duck-typed scalars: int / gmpy2.mpq for exact arithmetic, float
for numeric work.  All tensors are immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import (
    DimensionMismatch,
    NegativeBaseFractionalExponent,
    OrderMismatch,
    ResultTooLarge,
    ShapeMismatch,
)
from .scalars import is_exact

DEFAULT_SIZE_CAP = 10_000_000


@dataclass(frozen=True)
class DenseTensor:
    order: int
    dim: int
    entries: tuple

    def __post_init__(self):
        if self.order < 1:
            raise OrderMismatch(f"order must be >= 1, got {self.order}")
        if self.dim < 1:
            raise DimensionMismatch(f"dim must be >= 1, got {self.dim}")
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        expect = self.dim ** self.order
        if len(self.entries) != expect:
            raise ShapeMismatch(
                f"expected {expect} entries for order {self.order} dim "
                f"{self.dim}, got {len(self.entries)}")

    def offset(self, idx: Sequence[int]) -> int:
        """Flat offset of a 1-based multi-index."""
        if len(idx) != self.order:
            raise ShapeMismatch(f"index length {len(idx)} != order {self.order}")
        off = 0
        for i in idx:
            if not 1 <= i <= self.dim:
                raise ShapeMismatch(f"index component {i} outside [1, {self.dim}]")
            off = off * self.dim + (i - 1)
        return off

    def get(self, *idx: int):
        return self.entries[self.offset(idx)]

    def indices(self):
        """All 1-based multi-indices in row-major order."""
        return itertools.product(range(1, self.dim + 1), repeat=self.order)

    def to_float(self) -> "DenseTensor":
        return DenseTensor(self.order, self.dim,
                           tuple(float(v) for v in self.entries))

    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.entries)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.entries)

    def __repr__(self):
        if len(self.entries) <= 8:
            return f"DenseTensor(order={self.order}, dim={self.dim}, entries={self.entries})"
        return f"DenseTensor(order={self.order}, dim={self.dim}, <{len(self.entries)} entries>)"


def vector(values: Iterable) -> DenseTensor:
    vals = tuple(values)
    return DenseTensor(1, len(vals), vals)


def matrix(rows: Sequence[Sequence]) -> DenseTensor:
    n = len(rows)
    flat = []
    for r in rows:
        if len(r) != n:
            raise ShapeMismatch("matrix rows must be square")
        flat.extend(r)
    return DenseTensor(2, n, tuple(flat))


def from_function(order: int, dim: int, fn: Callable[..., object]) -> DenseTensor:
    """Build a tensor by evaluating fn at every 1-based multi-index."""
    return DenseTensor(order, dim, tuple(
        fn(*idx) for idx in itertools.product(range(1, dim + 1), repeat=order)))


def unit_tensor(order: int, dim: int) -> DenseTensor:
    """Identity for the general product: 1 where i_1 = ... = i_m, else 0."""
    ent = [0] * (dim ** order)
    rep = sum(dim ** j for j in range(order))
    for i in range(dim):
        ent[i * rep] = 1
    return DenseTensor(order, dim, tuple(ent))


def add(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    if (a.order, a.dim) != (b.order, b.dim):
        raise ShapeMismatch(
            f"cannot add order {a.order} dim {a.dim} to order {b.order} dim {b.dim}")
    return DenseTensor(a.order, a.dim,
                       tuple(x + y for x, y in zip(a.entries, b.entries)))


def sub(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    if (a.order, a.dim) != (b.order, b.dim):
        raise ShapeMismatch(
            f"cannot subtract order {b.order} dim {b.dim} from order {a.order} dim {a.dim}")
    return DenseTensor(a.order, a.dim,
                       tuple(x - y for x, y in zip(a.entries, b.entries)))


def scalar_mul(lam, a: DenseTensor) -> DenseTensor:
    return DenseTensor(a.order, a.dim, tuple(lam * v for v in a.entries))


def general_product(a: DenseTensor, b: DenseTensor,
                    size_cap: int = DEFAULT_SIZE_CAP) -> DenseTensor:
    """General product of a (order m >= 2) with b (order k >= 1), same dim.

    Associative, left distributive, and for matrices identical to the matrix
    product.  Right distributivity over the second operand holds only when
    the first operand is a matrix.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"dims differ: {a.dim} vs {b.dim}")
    if a.order < 2:
        raise OrderMismatch("first operand must have order >= 2")
    n = a.dim
    m = a.order
    k = b.order
    out_order = (m - 1) * (k - 1) + 1
    if n ** out_order > size_cap:
        raise ResultTooLarge(
            f"result would have {n}^{out_order} entries, cap is {size_cap}")

    L = n ** (k - 1)
    rows_b = [b.entries[i * L:(i + 1) * L] for i in range(n)]
    sa = n ** (m - 1)
    slices_a = [a.entries[i * sa:(i + 1) * sa] for i in range(n)]
    out_block = L ** (m - 1)
    acc = [[0] * out_block for _ in range(n)]

    # Depth-first walk over (i_2, ..., i_{m-1}) builds shared outer-product
    # prefixes; the leaf handles i_m and skips columns whose slice entries
    # are all zero before paying for the final extension.
    def descend(depth: int, w, c0: int):
        if depth == m - 2:
            base = c0 * n
            for im in range(n):
                c = base + im
                nz = [(acc[i], slices_a[i][c])
                      for i in range(n) if slices_a[i][c]]
                if not nz:
                    continue
                row = rows_b[im]
                ext = row if w is None else [wv * bv for wv in w for bv in row]
                for row_acc, av in nz:
                    if av == 1:
                        for idx, ev in enumerate(ext):
                            row_acc[idx] += ev
                    else:
                        for idx, ev in enumerate(ext):
                            row_acc[idx] += av * ev
        else:
            for i in range(n):
                nw = rows_b[i] if w is None else \
                    [wv * bv for wv in w for bv in rows_b[i]]
                descend(depth + 1, nw, c0 * n + i)

    descend(0, None, 0)
    return DenseTensor(out_order, n,
                       tuple(v for row in acc for v in row))


def apply_vector(a: DenseTensor, x: DenseTensor) -> DenseTensor:
    """Contract a (order m >= 2) against a vector: the general product with
    an order-1 operand, computed without large intermediates."""
    if x.order != 1:
        raise OrderMismatch("second operand must be a vector")
    if a.dim != x.dim:
        raise DimensionMismatch(f"dims differ: {a.dim} vs {x.dim}")
    if a.order < 2:
        raise OrderMismatch("first operand must have order >= 2")
    n = a.dim
    m = a.order
    xv = x.entries
    prods = [1]
    for _ in range(m - 1):
        prods = [p * xi for p in prods for xi in xv]
    sa = n ** (m - 1)
    ent = a.entries
    out = []
    for i in range(n):
        base = i * sa
        out.append(sum(ent[base + c] * prods[c] for c in range(sa)))
    return DenseTensor(1, n, tuple(out))


def hadamard_power(x: DenseTensor, r) -> DenseTensor:
    """Componentwise power x_i ** r of a vector.

    Integer r keeps exact entries exact.  Fractional r goes through float
    and requires nonnegative components.
    """
    if x.order != 1:
        raise OrderMismatch("componentwise power applies to vectors")
    if isinstance(r, int) or (is_exact(r) and r == int(r)):
        e = int(r)
        return DenseTensor(1, x.dim, tuple(v ** e for v in x.entries))
    rf = float(r)
    out = []
    for v in x.entries:
        vf = float(v)
        if vf < 0:
            raise NegativeBaseFractionalExponent(
                f"component {vf} < 0 with exponent {rf}")
        out.append(vf ** rf)
    return DenseTensor(1, x.dim, tuple(out))


def tensor_power(a: DenseTensor, k: int,
                 size_cap: int = DEFAULT_SIZE_CAP) -> DenseTensor:
    """k-th power under the general product, k >= 1.

    Associativity makes the bracketing irrelevant; this computes
    a * (a * (... * a)) because the right operand then stays the largest
    factor and intermediates stay within a factor dim of the result.
    """
    if k < 1:
        raise OrderMismatch(f"power must be >= 1, got {k}")
    if a.order < 2:
        raise OrderMismatch("base must have order >= 2")
    final_order = (a.order - 1) ** k + 1
    if a.dim ** final_order > size_cap:
        raise ResultTooLarge(
            f"result would have {a.dim}^{final_order} entries, cap is {size_cap}")
    p = a
    for _ in range(k - 1):
        p = general_product(a, p, size_cap)
    return p


def direct_product(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    """Entrywise outer product on paired indices: for equal orders k,

        c[(i_1,j_1), ..., (i_k,j_k)] = a[i_1..i_k] * b[j_1..j_k]

    with the pair (i, j) encoded as (i-1)*b.dim + j, so the result has
    dimension a.dim * b.dim.  Satisfies (A x B)(C x D) = (AC) x (BD)
    whenever the single-factor products are defined.
    """
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    k = a.order
    n, mb = a.dim, b.dim
    big = n * mb
    # offset(c-index) splits as a part depending only on a's index plus a
    # part depending only on b's: precompute both weight tables.
    wa = [0]
    wb = [0]
    for t in range(k):
        scale = big ** (k - 1 - t)
        wa = [w + ia * (mb * scale) for w in wa for ia in range(n)]
        wb = [w + jb * scale for w in wb for jb in range(mb)]
    out = [0] * (big ** k)
    for aoff, av in enumerate(a.entries):
        if not av:
            continue
        base = wa[aoff]
        for boff, bv in enumerate(b.entries):
            if bv:
                out[base + wb[boff]] = av * bv
    return DenseTensor(k, big, tuple(out))


def is_supersymmetric(a: DenseTensor) -> bool:
    """True when every entry is invariant under permuting its index tuple."""
    for idx in a.indices():
        canon = tuple(sorted(idx))
        if a.entries[a.offset(idx)] != a.entries[a.offset(canon)]:
            return False
    return True


def max_abs_diff(a: DenseTensor, b: DenseTensor) -> float:
    """Largest entrywise |a - b|, as a float."""
    if (a.order, a.dim) != (b.order, b.dim):
        raise ShapeMismatch("shapes differ")
    return max(abs(float(x) - float(y)) for x, y in zip(a.entries, b.entries))
