"""Similarity and congruence transforms, and eigenpair bookkeeping.

The triple product P A Q contracts a matrix into mode 1 and a matrix into
every remaining mode:

    (P A Q)[i_1..i_m] = sum a[j_1..j_m] * p[i_1,j_1] * q[j_2,i_2] * ... * q[j_m,i_m]

Two families preserve the unit tensor and hence similarity structure:
permutation pairs (P, P^T) and diagonal pairs (D^{-(m-1)}, D).  Congruence
P A P^T uses the same contraction with Q = P^T.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .core import (
    DenseTensor,
    apply_vector,
    unit_tensor,
)
from .errors import (
    DimensionMismatch,
    EigenpairResidualTooLarge,
    InvalidPermutation,
    NonPositiveVector,
    NotUnitNorm,
    OrderMismatch,
    ShapeMismatch,
    SingularDiagonal,
)
from .scalars import is_exact


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n} stored as the 1-based image tuple."""

    images: tuple

    def __post_init__(self):
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise InvalidPermutation(f"not a bijection of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def matrix(self) -> DenseTensor:
        """Matrix with p[i, sigma(i)] = 1."""
        n = self.n
        ent = [0] * (n * n)
        for i in range(1, n + 1):
            ent[(i - 1) * n + (self(i) - 1)] = 1
        return DenseTensor(2, n, tuple(ent))


@dataclass(frozen=True)
class DiagonalMatrix:
    diag: tuple

    def __post_init__(self):
        if not isinstance(self.diag, tuple):
            object.__setattr__(self, "diag", tuple(self.diag))

    @property
    def n(self) -> int:
        return len(self.diag)

    def matrix(self) -> DenseTensor:
        n = self.n
        ent = [0] * (n * n)
        for i, d in enumerate(self.diag):
            ent[i * n + i] = d
        return DenseTensor(2, n, tuple(ent))

    def power_matrix(self, e: int) -> DenseTensor:
        """Matrix of D**e; negative e requires all diagonal entries nonzero."""
        n = self.n
        ent = [0] * (n * n)
        for i, d in enumerate(self.diag):
            ent[i * n + i] = _pow_scalar(d, e)
        return DenseTensor(2, n, tuple(ent))


@dataclass(frozen=True)
class EigenPair:
    value: object
    vector: tuple

    def __post_init__(self):
        if not isinstance(self.vector, tuple):
            object.__setattr__(self, "vector", tuple(self.vector))
        if not any(v != 0 for v in self.vector):
            raise ShapeMismatch("eigenvector must be nonzero")


def _pow_scalar(v, e: int):
    # int ** negative would silently go float; route through mpq instead
    if e >= 0:
        return v ** e
    if v == 0:
        raise SingularDiagonal("zero entry cannot be inverted")
    if is_exact(v):
        r = mpq(1) / (mpq(v) ** (-e))
        return int(r) if r.denominator == 1 else r
    return v ** e


def _rows(m: DenseTensor):
    n = m.dim
    return [m.entries[i * n:(i + 1) * n] for i in range(n)]


def _check_matrix(p: DenseTensor, dim: int, what: str):
    if p.order != 2:
        raise OrderMismatch(f"{what} must be a matrix, got order {p.order}")
    if p.dim != dim:
        raise DimensionMismatch(f"{what} dim {p.dim} does not match tensor dim {dim}")


def transpose(p: DenseTensor) -> DenseTensor:
    if p.order != 2:
        raise OrderMismatch("transpose applies to matrices")
    n = p.dim
    e = p.entries
    return DenseTensor(2, n, tuple(e[j * n + i] for i in range(n) for j in range(n)))


def mode_apply(t: DenseTensor, mat: DenseTensor, mode: int,
               transpose_mat: bool = False) -> DenseTensor:
    """Contract matrix coefficients into one index position (1-based mode).

    Replaces entry index j at that position by sum over j of
    mat[i, j] * t[..j..] (or mat[j, i] when transpose_mat).
    """
    _check_matrix(mat, t.dim, "mode matrix")
    if not 1 <= mode <= t.order:
        raise ShapeMismatch(f"mode {mode} outside 1..{t.order}")
    n = t.dim
    rows = _rows(mat)

    def coef(i, j):
        return rows[j][i] if transpose_mat else rows[i][j]

    stride = n ** (t.order - mode)
    span = n * stride
    ent = t.entries
    out = [0] * len(ent)
    for block in range(0, len(ent), span):
        for s in range(stride):
            base = block + s
            vals = [ent[base + j * stride] for j in range(n)]
            for i in range(n):
                acc = 0
                for j in range(n):
                    v = vals[j]
                    if v:
                        acc += coef(i, j) * v
                out[base + i * stride] = acc
    return DenseTensor(t.order, t.dim, tuple(out))


def triple_product_matrix(p: DenseTensor, a: DenseTensor,
                          q: DenseTensor) -> DenseTensor:
    """P A Q without forming the big general products: one mode contraction
    per index position.  Agrees exactly with general_product(general_product(P, A), Q)."""
    _check_matrix(p, a.dim, "left matrix")
    _check_matrix(q, a.dim, "right matrix")
    out = mode_apply(a, p, 1)
    for mode in range(2, a.order + 1):
        out = mode_apply(out, q, mode, transpose_mat=True)
    return out


def permutation_conjugate(a: DenseTensor, sigma: Permutation) -> DenseTensor:
    """Relabel indices: b[i_1..i_m] = a[sigma(i_1)..sigma(i_m)].

    Equals P A P^T for the matrix P of sigma.
    """
    if sigma.n != a.dim:
        raise DimensionMismatch(f"permutation on {sigma.n} points, tensor dim {a.dim}")
    ent = a.entries
    out = [0] * len(ent)
    pos = 0
    for idx in a.indices():
        out[pos] = ent[a.offset(tuple(sigma(i) for i in idx))]
        pos += 1
    return DenseTensor(a.order, a.dim, tuple(out))


def diagonal_similarity(a: DenseTensor, d: DiagonalMatrix) -> DenseTensor:
    """D^{-(m-1)} A D in closed form:

        b[i_1..i_m] = a[i_1..i_m] * d_{i_1}^{-(m-1)} * d_{i_2} * ... * d_{i_m}
    """
    if d.n != a.dim:
        raise DimensionMismatch(f"diagonal of size {d.n}, tensor dim {a.dim}")
    if any(v == 0 for v in d.diag):
        raise SingularDiagonal("diagonal similarity needs all d_i nonzero")
    m = a.order
    inv = [_pow_scalar(v, -(m - 1)) for v in d.diag]
    dd = d.diag
    out = []
    pos = 0
    for idx in a.indices():
        v = a.entries[pos]
        pos += 1
        if v:
            w = v * inv[idx[0] - 1]
            for i in idx[1:]:
                w = w * dd[i - 1]
            out.append(w)
        else:
            out.append(0)
    return DenseTensor(a.order, a.dim, tuple(out))


def matrix_is_invertible(p: DenseTensor, tol: float = 0.0) -> bool:
    """Gaussian elimination rank check; tol is the float pivot threshold
    (exact entries use exact zero tests)."""
    if p.order != 2:
        raise OrderMismatch("invertibility check applies to matrices")
    n = p.dim
    rows = [list(r) for r in _rows(p)]
    exact = p.is_exact()
    for col in range(n):
        piv = None
        best = tol
        for r in range(col, n):
            v = rows[r][col]
            if exact:
                if v != 0:
                    piv = r
                    break
            elif abs(v) > best:
                best = abs(v)
                piv = r
        if piv is None:
            return False
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        for r in range(col + 1, n):
            f = rows[r][col] / pv if not exact else mpq(rows[r][col]) / mpq(pv)
            if f:
                for c in range(col, n):
                    rows[r][c] = rows[r][c] - f * rows[col][c]
    return True


def check_identity_preserving(p: DenseTensor, q: DenseTensor, order: int,
                              tol: float = 0.0) -> bool:
    """Whether P I Q = I for the unit tensor of the given order.

    True pairs define similarity transforms; the pair is then necessarily
    invertible, which is asserted as a sanity check.
    """
    if order < 2:
        raise OrderMismatch("similarity needs order >= 2")
    n = p.dim
    ident = unit_tensor(order, n)
    image = triple_product_matrix(p, ident, q)
    if image.is_exact() and ident.is_exact():
        ok = image == ident
    else:
        from .core import max_abs_diff
        ok = max_abs_diff(image, ident) <= tol
    if ok:
        assert matrix_is_invertible(p, tol), "identity-preserving P must be invertible"
        assert matrix_is_invertible(q, tol), "identity-preserving Q must be invertible"
    return ok


def congruence(a: DenseTensor, p: DenseTensor) -> DenseTensor:
    """P A P^T.  For permutation matrices this coincides with relabeling;
    for orthogonal P it transports E-eigenpairs."""
    return triple_product_matrix(p, a, transpose(p))


def verify_eigenpair(a: DenseTensor, pair: EigenPair):
    """Largest component of |A x - lambda * x^{[m-1]}|.

    Exact inputs give an exact residual; float or complex give a float.
    """
    x = DenseTensor(1, a.dim, pair.vector)
    ax = apply_vector(a, x)
    lam = pair.value
    m = a.order
    res = None
    for axi, xi in zip(ax.entries, pair.vector):
        r = abs(axi - lam * xi ** (m - 1))
        res = r if res is None else max(res, r)
    return res


def verify_E_eigenpair(a: DenseTensor, pair: EigenPair, tol: float = 1e-8):
    """Residual of A x = lambda x under the unit-norm constraint x.x = 1."""
    x = pair.vector
    norm2 = sum(v * v for v in x)
    if abs(norm2 - 1) > tol:
        raise NotUnitNorm(f"x.x = {norm2}, not 1 within {tol}")
    ax = apply_vector(a, DenseTensor(1, a.dim, x))
    lam = pair.value
    res = None
    for axi, xi in zip(ax.entries, x):
        r = abs(axi - lam * xi)
        res = r if res is None else max(res, r)
    return res


def transfer_eigenpair_diagonal(pair: EigenPair, d: DiagonalMatrix) -> EigenPair:
    """Map an eigenpair of D^{-(m-1)} A D to the matching one of A:
    same value, vector D x."""
    if len(pair.vector) != d.n:
        raise DimensionMismatch("vector and diagonal sizes differ")
    return EigenPair(pair.value,
                     tuple(dv * xv for dv, xv in zip(d.diag, pair.vector)))


def transfer_E_eigenpair(pair: EigenPair, p: DenseTensor) -> EigenPair:
    """Map an E-eigenpair of A to one of P A P^T for orthogonal P: same
    value, vector P x.  The caller is responsible for P being orthogonal."""
    _check_matrix(p, len(pair.vector), "transfer matrix")
    rows = _rows(p)
    x = pair.vector
    y = tuple(sum(r[j] * x[j] for j in range(len(x))) for r in rows)
    return EigenPair(pair.value, y)


def stochastic_scaling(a: DenseTensor, u: DenseTensor, tol: float = 1e-8):
    """Scale a nonnegative tensor by its positive eigenvector u:
    D = diag(u), B = D^{-(m-1)} A D.

    Then B e = rho e for the all-ones vector, so B / rho has unit row sums,
    and B is nonnegative whenever A is.  Returns (D, B, rho).
    """
    if u.order != 1:
        raise OrderMismatch("eigenvector must be a vector")
    if u.dim != a.dim:
        raise DimensionMismatch(f"vector dim {u.dim}, tensor dim {a.dim}")
    if not all(v > 0 for v in u.entries):
        raise NonPositiveVector("scaling vector must be strictly positive")
    m = a.order
    au = apply_vector(a, u)
    ratios = [mpq(axi) / (mpq(xi) ** (m - 1)) if is_exact(axi) and is_exact(xi)
              else float(axi) / float(xi) ** (m - 1)
              for axi, xi in zip(au.entries, u.entries)]
    rho = (min(ratios) + max(ratios)) / 2
    res = verify_eigenpair(a, EigenPair(rho, u.entries))
    if res > tol:
        raise EigenpairResidualTooLarge(
            f"residual {float(res)} exceeds {tol}; u is not an eigenvector of A")
    d = DiagonalMatrix(u.entries)
    b = diagonal_similarity(a, d)
    return d, b, rho
