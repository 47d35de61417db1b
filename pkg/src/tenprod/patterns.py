"""Zero patterns of nonnegative tensors and their combinatorial dynamics.

The zero pattern alone determines the zero pattern of any product of
nonnegative tensors, so positivity questions (essential positivity,
irreducibility, primitivity, strong primitivity) reduce to set dynamics:

    step_map F(S)   = { i : some slice entry p[i, i_2..i_m] has all i_j in S }

* A^r essentially positive  <=>  F^r({j}) = [n] for every j; the least such
  r is the primitive degree.
* A irreducible  <=>  (A + I)^{n-1} essentially positive.
* A^k entrywise positive tracks a family of column supports instead of a
  single subset (strong primitivity).

The majorization matrix M(A)[i][j] = a[i, j..j] gives one-sided bounds: if
M(A) is primitive then A is, with degree at most the matrix degree, which
Wielandt bounds by (n-1)^2 + 1.

Subsets of {1..n} are int bitmasks (bit i-1 for vertex i) throughout.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache

from .core import DenseTensor
from .errors import (
    CensusTooLarge,
    DimensionMismatch,
    FamilyExplosion,
    NotIrreducible,
    OrderMismatch,
    ShapeMismatch,
)
from .scalars import is_exact


@dataclass(frozen=True)
class PatternTensor:
    order: int
    dim: int
    bits: tuple

    def __post_init__(self):
        if self.order < 1:
            raise OrderMismatch(f"order must be >= 1, got {self.order}")
        if self.dim < 1:
            raise DimensionMismatch(f"dim must be >= 1, got {self.dim}")
        norm = tuple(bool(b) for b in self.bits)
        if len(norm) != self.dim ** self.order:
            raise ShapeMismatch(
                f"expected {self.dim ** self.order} bits, got {len(norm)}")
        object.__setattr__(self, "bits", norm)

    def offset(self, idx) -> int:
        off = 0
        for i in idx:
            if not 1 <= i <= self.dim:
                raise ShapeMismatch(f"index component {i} outside [1, {self.dim}]")
            off = off * self.dim + (i - 1)
        return off

    def get(self, *idx) -> bool:
        return self.bits[self.offset(idx)]

    def indices(self):
        return itertools.product(range(1, self.dim + 1), repeat=self.order)


def zero_pattern(a: DenseTensor, eps: float = 0.0) -> PatternTensor:
    """Nonzero support of a tensor.  Exact entries use an exact test; float
    entries count as present when |v| > eps."""
    bits = tuple(
        (v != 0) if is_exact(v) else (abs(v) > eps) for v in a.entries)
    return PatternTensor(a.order, a.dim, bits)


def dense01(p: PatternTensor) -> DenseTensor:
    """0/1 integer tensor with the same support; the dense oracle for
    pattern arithmetic."""
    return DenseTensor(p.order, p.dim, tuple(int(b) for b in p.bits))


def pattern_from_id(order: int, dim: int, pattern_id: int) -> PatternTensor:
    """Pattern numbered by its bit string: bit t of the id is the entry at
    flat offset t."""
    size = dim ** order
    if not 0 <= pattern_id < (1 << size):
        raise ShapeMismatch(f"pattern id {pattern_id} outside [0, 2^{size})")
    return PatternTensor(order, dim,
                         tuple((pattern_id >> t) & 1 for t in range(size)))


def pattern_id_of(p: PatternTensor) -> int:
    out = 0
    for t, b in enumerate(p.bits):
        if b:
            out |= 1 << t
    return out


def pattern_product(a: PatternTensor, b: PatternTensor) -> PatternTensor:
    """General product over the Boolean semiring: OR over slice indices of
    AND over factors.  Equals the zero pattern of the dense product of any
    nonnegative tensors with these supports."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dims differ: {a.dim} vs {b.dim}")
    if a.order < 2:
        raise OrderMismatch("first operand must have order >= 2")
    n = a.dim
    m, k = a.order, b.order
    out_order = (m - 1) * (k - 1) + 1
    out = []
    for idx in itertools.product(range(1, n + 1), repeat=out_order):
        i1 = idx[0]
        alphas = [idx[1 + j * (k - 1):1 + (j + 1) * (k - 1)]
                  for j in range(m - 1)]
        hit = False
        for rest in itertools.product(range(1, n + 1), repeat=m - 1):
            if not a.get(i1, *rest):
                continue
            if all(b.get(i_j, *al) for i_j, al in zip(rest, alphas)):
                hit = True
                break
        out.append(hit)
    return PatternTensor(out_order, n, tuple(out))


def with_unit_diagonal(p: PatternTensor) -> PatternTensor:
    """Support of A + I: the pattern with the diagonal forced on."""
    bits = list(p.bits)
    rep = sum(p.dim ** j for j in range(p.order))
    for i in range(p.dim):
        bits[i * rep] = True
    return PatternTensor(p.order, p.dim, tuple(bits))


@lru_cache(maxsize=None)
def _slice_masks(p: PatternTensor):
    """Per first index: deduplicated bitmasks of the index sets appearing in
    its nonzero slice entries."""
    n, m = p.dim, p.order
    masks = [set() for _ in range(n)]
    pos = 0
    for idx in itertools.product(range(n), repeat=m):
        if p.bits[pos]:
            mask = 0
            for i in idx[1:]:
                mask |= 1 << i
            masks[idx[0]].add(mask)
        pos += 1
    return tuple(tuple(s) for s in masks)


@lru_cache(maxsize=None)
def _slice_tuples(p: PatternTensor):
    """Per first index: the 0-based index tuples of its nonzero entries."""
    n, m = p.dim, p.order
    tups = [[] for _ in range(n)]
    pos = 0
    for idx in itertools.product(range(n), repeat=m):
        if p.bits[pos]:
            tups[idx[0]].append(idx[1:])
        pos += 1
    return tuple(tuple(t) for t in tups)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def step_map(p: PatternTensor, s: int) -> int:
    """F(S): indices whose slice meets S^{m-1}.  Monotone in S; for
    nonnegative A with this pattern, supp(A x) = F(supp(x))."""
    if p.order < 2:
        raise OrderMismatch("step map needs order >= 2")
    out = 0
    for i, masks in enumerate(_slice_masks(p)):
        for mask in masks:
            if mask & ~s == 0:
                out |= 1 << i
                break
    return out


def essentially_positive(p: PatternTensor) -> bool:
    """All entries p[i, j, .., j] present; equivalently F({j}) = [n] for
    every j, equivalently A x > 0 for every nonzero nonnegative x."""
    if p.order < 2:
        raise OrderMismatch("essential positivity needs order >= 2")
    n = p.dim
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if not p.get(i, *([j] * (p.order - 1))):
                return False
    return True


def primitive_degree(p: PatternTensor):
    """Least r with A^r essentially positive, or None.

    Runs the step map from each singleton until it absorbs at the full set
    or revisits a state.  The maximum first-hit time over starting vertices
    is the degree; it never exceeds 2^(n^m) (or even 2^n - 1 states).
    """
    n = p.dim
    full = full_mask(n)
    worst = 0
    for j in range(n):
        s = 1 << j
        seen = {s}
        r = 0
        while True:
            s = step_map(p, s)
            r += 1
            if s == full:
                break
            if s in seen:
                return None
            seen.add(s)
        worst = max(worst, r)
    assert worst <= 2 ** (n ** p.order)
    return worst


def is_primitive(p: PatternTensor) -> bool:
    return primitive_degree(p) is not None


def is_irreducible(p: PatternTensor) -> bool:
    """Whether (A + I)^{n-1} is essentially positive: every singleton grows
    to the full set within n-1 inflationary steps."""
    n = p.dim
    if n == 1:
        return True
    q = with_unit_diagonal(p)
    full = full_mask(n)
    for j in range(n):
        s = 1 << j
        for _ in range(n - 1):
            s = step_map(q, s)
        if s != full:
            return False
    return True


def is_weakly_irreducible(p: PatternTensor) -> bool:
    """Strong connectivity of the digraph with an arc i -> j whenever j
    appears in a nonzero slice entry of row i.  Strictly weaker than
    irreducibility; connected hypergraph adjacencies satisfy it while
    usually failing the stronger test."""
    n = p.dim
    reach = [0] * n
    for i, masks in enumerate(_slice_masks(p)):
        acc = 0
        for mask in masks:
            acc |= mask
        reach[i] = acc
    back = [0] * n
    for i in range(n):
        for j in range(n):
            if reach[i] >> j & 1:
                back[j] |= 1 << i
    return _connected(reach) and _connected(back)


def _connected(adj) -> bool:
    n = len(adj)
    seen = 1
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            rest = adj[u] & ~seen
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                seen |= 1 << v
                nxt.append(v)
        frontier = nxt
    return seen == full_mask(n)


def family_step(p: PatternTensor, family: frozenset) -> frozenset:
    """One strong-primitivity step: apply the positionwise reachability map

        G(S_1..S_{m-1}) = { i : some nonzero p[i, i_2..i_m] has i_j in S_j }

    to every tuple drawn from the family."""
    tups = _slice_tuples(p)
    n = p.dim
    out = set()
    for combo in itertools.product(sorted(family), repeat=p.order - 1):
        g = 0
        for i in range(n):
            for alpha in tups[i]:
                if all(combo[pos] >> v & 1 for pos, v in enumerate(alpha)):
                    g |= 1 << i
                    break
        out.add(g)
    return frozenset(out)


def slice_support_families(p: PatternTensor, limit: int,
                           family_cap: int = 65536):
    """Yield the support-family sequence U_1, U_2, ... up to limit terms.

    U_k collects the column supports of the (matricized) k-th power, so
    A^k > 0 exactly when U_k is the single full set.
    """
    if p.order < 2:
        raise OrderMismatch("support families need order >= 2")
    n, m = p.dim, p.order
    cols = {}
    pos = 0
    for idx in itertools.product(range(n), repeat=m):
        key = idx[1:]
        cols.setdefault(key, 0)
        if p.bits[pos]:
            cols[key] |= 1 << idx[0]
        pos += 1
    fam = frozenset(cols.values())
    for _ in range(limit):
        if len(fam) > family_cap:
            raise FamilyExplosion(
                f"support family grew past {family_cap} sets")
        yield fam
        fam = family_step(p, fam)


def strongly_primitive_degree(p: PatternTensor, family_cap: int = 65536):
    """Least k with A^k entrywise positive, or None when the family
    sequence cycles without reaching the single full set."""
    n = p.dim
    target = frozenset({full_mask(n)})
    seen = set()
    k = 0
    for fam in slice_support_families(p, limit=2 ** (2 ** n) + 2,
                                      family_cap=family_cap):
        k += 1
        if fam == target:
            return k
        if fam in seen:
            return None
        seen.add(fam)
    return None


def is_strongly_primitive(p: PatternTensor) -> bool:
    return strongly_primitive_degree(p) is not None


def repeated_tail_pattern(order: int, dim: int) -> PatternTensor:
    """Entry present exactly when all trailing indices coincide.

    Essentially positive, hence primitive with degree 1; never strongly
    primitive for order >= 3 because empty column supports persist.
    """
    bits = []
    for idx in itertools.product(range(1, dim + 1), repeat=order):
        tail = idx[1:]
        bits.append(all(v == tail[0] for v in tail))
    return PatternTensor(order, dim, tuple(bits))


def majorization_matrix(t):
    """M[i][j] = entry at (i, j, j, ..., j); scalar rows for a dense
    tensor, bool rows for a pattern."""
    if t.order < 2:
        raise OrderMismatch("majorization matrix needs order >= 2")
    n = t.dim
    return tuple(
        tuple(t.get(i, *([j] * (t.order - 1))) for j in range(1, n + 1))
        for i in range(1, n + 1))


def _bool_rows(rows):
    return [sum((1 << j) for j, v in enumerate(r) if v) for r in rows]


def matrix_is_irreducible(rows) -> bool:
    """Strong connectivity of the digraph of nonzero entries."""
    adj = _bool_rows(rows)
    n = len(adj)
    back = [0] * n
    for i in range(n):
        for j in range(n):
            if adj[i] >> j & 1:
                back[j] |= 1 << i
    return _connected(adj) and _connected(back)


def matrix_cyclic_index(rows) -> int:
    """gcd of directed cycle lengths, from BFS level differences; the
    digraph must be strongly connected."""
    adj = _bool_rows(rows)
    n = len(adj)
    if not matrix_is_irreducible(rows):
        raise NotIrreducible("cyclic index needs a strongly connected digraph")
    depth = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            rest = adj[u]
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if v not in depth:
                    depth[v] = depth[u] + 1
                    nxt.append(v)
        frontier = nxt
    g = 0
    for u in range(n):
        rest = adj[u]
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            g = math.gcd(g, depth[u] + 1 - depth[v])
    if g == 0:
        raise NotIrreducible("digraph has no cycles")
    return g


def matrix_primitive_degree(rows):
    """Least k with all entries of the Boolean k-th power true; None past
    the Wielandt bound (n-1)^2 + 1, which primitive matrices never exceed."""
    adj = _bool_rows(rows)
    n = len(adj)
    full = full_mask(n)
    bound = (n - 1) ** 2 + 1
    power = list(adj)
    for k in range(1, bound + 1):
        if all(r == full for r in power):
            return k
        power = [_bool_row_product(power[i], adj) for i in range(n)]
    return None


def _bool_row_product(row_bits: int, adj) -> int:
    out = 0
    rest = row_bits
    while rest:
        j = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        out |= adj[j]
    return out


@dataclass(frozen=True)
class MajorizationReport:
    primitive: bool
    gamma: object
    cyclic_index: object


@dataclass(frozen=True)
class PatternReport:
    essentially_positive: bool
    irreducible: bool
    primitive: bool
    gamma: object
    strongly_primitive: bool
    strong_degree: object
    majorization: MajorizationReport


def analyze_pattern(p: PatternTensor) -> PatternReport:
    """Full positivity profile of one pattern."""
    gamma = primitive_degree(p)
    strong = strongly_primitive_degree(p)
    mrows = majorization_matrix(p)
    mgamma = matrix_primitive_degree(mrows)
    mcyc = matrix_cyclic_index(mrows) if matrix_is_irreducible(mrows) else None
    return PatternReport(
        essentially_positive=essentially_positive(p),
        irreducible=is_irreducible(p),
        primitive=gamma is not None,
        gamma=gamma,
        strongly_primitive=strong is not None,
        strong_degree=strong,
        majorization=MajorizationReport(
            primitive=mgamma is not None,
            gamma=mgamma,
            cyclic_index=mcyc,
        ),
    )


@dataclass(frozen=True)
class CensusRow:
    pattern_id: int
    report: PatternReport

    def to_dict(self) -> dict:
        d = asdict(self.report)
        d["pattern_id"] = self.pattern_id
        return d


@dataclass(frozen=True)
class CensusSummary:
    order: int
    dim: int
    total: int
    essentially_positive: int
    irreducible: int
    primitive: int
    strongly_primitive: int
    max_gamma: object
    max_strong_degree: object
    gamma_bound: int
    wielandt_bound: int
    majorization_primitive: int
    gamma_bound_violations: int
    majorization_violations: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CensusReport:
    rows: tuple
    summary: CensusSummary


def _census_row(args) -> CensusRow:
    order, dim, pid = args
    return CensusRow(pid, analyze_pattern(pattern_from_id(order, dim, pid)))


def census_rows(order: int, dim: int, pattern_cap: int = 256, jobs: int = 1):
    """Analyze every pattern of the given shape, in pattern-id order."""
    size = dim ** order
    total = 1 << size
    if total > pattern_cap:
        raise CensusTooLarge(
            f"2^{size} = {total} patterns exceeds cap {pattern_cap}")
    work = [(order, dim, pid) for pid in range(total)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(_census_row, work, chunksize=32)
    else:
        for w in work:
            yield _census_row(w)


def census(order: int, dim: int, pattern_cap: int = 256,
           jobs: int = 1) -> CensusReport:
    rows = tuple(census_rows(order, dim, pattern_cap=pattern_cap, jobs=jobs))
    return CensusReport(rows, summarize_census(order, dim, rows))


def summarize_census(order: int, dim: int, rows) -> CensusSummary:
    rows = tuple(rows)
    n = dim
    gammas = [r.report.gamma for r in rows if r.report.gamma is not None]
    strongs = [r.report.strong_degree for r in rows
               if r.report.strong_degree is not None]
    gamma_bound = 2 ** (n ** order)
    wielandt = (n - 1) ** 2 + 1
    gamma_viol = sum(1 for g in gammas if g > gamma_bound)
    maj_viol = 0
    for r in rows:
        rep = r.report
        if rep.majorization.primitive:
            if (not rep.primitive
                    or rep.gamma > rep.majorization.gamma
                    or rep.majorization.gamma > wielandt):
                maj_viol += 1
    return CensusSummary(
        order=order,
        dim=dim,
        total=len(rows),
        essentially_positive=sum(1 for r in rows if r.report.essentially_positive),
        irreducible=sum(1 for r in rows if r.report.irreducible),
        primitive=sum(1 for r in rows if r.report.primitive),
        strongly_primitive=sum(1 for r in rows if r.report.strongly_primitive),
        max_gamma=max(gammas, default=None),
        max_strong_degree=max(strongs, default=None),
        gamma_bound=gamma_bound,
        wielandt_bound=wielandt,
        majorization_primitive=sum(
            1 for r in rows if r.report.majorization.primitive),
        gamma_bound_violations=gamma_viol,
        majorization_violations=maj_viol,
    )
