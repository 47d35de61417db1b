"""Spectral radius of nonnegative tensors by shifted power iteration.

Iterates x <- normalize((B x)^{[1/(m-1)]}) for B = A + shift * I.  The
shift makes the iteration converge for irreducible inputs whose unshifted
dynamics merely cycle; rho(A) = rho(B) - shift with the same eigenvector.
Each step brackets rho(B) between min and max of (B x)_i / x_i^{m-1}, and
iteration stops when the bracket is tighter than tol.

The returned radius is always re-verified against the eigenvalue equation;
an unverified estimate is never reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DenseTensor, add, apply_vector, hadamard_power, scalar_mul, unit_tensor
from .errors import (
    EigenpairResidualTooLarge,
    NonPositiveVector,
    NotConverged,
    NotIrreducible,
    OrderMismatch,
)
from .patterns import is_irreducible, is_weakly_irreducible, zero_pattern
from .transforms import EigenPair, verify_eigenpair


@dataclass(frozen=True)
class IterationConfig:
    tol: float = 1e-10
    max_iter: int = 100_000
    shift: float = 1.0


@dataclass(frozen=True)
class PowerResult:
    rho: float
    vector: tuple
    bracket: tuple
    iterations: int
    residual: float

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "bracket": list(self.bracket),
            "iterations": self.iterations,
            "residual": self.residual,
        }


def min_max_bracket(a: DenseTensor, x: DenseTensor) -> tuple:
    """Collatz-Wielandt bounds from a positive test vector: rho(A) lies
    between min and max of (A x)_i / x_i^{m-1}."""
    if x.order != 1:
        raise OrderMismatch("bracket needs a vector")
    if not all(v > 0 for v in x.entries):
        raise NonPositiveVector("bracket needs a strictly positive vector")
    m = a.order
    ax = apply_vector(a, x)
    ratios = [float(axi) / float(xi) ** (m - 1)
              for axi, xi in zip(ax.entries, x.entries)]
    return min(ratios), max(ratios)


def power_method_rho(a: DenseTensor,
                     config: IterationConfig | None = None,
                     initial=None) -> PowerResult:
    """Spectral radius and positive eigenvector of a nonnegative tensor.

    `initial` may be a positive sequence or an order-1 tensor; by default
    the iteration starts from the all-ones vector.

    Requires the zero pattern to be irreducible, or at least weakly
    irreducible (strongly connected reachability digraph); the weaker gate
    admits connected-hypergraph adjacency tensors, whose Perron theory
    still guarantees a positive eigenvector.
    """
    cfg = config or IterationConfig()
    if a.order < 2:
        raise OrderMismatch("spectral radius needs order >= 2")
    if not a.is_nonnegative():
        raise NonPositiveVector("tensor entries must be nonnegative")
    pat = zero_pattern(a)
    if not (is_irreducible(pat) or is_weakly_irreducible(pat)):
        raise NotIrreducible(
            "zero pattern is neither irreducible nor weakly irreducible")
    n, m = a.dim, a.order
    af = a.to_float()
    b = add(af, scalar_mul(float(cfg.shift), unit_tensor(m, n))) \
        if cfg.shift else af
    if initial is not None:
        vals = initial.entries if isinstance(initial, DenseTensor) else tuple(initial)
        if len(vals) != n or any(float(v) <= 0 for v in vals):
            raise NonPositiveVector("initial vector must be positive of full size")
        x = DenseTensor(1, n, tuple(float(v) for v in vals))
    else:
        x = DenseTensor(1, n, (1.0,) * n)
    exponent = 1.0 / (m - 1)
    bracket = (float("-inf"), float("inf"))
    for it in range(1, cfg.max_iter + 1):
        lo, hi = min_max_bracket(b, x)
        bracket = (lo - cfg.shift, hi - cfg.shift)
        if hi - lo <= cfg.tol:
            rho = (lo + hi) / 2 - cfg.shift
            u = x.entries
            residual = verify_eigenpair(af, EigenPair(rho, u))
            allowed = cfg.tol * (1.0 + abs(rho))
            if residual > allowed:
                raise EigenpairResidualTooLarge(
                    f"residual {residual} exceeds {allowed} after convergence")
            return PowerResult(rho=rho, vector=u, bracket=bracket,
                               iterations=it, residual=float(residual))
        y = apply_vector(b, x)
        z = hadamard_power(y, exponent)
        top = max(z.entries)
        x = DenseTensor(1, n, tuple(v / top for v in z.entries))
    raise NotConverged(
        f"bracket width {bracket[1] - bracket[0]} after {cfg.max_iter} iterations",
        bracket=bracket, iterations=cfg.max_iter)
