"""Scalar helpers for the two supported arithmetic modes.

Exact mode uses arbitrary-precision rationals (gmpy2.mpq, with plain int kept
as-is so integer tensors stay on the fast path); float mode uses Python
float64.  Arithmetic everywhere else in the package is duck-typed, so the two
modes share one code path.  Floats must never be compared implicitly; use the
tolerance helpers here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from gmpy2 import mpq

Exact = Union[int, type(mpq())]
Scalar = Union[int, float, type(mpq())]

EXACT_TYPES = (int, type(mpq()), Fraction)


def is_exact(x) -> bool:
    """True for scalars with exact rational semantics."""
    return isinstance(x, EXACT_TYPES)


def as_exact(x) -> Exact:
    """Coerce to the canonical exact representation (int or mpq)."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, str)):
        x = mpq(x)
    if isinstance(x, type(mpq())):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"not an exact scalar: {x!r}")


def rational(p, q=1) -> Exact:
    """Exact p/q, normalized; integers come back as plain int."""
    return as_exact(mpq(p, q))


def scalar_to_json(x):
    """JSON value for one scalar: ints as ints, other rationals as 'p/q'
    strings, floats as numbers."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, (Fraction, type(mpq()))):
        q = mpq(x)
        return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    raise TypeError(f"cannot serialize scalar {x!r}")


def scalar_from_json(v, mode: str = "exact"):
    """Parse one JSON scalar value under the given mode.

    mode 'exact': ints and 'p/q' strings allowed, floats rejected.
    mode 'float': everything coerced to float.
    """
    if mode == "float":
        if isinstance(v, str):
            return float(Fraction(v))
        return float(v)
    if mode != "exact":
        raise ValueError(f"unknown scalar mode {mode!r}")
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return as_exact(mpq(v))
    if isinstance(v, float):
        if v.is_integer():
            return int(v)
        raise ValueError(
            f"non-integral float {v!r} in exact mode; use a 'p/q' string")
    raise ValueError(f"cannot parse scalar {v!r}")
