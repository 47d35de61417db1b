"""Shared fixtures and independent oracles.

The oracles here recompute everything by direct summation or dense
enumeration, deliberately ignoring the factorized kernels under test.
"""

import itertools
import random

import pytest

from tenprod import DenseTensor, rational


def naive_product(a, b):
    """Direct-summation general product, one sum per output entry.

    c[i, a1..a_{m-1}] = sum over (i2..im) of
        a[i, i2..im] * b[i2, a1] * ... * b[im, a_{m-1}]
    where each a_j is a group of k-1 indices.  O(n^(m-1) * size) time,
    used only on small shapes.
    """
    m, k, n = a.order, b.order, a.dim
    out_order = (m - 1) * (k - 1) + 1
    rng_n = range(1, n + 1)
    entries = []
    for idx in itertools.product(rng_n, repeat=out_order):
        i1 = idx[0]
        groups = [idx[1 + g * (k - 1) : 1 + (g + 1) * (k - 1)] for g in range(m - 1)]
        total = 0
        for rest in itertools.product(rng_n, repeat=m - 1):
            term = a.get(i1, *rest)
            if term == 0:
                continue
            for j, alpha in zip(rest, groups):
                term = term * b.get(j, *alpha)
            total = total + term
        entries.append(total)
    return DenseTensor(out_order, n, entries)


def random_exact_tensor(rng, order, dim, zero_weight=2):
    """Random tensor with small rational entries, mostly integers."""
    vals = []
    for _ in range(dim**order):
        if rng.randrange(zero_weight + 4) < zero_weight:
            vals.append(0)
        else:
            q = rng.choice((1, 1, 1, 2, 3))
            vals.append(rational(rng.randint(-6, 6), q))
    return DenseTensor(order, dim, vals)


def random_positive_tensor(rng, order, dim, lo=1, hi=9):
    vals = [rational(rng.randint(lo, hi), rng.choice((1, 1, 2))) for _ in range(dim**order)]
    return DenseTensor(order, dim, vals)


@pytest.fixture
def rng():
    return random.Random(991)
