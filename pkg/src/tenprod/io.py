"""JSON round-tripping for tensors, hypergraphs, polynomials, eigenpairs.

Tensor files: {"order": m, "dim": n, "entries": [flat row-major scalars]}
or the sparse form {"order", "dim", "sparse": [[[i_1..i_m], value], ...]}
with 1-based indices.  Scalars: ints stay ints, other rationals are "p/q"
strings, floats are JSON numbers.  Hypergraph files: {"n", "k", "edges":
[[v, ...], ...]} with 1-based vertices.

Exact mode parses ints and "p/q" strings and rejects non-integral floats;
float mode coerces everything to float64.  Emitted documents re-parse to
identical values under the same mode.
"""

from __future__ import annotations

import json

from .charpoly import UnivariatePolynomial
from .core import DenseTensor
from .errors import TensorError
from .hypergraph import UniformHypergraph
from .scalars import scalar_from_json, scalar_to_json


def tensor_to_json(t: DenseTensor) -> dict:
    return {
        "order": t.order,
        "dim": t.dim,
        "entries": [scalar_to_json(v) for v in t.entries],
    }


def tensor_from_json(doc: dict, mode: str = "exact") -> DenseTensor:
    if not isinstance(doc, dict):
        raise ValueError("tensor document must be a JSON object")
    try:
        order = int(doc["order"])
        dim = int(doc["dim"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"tensor document needs integer order and dim: {exc}")
    # shape problems inside a document are malformed input, not domain errors
    try:
        if "entries" in doc:
            entries = [scalar_from_json(v, mode) for v in doc["entries"]]
            return DenseTensor(order, dim, tuple(entries))
        if "sparse" in doc:
            zero = 0.0 if mode == "float" else 0
            entries = [zero] * (dim ** order)
            probe = DenseTensor(order, dim, tuple(entries))
            for item in doc["sparse"]:
                if not (isinstance(item, (list, tuple)) and len(item) == 2):
                    raise ValueError(f"sparse item must be [index, value]: {item!r}")
                idx, val = item
                entries[probe.offset(tuple(int(i) for i in idx))] = \
                    scalar_from_json(val, mode)
            return DenseTensor(order, dim, tuple(entries))
    except TensorError as exc:
        raise ValueError(str(exc))
    raise ValueError("tensor document needs 'entries' or 'sparse'")


def hypergraph_to_json(h: UniformHypergraph) -> dict:
    return {"n": h.n, "k": h.k, "edges": [list(e) for e in h.edges]}


def hypergraph_from_json(doc: dict) -> UniformHypergraph:
    if not isinstance(doc, dict):
        raise ValueError("hypergraph document must be a JSON object")
    try:
        n = int(doc["n"])
        k = int(doc["k"])
        edges = tuple(tuple(int(v) for v in e) for e in doc["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"hypergraph document needs n, k, edges: {exc}")
    try:
        return UniformHypergraph(n, k, edges)
    except TensorError as exc:
        raise ValueError(str(exc))


def polynomial_to_json(p: UnivariatePolynomial) -> dict:
    return {
        "degree": p.degree,
        "coeffs": [scalar_to_json(c) for c in p.coeffs],
    }


def vector_from_json(doc, mode: str = "exact") -> DenseTensor:
    """A vector given either as a bare JSON array or an order-1 tensor
    document."""
    if isinstance(doc, list):
        vals = [scalar_from_json(v, mode) for v in doc]
        return DenseTensor(1, len(vals), tuple(vals))
    t = tensor_from_json(doc, mode)
    if t.order != 1:
        raise ValueError(f"expected a vector, got order {t.order}")
    return t


def roots_to_json(roots) -> list:
    return [[z.real, z.imag] for z in roots]


def load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)
