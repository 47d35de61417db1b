"""Command-line interface: every result is one JSON document on stdout.

Exit codes: 0 on success, 1 with {"code", "message"} on a domain error,
2 on unparseable input (bad JSON, bad flags, missing files).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import charpoly as cp
from . import hypergraph as hg
from . import io as tio
from . import patterns as pt
from . import spectral as sp
from . import transforms as tf
from .core import DEFAULT_SIZE_CAP, DenseTensor, apply_vector, direct_product, \
    general_product, tensor_power
from .errors import TensorError


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--mode", choices=("exact", "float"), default="exact",
                   help="scalar parsing mode for input files")
    p.add_argument("--out", metavar="PATH",
                   help="also write the JSON result to this file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tenprod",
        description="General tensor products, spectra, and pattern analysis")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="general product of two tensors")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    _add_common(p)

    p = sub.add_parser("power", help="k-th general-product power")
    p.add_argument("a")
    p.add_argument("k", type=int)
    p.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    _add_common(p)

    p = sub.add_parser("apply", help="contract a tensor against a vector")
    p.add_argument("a")
    p.add_argument("x")
    _add_common(p)

    p = sub.add_parser("kron", help="direct (Kronecker-style) product")
    p.add_argument("a")
    p.add_argument("b")
    _add_common(p)

    p = sub.add_parser("similar", help="permutation or diagonal similarity")
    p.add_argument("a")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--perm", metavar="PATH",
                     help="JSON array: 1-based permutation images")
    grp.add_argument("--diag", metavar="PATH",
                     help="JSON array or vector document of diagonal entries")
    _add_common(p)

    p = sub.add_parser("congruent", help="P A P^T for a matrix P")
    p.add_argument("a")
    p.add_argument("p")
    _add_common(p)

    p = sub.add_parser("charpoly",
                       help="characteristic polynomial (dim 2, or any matrix)")
    p.add_argument("a")
    p.add_argument("--tol", type=float, default=1e-8,
                   help="root certification tolerance")
    _add_common(p)

    p = sub.add_parser("spectrum", help="certified eigenvalues (dim 2)")
    p.add_argument("a")
    p.add_argument("--tol", type=float, default=1e-8)
    _add_common(p)

    p = sub.add_parser("rho", help="spectral radius by power iteration")
    p.add_argument("a")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=100_000)
    p.add_argument("--shift", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=None,
                   help="seed for a randomized initial vector (default: ones)")
    _add_common(p)

    p = sub.add_parser("hgraph", help="uniform hypergraph operations")
    hsub = p.add_subparsers(dest="hcommand", required=True)
    ph = hsub.add_parser("adj", help="adjacency tensor")
    ph.add_argument("g")
    _add_common(ph)
    ph = hsub.add_parser("cartesian", help="box product hypergraph")
    ph.add_argument("g")
    ph.add_argument("h")
    _add_common(ph)
    ph = hsub.add_parser("direct", help="direct product hypergraph")
    ph.add_argument("g")
    ph.add_argument("h")
    _add_common(ph)
    ph = hsub.add_parser("spectrum-check",
                         help="compose factor Perron pairs and verify them "
                              "against both product tensors")
    ph.add_argument("g")
    ph.add_argument("h")
    ph.add_argument("--tol", type=float, default=1e-8)
    _add_common(ph)

    p = sub.add_parser("analyze", help="positivity profile of a zero pattern")
    p.add_argument("a")
    p.add_argument("--eps", type=float, default=0.0,
                   help="float entries with |v| <= eps count as zero")
    _add_common(p)

    p = sub.add_parser("census", help="analyze every pattern of a shape")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--cap", type=int, default=256,
                   help="refuse shapes with more patterns than this")
    p.add_argument("--jobs", type=int, default=1)
    _add_common(p)

    return ap


def _load_tensor(path: str, mode: str) -> DenseTensor:
    return tio.tensor_from_json(tio.load_json(path), mode)


def _report_to_dict(rep: pt.PatternReport) -> dict:
    from dataclasses import asdict
    return asdict(rep)


def _emit(payload, out_path):
    text = tio.dumps(payload)
    print(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _run(args) -> int:
    mode = getattr(args, "mode", "exact")
    cmd = args.command
    if cmd == "product":
        t = general_product(_load_tensor(args.a, mode),
                            _load_tensor(args.b, mode),
                            size_cap=args.size_cap)
        _emit(tio.tensor_to_json(t), args.out)
    elif cmd == "power":
        t = tensor_power(_load_tensor(args.a, mode), args.k,
                         size_cap=args.size_cap)
        _emit(tio.tensor_to_json(t), args.out)
    elif cmd == "apply":
        t = apply_vector(_load_tensor(args.a, mode),
                         tio.vector_from_json(tio.load_json(args.x), mode))
        _emit(tio.tensor_to_json(t), args.out)
    elif cmd == "kron":
        t = direct_product(_load_tensor(args.a, mode),
                           _load_tensor(args.b, mode))
        _emit(tio.tensor_to_json(t), args.out)
    elif cmd == "similar":
        a = _load_tensor(args.a, mode)
        if args.perm:
            images = tio.load_json(args.perm)
            if not isinstance(images, list):
                raise ValueError("permutation file must hold a JSON array")
            t = tf.permutation_conjugate(
                a, tf.Permutation(tuple(int(i) for i in images)))
        else:
            d = tio.vector_from_json(tio.load_json(args.diag), mode)
            t = tf.diagonal_similarity(a, tf.DiagonalMatrix(d.entries))
        _emit(tio.tensor_to_json(t), args.out)
    elif cmd == "congruent":
        t = tf.congruence(_load_tensor(args.a, mode),
                          _load_tensor(args.p, mode))
        _emit(tio.tensor_to_json(t), args.out)
    elif cmd == "charpoly":
        poly = cp.characteristic_polynomial(_load_tensor(args.a, "exact"))
        roots = cp.polynomial_roots(poly, tol=args.tol)
        payload = tio.polynomial_to_json(poly)
        payload["roots"] = tio.roots_to_json(roots)
        _emit(payload, args.out)
    elif cmd == "spectrum":
        a = _load_tensor(args.a, "exact")
        roots = cp.spectrum_dim2(a, tol=args.tol)
        _emit({
            "rho": cp.spectral_radius_from_roots(roots),
            "roots": tio.roots_to_json(roots),
        }, args.out)
    elif cmd == "rho":
        a = _load_tensor(args.a, mode)
        initial = None
        if args.seed is not None:
            rng = random.Random(args.seed)
            initial = tuple(rng.uniform(0.5, 1.5) for _ in range(a.dim))
        res = sp.power_method_rho(
            a, sp.IterationConfig(tol=args.tol, max_iter=args.max_iter,
                                  shift=args.shift),
            initial=initial)
        payload = res.to_dict()
        if args.out:
            full = dict(payload)
            full["u"] = list(res.vector)
            _emit_split(payload, full, args.out)
        else:
            _emit(payload, None)
    elif cmd == "hgraph":
        _run_hgraph(args)
    elif cmd == "analyze":
        a = _load_tensor(args.a, mode)
        rep = pt.analyze_pattern(pt.zero_pattern(a, eps=args.eps))
        _emit(_report_to_dict(rep), args.out)
    elif cmd == "census":
        rows = []
        for row in pt.census_rows(args.order, args.dim,
                                  pattern_cap=args.cap, jobs=args.jobs):
            print(tio.dumps(row.to_dict()))
            rows.append(row)
        summary = pt.summarize_census(args.order, args.dim, rows).to_dict()
        print(tio.dumps({"summary": summary}))
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(tio.dumps({"rows": [r.to_dict() for r in rows],
                                    "summary": summary}) + "\n")
    else:  # pragma: no cover - argparse enforces the choices
        raise ValueError(f"unknown command {cmd}")
    return 0


def _emit_split(stdout_payload, file_payload, out_path):
    print(tio.dumps(stdout_payload))
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(tio.dumps(file_payload) + "\n")


def _run_hgraph(args):
    cmd = args.hcommand
    if cmd == "adj":
        g = tio.hypergraph_from_json(tio.load_json(args.g))
        _emit(tio.tensor_to_json(hg.adjacency_tensor(g)), args.out)
        return
    g = tio.hypergraph_from_json(tio.load_json(args.g))
    h = tio.hypergraph_from_json(tio.load_json(args.h))
    if cmd == "cartesian":
        _emit(tio.hypergraph_to_json(hg.cartesian_product(g, h)), args.out)
    elif cmd == "direct":
        _emit(tio.hypergraph_to_json(hg.direct_product(g, h)), args.out)
    elif cmd == "spectrum-check":
        a = hg.adjacency_tensor(g).to_float()
        b = hg.adjacency_tensor(h).to_float()
        pa = sp.power_method_rho(a)
        pb = sp.power_method_rho(b)
        pair_a = tf.EigenPair(pa.rho, pa.vector)
        pair_b = tf.EigenPair(pb.rho, pb.vector)
        sum_pair, prod_pair = hg.compose_product_eigenpairs(
            a, pair_a, b, pair_b, tol=args.tol)
        sum_res = tf.verify_eigenpair(hg.cartesian_sum_tensor(a, b), sum_pair)
        prod_res = tf.verify_eigenpair(hg.direct_product_tensor(a, b), prod_pair)
        _emit({
            "lambda": pa.rho,
            "mu": pb.rho,
            "sum_value": sum_pair.value,
            "product_value": prod_pair.value,
            "sum_residual": float(sum_res),
            "product_residual": float(prod_res),
            "tol": args.tol,
            "verified": bool(max(float(sum_res), float(prod_res)) <= args.tol),
        }, args.out)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _run(args)
    except TensorError as exc:
        print(tio.dumps({"code": exc.code, "message": str(exc)}))
        return 1
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(tio.dumps({"code": "ParseError", "message": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
