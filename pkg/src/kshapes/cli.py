"""Command line front end.

    kshapes list --k K --n N
    poset dot --k K --n N
    branch --k K --degree D [--graded] [--format csv|json]
    expand dkr --k K --shape P [--allow-rank-k] [--format json|text]
    expand homology --k K --shape P [--graded]
    verify {tables,bijection,pieri,roundtrip,symmetry,decomposition,equivalence} [--k K] [--n N] [--r R]

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .partitions import DomainError, enumerate_kshapes, format_partition, is_kshape, parse_partition
from .poset import build_poset, format_poly
from .tableaux import decompose_into_weak, dkr, homology_coefficient_vector, is_symmetric
from . import verify as suites

SCHEMA = 1


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except (DomainError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _k_arg(text: str) -> int:
    k = int(text)
    if k < 2:
        raise argparse.ArgumentTypeError("k must be at least 2")
    return k


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def cmd_kshapes(args) -> int:
    for lam in enumerate_kshapes(args.k, args.n):
        print(format_partition(lam))
    return 0


def poset_dot(k: int, n: int) -> str:
    g = build_poset(k, n)
    lines = [f'digraph "Ksh_{k}_{n}" {{', "  rankdir=TB;"]
    for v in g.vertices:
        lines.append(f'  "{format_partition(v)}";')
    for m in sorted(g.edges, key=lambda m: (m.source, m.target)):
        label = "r" if m.kind == "row" else "c"
        lines.append(
            f'  "{format_partition(m.source)}" -> "{format_partition(m.target)}" [label="{label}", charge={m.charge}];'
        )
    lines.append("}")
    return "\n".join(lines)


def cmd_poset(args) -> int:
    print(poset_dot(args.k, args.n))
    return 0


def cmd_branch(args) -> int:
    if args.degree < 1:
        raise DomainError("degree must be positive")
    if args.k > args.degree:
        raise DomainError("k must be at most the degree")
    rows = suites.table_rows(args.k, args.degree, graded=args.graded)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "k": args.k,
            "degree": args.degree,
            "graded": args.graded,
            # the graded polynomials are conjectural beyond the t = 1 case
            "conjectural": args.graded,
            "entries": [{"mu": r[2], "lambda": r[3], "poly": r[4]} for r in rows],
        }
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(suites.tables_csv(rows))
    return 0


def _series_json(series) -> list[dict]:
    return [{"weight": list(w), "coeff": c} for w, c in sorted(series.items()) if c]


def cmd_expand(args) -> int:
    shape, k = args.shape, args.k
    if not is_kshape(shape, k):
        raise DomainError(f"{format_partition(shape)} is not a {k}-shape")
    if args.what == "dkr":
        series = dkr(shape, k, args.allow_rank_k)
        weak = decompose_into_weak(shape, k)
        doc = {
            "schema": SCHEMA,
            "k": k,
            "shape": format_partition(shape),
            "allow_rank_k": args.allow_rank_k,
            "symmetric": is_symmetric(series),
            "monomials": _series_json(series),
            "weak_decomposition": [{"core": format_partition(c), "count": n} for c, n in sorted(weak.items())],
        }
    else:
        vec = homology_coefficient_vector(shape, k, graded=args.graded)
        doc = {
            "schema": SCHEMA,
            "k": k,
            "shape": format_partition(shape),
            "graded": args.graded,
            "conjectural": args.graded,
            "kschur_coefficients": [
                {"core": format_partition(c), "poly": format_poly(p)} for c, p in sorted(vec.items())
            ],
        }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for key, value in doc.items():
            print(f"{key}: {value}")
    return 0


def cmd_verify(args) -> int:
    ks = [args.k] if args.k is not None else None
    n = args.n
    what = args.suite
    if what == "tables":
        degrees = [n] if n is not None else range(2, 7)
        report = suites.verify_tables(degrees)
    elif what == "bijection":
        report = suites.verify_bijection(ks or [2, 3], 6 if n is None else n)
    elif what == "pieri":
        ranks = [args.r] if args.r is not None else None
        report = suites.verify_pieri(ks or [2, 3], 5 if n is None else n, ranks)
    elif what == "roundtrip":
        report = suites.verify_roundtrip(ks or [2, 3], 5 if n is None else n)
    elif what == "symmetry":
        report = suites.verify_structure(ks or [2, 3, 4], 8 if n is None else n)
    elif what == "decomposition":
        report = suites.verify_decomposition(ks or [2, 3, 4], 7 if n is None else n)
    else:
        report = suites.verify_equivalence(ks or [2, 3], 5 if n is None else n)
    if args.verbose:
        for line in report.lines:
            print(line)
    for msg in report.failures[:50]:
        print(f"  {msg}")
    print(report.summary())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kshapes", description="k-shape poset computations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kshapes", help="enumerate k-shapes")
    p.add_argument("action", choices=["list"])
    p.add_argument("--k", type=_k_arg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_kshapes)

    p = sub.add_parser("poset", help="export the k-shape poset")
    p.add_argument("action", choices=["dot"])
    p.add_argument("--k", type=_k_arg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("branch", help="branching polynomial table")
    p.add_argument("--k", type=_k_arg, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--graded", action="store_true")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("expand", help="expansions of a single k-shape")
    p.add_argument("what", choices=["dkr", "homology"])
    p.add_argument("--k", type=_k_arg, required=True)
    p.add_argument("--shape", type=_partition_arg, required=True)
    p.add_argument("--allow-rank-k", action="store_true")
    p.add_argument("--graded", action="store_true")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite",
        choices=["tables", "bijection", "pieri", "roundtrip", "symmetry", "decomposition", "equivalence"],
    )
    p.add_argument("--k", type=_k_arg)
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--r", type=int)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
