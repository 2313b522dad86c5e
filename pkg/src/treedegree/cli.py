"""Command-line interface.

Subcommands: ``count``, ``enumerate``, ``encode``, ``decode``, ``verify``,
``table``. Output is deterministic; ``--format json`` emits one
schema-versioned document per invocation, and JSON count values are
decimal strings because they outgrow 64-bit integers quickly.

Exit codes: 0 success, 1 verification mismatch or internal consistency
failure (counterexample printed), 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verification
from .compositions import format_composition, parse_composition
from .exact_math import count_kary_outdegree, count_plane_outdegree
from .kary_trees import (
    MarkedKaryTree,
    SubsetPair,
    composition_to_kary_pair,
    enumerate_kary_trees,
    format_kary_tree,
    format_marked_kary_tree,
    kary_pair_to_composition,
    parse_kary_tree,
    phi,
    phi_inverse,
)
from .plane_trees import (
    MarkedPlaneTree,
    bar_delta_decode,
    delta_decode,
    bar_delta_encode,
    enumerate_plane_trees,
    format_marked_plane_tree,
    format_plane_tree,
    parse_plane_tree,
)

SCHEMA = "treedegree/1"

__all__ = ["build_parser", "run", "main"]


def _add_format(parser: argparse.ArgumentParser, *, csv: bool = False) -> None:
    choices = ["text", "json", "csv"] if csv else ["text", "json"]
    parser.add_argument("--format", choices=choices, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treedegree",
        description="Exact vertex-outdegree counting and bijections for plane and k-ary trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="closed-form vertex counts")
    count_sub = count.add_subparsers(dest="family", required=True)
    p = count_sub.add_parser("plane", help="outdegree-i vertices over n-edge plane trees")
    p.add_argument("-n", "--edges", type=int, required=True)
    p.add_argument("-i", "--outdegree", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_count_plane)
    p = count_sub.add_parser("kary", help="outdegree-i vertices over n-edge k-ary trees")
    p.add_argument("-k", "--arity", type=int, required=True)
    p.add_argument("-n", "--edges", type=int, required=True)
    p.add_argument("-i", "--outdegree", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_count_kary)

    enum = sub.add_parser("enumerate", help="list all trees of a given size")
    enum_sub = enum.add_subparsers(dest="family", required=True)
    p = enum_sub.add_parser("plane", help="all plane trees with n edges")
    p.add_argument("-n", "--edges", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_enumerate_plane)
    p = enum_sub.add_parser("kary", help="all k-ary trees with n edges")
    p.add_argument("-k", "--arity", type=int, required=True)
    p.add_argument("-n", "--edges", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_enumerate_kary)

    encode = sub.add_parser("encode", help="trees and marked trees to word/subset form")
    encode_sub = encode.add_subparsers(dest="what", required=True)
    p = encode_sub.add_parser("plane-pair", help="marked plane tree to cyclic word")
    p.add_argument("--tree", required=True, help="balanced-parentheses tree text")
    p.add_argument("--mark", type=int, required=True, help="1-based preorder index")
    _add_format(p)
    p.set_defaults(func=_cmd_encode_plane_pair)
    p = encode_sub.add_parser("kary-pair", help="marked k-ary tree to 0/k word")
    p.add_argument("--tree", required=True, help="slot-form tree text, '.' = empty")
    p.add_argument("--mark", type=int, required=True)
    p.add_argument("-k", "--arity", type=int, help="optional, validated against the tree")
    _add_format(p)
    p.set_defaults(func=_cmd_encode_kary_pair)
    p = encode_sub.add_parser("subsets", help="0/k word to subset pair (X, Y)")
    p.add_argument("--word", required=True, help="composition text, e.g. (3,0,0,0)")
    p.add_argument("-k", "--arity", type=int)
    p.add_argument("-n", "--edges", type=int)
    _add_format(p)
    p.set_defaults(func=_cmd_encode_subsets)

    decode = sub.add_parser("decode", help="word/subset form back to trees")
    decode_sub = decode.add_subparsers(dest="what", required=True)
    p = decode_sub.add_parser(
        "plane",
        help="unit word to plane tree; with --outdegree, cyclic word to marked tree",
    )
    p.add_argument("--word", required=True)
    p.add_argument("-i", "--outdegree", type=int)
    _add_format(p)
    p.set_defaults(func=_cmd_decode_plane)
    p = decode_sub.add_parser("plane-pair", help="cyclic word to marked plane tree")
    p.add_argument("--word", required=True)
    p.add_argument("-i", "--outdegree", type=int, help="optional, validated against the word")
    _add_format(p)
    p.set_defaults(func=_cmd_decode_plane_pair)
    p = decode_sub.add_parser("kary-pair", help="0/k word to marked k-ary tree")
    p.add_argument("--word", required=True)
    p.add_argument("-k", "--arity", type=int)
    p.add_argument("-n", "--edges", type=int)
    p.add_argument("-i", "--outdegree", type=int)
    _add_format(p)
    p.set_defaults(func=_cmd_decode_kary_pair)
    p = decode_sub.add_parser("subsets", help="subset pair (X, Y) to 0/k word")
    p.add_argument("--X", default="", help="comma-separated subset of 1..k")
    p.add_argument("--Y", default="", help="comma-separated subset of 1..kn")
    p.add_argument("-k", "--arity", type=int, required=True)
    p.add_argument("-n", "--edges", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_decode_subsets)

    verify = sub.add_parser("verify", help="formula-vs-oracle sweeps")
    verify.add_argument(
        "what",
        choices=[
            "theorem1",
            "theorem2",
            "identity1",
            "fine",
            "lagrange",
            "bijections",
            "all",
        ],
    )
    verify.add_argument("--max-edges", type=int, default=8)
    verify.add_argument(
        "-k", "--arity", "--max-arity", type=int, default=3, dest="max_arity",
        help="largest arity to sweep",
    )
    _add_format(verify)
    verify.set_defaults(func=_cmd_verify)

    table = sub.add_parser("table", help="count matrix (rows i, columns n)")
    table.add_argument("-k", "--arity", type=int, help="omit for plane trees")
    table.add_argument("--max-edges", type=int, default=8)
    _add_format(table, csv=True)
    table.set_defaults(func=_cmd_table)

    return parser


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def _cmd_count_plane(args: argparse.Namespace) -> int:
    value = count_plane_outdegree(args.edges, args.outdegree)
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "kind": "count",
                "family": "plane",
                "n": str(args.edges),
                "i": str(args.outdegree),
                "count": str(value),
            }
        )
    else:
        print(value)
    return 0


def _cmd_count_kary(args: argparse.Namespace) -> int:
    value = count_kary_outdegree(args.edges, args.arity, args.outdegree)
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "kind": "count",
                "family": "kary",
                "k": str(args.arity),
                "n": str(args.edges),
                "i": str(args.outdegree),
                "count": str(value),
            }
        )
    else:
        print(value)
    return 0


def _cmd_enumerate_plane(args: argparse.Namespace) -> int:
    trees = [format_plane_tree(t) for t in enumerate_plane_trees(args.edges)]
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "kind": "enumerate",
                "family": "plane",
                "n": str(args.edges),
                "count": str(len(trees)),
                "trees": trees,
            }
        )
    else:
        for line in trees:
            print(line)
    return 0


def _cmd_enumerate_kary(args: argparse.Namespace) -> int:
    trees = [format_kary_tree(t) for t in enumerate_kary_trees(args.arity, args.edges)]
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "kind": "enumerate",
                "family": "kary",
                "k": str(args.arity),
                "n": str(args.edges),
                "count": str(len(trees)),
                "trees": trees,
            }
        )
    else:
        for line in trees:
            print(line)
    return 0


def _cmd_encode_plane_pair(args: argparse.Namespace) -> int:
    tree = parse_plane_tree(args.tree)
    if not 1 <= args.mark <= tree.vertex_count:
        raise ValueError(f"mark {args.mark} out of range 1..{tree.vertex_count}")
    marked = MarkedPlaneTree(tree, args.mark)
    word = bar_delta_encode(marked)
    n = tree.edge_count
    i = n - sum(word)
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "kind": "encode",
                "what": "plane-pair",
                "n": str(n),
                "i": str(i),
                "word": format_composition(word),
            }
        )
    else:
        print(format_composition(word))
    return 0


def _cmd_encode_kary_pair(args: argparse.Namespace) -> int:
    tree = parse_kary_tree(args.tree, args.arity)
    if not 1 <= args.mark <= tree.vertex_count:
        raise ValueError(f"mark {args.mark} out of range 1..{tree.vertex_count}")
    word = kary_pair_to_composition(MarkedKaryTree(tree, args.mark))
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "kind": "encode",
                "what": "kary-pair",
                "k": str(tree.arity),
                "n": str(tree.edge_count),
                "word": format_composition(word),
            }
        )
    else:
        print(format_composition(word))
    return 0


def _cmd_encode_subsets(args: argparse.Namespace) -> int:
    word = parse_composition(args.word)
    pair = phi(word, args.arity, args.edges)
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "kind": "encode",
                "what": "subsets",
                "pair": json.loads(pair.to_json()),
            }
        )
    else:
        print(pair.to_json())
    return 0


def _cmd_decode_plane(args: argparse.Namespace) -> int:
    word = parse_composition(args.word)
    if args.outdegree is None:
        tree = delta_decode(word)
        rendered = format_plane_tree(tree)
    else:
        marked = bar_delta_decode(word, args.outdegree)
        rendered = format_marked_plane_tree(marked)
    if args.format == "json":
        _emit_json(
            {"schema": SCHEMA, "kind": "decode", "what": "plane", "tree": rendered}
        )
    else:
        print(rendered)
    return 0


def _cmd_decode_plane_pair(args: argparse.Namespace) -> int:
    word = parse_composition(args.word)
    derived = len(word) - sum(word)
    if derived < 0:
        raise ValueError(f"word sum exceeds its length: {args.word!r}")
    if args.outdegree is not None and args.outdegree != derived:
        raise ValueError(f"word encodes outdegree {derived}, expected {args.outdegree}")
    marked = bar_delta_decode(word, derived)
    rendered = format_marked_plane_tree(marked)
    if args.format == "json":
        _emit_json(
            {"schema": SCHEMA, "kind": "decode", "what": "plane-pair", "tree": rendered}
        )
    else:
        print(rendered)
    return 0


def _cmd_decode_kary_pair(args: argparse.Namespace) -> int:
    word = parse_composition(args.word)
    marked = composition_to_kary_pair(word, args.arity, args.edges, args.outdegree)
    rendered = format_marked_kary_tree(marked)
    if args.format == "json":
        _emit_json(
            {"schema": SCHEMA, "kind": "decode", "what": "kary-pair", "tree": rendered}
        )
    else:
        print(rendered)
    return 0


def _parse_subset(text: str, label: str) -> frozenset[int]:
    stripped = text.strip()
    if not stripped:
        return frozenset()
    try:
        values = [int(piece.strip()) for piece in stripped.split(",")]
    except ValueError:
        raise ValueError(f"{label} must be comma-separated integers: {text!r}") from None
    subset = frozenset(values)
    if len(subset) != len(values):
        raise ValueError(f"{label} contains repeated elements: {text!r}")
    return subset


def _cmd_decode_subsets(args: argparse.Namespace) -> int:
    pair = SubsetPair(
        args.arity,
        args.edges,
        _parse_subset(args.X, "--X"),
        _parse_subset(args.Y, "--Y"),
    )
    word = phi_inverse(pair)
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "kind": "decode",
                "what": "subsets",
                "word": format_composition(word),
            }
        )
    else:
        print(format_composition(word))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    max_edges = args.max_edges
    max_arity = args.max_arity
    if max_edges < 1 or max_arity < 1:
        raise ValueError("--max-edges and --max-arity must be at least 1")
    cells = verification.default_kary_cells(max_edges, max_arity)
    bijection_cells = [(k, n) for k, n in cells if k * n <= 12]
    if args.what == "theorem1":
        results = [
            verification.check_plane_counts(max_edges),
            verification.check_plane_sums(max_edges),
        ]
    elif args.what == "theorem2":
        results = [
            verification.check_kary_counts(cells),
            verification.check_kary_sums(cells),
        ]
    elif args.what == "identity1":
        results = [verification.check_sequence_identity(max_edges)]
    elif args.what == "fine":
        results = [verification.check_fine_numbers(max_edges)]
    elif args.what == "lagrange":
        results = verification.check_series_identities(max_arity=max(max_arity, 2))
    elif args.what == "bijections":
        results = verification.check_bijections(min(max_edges, 8), bijection_cells)
    else:
        results = verification.verify_all(max_edges, max_arity)
    ok = all(r.passed for r in results)
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "kind": "verify",
                "what": args.what,
                "ok": ok,
                "checks": [
                    {
                        "name": r.name,
                        "scope": r.scope,
                        "status": "pass" if r.passed else "fail",
                        "detail": r.detail,
                    }
                    for r in results
                ],
            }
        )
    else:
        for r in results:
            print(r.line())
    return 0 if ok else 1


def _cmd_table(args: argparse.Namespace) -> int:
    max_edges = args.max_edges
    if max_edges < 1:
        raise ValueError("--max-edges must be at least 1")
    columns = list(range(1, max_edges + 1))
    if args.arity is None:
        rows = list(range(0, max_edges + 1))
        cell = lambda i, n: count_plane_outdegree(n, i)  # noqa: E731
        family = "plane"
    else:
        if args.arity < 1:
            raise ValueError("--arity must be at least 1")
        rows = list(range(0, args.arity + 1))
        cell = lambda i, n: count_kary_outdegree(n, args.arity, i)  # noqa: E731
        family = "kary"
    matrix = [[cell(i, n) for n in columns] for i in rows]
    if args.format == "json":
        doc: dict = {"schema": SCHEMA, "kind": "table", "family": family}
        if args.arity is not None:
            doc["k"] = str(args.arity)
        doc["columns"] = [str(n) for n in columns]
        doc["rows"] = [
            {"i": str(i), "counts": [str(v) for v in row]}
            for i, row in zip(rows, matrix)
        ]
        _emit_json(doc)
    elif args.format == "csv":
        print("i/n," + ",".join(str(n) for n in columns))
        for i, row in zip(rows, matrix):
            print(f"{i}," + ",".join(str(v) for v in row))
    else:
        headers = ["i\\n"] + [str(n) for n in columns]
        str_rows = [[str(i)] + [str(v) for v in row] for i, row in zip(rows, matrix)]
        widths = [
            max(len(headers[c]), *(len(r[c]) for r in str_rows))
            for c in range(len(headers))
        ]
        print("  ".join(h.rjust(w) for h, w in zip(headers, widths)))
        for r in str_rows:
            print("  ".join(v.rjust(w) for v, w in zip(r, widths)))
    return 0


def run(args: argparse.Namespace) -> int:
    """Execute a parsed request; returns the process exit code."""
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RecursionError:
        print("error: input is nested too deeply", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
