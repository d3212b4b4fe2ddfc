"""Command-line front end.

Subcommands:

* ``gen``    — generate a crystal graph and print it as json, dot, or text
* ``apply``  — apply a word of raising/lowering operators to a multisegment
* ``verify`` — run one of the consistency suites and report violations
* ``mult``   — count elements of a fixed weight against the oracle

Exit status: 0 on success (and on a passing verify), 1 on usage or
validation errors, 2 when graph generation hits the node cap.  The cap
defaults to one million nodes and can be overridden by ``--node-cap`` or
the ``CRYSTAL_NODE_CAP`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from .crystal_graph import (
    DEFAULT_NODE_CAP,
    NodeCapExceeded,
    cartan_from_obj,
    cartan_to_obj,
    export_dot,
    export_json,
    export_text,
    generate,
    verify_inverse,
    verify_multiplicities,
    verify_stembridge,
    verify_strings,
    weight_multiplicities,
)
from .crystal_ops import apply_word
from .multisegment import Multisegment, canonicalize
from .oracle import aperiodic_count, enumerate_multisegments, kostant_count
from .root_data import AFFINE_A, FINITE_A, CartanType
from .tableaux import verify_tableau_model
from .young_walls import verify_wall_model

_WORD_TOKEN = re.compile(r"^([ef])(\d+)$")
_MAX_REPORTED_VIOLATIONS = 25


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; we reserve 2 for the cap."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="segcrystal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a crystal graph")
    _add_type_args(gen)
    gen.add_argument("--depth", type=int, required=True, help="degree bound")
    gen.add_argument(
        "--format", choices=("json", "dot", "text"), default="json", help="output format"
    )
    gen.add_argument("--output", help="write to this file instead of stdout")
    gen.add_argument("--node-cap", type=int, help="abort above this many nodes")

    apply_cmd = sub.add_parser("apply", help="apply an operator word")
    apply_cmd.add_argument(
        "word",
        help="operators left to right, e.g. 'f1 f2 e1' (e is raising, f lowering)",
    )
    apply_cmd.add_argument(
        "--input", help="multisegment JSON file (default: read stdin)"
    )

    verify = sub.add_parser("verify", help="run a consistency suite")
    verify.add_argument(
        "--suite",
        choices=(
            "inverse",
            "strings",
            "stembridge",
            "multiplicity",
            "tableaux",
            "youngwall",
            "all",
        ),
        default="all",
        help="which checks to run",
    )
    _add_type_args(verify)
    verify.add_argument("--depth", type=int, required=True, help="degree bound")
    verify.add_argument(
        "--pad", type=int, help="tableau row padding (default: max(depth, 1))"
    )
    verify.add_argument("--node-cap", type=int, help="abort above this many nodes")

    mult = sub.add_parser("mult", help="count elements of one weight")
    _add_type_args(mult)
    mult.add_argument(
        "--beta",
        required=True,
        help="comma-separated dimension vector, e.g. '1,1'",
    )
    return parser


def _add_type_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--type",
        choices=(FINITE_A, AFFINE_A),
        required=True,
        dest="ctype_kind",
        help="root system family",
    )
    sub.add_argument("--n", type=int, required=True, help="rank parameter")


def _resolve_node_cap(option: int | None) -> int:
    if option is not None:
        return option
    env = os.environ.get("CRYSTAL_NODE_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"CRYSTAL_NODE_CAP must be an integer, got {env!r}")
    return DEFAULT_NODE_CAP


def _parse_word(text: str) -> list[tuple[str, int]]:
    ops = []
    for token in text.split():
        match = _WORD_TOKEN.match(token)
        if match is None:
            raise ValueError(
                f"bad operator token {token!r}: expected e<i> or f<i>, e.g. f1"
            )
        ops.append((match.group(1), int(match.group(2))))
    return ops


def _multisegment_to_obj(gamma: Multisegment) -> dict:
    return {
        "cartan": cartan_to_obj(gamma.ctype),
        "segments": [
            {"k": seg.k, "l": seg.l, "mult": mult} for seg, mult in gamma.items()
        ],
    }


def _multisegment_from_obj(obj: dict) -> Multisegment:
    if not isinstance(obj, dict) or "cartan" not in obj or "segments" not in obj:
        raise ValueError("multisegment JSON needs 'cartan' and 'segments' keys")
    ctype = cartan_from_obj(obj["cartan"])
    raw = []
    for item in obj["segments"]:
        if not isinstance(item, dict) or not {"k", "l", "mult"} <= item.keys():
            raise ValueError("each segment needs 'k', 'l', and 'mult'")
        raw.append((int(item["k"]), int(item["l"]), int(item["mult"])))
    return canonicalize(ctype, raw)


def _cmd_gen(args: argparse.Namespace) -> int:
    ctype = CartanType(args.ctype_kind, args.n)
    graph = generate(ctype, args.depth, node_cap=_resolve_node_cap(args.node_cap))
    if args.format == "json":
        text = export_json(graph)
    elif args.format == "dot":
        text = export_dot(graph)
    else:
        text = export_text(graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_apply(args: argparse.Namespace) -> int:
    ops = _parse_word(args.word)
    if args.input:
        with open(args.input, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    else:
        payload = json.load(sys.stdin)
    gamma = _multisegment_from_obj(payload)
    result = apply_word(gamma, ops)
    if result is None:
        print("absent")
    else:
        print(json.dumps(_multisegment_to_obj(result)))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    ctype = CartanType(args.ctype_kind, args.n)
    pad = args.pad if args.pad is not None else max(args.depth, 1)
    wants = (
        ("inverse", "strings", "stembridge", "multiplicity", "tableaux", "youngwall")
        if args.suite == "all"
        else (args.suite,)
    )
    if args.suite != "all":
        if args.suite == "tableaux" and ctype.is_affine:
            raise ValueError("the tableaux suite needs --type finiteA")
        if args.suite == "youngwall" and not ctype.is_affine:
            raise ValueError("the youngwall suite needs --type affineA")
    graph = generate(ctype, args.depth, node_cap=_resolve_node_cap(args.node_cap))
    reports = []
    for suite in wants:
        if suite == "inverse":
            reports.append(verify_inverse(graph))
        elif suite == "strings":
            reports.append(verify_strings(graph))
        elif suite == "stembridge":
            reports.append(verify_stembridge(graph))
        elif suite == "multiplicity":
            reports.append(verify_multiplicities(graph))
        elif suite == "tableaux" and not ctype.is_affine:
            reports.append(verify_tableau_model(args.n, args.depth, pad, graph=graph))
        elif suite == "youngwall" and ctype.is_affine:
            reports.append(verify_wall_model(args.n, args.depth, graph=graph))
    failed = False
    for report in reports:
        print(report.summary())
        if report.violations:
            failed = True
            for line in report.violations[:_MAX_REPORTED_VIOLATIONS]:
                print(f"  {line}")
            hidden = len(report.violations) - _MAX_REPORTED_VIOLATIONS
            if hidden > 0:
                print(f"  ... and {hidden} more")
    return 1 if failed else 0


def _cmd_mult(args: argparse.Namespace) -> int:
    ctype = CartanType(args.ctype_kind, args.n)
    try:
        beta = tuple(int(part) for part in args.beta.split(","))
    except ValueError:
        raise ValueError(f"--beta must be comma-separated integers, got {args.beta!r}")
    if len(beta) != len(ctype.index_set()):
        raise ValueError(
            f"--beta needs {len(ctype.index_set())} entries for this type, "
            f"got {len(beta)}"
        )
    if any(part < 0 for part in beta):
        raise ValueError("--beta entries must be nonnegative")
    depth = sum(beta)
    graph = generate(ctype, depth)
    graph_count = sum(
        1 for node in graph.nodes if node.gamma.dim_vector() == beta
    )
    if ctype.is_affine:
        oracle_count = aperiodic_count(args.n, beta)
    else:
        oracle_count = len(enumerate_multisegments(ctype, beta))
    print(f"graph {graph_count}")
    print(f"oracle {oracle_count}")
    if not ctype.is_affine:
        print(f"kostant {kostant_count(args.n, beta)}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "apply":
            return _cmd_apply(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "mult":
            return _cmd_mult(args)
        raise ValueError(f"unknown command {args.command!r}")
    except NodeCapExceeded as exc:
        print(f"segcrystal: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"segcrystal: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
