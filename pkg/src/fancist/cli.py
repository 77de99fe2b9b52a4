"""Command-line interface: ``fancist check|construct|verify|oracle|gen``.

Exit codes: 0 success, 1 negative answer or rejected input, 2 unreadable or
malformed input (or oracle size cap), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .cist import (
    TreePair,
    is_cist_partition,
    partition_to_trees,
    verify_cists_definitional,
    verify_cists_leafrule,
)
from .constructor import construct
from .errors import (
    CistError,
    InternalInvariantViolation,
    InvalidInput,
    NotASpanningTree,
    ParseError,
    PreconditionFailed,
    TooLarge,
)
from .graph import Graph, condition_report, format_edge_list, parse_edge_list, parse_pairs
from .oracle import GEN_FAMILIES, GenSpec, generate, oracle_2cist_partition

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUG = 0, 1, 2, 3


class _InputError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_edge_list(text)
    except (ParseError, InvalidInput) as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def input_digest(g: Graph) -> str:
    return "sha256:" + hashlib.sha256(format_edge_list(g).encode()).hexdigest()


def make_certificate(g: Graph) -> dict:
    """Construct, extract trees, run every check, and bundle the results."""
    report = condition_report(g)
    partition, trace = construct(g)
    trees = partition_to_trees(g, partition)
    lab = g.labels

    def edges(es) -> list[list[int]]:
        return sorted(sorted((lab[u], lab[v])) for u, v in es)

    return {
        "schema_version": SCHEMA_VERSION,
        "input_digest": input_digest(g),
        "report": report.as_dict(),
        "trace": trace.as_dict(lab),
        "partition": {"v1": sorted(lab[v] for v in partition.v1), "v2": sorted(lab[v] for v in partition.v2)},
        "trees": {"t1": edges(trees.t1), "t2": edges(trees.t2)},
        "verdicts": {
            "partition_ok": is_cist_partition(g, partition).ok,
            "definitional_ok": verify_cists_definitional(g, trees).ok,
            "leafrule_ok": verify_cists_leafrule(g, trees).ok,
        },
    }


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    report = condition_report(g)
    if args.json:
        _emit(dump_json(report.as_dict()), args.out)
    else:
        d = report.as_dict()
        lines = [f"{key}: {d[key]}" for key in ("n", "min_degree", "kappa", "sigma2", "mu2", "is_connected", "fan_ok")]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.fan_ok else EXIT_NO


def cmd_construct(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    try:
        cert = make_certificate(g)
    except PreconditionFailed as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_NO
    except InternalInvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_BUG
    if not all(cert["verdicts"].values()):
        print(f"certificate verdicts failed: {cert['verdicts']}", file=sys.stderr)
        return EXIT_BUG
    _emit(dump_json(cert), args.out)
    return EXIT_OK


def _read_tree(g: Graph, path: str, name: str) -> frozenset[tuple[int, int]]:
    try:
        _, pairs = parse_pairs(Path(path).read_text())
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    except ParseError as exc:
        raise _InputError(f"{path}: {exc}") from exc
    index = {lab: i for i, lab in enumerate(g.labels)}
    unknown = [x for p in pairs for x in p if x not in index]
    if unknown:
        raise NotASpanningTree(f"{name}: vertex {unknown[0]} is not in the graph")
    return frozenset((min(index[u], index[v]), max(index[u], index[v])) for u, v in pairs)


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    try:
        tp = TreePair(_read_tree(g, args.t1, "t1"), _read_tree(g, args.t2, "t2"))
        definitional = verify_cists_definitional(g, tp)
        leafrule = verify_cists_leafrule(g, tp)
    except NotASpanningTree as exc:
        print(f"NotASpanningTree: {exc}", file=sys.stderr)
        return EXIT_NO
    lab = g.labels

    def relabel(w: dict | None) -> dict | None:
        if w is None:
            return None
        out = {}
        for k, v in w.items():
            out[k] = [lab[x] for x in v] if isinstance(v, list) else lab[v] if isinstance(v, int) else v
        return out

    result = {
        "definitional": {"ok": definitional.ok, "witness": relabel(definitional.witness)},
        "leafrule": {"ok": leafrule.ok, "witness": relabel(leafrule.witness)},
        "agree": definitional.ok == leafrule.ok,
    }
    if args.json:
        _emit(dump_json(result), args.out)
    else:
        lines = [f"definitional: {'ok' if definitional.ok else 'FAIL'}", f"leafrule: {'ok' if leafrule.ok else 'FAIL'}"]
        for name in ("definitional", "leafrule"):
            if result[name]["witness"]:
                lines.append(f"{name} witness: {json.dumps(result[name]['witness'], sort_keys=True)}")
        if not result["agree"]:
            lines.append("verifiers disagree")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if definitional.ok and leafrule.ok else EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    try:
        res = oracle_2cist_partition(g, jobs=args.jobs)
    except TooLarge as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    lab = g.labels
    out = {"found": res.found, "partitions_checked": res.partitions_checked, "partition": None}
    if res.partition is not None:
        out["partition"] = {"v1": sorted(lab[v] for v in res.partition.v1), "v2": sorted(lab[v] for v in res.partition.v2)}
    if args.json:
        _emit(dump_json(out), args.out)
    else:
        lines = [f"found: {res.found}", f"checked: {res.partitions_checked}"]
        if out["partition"]:
            lines.append(f"v1: {out['partition']['v1']}")
            lines.append(f"v2: {out['partition']['v2']}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if res.found else EXIT_NO


def cmd_gen(args: argparse.Namespace) -> int:
    meta = {}
    if args.style:
        meta["style"] = args.style
    if args.label:
        meta["label"] = args.label
    spec = GenSpec(args.family, tuple(args.params), args.seed, meta)
    try:
        g = generate(spec)
    except (InvalidInput, CistError) as exc:
        print(f"cannot generate: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(format_edge_list(g), args.out)
    d = condition_report(g).as_dict()
    summary = f"n={d['n']} m={g.m_edges} kappa={d['kappa']} sigma2={d['sigma2']} mu2={d['mu2']} fan_ok={d['fan_ok']}"
    print(summary, file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the oracle")

    parser = argparse.ArgumentParser(prog="fancist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="report n, kappa, sigma2, mu2 and the Fan condition")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", parents=[common], help="build two CISTs and print a JSON certificate")
    p.add_argument("path")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check a pair of trees with both verifiers")
    p.add_argument("path")
    p.add_argument("--t1", required=True, metavar="FILE")
    p.add_argument("--t2", required=True, metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive two-CIST partition search")
    p.add_argument("path")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="write a generated graph as an edge list")
    p.add_argument("family", choices=GEN_FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--style", help="fan_random sampler")
    p.add_argument("--label", help="branch label for case_fixture")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
