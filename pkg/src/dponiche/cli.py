"""Command-line interface.

Subcommands: witness (build + certify a cycle witness family), derive
(points file -> graph file), check (recognition properties with
certificates), suite (seeded structure checkers), search (chordal
non-interval hunt).  All outputs are canonical: identical flags give
byte-identical files.  Timing goes to stderr so reports stay comparable.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from dponiche import formats, harness
from dponiche.derive import GRAPH_KINDS, UndirectedGraph, derive_all
from dponiche.dpo import Dpo, DuplicatePointError
from dponiche.graphalg import (
    AsteroidalTriple,
    CycleCertificate,
    components_are_paths,
    connected_components,
    find_asteroidal_triple,
    find_hole,
    find_induced_c4,
    find_triangle,
    interval_diagnosis,
)
from dponiche.witness import CertificationError, certify_witness

PROPERTIES = ("interval", "chordal", "triangle-free", "paths", "at-free", "induced-c4")


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_points(path: Path):
    with open(path, encoding="ascii") as fh:
        doc = json.load(fh)
    return formats.points_from_doc(doc)


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def cmd_witness(args) -> int:
    if args.n < 4:
        return _fail("--n must be at least 4", 2)
    try:
        cert = certify_witness(args.n)
    except CertificationError as exc:
        return _fail(str(exc), 3)
    out = Path(args.out)
    points = cert.bundle.point_set
    graph = derive_all(Dpo(points))["niche"]
    try:
        _write(out / "points.json", formats.dumps_canonical(formats.points_to_doc(points)))
        _write(out / "niche.json",
               formats.dumps_canonical(formats.graph_to_doc(graph, "niche")))
        _write(out / "certificate.json",
               formats.dumps_canonical(formats.certificate_to_doc(cert)))
        if args.dot:
            ids = [points.index_of(p) for p in cert.cycle]
            cycle_edges = {
                tuple(sorted((ids[i], ids[(i + 1) % len(ids)])))
                for i in range(len(ids))
            }
            _write(out / "witness.dot",
                   formats.graph_to_dot(graph, name=f"niche_{args.n}",
                                        highlight=cycle_edges,
                                        scale=args.dot_scale))
    except OSError as exc:
        return _fail(f"cannot write output: {exc}", 2)
    print(f"certified induced cycle of length {args.n} "
          f"({len(points)} points) in {out}")
    return 0


def cmd_derive(args) -> int:
    try:
        points = _load_points(Path(args.input))
    except (OSError, json.JSONDecodeError, formats.FormatError,
            DuplicatePointError) as exc:
        return _fail(str(exc), 2)
    graph = derive_all(Dpo(points))[args.graph]
    try:
        _write(Path(args.out), formats.dumps_canonical(formats.graph_to_doc(graph, args.graph)))
        if args.dot:
            dot_path = Path(args.out).with_suffix(".dot")
            _write(dot_path, formats.graph_to_dot(graph, name=args.graph,
                                                  scale=args.dot_scale))
    except OSError as exc:
        return _fail(f"cannot write output: {exc}", 2)
    return 0


def _certificate_json(g: UndirectedGraph, cert) -> dict:
    if isinstance(cert, CycleCertificate):
        vertices = list(cert.cycle)
        kind = "hole"
    elif isinstance(cert, AsteroidalTriple):
        vertices = [cert.u, cert.v, cert.w]
        kind = "asteroidal-triple"
    else:
        kind, vertices = cert
        vertices = list(vertices)
    out = {"kind": kind, "vertices": vertices}
    if g.labels is not None:
        out["points"] = [formats.point_to_obj(g.labels[v]) for v in vertices]
    return out


def _check_property(g: UndirectedGraph, prop: str) -> tuple[bool, dict | None]:
    if prop == "interval":
        ok, cert = interval_diagnosis(g)
        return ok, None if ok else _certificate_json(g, cert)
    if prop == "chordal":
        hole = find_hole(g)
        return hole is None, None if hole is None else _certificate_json(g, hole)
    if prop == "triangle-free":
        tri = find_triangle(g)
        return tri is None, None if tri is None else _certificate_json(g, ("triangle", tri))
    if prop == "paths":
        if components_are_paths(g):
            return True, None
        bad = next(
            comp for comp in connected_components(g)
            if any(len(g.adj[v]) > 2 for v in comp)
            or sum(len(g.adj[v]) for v in comp) // 2 != len(comp) - 1
        )
        return False, _certificate_json(g, ("non-path-component", bad))
    if prop == "at-free":
        at = find_asteroidal_triple(g)
        return at is None, None if at is None else _certificate_json(g, at)
    if prop == "induced-c4":
        # Holds means free of induced 4-cycles; the certificate on failure
        # is the offending quadruple in cycle order.
        c4 = find_induced_c4(g)
        return c4 is None, None if c4 is None else _certificate_json(g, ("induced-c4", c4))
    raise ValueError(f"unknown property {prop!r}")


def cmd_check(args) -> int:
    path = Path(args.input)
    try:
        with open(path, encoding="ascii") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc), 2)
    fmt = doc.get("format") if isinstance(doc, dict) else None
    try:
        if fmt == formats.POINTS_FORMAT:
            points = formats.points_from_doc(doc)
            graph = derive_all(Dpo(points))[args.graph or "niche"]
        elif fmt == formats.GRAPH_FORMAT:
            if args.graph:
                return _fail("--graph applies only to point-file input", 2)
            graph, _ = formats.graph_from_doc(doc)
        else:
            return _fail(f"unrecognized input format {fmt!r}", 2)
    except (formats.FormatError, DuplicatePointError) as exc:
        return _fail(str(exc), 2)
    holds, certificate = _check_property(graph, args.property)
    verdict = {"property": args.property, "holds": holds}
    if certificate is not None:
        verdict["certificate"] = certificate
    print(formats.dumps_canonical(verdict), end="")
    return 0 if holds else 1


def cmd_suite(args) -> int:
    cfg = harness.GeneratorConfig(
        seed=args.seed,
        max_points=args.max_points,
        third_offsets=args.thirds,
        trials=args.trials,
    )
    started = time.monotonic()
    report = harness.run_property_suite(cfg)
    elapsed = time.monotonic() - started
    print(formats.dumps_canonical(report.to_json()), end="")
    print(f"suite: {cfg.trials} trials, {report.failed} failures, "
          f"{elapsed:.1f}s", file=sys.stderr)
    return 0 if report.failed == 0 else 1


def cmd_search(args) -> int:
    cfg = harness.GeneratorConfig(
        seed=args.seed,
        max_points=args.max_points,
        trials=args.trials,
    )
    started = time.monotonic()
    report = harness.search_chordal_noninterval(cfg)
    elapsed = time.monotonic() - started
    lines = [json.dumps(hit.to_json()) for hit in report.hits]
    lines.append(json.dumps({"summary": report.summary_json()}))
    try:
        _write(Path(args.out), "\n".join(lines) + "\n")
    except OSError as exc:
        return _fail(f"cannot write report: {exc}", 2)
    print(formats.dumps_canonical(report.summary_json()), end="")
    print(f"search: {cfg.trials} trials, {len(report.hits)} hits, "
          f"{elapsed:.1f}s", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dponiche",
        description="Derived graphs of dominance orders on planar point sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="build and certify a cycle witness family")
    p.add_argument("--n", type=int, required=True, help="cycle length (>= 4)")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--dot", action="store_true", help="also write a DOT file")
    p.add_argument("--dot-scale", type=int, default=100,
                   help="DOT position units per coordinate unit")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("derive", help="derive a graph from a points file")
    p.add_argument("--input", required=True, help="points JSON file")
    p.add_argument("--graph", choices=GRAPH_KINDS, default="niche")
    p.add_argument("--out", required=True, help="output graph JSON file")
    p.add_argument("--dot", action="store_true",
                   help="also write a DOT file next to --out")
    p.add_argument("--dot-scale", type=int, default=100,
                   help="DOT position units per coordinate unit")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("check", help="check a recognition property")
    p.add_argument("--input", required=True, help="points or graph JSON file")
    p.add_argument("--property", choices=PROPERTIES, required=True)
    p.add_argument("--graph", choices=GRAPH_KINDS, default=None,
                   help="derived graph to check for point-file input (default niche)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("suite", help="run the structure checkers on seeded instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--max-points", type=int, default=12)
    p.add_argument("--thirds", action=argparse.BooleanOptionalAction, default=True,
                   help="mix in third-offset coordinates")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("search", help="hunt for a chordal non-interval niche graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--max-points", type=int, default=12)
    p.add_argument("--out", required=True, help="JSONL report file")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
