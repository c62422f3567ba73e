"""Canonical file formats: point files, graph files, certificates, DOT.

Everything is byte-deterministic: points are sorted canonically, edge
lists are sorted with the smaller id first, rationals are serialized as
exact strings, and JSON is rendered with a fixed layout.
"""

import json

from dponiche.derive import GRAPH_KINDS, UndirectedGraph
from dponiche.dpo import PointSet
from dponiche.geom import Point, parse_rational, render_rational
from dponiche.witness import WitnessCertificate

POINTS_FORMAT = "dpo-points/1"
GRAPH_FORMAT = "dpo-graph/1"
CERTIFICATE_FORMAT = "dpo-certificate/1"


class FormatError(ValueError):
    """A document that does not satisfy its schema."""


def point_to_obj(p: Point) -> dict:
    return {"x": render_rational(p.x1), "y": render_rational(p.x2)}


def point_from_obj(obj) -> Point:
    if not isinstance(obj, dict) or set(obj) != {"x", "y"}:
        raise FormatError(f"point must be an object with x and y: {obj!r}")
    try:
        return Point(parse_rational(obj["x"]), parse_rational(obj["y"]))
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from None


def dumps_canonical(doc: dict) -> str:
    """Fixed JSON layout; identical documents give identical bytes."""
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def points_to_doc(points: PointSet) -> dict:
    return {
        "format": POINTS_FORMAT,
        "points": [point_to_obj(p) for p in points],
    }


def points_from_doc(doc) -> PointSet:
    if not isinstance(doc, dict) or doc.get("format") != POINTS_FORMAT:
        raise FormatError(f"expected a {POINTS_FORMAT} document")
    raw = doc.get("points")
    if not isinstance(raw, list):
        raise FormatError("points must be a list")
    return PointSet(point_from_obj(obj) for obj in raw)


def graph_to_doc(g: UndirectedGraph, kind: str) -> dict:
    if kind not in GRAPH_KINDS:
        raise FormatError(f"unknown graph kind {kind!r}")
    if g.labels is None:
        raise FormatError("graph files need point labels")
    return {
        "format": GRAPH_FORMAT,
        "kind": kind,
        "vertices": [point_to_obj(p) for p in g.labels],
        "edges": [[u, v] for u, v in g.edges()],
    }


def graph_from_doc(doc) -> tuple[UndirectedGraph, str]:
    if not isinstance(doc, dict) or doc.get("format") != GRAPH_FORMAT:
        raise FormatError(f"expected a {GRAPH_FORMAT} document")
    kind = doc.get("kind")
    if kind not in GRAPH_KINDS:
        raise FormatError(f"unknown graph kind {kind!r}")
    labels = [point_from_obj(obj) for obj in doc.get("vertices", [])]
    if sorted(labels) != labels:
        raise FormatError("vertices must be in canonical sorted order")
    if len(set(labels)) != len(labels):
        raise FormatError("duplicate vertices")
    n = len(labels)
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise FormatError("edges must be a list")
    pairs = []
    for e in edges:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) for x in e) or not e[0] < e[1]):
            raise FormatError(f"edge must be [i, j] with i < j: {e!r}")
        pairs.append((e[0], e[1]))
    if pairs != sorted(pairs):
        raise FormatError("edge list must be sorted")
    try:
        graph = UndirectedGraph.from_edges(n, pairs, labels=labels)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return graph, kind


def certificate_to_doc(cert: WitnessCertificate) -> dict:
    points = cert.bundle.point_set
    return {
        "format": CERTIFICATE_FORMAT,
        "n": cert.n,
        "kind": "niche",
        "cycle": [point_to_obj(p) for p in cert.cycle],
        "cycle_indices": [points.index_of(p) for p in cert.cycle],
        "edges": [
            {
                "u": point_to_obj(w.u),
                "v": point_to_obj(w.v),
                "kind": w.kind,
                "witness": point_to_obj(w.witness),
            }
            for w in cert.edge_witnesses
        ],
        "non_edges": [
            {
                "u": point_to_obj(t.u),
                "v": point_to_obj(t.v),
                "below": point_to_obj(t.below),
                "above": point_to_obj(t.above),
            }
            for t in cert.non_edge_tokens
        ],
    }


def graph_to_dot(g: UndirectedGraph, name: str = "graph",
                 highlight: frozenset[tuple[int, int]] | set[tuple[int, int]] = frozenset(),
                 scale: int = 100) -> str:
    """DOT text with vertices pinned at their (scaled) coordinates.

    Highlighted edges (e.g. a certified cycle) are drawn bold; render with
    `neato -n` so the pinned positions are honored.
    """
    marked = {tuple(sorted(e)) for e in highlight}
    lines = [f'graph "{name}" {{', "  layout=neato;",
             "  node [shape=circle, fontsize=10];"]
    for v in range(g.n):
        if g.labels is not None:
            p = g.labels[v]
            x = float(p.x1) * scale
            y = float(p.x2) * scale
            lines.append(
                f'  {v} [label="{p!r}", pos="{x:.2f},{y:.2f}!"];'
            )
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        if (u, v) in marked:
            lines.append(f"  {u} -- {v} [style=bold, penwidth=3];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
