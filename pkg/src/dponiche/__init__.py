"""Derived graphs of dominance orders on finite planar point sets.

Builds the dominance digraph of a rational point set, derives its
competition, common-enemy, CCE, and niche graphs, recognizes interval
graphs (chordal + asteroidal-triple-free) with certificates, constructs
certified families whose niche graphs contain an induced n-cycle for every
n >= 4, and property-tests the structural claims against definitional
oracles.
"""

from dponiche.derive import (
    GRAPH_KINDS,
    UndirectedGraph,
    cce_graph,
    common_enemy_graph,
    competition_graph,
    derive_all,
    niche_graph,
)
from dponiche.dpo import Dpo, DuplicatePointError, PointSet, UnknownVertexError, build_dpo
from dponiche.geom import Point, Rational, parse_rational, render_rational
from dponiche.graphalg import (
    AsteroidalTriple,
    CycleCertificate,
    components_are_paths,
    find_asteroidal_triple,
    find_hole,
    has_induced_c4,
    is_chordal,
    is_interval,
    is_triangle_free,
    lexbfs_order,
    verify_induced_cycle,
)
from dponiche.kernels import BACKEND
from dponiche.witness import CertificationError, WitnessBundle, certify_witness, witness_points

__version__ = "0.1.0"

__all__ = [
    "AsteroidalTriple",
    "BACKEND",
    "CertificationError",
    "CycleCertificate",
    "Dpo",
    "DuplicatePointError",
    "GRAPH_KINDS",
    "Point",
    "PointSet",
    "Rational",
    "UndirectedGraph",
    "UnknownVertexError",
    "WitnessBundle",
    "build_dpo",
    "cce_graph",
    "certify_witness",
    "common_enemy_graph",
    "competition_graph",
    "components_are_paths",
    "derive_all",
    "find_asteroidal_triple",
    "find_hole",
    "has_induced_c4",
    "is_chordal",
    "is_interval",
    "is_triangle_free",
    "lexbfs_order",
    "niche_graph",
    "parse_rational",
    "render_rational",
    "verify_induced_cycle",
    "witness_points",
]
