"""The four undirected graphs derived from a dominance digraph."""

from collections.abc import Iterable, Sequence

from dponiche import kernels
from dponiche.dpo import Dpo, UnknownVertexError
from dponiche.geom import Point

GRAPH_KINDS = ("competition", "common-enemy", "cce", "niche")


class UndirectedGraph:
    """Simple undirected graph on vertex ids 0..n-1 with optional point labels."""

    __slots__ = ("n", "adj", "labels", "_masks")

    def __init__(self, n: int, adj: Sequence[Iterable[int]],
                 labels: Sequence[Point] | None = None):
        if len(adj) != n:
            raise ValueError("adjacency length must equal vertex count")
        self.n = n
        self.adj = tuple(frozenset(a) for a in adj)
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < n:
                    raise ValueError(f"neighbor {u} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels length must equal vertex count")
        self._masks = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[Point] | None = None) -> "UndirectedGraph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj, labels)

    @property
    def masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks (lazy; shared by the recognizers)."""
        if self._masks is None:
            self._masks = [
                sum(1 << u for u in nbrs) for nbrs in self.adj
            ]
        return self._masks

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adj[v])

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise UnknownVertexError(f"vertex id {v!r} out of range")

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with u < v."""
        return sorted(
            (u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v
        )

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def __eq__(self, other) -> bool:
        return (isinstance(other, UndirectedGraph)
                and self.n == other.n
                and self.adj == other.adj
                and self.labels == other.labels)

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.edge_count()})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _relation_rows(d: Dpo, method: str) -> tuple[list[int], list[int]]:
    if method == "fast":
        x1, x2 = d.point_set.scaled_coords()
        return kernels.relation_rows(x1, x2)
    if method == "scan":
        # Reference path: the per-pair corner-region test, kept obviously
        # correct; the fast path must agree with it (tested).
        n = d.n
        comp = [0] * n
        enemy = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if d.has_common_prey(u, v):
                    comp[u] |= 1 << v
                    comp[v] |= 1 << u
                if d.has_common_predator(u, v):
                    enemy[u] |= 1 << v
                    enemy[v] |= 1 << u
        return comp, enemy
    raise ValueError(f"unknown method {method!r}")


def _graph_from_rows(d: Dpo, rows: list[int]) -> UndirectedGraph:
    return UndirectedGraph(
        d.n, [frozenset(_bits(r)) for r in rows], labels=d.point_set.points
    )


def competition_graph(d: Dpo, method: str = "fast") -> UndirectedGraph:
    """Edge uv iff u and v have a common prey."""
    comp, _ = _relation_rows(d, method)
    return _graph_from_rows(d, comp)


def common_enemy_graph(d: Dpo, method: str = "fast") -> UndirectedGraph:
    """Edge uv iff u and v have a common predator."""
    _, enemy = _relation_rows(d, method)
    return _graph_from_rows(d, enemy)


def cce_graph(d: Dpo, method: str = "fast") -> UndirectedGraph:
    """Edge uv iff u and v have both a common prey and a common predator."""
    comp, enemy = _relation_rows(d, method)
    return _graph_from_rows(d, [a & b for a, b in zip(comp, enemy)])


def niche_graph(d: Dpo, method: str = "fast") -> UndirectedGraph:
    """Edge uv iff u and v have a common prey or a common predator."""
    comp, enemy = _relation_rows(d, method)
    return _graph_from_rows(d, [a | b for a, b in zip(comp, enemy)])


def derive_all(d: Dpo, method: str = "fast") -> dict[str, UndirectedGraph]:
    """All four derived graphs, keyed by kind, from one relation pass."""
    comp, enemy = _relation_rows(d, method)
    return {
        "competition": _graph_from_rows(d, comp),
        "common-enemy": _graph_from_rows(d, enemy),
        "cce": _graph_from_rows(d, [a & b for a, b in zip(comp, enemy)]),
        "niche": _graph_from_rows(d, [a | b for a, b in zip(comp, enemy)]),
    }
