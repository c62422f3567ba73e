"""Graph recognition: chordality, asteroidal triples, interval graphs,
holes, induced cycles, and path components.

Interval recognition goes through the classical characterization (chordal
and asteroidal-triple-free) rather than building an interval model: the
hole or triple returned on failure is the certificate the rest of the
library wants.  Tie-breaking is always by smallest vertex id, so every
order and certificate is reproducible.
"""

from collections import deque
from dataclasses import dataclass

from dponiche.derive import UndirectedGraph

EliminationOrder = tuple[int, ...]


class InvalidSequenceError(ValueError):
    """A cycle sequence with repeats or fewer than three vertices."""


@dataclass(frozen=True)
class AsteroidalTriple:
    """Three pairwise non-adjacent vertices, each pair connected by a path
    avoiding the closed neighborhood of the third."""

    u: int
    v: int
    w: int


@dataclass(frozen=True)
class CycleCertificate:
    """An induced cycle, listed in traversal order."""

    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)


def neighborhood(g: UndirectedGraph, v: int) -> frozenset[int]:
    """Open neighborhood of v."""
    return g.neighbors(v)


def find_triangle(g: UndirectedGraph) -> tuple[int, int, int] | None:
    """Some triangle as a sorted vertex triple, or None."""
    masks = g.masks
    for u, v in g.edges():
        common = masks[u] & masks[v]
        if common:
            w = (common & -common).bit_length() - 1
            return tuple(sorted((u, v, w)))
    return None


def is_triangle_free(g: UndirectedGraph) -> bool:
    return find_triangle(g) is None


def lexbfs_order(g: UndirectedGraph) -> EliminationOrder:
    """Lexicographic BFS order, deterministic: ties go to the smallest id."""
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    remaining = set(range(n))
    order = []
    for step in range(n):
        best = max(remaining, key=lambda u: labels[u])
        v = min(u for u in remaining if labels[u] == labels[best])
        order.append(v)
        remaining.remove(v)
        for u in g.adj[v]:
            if u in remaining:
                labels[u].append(n - step)
    return tuple(order)


def _check_order(g: UndirectedGraph, order: EliminationOrder) -> None:
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertex ids")


def _peo_violation(g: UndirectedGraph, order: EliminationOrder):
    """A triple (v, a, b) where a, b are later neighbors of v but not
    adjacent to each other; None when the order is a perfect elimination
    order."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        later = sorted(u for u in g.adj[v] if pos[u] > pos[v])
        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if b not in g.adj[a]:
                    return (v, a, b)
    return None


def is_perfect_elimination_order(g: UndirectedGraph, order: EliminationOrder) -> bool:
    """True iff each vertex's later neighbors form a clique."""
    _check_order(g, order)
    return _peo_violation(g, order) is None


def perfect_elimination_order(g: UndirectedGraph) -> EliminationOrder | None:
    """A certifying elimination order when g is chordal, else None.

    The reverse of a lexicographic BFS order is a perfect elimination order
    exactly when the graph is chordal, so one check decides.
    """
    order = tuple(reversed(lexbfs_order(g)))
    if _peo_violation(g, order) is None:
        return order
    return None


def is_chordal(g: UndirectedGraph) -> bool:
    return perfect_elimination_order(g) is not None


def _bfs_path(g: UndirectedGraph, start: int, goal: int,
              banned: frozenset[int]) -> tuple[int, ...] | None:
    """Shortest start-goal path through vertices outside `banned`."""
    if start in banned or goal in banned:
        return None
    parent = {start: -1}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            path = [x]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        for y in sorted(g.adj[x]):
            if y not in parent and y not in banned:
                parent[y] = x
                queue.append(y)
    return None


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest rotation/reflection, so certificates compare across runs."""
    m = len(cycle)
    best = None
    for seq in (cycle, tuple(reversed(cycle))):
        for r in range(m):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    return best


def _hole_through(g: UndirectedGraph, v: int, a: int, b: int) -> tuple[int, ...] | None:
    """An induced cycle through v, a, b where a, b are non-adjacent
    neighbors of v: close a shortest a-b path that avoids N[v] \\ {a, b}.
    Shortest paths in an induced subgraph are chordless, so any path found
    closes to a hole."""
    banned = frozenset((g.adj[v] | {v}) - {a, b})
    path = _bfs_path(g, a, b, banned)
    if path is None:
        return None
    return _canonical_cycle((v,) + path)


def find_hole(g: UndirectedGraph) -> CycleCertificate | None:
    """An induced cycle of length >= 4 iff g is not chordal.

    The failed perfect-elimination step supplies a vertex with two
    non-adjacent later neighbors; if no avoiding path closes that triple,
    scan all such triples (one must close, since a hole exists)."""
    order = tuple(reversed(lexbfs_order(g)))
    violation = _peo_violation(g, order)
    if violation is None:
        return None
    cycle = _hole_through(g, *violation)
    if cycle is None:
        for v in range(g.n):
            nbrs = sorted(g.adj[v])
            for i, a in enumerate(nbrs):
                for b in nbrs[i + 1:]:
                    if b in g.adj[a]:
                        continue
                    cycle = _hole_through(g, v, a, b)
                    if cycle is not None:
                        break
                if cycle is not None:
                    break
            if cycle is not None:
                break
    if cycle is None or not verify_induced_cycle(g, cycle):
        raise RuntimeError("non-chordal graph yielded no verified hole (bug)")
    return CycleCertificate(cycle=cycle)


def _component_labels(g: UndirectedGraph, banned: frozenset[int]) -> list[int]:
    """Component id per vertex in g minus `banned` (-1 for banned vertices)."""
    labels = [-1] * g.n
    current = 0
    for s in range(g.n):
        if s in banned or labels[s] >= 0:
            continue
        labels[s] = current
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in banned and labels[y] < 0:
                    labels[y] = current
                    queue.append(y)
        current += 1
    return labels


def find_asteroidal_triple(g: UndirectedGraph) -> AsteroidalTriple | None:
    """The smallest asteroidal triple in sorted-triple order, or None.

    For each vertex the components of g minus its closed neighborhood are
    precomputed; a triple qualifies when each pair lands in one component
    of the graph minus the third's closed neighborhood."""
    n = g.n
    comp = [
        _component_labels(g, frozenset(g.adj[v] | {v})) for v in range(n)
    ]
    for u in range(n):
        for v in range(u + 1, n):
            if v in g.adj[u]:
                continue
            for w in range(v + 1, n):
                if w in g.adj[u] or w in g.adj[v]:
                    continue
                if (comp[w][u] == comp[w][v] != -1
                        and comp[v][u] == comp[v][w] != -1
                        and comp[u][v] == comp[u][w] != -1):
                    return AsteroidalTriple(u, v, w)
    return None


def is_interval(g: UndirectedGraph) -> bool:
    """Chordal and asteroidal-triple-free."""
    return is_chordal(g) and find_asteroidal_triple(g) is None


def interval_diagnosis(
    g: UndirectedGraph,
) -> tuple[bool, CycleCertificate | AsteroidalTriple | None]:
    """(True, None) for interval graphs, else (False, hole-or-triple)."""
    hole = find_hole(g)
    if hole is not None:
        return False, hole
    at = find_asteroidal_triple(g)
    if at is not None:
        return False, at
    return True, None


def connected_components(g: UndirectedGraph) -> list[list[int]]:
    """Vertex lists of the components, each sorted, in order of smallest id."""
    labels = _component_labels(g, frozenset())
    count = max(labels, default=-1) + 1
    comps: list[list[int]] = [[] for _ in range(count)]
    for v, c in enumerate(labels):
        comps[c].append(v)
    return comps


def components_are_paths(g: UndirectedGraph) -> bool:
    """True iff every component is a path (single vertices count)."""
    if any(len(nbrs) > 2 for nbrs in g.adj):
        return False
    for comp in connected_components(g):
        edges = sum(len(g.adj[v]) for v in comp) // 2
        if edges != len(comp) - 1:
            return False
    return True


def verify_induced_cycle(g: UndirectedGraph, seq) -> bool:
    """True iff seq traverses an induced cycle: consecutive pairs (cyclically)
    are edges and every other pair is a non-edge."""
    seq = tuple(seq)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise InvalidSequenceError("cycle needs >= 3 distinct vertices")
    for v in seq:
        g.check_vertex(v)
    m = len(seq)
    for i in range(m):
        for j in range(i + 1, m):
            expected = (j - i == 1) or (i == 0 and j == m - 1)
            if (seq[j] in g.adj[seq[i]]) != expected:
                return False
    return True


def find_induced_c4(g: UndirectedGraph) -> tuple[int, int, int, int] | None:
    """Vertices (a, b, c, d) inducing a 4-cycle with edges ab, bc, cd, da."""
    masks = g.masks
    for b in range(g.n):
        for d in range(b + 1, g.n):
            if d in g.adj[b]:
                continue
            common = masks[b] & masks[d]
            rest = common
            while rest:
                low = rest & -rest
                a = low.bit_length() - 1
                rest ^= low
                others = common & ~masks[a] & ~low
                if others:
                    c = (others & -others).bit_length() - 1
                    return (a, b, c, d)
    return None


def has_induced_c4(g: UndirectedGraph) -> bool:
    return find_induced_c4(g) is not None
