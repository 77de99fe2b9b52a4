"""Two-part CIST partitions, tree extraction, and CIST verifiers.

A pair of spanning trees is *completely independent* when, for every two
vertices, the connecting paths in the two trees share no edge and no inner
vertex. A partition ``(V1, V2)`` of the vertex set yields such a pair exactly
when both sides induce connected subgraphs and every component of the cross
bipartite graph contains a cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidPartition, NotACistPartition, NotASpanningTree
from .graph import Edge, Graph, bipartite_between, components


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CistPartition:
    v1: frozenset[int]
    v2: frozenset[int]

    @classmethod
    def of(cls, v1: Iterable[int], v2: Iterable[int]) -> "CistPartition":
        return cls(frozenset(v1), frozenset(v2))

    @classmethod
    def split(cls, g: Graph, v1: Iterable[int]) -> "CistPartition":
        """Partition with ``v1`` on one side and everything else on the other."""
        side = frozenset(v1)
        return cls(side, frozenset(range(g.n)) - side)

    def check_shape(self, g: Graph) -> None:
        if not self.v1 or not self.v2:
            raise InvalidPartition("both sides must be nonempty")
        if self.v1 & self.v2:
            raise InvalidPartition(f"sides overlap on {sorted(self.v1 & self.v2)}")
        if self.v1 | self.v2 != frozenset(range(g.n)):
            missing = sorted(set(range(g.n)) - (self.v1 | self.v2))
            extra = sorted((self.v1 | self.v2) - set(range(g.n)))
            raise InvalidPartition(f"not a partition of 0..{g.n - 1} (missing {missing}, foreign {extra})")


@dataclass(frozen=True)
class TreePair:
    t1: frozenset[Edge]
    t2: frozenset[Edge]

    @classmethod
    def of(cls, t1: Iterable[Iterable[int]], t2: Iterable[Iterable[int]]) -> "TreePair":
        return cls(frozenset(_edge(*e) for e in t1), frozenset(_edge(*e) for e in t2))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: dict | None = field(default=None)

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# partition validity


def cross_components(g: Graph, p: CistPartition) -> list[tuple[frozenset[int], list[Edge]]]:
    """Components of the cross bipartite graph, each with its edge list.

    Every vertex of ``G`` belongs to the cross graph, so a vertex without a
    neighbor on the other side is a one-vertex (tree) component.
    """
    view = bipartite_between(g, p.v1, p.v2)
    nbrs: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in view.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen: set[int] = set()
    out = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for z in sorted(nbrs[w]):
                if z not in comp:
                    comp.add(z)
                    queue.append(z)
        seen |= comp
        edges = [e for e in view.edges if e[0] in comp]
        out.append((frozenset(comp), sorted(_edge(*e) for e in edges)))
    return out


def is_cist_partition(g: Graph, p: CistPartition) -> Verdict:
    p.check_shape(g)
    for name, side in (("v1", p.v1), ("v2", p.v2)):
        parts = components(g, side)
        if len(parts) != 1:
            return Verdict(False, {"reason": "side_disconnected", "side": name, "components": [sorted(c) for c in parts]})
    for comp, edges in cross_components(g, p):
        if len(edges) < len(comp):
            return Verdict(False, {"reason": "tree_component", "vertices": sorted(comp), "edges": edges})
    return Verdict(True)


# ---------------------------------------------------------------------------
# partition -> trees


def _bfs_tree(g: Graph, side: frozenset[int]) -> list[Edge]:
    root = min(side)
    seen = {root}
    queue = deque([root])
    edges = []
    while queue:
        w = queue.popleft()
        for z in g.neighbors(w):
            if z in side and z not in seen:
                seen.add(z)
                edges.append(_edge(w, z))
                queue.append(z)
    return edges


def _find_cycle(nbrs: dict[int, list[int]], root: int) -> list[int]:
    """Vertices of some cycle reachable from ``root``, in cyclic order."""
    parent = {root: -1}
    on_path = [root]
    depth = {root: 0}
    iters = [iter(nbrs[root])]
    while iters:
        w = on_path[-1]
        for z in iters[-1]:
            if z == parent[w]:
                continue
            if z in depth:
                # back edge to an ancestor on the current DFS path
                return on_path[depth[z]:]
            parent[z] = w
            depth[z] = len(on_path)
            on_path.append(z)
            iters.append(iter(nbrs[z]))
            break
        else:
            on_path.pop()
            iters.pop()
    return []


def out_edge_orientation(g: Graph, p: CistPartition) -> dict[int, int]:
    """Map each vertex to the head of its single outgoing cross edge.

    Each cross component is oriented so every vertex has out-degree at least
    one: a cycle is oriented cyclically and all other vertices point along a
    BFS tree toward the cycle.
    """
    view = bipartite_between(g, p.v1, p.v2)
    nbrs: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in view.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    for v in nbrs:
        nbrs[v].sort()

    head: dict[int, int] = {}
    for comp, _ in cross_components(g, p):
        cycle = _find_cycle(nbrs, min(comp))
        if not cycle:
            raise NotACistPartition(f"cross component {sorted(comp)} is a tree")
        for i, w in enumerate(cycle):
            head[w] = cycle[(i + 1) % len(cycle)]
        queue = deque(cycle)
        while queue:
            w = queue.popleft()
            for z in nbrs[w]:
                if z not in head:
                    head[z] = w
                    queue.append(z)
    return head


def partition_to_trees(g: Graph, p: CistPartition) -> TreePair:
    verdict = is_cist_partition(g, p)
    if not verdict.ok:
        raise NotACistPartition(f"partition fails validity: {verdict.witness}")
    head = out_edge_orientation(g, p)
    t1 = _bfs_tree(g, p.v1) + [_edge(w, head[w]) for w in sorted(p.v2)]
    t2 = _bfs_tree(g, p.v2) + [_edge(w, head[w]) for w in sorted(p.v1)]
    return TreePair(frozenset(t1), frozenset(t2))


# ---------------------------------------------------------------------------
# verifiers


class _RootedTree:
    def __init__(self, n: int, edges: Iterable[Edge]):
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.parent = [-1] * n
        self.depth = [0] * n
        self.degree = [len(x) for x in nbrs]
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        while queue:
            w = queue.popleft()
            for z in nbrs[w]:
                if not seen[z]:
                    seen[z] = True
                    self.parent[z] = w
                    self.depth[z] = self.depth[w] + 1
                    queue.append(z)

    def path(self, u: int, v: int) -> list[int]:
        left, right = [u], [v]
        while u != v:
            if self.depth[u] >= self.depth[v]:
                u = self.parent[u]
                left.append(u)
            else:
                v = self.parent[v]
                right.append(v)
        return left + right[-2::-1]


def check_spanning_tree(g: Graph, edges: Iterable[Edge], name: str = "tree") -> None:
    edges = set(edges)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise NotASpanningTree(f"{name}: ({u}, {v}) is not an edge of the graph")
    if len(edges) != g.n - 1:
        raise NotASpanningTree(f"{name}: has {len(edges)} edges, a spanning tree needs {g.n - 1}")
    touched = {x for e in edges for x in e}
    if g.n > 1 and len(touched) != g.n:
        raise NotASpanningTree(f"{name}: misses vertices {sorted(set(range(g.n)) - touched)}")
    nbrs: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        w = stack.pop()
        for z in nbrs[w]:
            if z not in seen:
                seen.add(z)
                stack.append(z)
    if len(seen) != g.n:
        raise NotASpanningTree(f"{name}: not connected")


def verify_cists_definitional(g: Graph, tp: TreePair) -> Verdict:
    """Compare the two tree paths of every vertex pair directly."""
    check_spanning_tree(g, tp.t1, "t1")
    check_spanning_tree(g, tp.t2, "t2")
    r1, r2 = _RootedTree(g.n, tp.t1), _RootedTree(g.n, tp.t2)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            p1, p2 = r1.path(u, v), r2.path(u, v)
            shared_edges = {_edge(*e) for e in zip(p1, p1[1:])} & {_edge(*e) for e in zip(p2, p2[1:])}
            if shared_edges:
                return Verdict(False, {"pair": [u, v], "shared_edge": list(min(shared_edges))})
            shared_inner = set(p1[1:-1]) & set(p2[1:-1])
            if shared_inner:
                return Verdict(False, {"pair": [u, v], "shared_vertex": min(shared_inner)})
    return Verdict(True)


def internal_vertices(n: int, edges: Iterable[Edge]) -> set[int]:
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    return {v for v in range(n) if degree[v] >= 2}


def verify_cists_leafrule(g: Graph, tp: TreePair) -> Verdict:
    """Edge-disjoint trees in which no vertex is internal to both."""
    check_spanning_tree(g, tp.t1, "t1")
    check_spanning_tree(g, tp.t2, "t2")
    shared = tp.t1 & tp.t2
    if shared:
        return Verdict(False, {"shared_edge": list(min(shared))})
    both = internal_vertices(g.n, tp.t1) & internal_vertices(g.n, tp.t2)
    if both:
        return Verdict(False, {"shared_vertex": min(both)})
    return Verdict(True)
