"""Immutable undirected simple graphs and the degree-sum parameters.

Vertices are always the dense ids ``0..n-1``. When a graph is parsed from an
edge list with sparse labels, the original label of each id is kept in
``Graph.labels`` so that results can be reported in the caller's numbering.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput, InvalidPartition, InvalidVertex, ParseError

#: Sentinel for "no such pair" (degree sums) and "unreachable" (distances).
INF = math.inf

Edge = tuple[int, int]


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Instances never change after construction. Anything derived from a graph
    (subgraphs, bipartite views) is a fresh object.
    """

    __slots__ = ("n", "adj", "m_edges", "labels", "_sorted")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Sequence[int] | None = None):
        if n < 0:
            raise InvalidInput(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InvalidInput(f"self-loop at {u}")
            if v in adj[u]:
                raise InvalidInput(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        if labels is None:
            labels = range(n)
        if len(labels) != n:
            raise InvalidInput("labels must name every vertex exactly once")
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self.m_edges = m
        self.labels: tuple[int, ...] = tuple(labels)
        self._sorted = tuple(tuple(sorted(s)) for s in adj)

    # construction helpers -------------------------------------------------
    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    # queries --------------------------------------------------------------
    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in increasing order."""
        self._check(v)
        return self._sorted[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self._sorted[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def is_complete(self) -> bool:
        return all(len(s) == self.n - 1 for s in self.adj)

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        return self.adj[u] & self.adj[v]

    def label_of(self, v: int) -> int:
        return self.labels[v]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} not in 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m_edges})"


@dataclass(frozen=True)
class BipartiteView:
    left: frozenset[int]
    right: frozenset[int]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class ConditionReport:
    n: int
    min_degree: int
    sigma2: float
    mu2: float
    is_connected: bool
    kappa: int
    fan_ok: bool

    def as_dict(self) -> dict:
        def enc(x: float) -> int | str:
            return "inf" if x == INF else int(x)

        return {
            "n": self.n,
            "min_degree": self.min_degree,
            "sigma2": enc(self.sigma2),
            "mu2": enc(self.mu2),
            "is_connected": self.is_connected,
            "kappa": self.kappa,
            "fan_ok": self.fan_ok,
        }


# ---------------------------------------------------------------------------
# edge-list text format


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines into a graph.

    Blank lines and ``#`` comments are skipped. An optional ``p <n>`` header
    fixes the vertex count, in which case labels must lie in ``0..n-1`` and
    unmentioned ids become isolated vertices. Without a header, the distinct
    labels are remapped densely in increasing order.
    """
    header_n, pairs = parse_pairs(text)
    if header_n is not None:
        bad = [x for p in pairs for x in p if x >= header_n]
        if bad:
            raise ParseError(ParseError.SYNTAX, f"label {bad[0]} exceeds header vertex count {header_n}")
        return Graph(header_n, pairs)

    labels = sorted({x for p in pairs for x in p})
    index = {lab: i for i, lab in enumerate(labels)}
    return Graph(len(labels), ((index[u], index[v]) for u, v in pairs), labels=labels)


def parse_pairs(text: str) -> tuple[int | None, list[tuple[int, int]]]:
    """Header vertex count (if any) and the raw label pairs of an edge list."""
    header_n: int | None = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header_n is not None or pairs:
                raise ParseError(ParseError.SYNTAX, "header must come first and only once", lineno)
            if len(tokens) not in (2, 3):
                raise ParseError(ParseError.SYNTAX, f"bad header {line!r}", lineno)
            header_n = _parse_int(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(ParseError.SYNTAX, f"expected two tokens, got {line!r}", lineno)
        u, v = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
        if u == v:
            raise ParseError(ParseError.SELF_LOOP, f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(ParseError.DUPLICATE_EDGE, f"edge {key} repeated", lineno)
        seen.add(key)
        pairs.append(key)
    return header_n, pairs


def _parse_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(ParseError.SYNTAX, f"not an integer: {token!r}", lineno) from None
    if value < 0:
        raise ParseError(ParseError.SYNTAX, f"negative label {value}", lineno)
    return value


def format_edge_list(g: Graph) -> str:
    """Canonical text form: sorted ``u v`` lines with ``u < v``.

    Original labels are used. A ``p <n>`` header with dense ids is emitted
    instead when some vertex is isolated, since it would otherwise vanish.
    """
    if any(not s for s in g.adj):
        lines = [f"p {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    else:
        lab = g.labels
        pairs = sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in g.edges())
        lines = [f"{u} {v}" for u, v in pairs]
    return "".join(line + "\n" for line in lines)


# ---------------------------------------------------------------------------
# traversal


def bfs_distances(g: Graph, source: int) -> list[float]:
    g._check(source)
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        w = queue.popleft()
        for z in g._sorted[w]:
            if dist[z] == INF:
                dist[z] = dist[w] + 1
                queue.append(z)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    g._check(v)
    return bfs_distances(g, u)[v]


def components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by ``within``.

    Components are ordered by their smallest vertex.
    """
    if within is None:
        allowed = set(range(g.n))
    else:
        allowed = set(within)
        for v in allowed:
            g._check(v)
    out = []
    seen: set[int] = set()
    for start in sorted(allowed):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            w = stack.pop()
            for z in g.adj[w]:
                if z in allowed and z not in comp:
                    comp.add(z)
                    stack.append(z)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    return len(components(g, within)) == 1


def separates(g: Graph, cut: Iterable[int]) -> bool:
    """True when removing ``cut`` leaves at least two components."""
    removed = set(cut)
    return len(components(g, set(range(g.n)) - removed)) >= 2


def bipartite_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> BipartiteView:
    left, right = frozenset(a), frozenset(b)
    if left & right:
        raise InvalidPartition(f"sets overlap on {sorted(left & right)}")
    for v in left | right:
        g._check(v)
    edges = tuple((u, v) for u in sorted(left) for v in g._sorted[u] if v in right)
    return BipartiteView(left, right, edges)


# ---------------------------------------------------------------------------
# degree-sum parameters


def distance_two_pairs(g: Graph) -> Iterator[Edge]:
    """Unordered pairs ``(u, v)``, ``u < v``, at distance exactly 2."""
    for u in range(g.n):
        reach: set[int] = set()
        for w in g.adj[u]:
            reach |= g.adj[w]
        for v in sorted(reach - g.adj[u]):
            if v > u:
                yield (u, v)


def mu2(g: Graph) -> float:
    """Minimum degree sum over pairs at distance 2, or ``INF`` if none."""
    return min((len(g.adj[u]) + len(g.adj[v]) for u, v in distance_two_pairs(g)), default=INF)


def sigma2(g: Graph) -> float:
    """Minimum degree sum over nonadjacent pairs, or ``INF`` if none."""
    best = INF
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v not in g.adj[u]:
                best = min(best, len(g.adj[u]) + len(g.adj[v]))
    return best


# ---------------------------------------------------------------------------
# vertex connectivity


def local_vertex_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> tuple[int, frozenset[int]]:
    """Maximum number of internally disjoint s-t paths and a minimum s-t separator.

    ``s`` and ``t`` must be distinct and nonadjacent. With ``cap`` set, the
    search stops once that many paths are found; the separator is then empty.
    Each vertex ``v`` is split into ``2v`` (in) and ``2v+1`` (out) joined by a
    unit arc; graph edges become uncapacitated arcs out->in.
    """
    if s == t or t in g.adj[s]:
        raise InvalidInput(f"({s}, {t}) must be distinct and nonadjacent")
    big = g.n + 1
    cap_arc: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * g.n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap_arc:
            out[a].append(b)
            out[b].append(a)
            cap_arc.setdefault((b, a), 0)
        cap_arc[(a, b)] = cap_arc.get((a, b), 0) + c

    for v in range(g.n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while cap is None or flow < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap_arc[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            # vertices whose in-node is reachable but out-node is not form the cut
            cut = frozenset(v for v in range(g.n) if 2 * v in parent and 2 * v + 1 not in parent)
            return flow, cut
        b = sink
        while b != source:
            a = parent[b]
            cap_arc[(a, b)] -= 1
            cap_arc[(b, a)] += 1
            b = a
        flow += 1
    return flow, frozenset()


def minimum_vertex_cut(g: Graph) -> frozenset[int] | None:
    """A minimum vertex cut, or None for complete graphs. Empty if disconnected."""
    if g.n < 2:
        raise InvalidInput("vertex connectivity needs at least 2 vertices")
    if not is_connected(g):
        return frozenset()
    best: frozenset[int] | None = None
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if t in g.adj[s]:
                continue
            limit = None if best is None else len(best)
            k, cut = local_vertex_connectivity(g, s, t, cap=limit)
            if best is None or k < len(best):
                best = cut
    return best


def vertex_connectivity(g: Graph) -> int:
    """kappa(G): n-1 for complete graphs, 0 when disconnected."""
    cut = minimum_vertex_cut(g)
    return g.n - 1 if cut is None else len(cut)


def condition_report(g: Graph) -> ConditionReport:
    connected = g.n > 0 and is_connected(g)
    m2 = mu2(g)
    kappa = vertex_connectivity(g) if g.n >= 2 else 0
    return ConditionReport(
        n=g.n,
        min_degree=g.min_degree(),
        sigma2=sigma2(g),
        mu2=m2,
        is_connected=connected,
        kappa=kappa,
        fan_ok=connected and g.n >= 7 and m2 >= g.n,
    )
