"""Brute-force two-CIST partition search and graph generators.

The search here shares no code with :mod:`fancist.cist`; it works on adjacency
bitmasks so that it can serve as an independent check of both the validator
and the constructor.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .cist import CistPartition
from .errors import FixtureUnavailable, GenerationFailed, InvalidInput, TooLarge
from .graph import Graph, is_connected, mu2

MAX_ORACLE_N = 25


@dataclass(frozen=True)
class OracleResult:
    found: bool
    partition: CistPartition | None
    partitions_checked: int


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _side_connected(adj: list[int], side: int) -> bool:
    start = side & -side
    seen = start
    frontier = start
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        new = adj[v] & side & ~seen
        seen |= new
        frontier |= new
    return seen == side


def _cross_ok(adj: list[int], left: int, full: int) -> bool:
    right = full & ~left
    cross = [adj[v] & (right if left >> v & 1 else left) for v in range(len(adj))]
    todo = full
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = cross[v] & ~comp
            comp |= new
            frontier |= new
        todo &= ~comp
        degree_sum = 0
        rest = comp
        while rest:
            v = rest.bit_length() - 1
            rest &= ~(1 << v)
            degree_sum += bin(cross[v]).count("1")
        if degree_sum // 2 < bin(comp).count("1"):
            return False
    return True


def _valid_mask(adj: list[int], left: int, full: int) -> bool:
    right = full & ~left
    return _side_connected(adj, left) and _side_connected(adj, right) and _cross_ok(adj, left, full)


def _scan(adj: list[int], lo: int, hi: int) -> int | None:
    """First index ``b`` in ``[lo, hi)`` whose bipartition is valid."""
    n = len(adj)
    full = (1 << n) - 1
    for b in range(lo, hi):
        if _valid_mask(adj, 1 | (b << 1), full):
            return b
    return None


def oracle_2cist_partition(g: Graph, jobs: int = 1) -> OracleResult:
    """Exhaustively search bipartitions with vertex 0 on the first side.

    Index ``b`` puts vertex ``i + 1`` on the first side when bit ``i`` of
    ``b`` is set; indices are tried in increasing order and the first valid
    one is returned. ``jobs > 1`` splits the range across processes without
    changing the answer.
    """
    if g.n > MAX_ORACLE_N:
        raise TooLarge(f"oracle limited to n <= {MAX_ORACLE_N}, got {g.n}")
    if g.n < 2:
        return OracleResult(False, None, 0)
    adj = _masks(g)
    total = (1 << (g.n - 1)) - 1  # the all-ones index leaves the second side empty
    if jobs <= 1 or total < 1024:
        hit = _scan(adj, 0, total)
    else:
        step = math.ceil(total / (jobs * 4))
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = list(pool.map(_scan, [adj] * len(bounds), *zip(*bounds)))
        hit = min((h for h in hits if h is not None), default=None)
    if hit is None:
        return OracleResult(False, None, total)
    left = 1 | (hit << 1)
    v1 = [v for v in range(g.n) if left >> v & 1]
    return OracleResult(True, CistPartition.split(g, v1), hit + 1)


# ---------------------------------------------------------------------------
# generators


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidInput("complete graph needs n >= 1")
    return Graph.complete(n)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidInput("both sides need at least one vertex")
    return Graph.complete_bipartite(a, b)


def sharpness_graph(s: int, t: int) -> Graph:
    """Cliques ``K_s`` and ``K_t`` joined through one apex (the last vertex)."""
    if s < 2 or t < 2:
        raise InvalidInput(f"clique sizes must be at least 2, got ({s}, {t})")
    apex = s + t
    edges = list(combinations(range(s), 2))
    edges += combinations(range(s, s + t), 2)
    edges += ((v, apex) for v in range(apex))
    return Graph(s + t + 1, edges)


def two_cut_graph(side1: int, side2: int, uv_edge: bool = True) -> Graph:
    """Cut ``{0, 1}`` joined to every vertex of two cliques of the given sizes.

    Vertices ``2..side1+1`` form the first clique, the rest the second.
    """
    if side1 < 1 or side2 < 1:
        raise InvalidInput("both sides need at least one vertex")
    a = range(2, 2 + side1)
    b = range(2 + side1, 2 + side1 + side2)
    edges = list(combinations(a, 2)) + list(combinations(b, 2))
    edges += ((c, w) for c in (0, 1) for w in (*a, *b))
    if uv_edge:
        edges.append((0, 1))
    return Graph(2 + side1 + side2, edges)


def _gnp(n: int, p: float, rng: random.Random) -> set[tuple[int, int]]:
    return {(u, v) for u, v in combinations(range(n), 2) if rng.random() < p}


def _dirac(n: int, rng: random.Random) -> Graph:
    edges = _gnp(n, rng.uniform(0.2, 0.6), rng)
    need = math.ceil(n / 2)
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for v in rng.sample(range(n), n):
        while len(adj[v]) < need:
            w = rng.choice([w for w in range(n) if w != v and w not in adj[v]])
            adj[v].add(w)
            adj[w].add(v)
    return Graph(n, {(u, v) for u in range(n) for v in adj[u] if u < v})


def _sparsified(n: int, rng: random.Random) -> Graph:
    """Delete random edges from K_n while the Fan bound survives."""
    edges = set(combinations(range(n), 2))
    target = rng.randint(0, len(edges))
    order = sorted(edges)
    rng.shuffle(order)
    removed = 0
    for e in order:
        if removed >= target:
            break
        trial = Graph(n, edges - {e})
        if is_connected(trial) and mu2(trial) >= n:
            edges.discard(e)
            removed += 1
    return Graph(n, edges)


def _blobs(n: int, rng: random.Random) -> Graph:
    """Two dense blobs sharing a hub set; hub size 2 tends to give 2-cuts."""
    hubs = rng.randint(2, max(2, n // 3))
    rest = list(range(hubs, n))
    rng.shuffle(rest)
    cut = rng.randint(1, len(rest) - 1)
    a, b = rest[:cut], rest[cut:]
    edges = set(combinations(sorted(a), 2)) | set(combinations(sorted(b), 2))
    for h in range(hubs):
        for w in rest:
            if rng.random() < 0.85:
                edges.add((h, w))
    for h1, h2 in combinations(range(hubs), 2):
        if rng.random() < 0.5:
            edges.add((h1, h2))
    return Graph(n, edges)


def _dense(n: int, rng: random.Random) -> Graph:
    return Graph(n, _gnp(n, rng.uniform(0.6, 0.95), rng))


FAN_STYLES = {"dirac": _dirac, "dense": _dense, "blobs": _blobs, "sparsified": _sparsified}


def fan_random(n: int, seed: int, style: str | None = None, attempts: int = 1000) -> Graph:
    """Random connected graph on ``n`` vertices with ``mu2 >= n``.

    ``style`` picks the sampler; by default it is drawn from the seed. The
    same ``(n, seed, style)`` always yields the same graph.
    """
    if n < 7:
        raise InvalidInput(f"fan_random needs n >= 7, got {n}")
    rng = random.Random(f"fan_random:{n}:{seed}:{style}")
    for _ in range(attempts):
        name = style or rng.choice(sorted(FAN_STYLES))
        if name not in FAN_STYLES:
            raise InvalidInput(f"unknown style {name!r}")
        g = FAN_STYLES[name](n, rng)
        if is_connected(g) and mu2(g) >= n:
            return g
    raise GenerationFailed(f"no graph found for n={n}, seed={seed}, style={style}")


# ---------------------------------------------------------------------------
# branch fixtures

# Small graphs found by randomized search, frozen so each drives the
# constructor into the named branch.
_FIXTURE_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "Case1_Sub11": (7, [(0, 2), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 6), (2, 3), (2, 5), (3, 4), (4, 5), (4, 6), (5, 6)]),
    "Case1_Sub12": (7, [(0, 1), (0, 3), (0, 5), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (4, 6), (5, 6)]),
    # x=0, y=1, u1=2 universal, u2=3 of degree 3, X={4}, Y={5, 6}
    "Case1_Sub13": (7, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (4, 5), (4, 6), (5, 6)]),
    "Case2_Claim34_MMeetsCut": (7, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 4), (1, 5), (1, 6), (2, 3), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)]),
    "Case2_Sub21_DEq1": (7, [(0, 1), (0, 2), (0, 4), (0, 5), (1, 3), (1, 5), (1, 6), (2, 3), (2, 5), (2, 6), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)]),
    # K_{4,4}
    "Case2_Sub21_DGe2": (8, [(i, j) for i in range(4) for j in range(4, 8)]),
    "Case2_Sub221": (8, [(0, 3), (0, 5), (0, 6), (1, 2), (1, 3), (1, 5), (1, 6), (1, 7), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 7), (4, 5), (4, 6), (4, 7), (5, 7), (6, 7)]),
    "Case2_Sub222_Direct": (10, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (2, 5), (2, 6), (2, 7), (2, 8), (3, 5), (3, 6), (3, 7), (3, 8), (4, 5), (4, 6), (4, 7), (4, 8), (5, 6), (5, 8), (5, 9), (6, 7), (6, 9), (7, 8), (7, 9), (8, 9)]),
}

#: Branches that ``construct`` cannot reach. Every cut it hands to the
#: claim-3.4 construction contains a common neighbor of x and y, and when D is
#: nonempty no |M|-cut through x and y exists at all.
UNREACHABLE = ("Case2_Claim34_MDisjointCut", "Case2_Sub222_Claim34")


def _fixture_graph(label: str) -> Graph | None:
    if label == "Complete":
        return Graph.complete(7)
    if label == "Kappa2_BigSide":
        return two_cut_graph(2, 4)
    if label == "Kappa2_Singleton_uvEdge":
        return two_cut_graph(1, 6)
    if label == "Kappa2_Singleton_NoUvEdge":
        return two_cut_graph(1, 6, uv_edge=False)
    if label == "Case2_DEmpty":
        return Graph(7, set(combinations(range(7), 2)) - {(0, 1)})
    if label in _FIXTURE_EDGES:
        n, edges = _FIXTURE_EDGES[label]
        return Graph(n, edges)
    return None


def case_fixture(label: str) -> Graph:
    """A graph that drives :func:`fancist.constructor.construct` into ``label``."""
    from .constructor import BRANCHES

    if label not in BRANCHES:
        raise InvalidInput(f"unknown branch label {label!r}")
    g = _fixture_graph(label)
    if g is None:
        raise FixtureUnavailable(f"no fixture known for {label}")
    return g


# ---------------------------------------------------------------------------
# GenSpec


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: tuple[int, ...] = ()
    seed: int = 0
    meta: dict = field(default_factory=dict, compare=False)


GEN_FAMILIES = ("complete", "complete_bipartite", "sharpness", "lemma3_fixture", "fan_random", "case_fixture")


def generate(spec: GenSpec) -> Graph:
    family, params = spec.family, spec.params

    def need(k: int) -> None:
        if len(params) != k:
            raise InvalidInput(f"{family} takes {k} integer parameter(s), got {len(params)}")

    if family == "complete":
        need(1)
        return complete_graph(*params)
    if family == "complete_bipartite":
        need(2)
        return complete_bipartite_graph(*params)
    if family == "sharpness":
        need(2)
        return sharpness_graph(*params)
    if family == "lemma3_fixture":
        if len(params) not in (2, 3):
            raise InvalidInput("lemma3_fixture takes side sizes and an optional uv flag")
        return two_cut_graph(params[0], params[1], bool(params[2]) if len(params) == 3 else True)
    if family == "fan_random":
        need(1)
        return fan_random(params[0], spec.seed, spec.meta.get("style"))
    if family == "case_fixture":
        label = spec.meta.get("label")
        if label is None:
            raise InvalidInput("case_fixture needs a branch label")
        return case_fixture(label)
    raise InvalidInput(f"unknown family {family!r}; expected one of {', '.join(GEN_FAMILIES)}")
