"""Deterministic stratified corpus of graphs satisfying mu2 >= n."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from fancist import Graph, fan_random, vertex_connectivity
from fancist.oracle import two_cut_graph


@dataclass(frozen=True)
class Item:
    name: str
    stratum: str  # complete | kappa2 | kappa3+ | dirac
    graph: Graph


def _relabel(g: Graph, step: int, offset: int) -> Graph:
    return Graph(g.n, g.edges(), labels=[offset + step * v for v in range(g.n)])


@lru_cache(maxsize=None)
def corpus() -> tuple[Item, ...]:
    items: list[Item] = []
    for n in range(7, 17):
        items.append(Item(f"K{n}", "complete", Graph.complete(n)))
        items.append(Item(f"K{n}-sparse-labels", "complete", _relabel(Graph.complete(n), 3, 5)))

    kappa2 = []
    for a in range(1, 4):
        for b in range(max(a, 7 - 2 - a), 10):
            for uv in (True, False):
                kappa2.append(Item(f"twocut-{a}-{b}-{int(uv)}", "kappa2", two_cut_graph(a, b, uv)))
    seed = 0
    while sum(1 for i in kappa2 if i.name.startswith("blobs")) < 25:
        n = 7 + seed % 10
        g = fan_random(n, seed, "blobs")
        if vertex_connectivity(g) == 2:
            kappa2.append(Item(f"blobs-{n}-{seed}", "kappa2", g))
        seed += 1
    items += kappa2

    per_style = {"dense": 40, "sparsified": 50, "blobs": 30}
    for style, want in per_style.items():
        got, seed = 0, 0
        while got < want:
            n = 7 + seed % 10
            g = fan_random(n, 1000 + seed, style)
            seed += 1
            if vertex_connectivity(g) >= 3 and not g.is_complete():
                items.append(Item(f"{style}-{n}-{1000 + seed - 1}", "kappa3+", g))
                got += 1

    for seed in range(30):
        n = 7 + seed % 10
        items.append(Item(f"dirac-{n}-{seed}", "dirac", fan_random(n, seed, "dirac")))
    return tuple(items)
