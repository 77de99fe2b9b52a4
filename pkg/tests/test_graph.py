import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fancist import INF, Graph, ParseError, format_edge_list, mu2, parse_edge_list, sigma2, vertex_connectivity
from fancist.errors import InvalidInput, InvalidPartition, InvalidVertex
from fancist.graph import (
    bipartite_between,
    components,
    condition_report,
    distance,
    distance_two_pairs,
    is_connected,
    minimum_vertex_cut,
    separates,
)
from fancist.oracle import sharpness_graph

from corpus import corpus


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


# parsing ---------------------------------------------------------------------


def test_parse_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.n == 3 and g.m_edges == 2
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text, kind",
    [("0 0", ParseError.SELF_LOOP), ("0 1\n1 0", ParseError.DUPLICATE_EDGE), ("0 x", ParseError.SYNTAX), ("0 1 2", ParseError.SYNTAX)],
)
def test_parse_errors(text, kind):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.kind == kind


def test_parse_comments_header_and_sparse_labels():
    g = parse_edge_list("# comment\n\np 5\n0 1  # trailing\n3 4\n")
    assert g.n == 5 and g.degree(2) == 0
    sparse = parse_edge_list("10 20\n20 35\n")
    assert sparse.n == 3 and sparse.labels == (10, 20, 35)
    assert format_edge_list(sparse) == "10 20\n20 35\n"
    with pytest.raises(ParseError):
        parse_edge_list("p 2\n0 5")


@given(graphs(min_n=2))
def test_format_parse_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_writer_sorted_lines():
    g = Graph(4, [(3, 2), (1, 0), (0, 3), (1, 2)])
    assert format_edge_list(g) == "0 1\n0 3\n1 2\n2 3\n"


@given(graphs())
def test_adjacency_invariants(g):
    assert sum(len(s) for s in g.adj) == 2 * g.m_edges
    for u in range(g.n):
        assert u not in g.adj[u]
        for v in g.adj[u]:
            assert u in g.adj[v]


# distance --------------------------------------------------------------------


def test_distance_examples():
    k33 = Graph.complete_bipartite(3, 3)
    assert distance(k33, 0, 1) == 2
    assert distance(k33, 0, 3) == 1
    assert distance(k33, 2, 2) == 0
    two = Graph(4, [(0, 1), (2, 3)])
    assert distance(two, 0, 3) == INF
    with pytest.raises(InvalidVertex):
        distance(k33, 0, 6)


# degree-sum parameters -------------------------------------------------------


def test_mu2_sigma2_examples():
    k7 = Graph.complete(7)
    assert mu2(k7) == INF and sigma2(k7) == INF
    k33 = Graph.complete_bipartite(3, 3)
    assert mu2(k33) == 6 and sigma2(k33) == 6
    assert mu2(Graph.cycle(5)) == 4
    assert sigma2(Graph.path(3)) == 2
    assert mu2(sharpness_graph(3, 3)) == 6


def test_mu2_matches_brute_force_distance():
    rng = random.Random(2024)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 11), rng.uniform(0.1, 0.9))
        brute = min(
            (g.degree(u) + g.degree(v) for u, v in combinations(range(g.n), 2) if distance(g, u, v) == 2),
            default=INF,
        )
        assert mu2(g) == brute


@given(graphs())
def test_distance_two_pairs_agree_with_networkx(g):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    lengths = dict(nx.all_pairs_shortest_path_length(h))
    expected = sorted((u, v) for u in range(g.n) for v in range(u + 1, g.n) if lengths[u].get(v) == 2)
    assert sorted(distance_two_pairs(g)) == expected


# connectivity ----------------------------------------------------------------


def test_connectivity_examples():
    assert vertex_connectivity(Graph.complete(7)) == 6
    assert vertex_connectivity(Graph.cycle(5)) == 2
    assert vertex_connectivity(sharpness_graph(3, 3)) == 1
    assert vertex_connectivity(Graph(4, [(0, 1), (2, 3)])) == 0
    with pytest.raises(InvalidInput):
        vertex_connectivity(Graph(1))


def exhaustive_kappa(g: Graph) -> int:
    for k in range(g.n - 1):
        for cut in combinations(range(g.n), k):
            rest = set(range(g.n)) - set(cut)
            if len(components(g, rest)) > 1:
                return k
    return g.n - 1


def test_connectivity_matches_exhaustive_search():
    rng = random.Random(7)
    for _ in range(150):
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.2, 0.95))
        assert vertex_connectivity(g) == exhaustive_kappa(g)


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=12))
def test_connectivity_matches_networkx(g):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    assert vertex_connectivity(g) == nx.node_connectivity(h)


def test_minimum_cut_separates():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 10), rng.uniform(0.3, 0.8))
        cut = minimum_vertex_cut(g)
        if cut is None:
            assert g.is_complete()
        elif cut:
            assert separates(g, cut) and len(cut) == vertex_connectivity(g)


# views -----------------------------------------------------------------------


def test_bipartite_between_examples():
    k4 = Graph.complete(4)
    assert len(bipartite_between(k4, {0, 1}, {2, 3}).edges) == 4
    assert bipartite_between(Graph.path(3), {0}, {2}).edges == ()
    assert len(bipartite_between(Graph.complete_bipartite(3, 3), {0, 1, 2}, {3, 4, 5}).edges) == 9
    with pytest.raises(InvalidPartition):
        bipartite_between(k4, {0, 1}, {1, 2})


def test_components_examples():
    p3 = Graph.path(3)
    assert components(p3, {0, 2}) == [frozenset({0}), frozenset({2})]
    assert components(Graph.complete(4), {0, 1, 2, 3}) == [frozenset(range(4))]
    assert components(p3, set()) == []


# Fan-condition consequences ----------------------------------------------------


@pytest.fixture(scope="module")
def fan_graphs():
    return [item.graph for item in corpus() if not item.graph.is_complete()]


def test_fan_graphs_are_two_connected(fan_graphs):
    for g in fan_graphs:
        assert mu2(g) >= g.n and is_connected(g)
        assert vertex_connectivity(g) >= 2


def test_common_neighbourhood_bound(fan_graphs):
    for g in fan_graphs:
        everything = set(range(g.n))
        for x, y in distance_two_pairs(g):
            common = g.adj[x] & g.adj[y]
            assert len(common) >= 2
            if len(common) == 2:
                assert g.adj[x] | g.adj[y] == everything - {x, y}


def test_condition_report_fields():
    r = condition_report(Graph.complete(7))
    assert (r.n, r.mu2, r.kappa, r.fan_ok) == (7, INF, 6, True)
    assert r.as_dict()["mu2"] == "inf"
    r = condition_report(Graph.complete_bipartite(3, 3))
    assert r.fan_ok is False and r.mu2 == 6
    r = condition_report(Graph(8, [(0, 1)]))
    assert r.is_connected is False and r.fan_ok is False
