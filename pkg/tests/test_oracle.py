import pytest

from fancist import GenSpec, Graph, fan_random, generate, is_cist_partition, mu2, oracle_2cist_partition, sharpness_graph
from fancist.errors import FixtureUnavailable, GenerationFailed, InvalidInput, TooLarge
from fancist.graph import is_connected, vertex_connectivity
from fancist.oracle import FAN_STYLES, case_fixture


def test_k33_has_no_partition():
    res = oracle_2cist_partition(Graph.complete_bipartite(3, 3))
    assert not res.found and res.partition is None
    assert res.partitions_checked == 31


def test_k4_first_partition():
    res = oracle_2cist_partition(Graph.complete(4))
    assert res.found
    assert res.partition.v1 == {0, 1} and res.partition.v2 == {2, 3}
    assert is_cist_partition(Graph.complete(4), res.partition).ok


def test_p4_has_no_partition():
    res = oracle_2cist_partition(Graph.path(4))
    assert not res.found and res.partitions_checked == 7


def test_sharpness_33_has_no_partition():
    res = oracle_2cist_partition(sharpness_graph(3, 3))
    assert not res.found and res.partitions_checked == 63


def test_size_cap():
    with pytest.raises(TooLarge):
        oracle_2cist_partition(Graph.path(26))


def test_parallel_matches_sequential():
    for g in (Graph.complete(12), sharpness_graph(4, 6), fan_random(13, 3)):
        assert oracle_2cist_partition(g, jobs=3) == oracle_2cist_partition(g)


@pytest.mark.parametrize("s, t", [(2, 2), (2, 3), (3, 3), (3, 4), (2, 4), (4, 4), (2, 7)])
def test_sharpness_family(s, t):
    g = sharpness_graph(s, t)
    assert g.n == s + t + 1
    assert mu2(g) == g.n - 1
    assert vertex_connectivity(g) == 1


def test_sharpness_rejects_small_cliques():
    with pytest.raises(InvalidInput):
        sharpness_graph(1, 3)


@pytest.mark.parametrize("style", sorted(FAN_STYLES))
def test_fan_random_postcondition(style):
    for seed in range(8):
        for n in (7, 10, 13):
            g = fan_random(n, seed, style)
            assert g.n == n and is_connected(g) and mu2(g) >= n


def test_fan_random_deterministic():
    assert fan_random(10, 1).edges() == fan_random(10, 1).edges()
    assert generate(GenSpec("fan_random", (12,), seed=7)) == generate(GenSpec("fan_random", (12,), seed=7))


def test_fan_random_errors():
    with pytest.raises(InvalidInput):
        fan_random(6, 0)
    with pytest.raises(InvalidInput):
        fan_random(8, 0, style="nope")


def test_fan_random_exhaustion_reports_seed(monkeypatch):
    monkeypatch.setitem(FAN_STYLES, "empty", lambda n, rng: Graph(n))
    with pytest.raises(GenerationFailed, match="seed=4"):
        fan_random(8, 4, style="empty", attempts=3)


def test_case_fixture_contract():
    assert case_fixture("Complete") == Graph.complete(7)
    lg = case_fixture("Kappa2_BigSide")
    assert vertex_connectivity(lg) == 2 and mu2(lg) >= lg.n
    with pytest.raises(FixtureUnavailable):
        case_fixture("Case2_Sub222_Claim34")
    with pytest.raises(InvalidInput):
        case_fixture("NoSuchBranch")


def test_generate_families():
    assert generate(GenSpec("complete", (7,))) == Graph.complete(7)
    assert generate(GenSpec("complete_bipartite", (3, 3))).m_edges == 9
    assert generate(GenSpec("sharpness", (3, 4))).n == 8
    assert generate(GenSpec("lemma3_fixture", (2, 4))) == case_fixture("Kappa2_BigSide")
    assert generate(GenSpec("case_fixture", meta={"label": "Complete"})).n == 7
    with pytest.raises(InvalidInput):
        generate(GenSpec("complete", (3, 4)))
    with pytest.raises(InvalidInput):
        generate(GenSpec("bogus"))
