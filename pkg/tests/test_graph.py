import math

import networkx as nx
import numpy as np
import pytest

from becurv import families as F
from becurv import graph as G
from becurv.classify import enumerate_graphs
from becurv.graph import WeightedGraph

from oracles import has_c4_bruteforce, punctured_components_bruteforce, random_graph


def test_vertex_order_is_numeric_aware():
    g = WeightedGraph(["10", "2", "a10", "a2", "1"])
    assert g.vertices == ("1", "2", "10", "a2", "a10")


def test_invalid_graphs_rejected():
    with pytest.raises(G.GraphError):
        WeightedGraph(edges=[(0, 0)])
    with pytest.raises(G.GraphError):
        WeightedGraph(edges=[(0, 1), (1, 0)])
    with pytest.raises(G.GraphError):
        WeightedGraph(edges=[(0, 1, 0.0)])
    with pytest.raises(G.GraphError):
        WeightedGraph(edges=[(0, 1)], preset="custom")
    with pytest.raises(G.GraphError):
        WeightedGraph(edges=[(0, 1)], preset="normalized", measure={"0": 1, "1": 1})
    with pytest.raises(G.GraphError):
        WeightedGraph(edges=[(0, 1)], preset="custom", measure={"0": 1, "1": -1})


def test_preset_measures():
    edges = [(0, 1, 2.0), (1, 2, 3.0)]
    assert WeightedGraph(range(4), edges, "normalized").m == (2.0, 5.0, 3.0, 1.0)
    assert WeightedGraph(range(3), edges).m == (1.0, 1.0, 1.0)


def test_degree():
    assert G.degree(F.cycle(5), "3") == 2
    assert G.degree(F.star(4), "0") == 3
    assert G.degree(WeightedGraph(["a"]), "a") == 0


def test_weighted_degree():
    g = F.cycle(5, "normalized")
    assert all(G.weighted_degree(g, v) == 1.0 for v in g.vertices)
    assert G.weighted_degree(F.star(4), "0") == 3.0
    p2 = WeightedGraph(edges=[(0, 1, 2.0)])
    assert G.weighted_degree(p2, "0") == G.weighted_degree(p2, "1") == 2.0


def test_ball_decomposition():
    bd = G.ball_decomposition(F.path(5), "2")
    assert bd.s1 == ("1", "3") and bd.s2 == ("0", "4")
    bd = G.ball_decomposition(F.cycle(3), "1")
    assert bd.s1 == ("0", "2") and bd.s2 == ()
    bd = G.ball_decomposition(F.friendship(2), "0")
    assert len(bd.s1) == 4 and bd.s2 == ()
    assert bd.index == {"1": 0, "2": 1, "3": 2, "4": 3}
    with pytest.raises(KeyError):
        G.ball_decomposition(F.path(2), "7")


def test_ball_decomposition_deterministic():
    rng = np.random.default_rng(3)
    g = random_graph(rng, 10)
    for v in g.vertices:
        assert G.ball_decomposition(g, v) == G.ball_decomposition(g, v)


def test_girth_examples():
    assert G.girth_at(F.cycle(5), "0") == 5
    assert G.girth_at(F.star(4), "0") == math.inf
    paw = F.paw()
    assert G.girth_at(paw, "3") == math.inf
    assert all(G.girth_at(paw, v) == 3 for v in "012")
    assert G.girth(F.cycle(6)) == 6
    assert G.girth(F.path(7)) == math.inf
    assert G.girth(F.star3_plus(1)) == 3


def test_girth_against_networkx():
    rng = np.random.default_rng(11)
    for _ in range(100):
        g = random_graph(rng, 10, weighted=False, p=rng.uniform(0.1, 0.5))
        h = nx.Graph([(u, v) for u, v, _ in g.edges()])
        assert G.girth(g) == min(G.girth_at(g, v) for v in g.vertices)
        assert G.girth(g) == nx.girth(h)


def test_c4_free_examples():
    assert not G.is_c4_free(F.cycle(4))
    assert not G.is_c4_free(F.complete(4))
    assert G.is_c4_free(F.friendship(7))


def test_c4_free_matches_bruteforce_all_graphs_up_to_seven():
    for g in enumerate_graphs(7, connected=False):
        assert G.is_c4_free(g) == (not has_c4_bruteforce(g))


def test_triangles():
    assert G.has_triangle_through(F.cycle(3), "0")
    assert G.is_triangle_free(F.cycle(5))
    assert not G.has_triangle_through(F.paw(), "3")
    assert not G.is_triangle_free(F.paw())


def test_punctured_ball_examples():
    comps = G.punctured_ball_components(F.friendship(2), "0")
    assert [(c.r, c.s) for c in comps] == [(2, 0), (2, 0)]
    comps = G.punctured_ball_components(F.cycle(5), "0")
    assert sorted((c.r, c.s) for c in comps) == [(1, 1), (1, 1)]
    comps = G.punctured_ball_components(F.star(4), "0")
    assert [(c.r, c.s) for c in comps] == [(1, 0)] * 3


def test_punctured_ball_matches_bruteforce():
    rng = np.random.default_rng(5)
    for _ in range(60):
        g = random_graph(rng, 9, weighted=False, p=rng.uniform(0.15, 0.6))
        for v in g.vertices:
            got = sorted((c.r, c.s) for c in G.punctured_ball_components(g, v))
            assert got == punctured_components_bruteforce(g, v)


def test_triangle_vertices_in_c4_free_graphs_have_split_balls():
    for g in enumerate_graphs(7, c4_free=True):
        for v in g.vertices:
            if G.has_triangle_through(g, v) and G.degree(g, v) >= 3:
                assert len(G.punctured_ball_components(g, v)) >= 2


def test_induced_cycle_lengths():
    assert G.induced_cycle_lengths(F.cycle(6), 5) == {6}
    assert G.induced_cycle_lengths(F.friendship(3), 5) == set()
    pet = G.induced_cycle_lengths(F.petersen(), 5)
    assert {5, 6} <= pet


def test_induced_cycles_against_networkx():
    rng = np.random.default_rng(9)
    for _ in range(40):
        g = random_graph(rng, 9, weighted=False, p=rng.uniform(0.2, 0.5))
        h = nx.Graph([(u, v) for u, v, _ in g.edges()])
        expected = {len(c) for c in nx.chordless_cycles(h) if len(c) >= 4}
        assert G.induced_cycle_lengths(g, 4) == expected
    h = nx.petersen_graph()
    assert G.induced_cycle_lengths(F.petersen(), 5) == {len(c) for c in nx.chordless_cycles(h) if len(c) >= 5}


def test_induced_cycle_size_limit():
    with pytest.raises(G.GraphError):
        G.induced_cycle_lengths(F.cycle(13))
