import random

import pytest

from boxdim.errors import CapabilityError, DimensionExceeded
from boxdim.graph import Graph, complement
from boxdim.intervals import realize, validate_box_rep
from boxdim.oracle import (linear_extensions, maximal_chain_subgraphs, oracle_boxicity,
                           oracle_chain_cover, oracle_cubicity, oracle_poset_dimension)
from boxdim.reductions import BipartiteGraph, Poset
from boxdim.unit import validate_cube_rep

from conftest import all_graphs, cocktail, cycle, path, random_graph, random_intervals, star


@pytest.mark.parametrize("G, box, cub", [
    (cycle(4), 2, 2),
    (cocktail(6), 3, 3),
    (star(3), 1, 2),
    (path(4), 1, 1),
    (cycle(5), 2, 2),
    (Graph.empty(3), 1, 1),
    (Graph.complete(4), 0, 0),
])
def test_named_values(G, box, cub):
    b, B = oracle_boxicity(G)
    c, C = oracle_cubicity(G)
    assert (b, c) == (box, cub)
    assert validate_box_rep(G, B) and validate_cube_rep(G, C)
    assert all(U.denom > 0 for U in C)


def test_interval_graphs_have_box_one():
    rng = random.Random(21)
    for _ in range(30):
        G = realize(random_intervals(rng, rng.randint(2, 8)))
        assert oracle_boxicity(G)[0] == (0 if G.is_complete() else 1)


def test_bounds_exhaustive_small():
    for n in range(1, 6):
        for G in all_graphs(n):
            b = oracle_boxicity(G)[0]
            c = oracle_cubicity(G)[0]
            assert b <= n // 2 and c <= 2 * n // 3 and b <= c


def test_bounds_random():
    rng = random.Random(22)
    for _ in range(25):
        G = random_graph(rng, rng.randint(6, 8))
        b, B = oracle_boxicity(G)
        c, C = oracle_cubicity(G)
        assert b <= G.n // 2 and c <= 2 * G.n // 3 and b <= c
        assert validate_box_rep(G, B) and validate_cube_rep(G, C)


def test_caps_and_max_dim():
    with pytest.raises(CapabilityError):
        oracle_boxicity(Graph.empty(9))
    with pytest.raises(DimensionExceeded):
        oracle_boxicity(cocktail(6), max_dim=2)
    assert oracle_boxicity(cocktail(4), max_n=4)[0] == 2


def bip(left, right, edges):
    return BipartiteGraph.from_edges(left, right, edges)


def test_chain_cover_examples():
    two_k2 = bip([0, 1], [2, 3], [(0, 2), (1, 3)])
    assert oracle_chain_cover(two_k2) == 2
    assert oracle_chain_cover(bip([0], [1], [(0, 1)])) == 1
    assert oracle_chain_cover(bip([0, 2], [1, 3], [(0, 1), (2, 1), (2, 3)])) == 1
    assert oracle_chain_cover(bip([0, 1], [2, 3], [(0, 2), (0, 3), (1, 2), (1, 3)])) == 1
    assert oracle_chain_cover(bip([0], [1], [])) == 0
    assert len(maximal_chain_subgraphs(two_k2)) == 2
    c6 = bip([0, 2, 4], [1, 3, 5], [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (0, 5)])
    assert oracle_chain_cover(c6) == oracle_boxicity(complement(c6.graph))[0] == 2
    with pytest.raises(CapabilityError):
        oracle_chain_cover(bip(range(5), range(5, 10), [(x, y) for x in range(5) for y in range(5, 10)]))


def test_chain_cover_matches_complement_boxicity():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(2, 7)
        left = [v for v in range(n) if rng.random() < 0.5]
        right = [v for v in range(n) if v not in left]
        edges = [(x, y) for x in left for y in right if rng.random() < 0.5]
        B = bip(left, right, edges)
        assert oracle_chain_cover(B) == oracle_boxicity(complement(B.graph))[0]


def standard_example(k):
    return Poset.from_relations(2 * k, [(i, k + j) for i in range(k) for j in range(k) if i != j])


def test_poset_dimension_examples():
    assert oracle_poset_dimension(Poset.from_relations(3, [(0, 1), (1, 2)])) == 1
    assert oracle_poset_dimension(Poset.from_relations(2, [])) == 2
    assert oracle_poset_dimension(Poset.from_relations(1, [])) == 1
    assert oracle_poset_dimension(standard_example(2)) == 2
    assert oracle_poset_dimension(standard_example(3)) == 3
    assert oracle_poset_dimension(standard_example(4)) == 4
    with pytest.raises(CapabilityError):
        oracle_poset_dimension(Poset.from_relations(9, []))


def test_linear_extensions():
    assert linear_extensions(Poset.from_relations(3, [])) == [
        (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    assert linear_extensions(Poset.from_relations(3, [(2, 0), (0, 1)])) == [(2, 0, 1)]
