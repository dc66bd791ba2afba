import random
from itertools import combinations

import pytest

from boxdim.approx import (ApproxParams, DisconnectedGraph, approx_box, approx_box_parts, approx_cube,
                           augment_supergraph, independence_number_with_clique, partition_vertices)
from boxdim.graph import Graph
from boxdim.intervals import validate_box_rep
from boxdim.oracle import oracle_boxicity
from boxdim.unit import validate_cube_rep

from conftest import cycle, path, random_connected, random_graph


def brute_alpha(G):
    best = 0
    for r in range(G.n + 1):
        for S in combinations(range(G.n), r):
            if not any(G.has_edge(a, b) for a, b in combinations(S, 2)):
                best = r
    return best


def test_params():
    assert ApproxParams.for_n(100) == ApproxParams(2, 65)
    assert ApproxParams.for_n(4) == ApproxParams(1, 4)
    assert ApproxParams.for_n(60, k=3) == ApproxParams(3, 20)
    assert ApproxParams.for_n(7, k=3) == ApproxParams(3, 3)
    p = ApproxParams(4, 5)
    assert (p.box_factor, p.cube_factor) == (10, 20)
    assert ApproxParams(1, 5).cube_factor == 10
    with pytest.raises(ValueError):
        ApproxParams.for_n(5, k=0)


def test_partition_and_augment():
    G = path(5)
    parts = partition_vertices(G, ApproxParams(2, 4))
    assert parts == [[0, 1], [2, 3], [4], []]
    with pytest.raises(ValueError):
        partition_vertices(G, ApproxParams(2, 2))
    H = augment_supergraph(G, [0, 1])
    assert H.is_clique([2, 3, 4]) and G.is_subgraph_of(H)
    assert set(H.edges()) - set(G.edges()) == {(2, 4)}


def test_independence_with_clique():
    rng = random.Random(41)
    for _ in range(100):
        G = random_graph(rng, rng.randint(1, 8))
        part = sorted(rng.sample(range(G.n), rng.randint(0, G.n)))
        H = augment_supergraph(G, part)
        a = independence_number_with_clique(H, part)
        assert a == brute_alpha(H)
        assert a <= len(part) + 1


def test_part_alpha_can_exceed_part_size():
    # path a - q2 - q1 with part {a}: {a, q1} is independent
    G = Graph.from_edges(3, [(0, 2), (2, 1)])
    H = augment_supergraph(G, [0])
    assert H == G
    assert independence_number_with_clique(H, [0]) == 2


def test_approx_box_ratio_against_oracle():
    rng = random.Random(42)
    for _ in range(40):
        G = random_graph(rng, rng.randint(2, 7))
        b = oracle_boxicity(G)[0]
        for k in (1, 2, 3):
            params = ApproxParams.for_n(G.n, k)
            B, factor = approx_box(G, params)
            assert validate_box_rep(G, B)
            assert factor == 2 * params.t
            assert len(B) <= factor * b


def test_approx_box_complete():
    assert approx_box(Graph.complete(5), ApproxParams(2, 3)) == ([], 6)
    assert approx_cube(Graph.complete(5), ApproxParams(2, 3)) == ([], 6)


def test_approx_box_parts_sum():
    G = cycle(6)
    params = ApproxParams.for_n(6, 2)
    detail = approx_box_parts(G, params)
    B, _ = approx_box(G, params)
    assert sum(b for _, _, b, _ in detail) == len(B)
    for part, Gi, b, Bi in detail:
        assert validate_box_rep(Gi, Bi) and b == len(Bi)


def test_approx_cube_valid():
    rng = random.Random(43)
    for _ in range(40):
        G = random_connected(rng, rng.randint(2, 8))
        for k in (1, 2, 3):
            C, factor = approx_cube(G, ApproxParams.for_n(G.n, k))
            assert validate_cube_rep(G, C)


def test_disconnected_rejected():
    G = Graph.from_edges(5, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraph) as info:
        approx_cube(G)
    assert "1 2; 3 4; 5" in str(info.value)
    C, _ = approx_cube(G, per_component=True)
    assert validate_cube_rep(G, C)


def test_per_component_random():
    rng = random.Random(44)
    for _ in range(30):
        G = random_graph(rng, rng.randint(2, 9), 0.3)
        if G.is_complete():
            continue
        C, _ = approx_cube(G, ApproxParams.for_n(G.n, 2), per_component=True)
        assert validate_cube_rep(G, C)


def test_thread_counts_identical():
    rng = random.Random(45)
    G = random_connected(rng, 16, 0.4)
    params = ApproxParams.for_n(16, 3)
    assert approx_box(G, params, threads=1) == approx_box(G, params, threads=8)
    assert approx_cube(G, params, threads=1, strict=False) == approx_cube(G, params, threads=8, strict=False)
