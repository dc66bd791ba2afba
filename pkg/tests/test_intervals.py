import random
from itertools import combinations

import pytest
from hypothesis import given

from boxdim.errors import InvalidRepresentation, ParseError
from boxdim.graph import Graph
from boxdim.intervals import (IntervalRep, format_box_rep, is_nice, make_distinct, nicefy,
                              parse_box_rep, realize, saturate_to_clique, validate_box_rep)
from boxdim.oracle import oracle_boxicity

from conftest import cycle, interval_reps, path, random_graph, random_intervals


def rep(*pairs):
    return IntervalRep.from_pairs(pairs)


def test_realize_examples():
    assert realize(rep((0, 1), (1, 2), (2, 3))) == path(3)
    assert realize(rep((0, 0), (0, 0), (0, 0))) == Graph.complete(3)
    assert realize(rep((0, 1), (2, 3))) == Graph.empty(2)


def test_malformed_interval():
    with pytest.raises(InvalidRepresentation):
        rep((2, 1))


@given(interval_reps(max_n=12))
def test_realize_matches_pairwise_definition(R):
    G = realize(R)
    for u, v in combinations(range(R.n), 2):
        assert G.has_edge(u, v) == (max(R.lo[u], R.lo[v]) <= min(R.hi[u], R.hi[v]))


@given(interval_reps(max_n=12))
def test_realize_validate_duality(R):
    assert validate_box_rep(realize(R), [R])


def test_validate_examples():
    B = [rep((0, 1), (1, 2), (2, 3), (0, 3)), rep((1, 2), (0, 1), (1, 2), (2, 3))]
    assert validate_box_rep(cycle(4), B)
    # 1 and 3 overlap in both of these dimensions
    bad = [rep((0, 1), (1, 2), (2, 3), (0, 3)), rep((2, 3), (0, 3), (0, 1), (1, 2))]
    v = validate_box_rep(cycle(4), bad)
    assert (v.kind, v.pair) == ("spurious", (1, 3))
    assert validate_box_rep(Graph.complete(3), [])
    v = validate_box_rep(path(3), [rep((0, 0), (0, 0), (0, 0))])
    assert not v and v.kind == "spurious" and v.pair == (0, 2)


def test_validate_missing_witness():
    v = validate_box_rep(path(3), [rep((0, 1), (1, 2), (2, 3)), rep((0, 0), (5, 5), (5, 5))])
    assert (v.kind, v.pair, v.dimension) == ("missing", (0, 1), 1)
    assert v.describe() == "invalid missing-edge 1 2 dimension 1"


def test_validate_empty_rep_on_noncomplete():
    v = validate_box_rep(path(3), [])
    assert not v and v.pair == (0, 2)


def test_validate_size_mismatch():
    with pytest.raises(InvalidRepresentation):
        validate_box_rep(path(3), [rep((0, 1), (1, 2))])


def test_saturate_example():
    out = saturate_to_clique([rep((0, 1), (2, 3))], [0, 1])
    assert out == [rep((0, 1), (0, 3)), rep((0, 3), (2, 3))]
    assert validate_box_rep(Graph.complete(2), out)


def test_saturate_empty_or_singleton_clique_keeps_graph():
    rng = random.Random(1)
    for _ in range(30):
        R = random_intervals(rng, 6)
        G = realize(R)
        for A in ([], [rng.randrange(6)]):
            out = saturate_to_clique([R], A)
            assert len(out) == 2 and validate_box_rep(G, out)


def test_saturate_rejects_empty():
    with pytest.raises(InvalidRepresentation):
        saturate_to_clique([], [0])


def test_saturate_random_oracle_reps():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(2, 7)
        G = random_graph(rng, n)
        if G.is_complete():
            continue
        _, B = oracle_boxicity(G)
        A = [v for v in range(n) if rng.random() < 0.5]
        out = saturate_to_clique(B, A)
        assert len(out) == 2 * len(B)
        assert validate_box_rep(G.add_clique(A), out)


def test_nicefy_complete_clique():
    R, p = nicefy(rep((0, 10), (1, 9), (2, 8)), Graph.complete(3), [0, 1, 2])
    assert p == 5
    assert R == rep((5, 5), (5, 5), (5, 5))


def test_nicefy_path_example():
    R, p = nicefy(rep((0, 1), (1, 5), (3, 6)), path(3), [1, 2])
    assert p == 4
    assert R == rep((0, 1), (1, 4), (4, 4))
    assert path(3).is_subgraph_of(realize(R))


def test_nicefy_empty_clique_is_identity():
    R = rep((0, 1), (4, 6))
    out, p = nicefy(R, Graph.empty(2), [])
    assert out == R and p == 3


def test_nicefy_empty_helly_region():
    with pytest.raises(InvalidRepresentation):
        nicefy(rep((0, 1), (2, 3)), Graph.complete(2), [0, 1])


def cliques(G):
    for r in range(G.n + 1):
        for S in combinations(range(G.n), r):
            if G.is_clique(S):
                yield list(S)


def test_nicefy_sandwich_and_conditions():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(1, 7)
        R = make_distinct(random_intervals(rng, n, span=12))
        H = realize(R)
        G = Graph.from_edges(n, [e for e in H.edges() if rng.random() < 0.7])
        for S in cliques(G):
            R2, p = nicefy(R, G, S)
            H2 = realize(R2)
            assert G.is_subgraph_of(H2)
            assert H2.is_subgraph_of(H)
            assert is_nice(R2, G, S, p)


@given(interval_reps(max_n=10, span=6))
def test_make_distinct(R):
    D = make_distinct(R)
    ends = D.lo + D.hi
    assert len(set(ends)) == len(ends)
    assert realize(D) == realize(R)


def test_box_rep_format_roundtrip():
    B = [rep((0, 1), (1, 2), (2, 3), (0, 3)), rep((2, 3), (0, 3), (0, 1), (1, 2))]
    text = format_box_rep(B, 4)
    assert text.startswith("boxrep 4 2\ndim 0\n0 0 1\n")
    assert parse_box_rep(text) == (4, B)
    assert parse_box_rep(format_box_rep([], 3)) == (3, [])


@pytest.mark.parametrize("text", [
    "",
    "boxrep 2\n",
    "boxrep 2 1\ndim 1\n0 0 1\n1 0 1\n",
    "boxrep 2 1\ndim 0\n0 0 1\n",
    "boxrep 2 1\ndim 0\n0 0 1\n0 0 1\n",
    "boxrep 2 1\ndim 0\n0 2 1\n1 0 1\n",
])
def test_box_rep_parse_errors(text):
    with pytest.raises(ParseError):
        parse_box_rep(text)
