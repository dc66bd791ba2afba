"""Chain covers of bipartite graphs and poset dimension via boxicity.

``ch(B) = box(complement(B))``: each dimension of a box representation of
the complement separates a set of cross pairs, and those sets are chain
graphs covering ``E(B)``. Poset dimension goes through the height-two
split of the poset and its bipartite incomparability graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .approx import ApproxParams, approx_box
from .errors import InvalidRepresentation, ParseError
from .graph import Edge, Graph, complement
from .intervals import IntervalRep, validate_box_rep


@dataclass(frozen=True)
class BipartiteGraph:
    graph: Graph
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        L, R = set(self.left), set(self.right)
        if L & R or L | R != set(range(self.graph.n)):
            raise ValueError("sides must partition the vertex set")
        for u, v in self.graph.edges():
            if (u in L) == (v in L):
                raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")

    @classmethod
    def from_edges(cls, left: Sequence[int], right: Sequence[int], edges) -> BipartiteGraph:
        n = len(left) + len(right)
        return cls(Graph.from_edges(n, edges), tuple(sorted(left)), tuple(sorted(right)))


ChainCover = list  # list[list[Edge]]


def is_chain_graph(edges: Sequence[Edge]) -> bool:
    """No two edges ``(x1, y1), (x2, y2)`` with both cross pairs missing.

    Endpoints are oriented by the caller's bipartition: ``x`` first.
    """
    es = set(edges)
    for (x1, y1), (x2, y2) in combinations(es, 2):
        if x1 != x2 and y1 != y2 and (x1, y2) not in es and (x2, y1) not in es:
            return False
    return True


def check_chain_cover(B: BipartiteGraph, cover: Sequence[Sequence[Edge]]) -> None:
    """Raise unless every member is a chain graph and the members union to ``E(B)``."""
    left = set(B.left)
    union = set()
    for i, member in enumerate(cover):
        oriented = [(u, v) if u in left else (v, u) for u, v in member]
        if not is_chain_graph(oriented):
            raise InvalidRepresentation(f"chain cover member {i} contains an induced 2K2")
        for u, v in member:
            if not B.graph.has_edge(u, v):
                raise InvalidRepresentation(f"member {i} has non-edge ({u}, {v})")
            union.add((min(u, v), max(u, v)))
    if union != set(B.graph.edges()):
        raise InvalidRepresentation("chain cover does not cover every edge")


def chain_graphs_from_box_rep(B: BipartiteGraph, R: Sequence[IntervalRep]) -> ChainCover:
    """One chain graph per dimension: the edges of ``B`` that dimension separates."""
    comp = complement(B.graph)
    verdict = validate_box_rep(comp, R)
    if not verdict:
        raise InvalidRepresentation(f"not a box representation of the complement: {verdict.describe()}")
    edges = B.graph.edges()
    cover = [[(u, v) for u, v in edges if not I.intersects(u, v)] for I in R]
    check_chain_cover(B, cover)
    return cover


def chain_cover_approx(B: BipartiteGraph, params: ApproxParams | None = None,
                       threads: int = 1) -> ChainCover:
    comp = complement(B.graph)
    R, _ = approx_box(comp, params or ApproxParams.for_n(comp.n), threads=threads)
    return chain_graphs_from_box_rep(B, R)


class Poset:
    """Partial order on ``0..n-1``; ``rel[a, b]`` means ``a <= b``."""

    def __init__(self, rel):
        rel = np.array(rel, dtype=bool)
        n = rel.shape[0]
        if rel.shape != (n, n):
            raise ValueError("relation must be square")
        rel = rel | np.eye(n, dtype=bool)
        for m in range(n):
            rel = rel | (rel[:, m:m + 1] & rel[m:m + 1, :])
        off = rel & rel.T & ~np.eye(n, dtype=bool)
        if off.any():
            a, b = np.argwhere(off)[0]
            raise ValueError(f"antisymmetry violated between {a} and {b}")
        self.rel = rel
        self.rel.setflags(write=False)

    @classmethod
    def from_relations(cls, n: int, pairs) -> Poset:
        rel = np.zeros((n, n), dtype=bool)
        for a, b in pairs:
            rel[a, b] = True
        return cls(rel)

    @property
    def n(self) -> int:
        return self.rel.shape[0]

    def leq(self, a: int, b: int) -> bool:
        return bool(self.rel[a, b])

    def less(self, a: int, b: int) -> bool:
        return a != b and bool(self.rel[a, b])

    def minimal(self) -> list[int]:
        return [y for y in range(self.n) if not any(self.less(x, y) for x in range(self.n))]

    def is_height_two(self) -> bool:
        return not any(self.less(x, y) and self.less(y, z)
                       for x in range(self.n) for y in range(self.n) for z in range(self.n))

    def __eq__(self, other):
        return isinstance(other, Poset) and np.array_equal(self.rel, other.rel)

    def __repr__(self):
        pairs = [(a, b) for a in range(self.n) for b in range(self.n) if self.less(a, b)]
        return f"Poset(n={self.n}, strict={pairs})"


def kimble_split(P: Poset) -> Poset:
    """Height-two poset on ``x-`` (label ``x``) and ``x+`` (label ``n + x``).

    The only strict relations are ``x- < y+`` whenever ``x <= y`` in ``P``.
    """
    n = P.n
    rel = np.zeros((2 * n, 2 * n), dtype=bool)
    rel[:n, n:] = P.rel
    return Poset(rel)


def poset_bipartite(P2: Poset) -> BipartiteGraph:
    """Minimal elements vs the rest, joined where the pair is *not* related."""
    if not P2.is_height_two():
        raise ValueError("poset is not of height two")
    low = P2.minimal()
    low_set = set(low)
    high = [y for y in range(P2.n) if y not in low_set]
    edges = [(x, y) for x in low for y in high if not P2.less(x, y)]
    return BipartiteGraph(Graph.from_edges(P2.n, edges), tuple(low), tuple(high))


def posetdim_approx(P: Poset, params: ApproxParams | None = None,
                    threads: int = 1) -> tuple[int, ChainCover]:
    """Upper bound on ``dim(P)`` with its chain-cover witness (at least 1)."""
    if P.n < 1:
        raise ValueError("poset must be nonempty")
    B = poset_bipartite(kimble_split(P))
    cover = chain_cover_approx(B, params, threads=threads)
    return max(len(cover), 1), cover


def parse_poset(text: str | bytes) -> Poset:
    """``p poset <n> <m>`` then ``r <a> <b>`` lines (``a <= b``, 1-based)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = m = None
    pairs = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 4 or parts[1] != "poset":
                raise ParseError("malformed header, expected 'p poset <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("malformed header", lineno) from None
        elif parts[0] == "r":
            if n is None:
                raise ParseError("relation line before header", lineno)
            try:
                a, b = int(parts[1]), int(parts[2])
            except (ValueError, IndexError):
                raise ParseError("malformed relation line", lineno) from None
            if not (1 <= a <= n and 1 <= b <= n):
                raise ParseError("element index out of range", lineno)
            pairs.append((a - 1, b - 1))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing header")
    if len(pairs) != m:
        raise ParseError(f"header declares {m} relations, found {len(pairs)}")
    try:
        return Poset.from_relations(n, pairs)
    except ValueError as err:
        raise ParseError(str(err)) from None


def parse_bipartite(text: str | bytes) -> BipartiteGraph:
    """Graph file read as a bipartite graph; sides from a BFS 2-colouring."""
    from .graph import parse_graph

    G = parse_graph(text)
    colour = [-1] * G.n
    for s in range(G.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in G.neighbors(u):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    stack.append(v)
                elif colour[v] == colour[u]:
                    raise ParseError("graph is not bipartite")
    left = tuple(v for v in range(G.n) if colour[v] == 0)
    right = tuple(v for v in range(G.n) if colour[v] == 1)
    return BipartiteGraph(G, left, right)
