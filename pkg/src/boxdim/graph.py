"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one Python int bitmask per vertex, which keeps
``has_edge`` O(1) and makes complements and induced cliques cheap to test.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import ParseError

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph. Vertex labels never change in derived graphs."""

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, adj: Iterable[int]):
        self.n = n
        self._adj = tuple(adj)
        if len(self._adj) != n:
            raise ValueError("adjacency length does not match n")
        self._m = sum(a.bit_count() for a in self._adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @property
    def m(self) -> int:
        return self._m

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self._adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)]

    def is_complete(self) -> bool:
        return self._m == self.n * (self.n - 1) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = _mask(vs)
        return all((self._adj[v] | (1 << v)) & mask == mask for v in vs)

    def is_subgraph_of(self, other: Graph) -> bool:
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self._adj, other._adj))

    def add_clique(self, vertices: Iterable[int]) -> Graph:
        vs = list(vertices)
        mask = _mask(vs)
        adj = list(self._adj)
        for v in vs:
            adj[v] |= mask & ~(1 << v)
        return Graph(self.n, adj)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled ``0..len(vertices)-1`` in the given order."""
        vs = list(vertices)
        return Graph.from_edges(
            len(vs),
            [(i, j) for i, j in combinations(range(len(vs)), 2) if self.has_edge(vs[i], vs[j])],
        )

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self._adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, [full & ~a & ~(1 << v) for v, a in enumerate(G._adj)])


def min_vertex_cover(G: Graph, budget: int) -> list[int] | None:
    """Minimum vertex cover of size at most ``budget``, or None.

    Bounded search tree: branch on the lexicographically smallest uncovered
    edge, trying its smaller endpoint first, with iterative deepening on the
    cover size. The first cover found is therefore of minimum size, and the
    result is the same on every run.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    adj = G._adj

    def first_edge(removed: int) -> Edge | None:
        for u in range(G.n):
            if removed >> u & 1:
                continue
            rest = adj[u] & ~removed & ~((1 << (u + 1)) - 1)
            if rest:
                return u, (rest & -rest).bit_length() - 1
        return None

    def search(removed: int, left: int) -> int | None:
        e = first_edge(removed)
        if e is None:
            return removed
        if left == 0:
            return None
        for v in e:
            found = search(removed | (1 << v), left - 1)
            if found is not None:
                return found
        return None

    for size in range(budget + 1):
        found = search(0, size)
        if found is not None:
            return _bits(found)
    return None


def clique_residual_split(G: Graph, k_max: int) -> tuple[list[int], list[int]] | None:
    """Split ``V`` into ``(A, Q)`` with ``Q`` a clique and ``|A|`` minimum.

    Returns None when every such split has ``|A| > k_max``.
    """
    cover = min_vertex_cover(complement(G), min(k_max, G.n))
    if cover is None:
        return None
    in_a = set(cover)
    return cover, [v for v in range(G.n) if v not in in_a]


def parse_graph(text: str | bytes) -> Graph:
    """Parse the ``p box <n> <m>`` / ``e <u> <v>`` edge-list format (1-based)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = m = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "box":
                raise ParseError("malformed header, expected 'p box <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("malformed header, counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("malformed header, negative count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before header", lineno)
            if len(parts) != 3:
                raise ParseError("malformed edge line", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("malformed edge line", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError("vertex index out of range", lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen:
                raise ParseError("duplicate edge", lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_graph(G: Graph) -> str:
    lines = [f"p box {G.n} {G.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"
