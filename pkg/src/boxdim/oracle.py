"""Brute-force ground truth for tiny instances.

Boxicity: a graph is an interval graph iff some vertex order has the
property that ``u < v < w`` and ``uw`` an edge force ``uv`` an edge; for
unit interval graphs ``vw`` is forced as well. Running over all ``n!``
orders with the smallest reach that keeps every edge of ``G`` produces
every inclusion-minimal interval (unit interval) supergraph of ``G``, which
is all a covering search needs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import CapabilityError, DimensionExceeded
from .graph import Graph
from .intervals import IntervalRep

BOX_MAX_N = 8
POSET_MAX_N = 8
CHAIN_MAX_EDGES = 20


@lru_cache(maxsize=4)
def _perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)


def _order_family(G: Graph, unit: bool):
    """Distinct separation masks over ``G.non_edges()`` for all vertex orders."""
    n = G.n
    P = _perms(n).astype(np.int64)
    N = len(P)
    pos = np.argsort(P, axis=1)
    reach = pos.copy()
    for u in range(n):
        for v in G.neighbors(u):
            np.maximum(reach[:, u], pos[:, v], out=reach[:, u])
    if unit:
        by_pos = np.take_along_axis(reach, P, axis=1)
        by_pos = np.maximum.accumulate(by_pos, axis=1)
        reach = np.take_along_axis(by_pos, pos, axis=1)
    non_edges = G.non_edges()
    masks = np.zeros(N, dtype=np.int64)
    for b, (u, v) in enumerate(non_edges):
        sep = np.where(pos[:, u] < pos[:, v], pos[:, v] > reach[:, u], pos[:, u] > reach[:, v])
        masks |= sep.astype(np.int64) << b
    uniq, first = np.unique(masks, return_index=True)
    order = np.argsort(first)
    return non_edges, [int(m) for m in uniq[order]], [(P[i], pos[i], reach[i]) for i in first[order]]


def _cover(masks: list[int], full: int, max_dim: int) -> list[int] | None:
    """Fewest masks covering ``full``, by iterative deepening.

    Each level branches on the lowest missing element, over the distinct
    projections (onto the missing set) of the masks containing it; the last
    two levels are vectorized scans. All masks must fit in 64 bits.
    """
    if full == 0:
        return []
    if full.bit_length() > 64:
        raise CapabilityError("oracle masks exceed 64 elements")
    arr = np.array(masks, dtype=np.uint64)
    for d in range(1, max_dim + 1):
        found = _search(arr, full, d)
        if found is not None:
            return found
    return None


def _search(arr: np.ndarray, missing: int, d: int) -> list[int] | None:
    if missing == 0:
        return []
    need = np.uint64(missing)
    proj = arr & need
    if d == 1:
        hits = np.flatnonzero(proj == need)
        return [int(hits[0])] if len(hits) else None
    e = (missing & -missing).bit_length() - 1
    sel = np.flatnonzero((proj >> np.uint64(e)) & np.uint64(1))
    _, first = np.unique(proj[sel], return_index=True)
    sel = sel[np.sort(first)]
    for i in sel:
        rest = missing & ~int(proj[i])
        if d == 2:
            r = np.uint64(rest)
            hits = np.flatnonzero((proj & r) == r)
            if len(hits):
                return [int(i), int(hits[0])]
        else:
            found = _search(arr, rest, d - 1)
            if found is not None:
                return [int(i)] + found
    return None


def _check_n(G: Graph, max_n: int):
    if G.n > max_n:
        raise CapabilityError(f"oracle limited to n <= {max_n}, got n = {G.n}")


def oracle_boxicity(G: Graph, max_dim: int | None = None,
                    max_n: int = BOX_MAX_N) -> tuple[int, list[IntervalRep]]:
    _check_n(G, max_n)
    if G.is_complete():
        return 0, []
    max_dim = G.n if max_dim is None else max_dim
    non_edges, masks, orders = _order_family(G, unit=False)
    chosen = _cover(masks, (1 << len(non_edges)) - 1, max_dim)
    if chosen is None:
        raise DimensionExceeded(f"boxicity exceeds {max_dim}")
    B = [IntervalRep(tuple(int(x) for x in orders[i][1]), tuple(int(x) for x in orders[i][2]))
         for i in chosen]
    return len(B), B


def oracle_cubicity(G: Graph, max_dim: int | None = None, max_n: int = BOX_MAX_N):
    """Cubicity and a witness list of UnitIntervalRep."""
    from .unit import unit_interval_rep
    from .intervals import realize

    _check_n(G, max_n)
    if G.is_complete():
        return 0, []
    max_dim = G.n if max_dim is None else max_dim
    non_edges, masks, orders = _order_family(G, unit=True)
    chosen = _cover(masks, (1 << len(non_edges)) - 1, max_dim)
    if chosen is None:
        raise DimensionExceeded(f"cubicity exceeds {max_dim}")
    C = []
    for i in chosen:
        H = realize(IntervalRep(tuple(int(x) for x in orders[i][1]),
                                tuple(int(x) for x in orders[i][2])))
        U = unit_interval_rep(H)
        if U is None:
            raise AssertionError("proper-order supergraph is not unit interval")
        C.append(U)
    return len(C), C


def maximal_chain_subgraphs(B) -> list[int]:
    """Edge masks (over ``B.graph.edges()``) of every maximal chain subgraph.

    A chain graph has nested neighbourhoods on each side; for a fixed order
    of one side the largest one inside ``B`` is obtained greedily.
    """
    edges = B.graph.edges()
    index = {e: i for i, e in enumerate(edges)}
    side, other = (B.left, B.right) if len(B.left) <= len(B.right) else (B.right, B.left)
    other_mask = sum(1 << y for y in other)
    seen = set()
    out = []
    for order in permutations(side):
        allowed = other_mask
        mask = 0
        for x in order:
            allowed &= B.graph.adj_mask(x)
            m = allowed
            while m:
                low = m & -m
                y = low.bit_length() - 1
                m ^= low
                mask |= 1 << index[(min(x, y), max(x, y))]
        if mask not in seen:
            seen.add(mask)
            out.append(mask)
    return out


def oracle_chain_cover(B, max_edges: int = CHAIN_MAX_EDGES) -> int:
    """Minimum number of chain subgraphs covering the edges of ``B``."""
    m = B.graph.m
    if m > max_edges:
        raise CapabilityError(f"chain-cover oracle limited to {max_edges} edges, got {m}")
    if m == 0:
        return 0
    masks = maximal_chain_subgraphs(B)
    return len(_cover(masks, (1 << m) - 1, m))


def linear_extensions(P) -> list[tuple[int, ...]]:
    n = P.n
    below = [sum(1 << x for x in range(n) if x != y and P.leq(x, y)) for y in range(n)]
    out = []
    seq: list[int] = []

    def rec(placed: int):
        if len(seq) == n:
            out.append(tuple(seq))
            return
        for y in range(n):
            if not placed >> y & 1 and below[y] & ~placed == 0:
                seq.append(y)
                rec(placed | 1 << y)
                seq.pop()

    rec(0)
    return out


def oracle_poset_dimension(P, max_n: int = POSET_MAX_N) -> int:
    """Fewest linear extensions whose intersection is ``P``."""
    if P.n > max_n:
        raise CapabilityError(f"poset oracle limited to {max_n} elements, got {P.n}")
    pairs = [(x, y) for x in range(P.n) for y in range(P.n)
             if x != y and not P.leq(x, y) and not P.leq(y, x)]
    if not pairs:
        return 1
    bit = {p: i for i, p in enumerate(pairs)}
    masks = []
    seen = set()
    for ext in linear_extensions(P):
        rank = {x: i for i, x in enumerate(ext)}
        m = sum(1 << bit[(x, y)] for (x, y) in pairs if rank[x] < rank[y])
        if m not in seen:
            seen.add(m)
            masks.append(m)
    return len(_cover(masks, (1 << len(pairs)) - 1, P.n))
