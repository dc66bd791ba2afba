"""Enumeration of nice interval supergraphs relative to a large clique.

Given ``A`` such that ``Q = V \\ A`` is a clique, a nice candidate is fixed
by an order of the ``2|A|`` endpoints of ``A`` and the gap holding the
Helly point ``p``; the ``Q`` intervals follow from the neighbourhood rule.
Grid layout: the ``i``-th endpoint (1-based) sits at ``2i`` and ``p`` at
``2*slot + 1``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterator, Sequence

import numpy as np

from .errors import InvalidRepresentation
from .graph import Graph
from .intervals import IntervalRep

LEFT, RIGHT = 0, 1


@dataclass(frozen=True)
class EndpointOrder:
    tokens: tuple[tuple[int, int], ...]  # (vertex, side)
    p_slot: int


def token_orders(k: int) -> Iterator[tuple[int, ...]]:
    """All endpoint orders of ``k`` intervals, lexicographically.

    Token ``2i`` is the left end of the ``i``-th interval, ``2i + 1`` its
    right end; a right end only appears after its left end.
    """
    state = [0] * k
    seq: list[int] = []

    def rec():
        if len(seq) == 2 * k:
            yield tuple(seq)
            return
        for i in range(k):
            s = state[i]
            if s == 2:
                continue
            seq.append(2 * i + s)
            state[i] = s + 1
            yield from rec()
            state[i] = s
            seq.pop()

    yield from rec()


def _check_clique(G: Graph, A: Sequence[int]) -> list[int]:
    in_a = set(A)
    Q = [v for v in range(G.n) if v not in in_a]
    if not G.is_clique(Q):
        raise InvalidRepresentation("V \\ A does not induce a clique")
    return Q


def build_candidate(G: Graph, A: Sequence[int], tokens: Sequence[int], slot: int) -> IntervalRep:
    """Interval representation for one (endpoint order, p slot) pair."""
    k = len(A)
    lo = [0] * G.n
    hi = [0] * G.n
    for j, t in enumerate(tokens):
        if t & 1:
            hi[A[t >> 1]] = 2 * (j + 1)
        else:
            lo[A[t >> 1]] = 2 * (j + 1)
    p = 2 * slot + 1
    in_a = set(A)
    for v in range(G.n):
        if v in in_a:
            continue
        nb = [a for a in A if G.has_edge(v, a)]
        lo[v] = min([p] + [hi[a] for a in nb])
        hi[v] = max([p] + [lo[a] for a in nb])
    assert k == 0 or slot <= 2 * k
    return IntervalRep(tuple(lo), tuple(hi))


def _a_edges_ok(G: Graph, A: Sequence[int], tokens: Sequence[int]) -> bool:
    pos = [0] * len(tokens)
    for j, t in enumerate(tokens):
        pos[t] = j
    for i in range(len(A)):
        for j in range(i + 1, len(A)):
            if G.has_edge(A[i], A[j]):
                if max(pos[2 * i], pos[2 * j]) > min(pos[2 * i + 1], pos[2 * j + 1]):
                    return False
    return True


def enumerate_nice_supergraphs(G: Graph, A: Sequence[int]) -> Iterator[tuple[IntervalRep, EndpointOrder]]:
    """Yield every nice interval supergraph of ``G`` w.r.t. the clique ``V \\ A``.

    Candidates come in lexicographic order of (endpoint order, p slot).
    ``Q`` intervals always reach their ``A``-neighbours and share ``p``, so
    the only edges of ``G`` that can be lost are those inside ``A``; an order
    is skipped when it breaks one of them.
    """
    A = sorted(A)
    _check_clique(G, A)
    k = len(A)
    for tokens in token_orders(k):
        if not _a_edges_ok(G, A, tokens):
            continue
        order = tuple((A[t >> 1], t & 1) for t in tokens)
        for slot in range(2 * k + 1):
            yield build_candidate(G, A, tokens, slot), EndpointOrder(order, slot)


@dataclass
class SeparationFamily:
    """Distinct non-edge separation patterns of the nice candidates.

    ``elements[e]`` lists the non-edges of ``G`` that behave identically in
    every candidate (``Q`` vertices with equal ``A``-neighbourhoods are
    interchangeable). ``masks[i]`` has bit ``e`` set when candidate
    ``keys[i] = (order_index, slot)`` separates element ``e``; only the first
    candidate with each mask is kept.
    """

    A: list[int]
    elements: list[list[tuple[int, int]]]
    masks: list[int] = field(default_factory=list)
    keys: list[tuple[int, int]] = field(default_factory=list)
    tokens: list[tuple[int, ...]] = field(default_factory=list)
    candidates_seen: int = 0

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def candidate(self, G: Graph, i: int) -> IntervalRep:
        return build_candidate(G, self.A, self.tokens[i], self.keys[i][1])


def _universe(G: Graph, A: list[int], Q: list[int]):
    k = len(A)
    aa = []  # (i, j, pairs)
    for i in range(k):
        for j in range(i + 1, k):
            if not G.has_edge(A[i], A[j]):
                aa.append((i, j))
    classes: dict[int, list[int]] = {}
    for v in Q:
        cmask = sum(1 << i for i in range(k) if G.has_edge(v, A[i]))
        classes.setdefault(cmask, []).append(v)
    aq = []  # (a_index, class_mask)
    elements = [[(A[i], A[j])] for i, j in aa]
    for cmask in sorted(classes):
        for i in range(k):
            if not cmask >> i & 1:
                aq.append((i, cmask))
                elements.append(sorted((min(A[i], v), max(A[i], v)) for v in classes[cmask]))
    return aa, aq, sorted(classes), elements


def separation_family(G: Graph, A: Sequence[int], stop_on_full: bool = True,
                      batch: int = 4096, threads: int = 1) -> SeparationFamily:
    """Vectorized pass over all nice candidates, deduplicated by separation mask.

    With ``stop_on_full`` the pass ends at the first candidate separating
    every non-edge (a one-dimensional representation).
    """
    A = sorted(A)
    Q = _check_clique(G, A)
    k = len(A)
    aa, aq, class_masks, elements = _universe(G, A, Q)
    fam = SeparationFamily(A, elements)
    U = len(elements)
    S = 2 * k + 1
    a_edges = [(i, j) for i in range(k) for j in range(i + 1, k) if G.has_edge(A[i], A[j])]
    p = 2 * np.arange(S) + 1
    nbytes = max(1, (U + 7) // 8)
    full_bytes = np.packbits(np.ones(max(U, 1), dtype=bool), bitorder="little").tobytes() if U else b"\x00"

    def process(args):
        offset, rows = args
        arr = np.asarray(rows, dtype=np.int16).reshape(len(rows), 2 * k)
        pos = np.argsort(arr, axis=1)
        coord = 2 * (pos + 1)
        lo, hi = coord[:, 0::2], coord[:, 1::2]
        ok = np.ones(len(rows), dtype=bool)
        for i, j in a_edges:
            ok &= np.maximum(lo[:, i], lo[:, j]) <= np.minimum(hi[:, i], hi[:, j])
        bits = np.zeros((len(rows), S, max(U, 1)), dtype=bool)
        e = 0
        for i, j in aa:
            bits[:, :, e] = ((hi[:, i] < lo[:, j]) | (hi[:, j] < lo[:, i]))[:, None]
            e += 1
        big = 4 * k + 10
        ranges = {}
        for cmask in class_masks:
            members = [i for i in range(k) if cmask >> i & 1]
            if members:
                min_hi = hi[:, members].min(axis=1)
                max_lo = lo[:, members].max(axis=1)
            else:
                min_hi = np.full(len(rows), big)
                max_lo = np.full(len(rows), -big)
            ranges[cmask] = (np.minimum(p[None, :], min_hi[:, None]),
                             np.maximum(p[None, :], max_lo[:, None]))
        for i, cmask in aq:
            lq, rq = ranges[cmask]
            bits[:, :, e] = (hi[:, i, None] < lq) | (lo[:, i, None] > rq)
            e += 1
        bits = bits.reshape(len(rows) * S, -1)
        valid = np.repeat(ok, S)
        packed = np.packbits(bits, axis=1, bitorder="little")
        idx = np.nonzero(valid)[0]
        if len(idx) == 0:
            return offset, rows, [], int(ok.sum()) * S
        packed = np.ascontiguousarray(packed[idx])
        view = packed.view(np.dtype((np.void, packed.shape[1])))
        _, first = np.unique(view.ravel(), return_index=True)
        first.sort()
        found = [(int(idx[f]), packed[f].tobytes()) for f in first]
        return offset, rows, found, int(ok.sum()) * S

    def batches():
        it = token_orders(k)
        offset = 0
        while True:
            rows = list(islice(it, batch))
            if not rows:
                return
            yield offset, rows
            offset += len(rows)

    seen: set[bytes] = set()
    done = False
    gen = batches()
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        while not done:
            window = list(islice(gen, max(1, threads)))
            if not window:
                break
            for offset, rows, found, count in pool.map(process, window):
                fam.candidates_seen += count
                for flat, key in found:
                    if key in seen:
                        continue
                    seen.add(key)
                    r, s = divmod(flat, S)
                    fam.masks.append(int.from_bytes(key, "little") if U else 0)
                    fam.keys.append((offset + r, s))
                    fam.tokens.append(rows[r])
                    if stop_on_full and key == full_bytes[:nbytes]:
                        done = True
                        break
                if done:
                    break
    return fam
