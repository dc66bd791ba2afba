"""Interval and box representations with exact integer endpoints."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidRepresentation, ParseError
from .graph import Graph, Edge


@dataclass(frozen=True)
class IntervalRep:
    """Closed interval ``[lo[v], hi[v]]`` for every vertex ``v``."""

    lo: tuple[int, ...]
    hi: tuple[int, ...]

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise InvalidRepresentation("left and right endpoint lists differ in length")
        for v, (l, r) in enumerate(zip(self.lo, self.hi)):
            if l > r:
                raise InvalidRepresentation(f"vertex {v} has l={l} > r={r}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> IntervalRep:
        pairs = list(pairs)
        return cls(tuple(int(p[0]) for p in pairs), tuple(int(p[1]) for p in pairs))

    @property
    def n(self) -> int:
        return len(self.lo)

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.lo, self.hi))

    def intersects(self, u: int, v: int) -> bool:
        return max(self.lo[u], self.lo[v]) <= min(self.hi[u], self.hi[v])


BoxRep = list  # list[IntervalRep]; dimension is len()


@dataclass(frozen=True)
class Verdict:
    valid: bool
    kind: str | None = None  # "missing" or "spurious"
    pair: Edge | None = None
    dimension: int | None = None  # for "missing": a dimension lacking the edge

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return "valid"
        u, v = self.pair
        if self.kind == "missing":
            return f"invalid missing-edge {u + 1} {v + 1} dimension {self.dimension}"
        return f"invalid spurious-pair {u + 1} {v + 1}"


def realize(R: IntervalRep) -> Graph:
    """Intersection graph of the intervals.

    Sweep over endpoints sorted with lefts before rights at equal
    coordinates, so touching closed intervals count as intersecting.
    """
    n = R.n
    events = sorted([(R.lo[v], 0, v) for v in range(n)] + [(R.hi[v], 1, v) for v in range(n)])
    adj = [0] * n
    active = 0
    for _, kind, v in events:
        if kind == 0:
            adj[v] |= active
            m = active
            while m:
                low = m & -m
                adj[low.bit_length() - 1] |= 1 << v
                m ^= low
            active |= 1 << v
        else:
            active &= ~(1 << v)
    return Graph(n, adj)


def validate_box_rep(G: Graph, B: Sequence[IntervalRep]) -> Verdict:
    """Check that the edge sets of the realized dimensions intersect to ``E(G)``."""
    for R in B:
        if R.n != G.n:
            raise InvalidRepresentation(f"representation has {R.n} vertices, graph has {G.n}")
    if not B:
        if G.is_complete():
            return Verdict(True)
        return Verdict(False, "spurious", G.non_edges()[0])
    graphs = [realize(R) for R in B]
    full = (1 << G.n) - 1
    inter = [full & ~(1 << v) for v in range(G.n)]
    for H in graphs:
        inter = [a & H.adj_mask(v) for v, a in enumerate(inter)]
    for u in range(G.n):
        diff = (inter[u] ^ G.adj_mask(u)) >> (u + 1)
        if diff:
            v = u + 1 + ((diff & -diff).bit_length() - 1)
            if G.has_edge(u, v):
                dim = next(i for i, H in enumerate(graphs) if not H.has_edge(u, v))
                return Verdict(False, "missing", (u, v), dim)
            return Verdict(False, "spurious", (u, v))
    return Verdict(True)


def saturate_to_clique(B: Sequence[IntervalRep], A: Iterable[int]) -> list[IntervalRep]:
    """Double the dimension so that ``A`` becomes a clique and nothing else changes.

    Each dimension is replaced by two copies: one stretching every ``A``
    interval left to the global minimum, one stretching it right to the
    global maximum.
    """
    if not B:
        raise InvalidRepresentation("cannot saturate a 0-dimensional representation")
    in_a = set(A)
    out = []
    for R in B:
        lmin, rmax = min(R.lo), max(R.hi)
        out.append(IntervalRep(
            tuple(lmin if v in in_a else R.lo[v] for v in range(R.n)), R.hi))
        out.append(IntervalRep(
            R.lo, tuple(rmax if v in in_a else R.hi[v] for v in range(R.n))))
    return out


def make_distinct(R: IntervalRep) -> IntervalRep:
    """Scale by ``2(n+1)`` and spread coinciding endpoints apart.

    At each original coordinate the left endpoints come first (by vertex),
    then the right endpoints, with offsets ``1..2n``; overlaps, including
    touching ones, are preserved and all ``2n`` endpoints become distinct.
    """
    n = R.n
    scale = 2 * (n + 1)
    at: dict[int, tuple[list[int], list[int]]] = {}
    for v in range(n):
        at.setdefault(R.lo[v], ([], []))[0].append(v)
        at.setdefault(R.hi[v], ([], []))[1].append(v)
    lo = [0] * n
    hi = [0] * n
    for x, (lefts, rights) in at.items():
        off = 1
        for v in sorted(lefts):
            lo[v] = x * scale + off
            off += 1
        for v in sorted(rights):
            hi[v] = x * scale + off
            off += 1
    return IntervalRep(tuple(lo), tuple(hi))


def helly_region(R: IntervalRep, S: Iterable[int]) -> tuple[int, int] | None:
    S = list(S)
    lo = max(R.lo[v] for v in S)
    hi = min(R.hi[v] for v in S)
    return (lo, hi) if lo <= hi else None


def nicefy(R: IntervalRep, G: Graph, S: Iterable[int]) -> tuple[IntervalRep, int]:
    """Shrink the intervals of the clique ``S`` to a nice representation.

    ``p`` is the midpoint (rounded down) of the Helly region of ``S``; every
    ``S`` interval is cut back to the hull of ``p`` and the nearest endpoints
    of its ``G``-neighbours outside ``S``. The result is sandwiched between
    ``G`` and ``realize(R)``.
    """
    S = sorted(set(S))
    if S:
        region = helly_region(R, S)
        if region is None:
            raise InvalidRepresentation("empty Helly region: S is not a clique of realize(R)")
        p = (region[0] + region[1]) // 2
    elif R.n:
        p = (min(R.lo) + max(R.hi)) // 2
    else:
        p = 0
    in_s = set(S)
    lo, hi = list(R.lo), list(R.hi)
    for v in S:
        outside = [u for u in G.neighbors(v) if u not in in_s]
        lo[v] = min([p] + [R.hi[u] for u in outside])
        hi[v] = max([p] + [R.lo[u] for u in outside])
    return IntervalRep(tuple(lo), tuple(hi)), p


def is_nice(R: IntervalRep, G: Graph, S: Iterable[int], p: int) -> bool:
    """Literal check of the three conditions of a nice representation."""
    S = set(S)
    if any(not (R.lo[v] <= p <= R.hi[v]) for v in S):
        return False
    ends = [x for v in range(R.n) if v not in S for x in (R.lo[v], R.hi[v])]
    if len(set(ends)) != len(ends):
        return False
    for v in S:
        outside = [u for u in G.neighbors(v) if u not in S]
        if R.lo[v] != min([p] + [R.hi[u] for u in outside]):
            return False
        if R.hi[v] != max([p] + [R.lo[u] for u in outside]):
            return False
    return True


def format_box_rep(B: Sequence[IntervalRep], n: int) -> str:
    lines = [f"boxrep {n} {len(B)}"]
    for i, R in enumerate(B):
        lines.append(f"dim {i}")
        lines += [f"{v} {R.lo[v]} {R.hi[v]}" for v in range(n)]
    return "\n".join(lines) + "\n"


def parse_box_rep(text: str | bytes) -> tuple[int, list[IntervalRep]]:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = [(i, l.split()) for i, l in enumerate(text.split("\n"), start=1) if l.strip()]
    if not lines or len(lines[0][1]) != 3 or lines[0][1][0] != "boxrep":
        raise ParseError("malformed header, expected 'boxrep <n> <d>'", lines[0][0] if lines else None)
    try:
        n, d = int(lines[0][1][1]), int(lines[0][1][2])
    except ValueError:
        raise ParseError("malformed header", lines[0][0]) from None
    if len(lines) != 1 + d * (n + 1):
        raise ParseError(f"expected {d} blocks of {n + 1} lines")
    reps = []
    pos = 1
    for i in range(d):
        lineno, head = lines[pos]
        if head != ["dim", str(i)]:
            raise ParseError(f"expected 'dim {i}'", lineno)
        lo = [0] * n
        hi = [0] * n
        seen = set()
        for lineno, parts in lines[pos + 1:pos + 1 + n]:
            try:
                v, l, r = (int(x) for x in parts)
            except ValueError:
                raise ParseError("malformed interval line", lineno) from None
            if not 0 <= v < n or v in seen:
                raise ParseError("vertex index out of range or repeated", lineno)
            if l > r:
                raise ParseError("left endpoint exceeds right endpoint", lineno)
            seen.add(v)
            lo[v], hi[v] = l, r
        reps.append(IntervalRep(tuple(lo), tuple(hi)))
        pos += n + 1
    return n, reps
