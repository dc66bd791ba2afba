"""Unit interval graphs and cube representations.

A unit interval representation stores one integer numerator per vertex
over a shared denominator; vertex ``v`` owns ``[num[v], num[v] + denom]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import CapabilityError, DimensionExceeded, InvalidRepresentation, ParseError
from .graph import Graph
from .intervals import IntervalRep, Verdict, realize, validate_box_rep

EXHAUSTIVE_MAX_N = 9


@dataclass(frozen=True)
class UnitIntervalRep:
    num: tuple[int, ...]
    denom: int

    def __post_init__(self):
        if self.denom <= 0:
            raise InvalidRepresentation("denominator must be positive")

    @property
    def n(self) -> int:
        return len(self.num)

    def as_intervals(self) -> IntervalRep:
        return IntervalRep(self.num, tuple(x + self.denom for x in self.num))


def realize_unit(U: UnitIntervalRep) -> Graph:
    return realize(U.as_intervals())


def validate_cube_rep(G: Graph, C: Sequence[UnitIntervalRep]) -> Verdict:
    return validate_box_rep(G, [U.as_intervals() for U in C])


def lbfs(G: Graph, prev: Sequence[int] | None = None) -> list[int]:
    """Lexicographic BFS; with ``prev`` given, ties go to the vertex latest in ``prev`` (LBFS+)."""
    n = G.n
    rank = {v: i for i, v in enumerate(prev)} if prev is not None else None
    labels: list[tuple[int, ...]] = [()] * n
    left = set(range(n))
    order = []
    for step in range(n):
        if rank is None:
            v = max(left, key=lambda x: (labels[x], -x))
        else:
            v = max(left, key=lambda x: (labels[x], rank[x]))
        order.append(v)
        left.discard(v)
        for u in G.neighbors(v):
            if u in left:
                labels[u] = labels[u] + (n - step,)
    return order


def is_umbrella_order(G: Graph, order: Sequence[int]) -> bool:
    """Every edge's endpoints are adjacent to everything strictly between them."""
    pos = {v: i for i, v in enumerate(order)}
    for u, w in G.edges():
        i, j = sorted((pos[u], pos[w]))
        for m in range(i + 1, j):
            x = order[m]
            if not (G.has_edge(x, order[i]) and G.has_edge(x, order[j])):
                return False
    return True


def _solve_difference_constraints(n: int, constraints: list[tuple[int, int, int]]) -> list[int] | None:
    """Bellman-Ford for ``x[j] - x[i] <= c``; None on a negative cycle."""
    dist = [0] * n
    for _ in range(n):
        changed = False
        for i, j, c in constraints:
            if dist[i] + c < dist[j]:
                dist[j] = dist[i] + c
                changed = True
        if not changed:
            return dist
    for i, j, c in constraints:
        if dist[i] + c < dist[j]:
            return None
    return dist


def unit_interval_rep(G: Graph) -> UnitIntervalRep | None:
    """Unit interval representation of ``G``, or None if ``G`` has none.

    Three LBFS sweeps give a candidate umbrella order; positions then come
    from the difference system ``0 <= x_v - x_u <= D`` for adjacent ``u``
    before ``v`` and ``x_v - x_u >= D + 1`` for non-adjacent ones, ``D = 2n``.
    """
    n = G.n
    if n == 0:
        return UnitIntervalRep((), 1)
    s1 = lbfs(G)
    s2 = lbfs(G, s1)
    order = lbfs(G, s2)
    if not is_umbrella_order(G, order):
        return None
    D = 2 * n
    cons = []
    for a in range(n):
        for b in range(a + 1, n):
            u, v = order[a], order[b]
            cons.append((v, u, 0))
            if G.has_edge(u, v):
                cons.append((u, v, D))
            else:
                cons.append((v, u, -(D + 1)))
    x = _solve_difference_constraints(n, cons)
    if x is None:
        return None
    base = min(x)
    U = UnitIntervalRep(tuple(v - base for v in x), D)
    if realize_unit(U) != G:
        raise AssertionError("unit interval synthesis produced a different graph")
    return U


def greedy_mis_interval(R: IntervalRep) -> list[int]:
    """Maximum independent set of ``realize(R)`` by the right-endpoint sweep."""
    chosen = []
    last = None
    for v in sorted(range(R.n), key=lambda v: (R.hi[v], v)):
        if last is None or R.lo[v] > last:
            chosen.append(v)
            last = R.hi[v]
    return sorted(chosen)


def _cut_dimension(R: IntervalRep, cut: int, rank: dict[int, int], D: int) -> UnitIntervalRep:
    """One unit dimension that is exact on (left of cut) x (through cut).

    Intervals ending before ``cut`` sit at ``rank(r) - D``, intervals through
    ``cut`` at ``rank(l)``, intervals starting after it at ``D``.
    """
    num = []
    for v in range(R.n):
        if R.hi[v] < cut:
            num.append(rank[R.hi[v]])
        elif R.lo[v] > cut:
            num.append(2 * D)
        else:
            num.append(rank[R.lo[v]] + D)
    return UnitIntervalRep(tuple(num), D)


def cut_sweep(R: IntervalRep) -> list[UnitIntervalRep]:
    """``alpha - 1`` unit dimensions, one per greedy stabbing point after the first.

    A non-adjacent pair ``r_u < l_w`` is separated at any cut in
    ``(r_u, r_w]``, and ``w`` always contains a stabbing point there.
    """
    mis = greedy_mis_interval(R)
    stabs = sorted(R.hi[v] for v in mis)
    coords = sorted(set(R.lo) | set(R.hi))
    rank = {x: i for i, x in enumerate(coords)}
    D = max(1, len(coords))
    return [_cut_dimension(R, c, rank, D) for c in stabs[1:]]


def _twin_classes(H: Graph) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v in range(H.n):
        groups.setdefault(H.adj_mask(v) | (1 << v), []).append(v)
    return sorted(groups.values())


def decompose_interval_to_units(R: IntervalRep, alpha_bound: int,
                                allow_empty: bool = True) -> list[UnitIntervalRep]:
    """Unit interval representations whose intersection is ``realize(R)``.

    Uses at most ``max(1, ceil(log2(alpha)))`` dimensions. Tries, in order:
    a single dimension when ``alpha <= 2``; the cut sweep when it fits the
    bound; exhaustive search on the twin quotient. Raises CapabilityError
    otherwise, carrying the cut sweep as ``fallback``.
    """
    H = realize(R)
    if H.is_complete():
        return [] if allow_empty else [UnitIntervalRep((0,) * R.n, 1)]
    alpha = len(greedy_mis_interval(R))
    if alpha > alpha_bound:
        raise ValueError(f"alpha_bound {alpha_bound} is below the independence number {alpha}")
    bound = max(1, math.ceil(math.log2(alpha)))
    if alpha <= 2:
        U = unit_interval_rep(H)
        if U is None:
            raise AssertionError("claw-free interval graph rejected as unit interval")
        return [U]
    sweep = cut_sweep(R)
    if len(sweep) <= bound and validate_cube_rep(H, sweep):
        return sweep
    classes = _twin_classes(H)
    if len(classes) <= EXHAUSTIVE_MAX_N:
        from .oracle import oracle_cubicity

        quotient = H.induced([c[0] for c in classes])
        try:
            _, Cq = oracle_cubicity(quotient, max_dim=bound, max_n=EXHAUSTIVE_MAX_N)
        except DimensionExceeded:
            Cq = None
        if Cq is not None:
            out = []
            for U in Cq:
                num = [0] * R.n
                for i, cls in enumerate(classes):
                    for v in cls:
                        num[v] = U.num[i]
                out.append(UnitIntervalRep(tuple(num), U.denom))
            if not validate_cube_rep(H, out):
                raise AssertionError("lifted quotient representation is invalid")
            return out
    raise CapabilityError(
        f"no unit decomposition within {bound} dimensions (alpha = {alpha}, "
        f"{len(classes)} twin classes); cut sweep gives {len(sweep)}",
        fallback=sweep,
    )


def format_cube_rep(C: Sequence[UnitIntervalRep], n: int) -> str:
    lines = [f"cuberep {n} {len(C)}"]
    for i, U in enumerate(C):
        lines.append(f"dim {i} {U.denom}")
        lines += [f"{v} {U.num[v]}" for v in range(n)]
    return "\n".join(lines) + "\n"


def parse_cube_rep(text: str | bytes) -> tuple[int, list[UnitIntervalRep]]:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = [(i, l.split()) for i, l in enumerate(text.split("\n"), start=1) if l.strip()]
    if not lines or len(lines[0][1]) != 3 or lines[0][1][0] != "cuberep":
        raise ParseError("malformed header, expected 'cuberep <n> <d>'", lines[0][0] if lines else None)
    try:
        n, d = int(lines[0][1][1]), int(lines[0][1][2])
    except ValueError:
        raise ParseError("malformed header", lines[0][0]) from None
    if len(lines) != 1 + d * (n + 1):
        raise ParseError(f"expected {d} blocks of {n + 1} lines")
    out = []
    pos = 1
    for i in range(d):
        lineno, head = lines[pos]
        if len(head) != 3 or head[:2] != ["dim", str(i)]:
            raise ParseError(f"expected 'dim {i} <denom>'", lineno)
        try:
            denom = int(head[2])
        except ValueError:
            raise ParseError("malformed denominator", lineno) from None
        if denom <= 0:
            raise ParseError("denominator must be positive", lineno)
        num = [0] * n
        seen = set()
        for lineno, parts in lines[pos + 1:pos + 1 + n]:
            try:
                v, x = (int(t) for t in parts)
            except ValueError:
                raise ParseError("malformed position line", lineno) from None
            if not 0 <= v < n or v in seen:
                raise ParseError("vertex index out of range or repeated", lineno)
            seen.add(v)
            num[v] = x
        out.append(UnitIntervalRep(tuple(num), denom))
        pos += n + 1
    return n, out
