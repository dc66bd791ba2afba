"""Sublinear-factor approximation of boxicity and cubicity.

Split ``V`` into parts of size at most ``k``. For each part ``V_i`` the
supergraph ``G_i`` (``G`` plus a clique on ``V \\ V_i``) has a clique on all
but ``k`` vertices, so it is solved exactly; the ``G_i`` intersect to ``G``
and ``box(G_i) <= 2 box(G)``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .errors import BoxdimError, CapabilityError
from .exact import DEFAULT_K_MAX, exact_box_large_clique
from .graph import Graph
from .intervals import IntervalRep, validate_box_rep
from .unit import UnitIntervalRep, decompose_interval_to_units, validate_cube_rep


class DisconnectedGraph(BoxdimError, ValueError):
    def __init__(self, components: list[list[int]]):
        self.components = components
        shown = "; ".join(" ".join(str(v + 1) for v in c) for c in components)
        super().__init__(
            f"graph has {len(components)} components ({shown}); "
            "cube approximation needs a connected graph, run per component "
            "(per_component=True / --per-component)")


@dataclass(frozen=True)
class ApproxParams:
    k: int
    t: int

    def __post_init__(self):
        if self.k < 1 or self.t < 1:
            raise ValueError("k and t must be positive")

    @classmethod
    def for_n(cls, n: int, k: int | None = None) -> ApproxParams:
        """Default part size from ``n``; an explicit ``k`` bypasses the formula.

        Logs are base 2. With the default ``k``,
        ``t = max(ceil(n / k), ceil(n sqrt(log log n) / sqrt(log n)))``;
        with an explicit ``k``, ``t = ceil(n / k)``.
        """
        n = max(n, 1)
        if k is not None:
            if k < 1:
                raise ValueError("k must be positive")
            return cls(k, max(1, math.ceil(n / k)))
        if n <= 4:
            return cls(1, n)
        lg = math.log2(n)
        llg = math.log2(lg)
        k = max(1, math.ceil(math.sqrt(lg / llg)))
        t = max(math.ceil(n / k), math.ceil(n * math.sqrt(llg) / math.sqrt(lg)))
        return cls(k, t)

    @property
    def box_factor(self) -> int:
        return 2 * self.t

    @property
    def cube_factor(self) -> int:
        return 2 * self.t * max(1, math.ceil(math.log2(self.k)))


def partition_vertices(G: Graph, params: ApproxParams) -> list[list[int]]:
    """Contiguous chunks of ``k`` labels; ``t`` parts, trailing ones possibly empty."""
    k = params.k
    parts = [list(range(j * k, min((j + 1) * k, G.n))) for j in range(params.t)]
    covered = sum(len(p) for p in parts)
    if covered < G.n:
        raise ValueError(f"k * t = {k * params.t} < n = {G.n}")
    return parts


def augment_supergraph(G: Graph, part: list[int]) -> Graph:
    inside = set(part)
    return G.add_clique(v for v in range(G.n) if v not in inside)


def independence_number_with_clique(G: Graph, part: list[int]) -> int:
    """``alpha(G)`` when ``V \\ part`` is a clique: at most one vertex from outside."""
    inside = set(part)
    outside = [v for v in range(G.n) if v not in inside]
    best = 1 if G.n else 0
    for r in range(len(part), 0, -1):
        if r + 1 <= best:
            break
        for S in combinations(part, r):
            if any(G.has_edge(a, b) for a, b in combinations(S, 2)):
                continue
            best = max(best, r)
            if any(all(not G.has_edge(q, s) for s in S) for q in outside):
                best = max(best, r + 1)
                break
    return best


def _solve_parts(G: Graph, params: ApproxParams, k_max: int, threads: int):
    parts = [p for p in partition_vertices(G, params) if p]
    graphs = [augment_supergraph(G, p) for p in parts]

    def solve(i):
        return exact_box_large_clique(graphs[i], k_max=k_max)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(solve, range(len(parts))))
    return parts, graphs, results


def approx_box(G: Graph, params: ApproxParams | None = None, k_max: int = DEFAULT_K_MAX,
               threads: int = 1) -> tuple[list[IntervalRep], int]:
    """Box representation of ``G`` and its reported factor ``2t``."""
    params = params or ApproxParams.for_n(G.n)
    if G.is_complete():
        return [], params.box_factor
    _, _, results = _solve_parts(G, params, k_max, threads)
    B = [R for _, Bi in results for R in Bi]
    verdict = validate_box_rep(G, B)
    if not verdict:
        raise AssertionError(f"union of part representations is invalid: {verdict.describe()}")
    return B, params.box_factor


def approx_box_parts(G: Graph, params: ApproxParams, k_max: int = DEFAULT_K_MAX):
    """Per-part detail: ``[(part, G_i, box(G_i), B_i)]`` for nonempty parts."""
    parts, graphs, results = _solve_parts(G, params, k_max, 1)
    return [(p, Gi, b, Bi) for p, Gi, (b, Bi) in zip(parts, graphs, results)]


def _cube_connected(G: Graph, params: ApproxParams, k_max: int, threads: int, strict: bool):
    parts, graphs, results = _solve_parts(G, params, k_max, threads)

    def convert(i):
        alpha = independence_number_with_clique(graphs[i], parts[i])
        out = []
        for R in results[i][1]:
            try:
                out.extend(decompose_interval_to_units(R, alpha))
            except CapabilityError as err:
                if strict:
                    raise
                out.extend(err.fallback)
        return out

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        pieces = list(pool.map(convert, range(len(parts))))
    return [U for piece in pieces for U in piece]


def approx_cube(G: Graph, params: ApproxParams | None = None, k_max: int = DEFAULT_K_MAX,
                threads: int = 1, per_component: bool = False,
                strict: bool = True) -> tuple[list[UnitIntervalRep], int]:
    """Cube representation of connected ``G`` and its reported factor.

    With ``strict=False`` a part whose decomposition exceeds the log bound
    contributes its cut-sweep fallback instead of raising.
    """
    params = params or ApproxParams.for_n(G.n)
    if G.is_complete():
        return [], params.cube_factor
    comps = G.components()
    if len(comps) > 1:
        if not per_component:
            raise DisconnectedGraph(comps)
        C = _combine_components(G, comps, k_max, threads, strict, params)
    else:
        C = _cube_connected(G, params, k_max, threads, strict)
    verdict = validate_cube_rep(G, C)
    if not verdict:
        raise AssertionError(f"union of cube representations is invalid: {verdict.describe()}")
    return C, params.cube_factor


def _combine_components(G, comps, k_max, threads, strict, params):
    """Run each component alone, then lay components side by side.

    Dimension 0 places components more than one unit apart; in later
    dimensions a component without a representation of its own sits at a
    single point.
    """
    reps = []
    for comp in comps:
        H = G.induced(comp)
        if H.is_complete():
            reps.append([])
        else:
            reps.append(_cube_connected(H, ApproxParams.for_n(H.n, params.k), k_max, threads, strict))
    d = max(1, max(len(r) for r in reps))
    out = []
    for j in range(d):
        denom = math.lcm(*[r[j].denom for r in reps if j < len(r)]) if any(j < len(r) for r in reps) else 1
        num = [0] * G.n
        offset = 0
        for comp, r in zip(comps, reps):
            if j < len(r):
                scale = denom // r[j].denom
                local = [x * scale for x in r[j].num]
            else:
                local = [0] * len(comp)
            base = min(local)
            for v, x in zip(comp, local):
                num[v] = x - base + (offset if j == 0 else 0)
            if j == 0:
                offset += max(local) - base + 2 * denom
        out.append(UnitIntervalRep(tuple(num), denom))
    return out
