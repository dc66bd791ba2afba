"""Optimal boxicity for graphs with a clique on all but ``k`` vertices.

Every box representation can be rewritten so that each dimension is a nice
interval supergraph with respect to the large clique, so it suffices to
pick the fewest nice candidates whose separated non-edges cover all
non-edges of ``G``.
"""

from __future__ import annotations

import numpy as np

from .errors import CapabilityError, InvalidRepresentation
from .graph import Graph, clique_residual_split
from .intervals import IntervalRep, validate_box_rep
from .nice import separation_family

DEFAULT_K_MAX = 12


def maximal_masks(masks: list[int], nbits: int) -> list[int]:
    """Indices of masks not strictly contained in another mask (first index wins on ties)."""
    if not masks:
        return []
    words = max(1, (nbits + 63) // 64)
    arr = np.zeros((len(masks), words), dtype=np.uint64)
    lim = (1 << 64) - 1
    for i, m in enumerate(masks):
        for w in range(words):
            arr[i, w] = (m >> (64 * w)) & lim
    pop = np.array([m.bit_count() for m in masks])
    order = sorted(range(len(masks)), key=lambda i: (-pop[i], i))
    kept: list[int] = []
    kept_arr = np.zeros((0, words), dtype=np.uint64)
    for i in order:
        row = arr[i]
        if len(kept) and np.any(np.all((kept_arr & row) == row, axis=1)):
            continue
        kept.append(i)
        kept_arr = np.vstack([kept_arr, row[None, :]])
    return sorted(kept)


def smallest_cover(masks: list[int], full: int, d: int) -> list[int] | None:
    """Indices of ``d`` masks whose union is ``full``, or None.

    Branches on the uncovered element with the fewest covering masks
    (lowest element on ties), trying masks in index order.
    """
    nbits = full.bit_length()
    by_elem = [[i for i, m in enumerate(masks) if m >> e & 1] for e in range(nbits)]

    def rec(covered: int, left: int, chosen: list[int]) -> list[int] | None:
        missing = full & ~covered
        if not missing:
            return list(chosen)
        if left == 0:
            return None
        best = None
        m = missing
        while m:
            low = m & -m
            e = low.bit_length() - 1
            m ^= low
            if best is None or len(by_elem[e]) < len(by_elem[best]):
                best = e
        if left == 1:
            for i in by_elem[best]:
                if masks[i] | covered == full:
                    return chosen + [i]
            return None
        for i in by_elem[best]:
            chosen.append(i)
            found = rec(covered | masks[i], left - 1, chosen)
            chosen.pop()
            if found is not None:
                return found
        return None

    return rec(0, d, [])


def exact_box_large_clique(G: Graph, k_max: int = DEFAULT_K_MAX,
                           threads: int = 1) -> tuple[int, list[IntervalRep]]:
    """Boxicity of ``G`` and an optimal box representation.

    Raises CapabilityError when no clique covers all but ``k_max`` vertices.
    """
    if G.is_complete():
        return 0, []
    split = clique_residual_split(G, k_max)
    if split is None:
        raise CapabilityError(
            f"no clique leaves at most {k_max} vertices outside; use the approximation pipeline")
    A, _ = split
    fam = separation_family(G, A, stop_on_full=True, threads=threads)
    full = fam.full
    if fam.masks and fam.masks[-1] == full:
        chosen = [len(fam.masks) - 1]
    else:
        keep = maximal_masks(fam.masks, len(fam.elements))
        sub = [fam.masks[i] for i in keep]
        chosen = None
        for d in range(2, len(A) + 1):
            found = smallest_cover(sub, full, d)
            if found is not None:
                chosen = sorted(keep[i] for i in found)
                break
        if chosen is None:
            raise AssertionError("no cover within |A| dimensions; enumeration is incomplete")
    B = [fam.candidate(G, i) for i in chosen]
    verdict = validate_box_rep(G, B)
    if not verdict:
        raise InvalidRepresentation(f"internal error: {verdict.describe()}")
    return len(B), B
