"""Approximate boxicity and cubicity of arbitrary graphs.

The vertex set is cut into parts of size k; each part plus a clique on the
rest is solved exactly and the representations are concatenated. On small
graphs the result is compared with the oracle value.
"""

import random

from boxdim import ApproxParams, approx_box, approx_cube, oracle_boxicity, oracle_cubicity
from boxdim import validate_box_rep, validate_cube_rep
from boxdim.graph import Graph

rng = random.Random(7)


def random_connected(n, p):
    while True:
        G = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if G.is_connected():
            return G


print("n  k  box  approx  bound | cub  approx")
for n in (6, 7, 8):
    G = random_connected(n, 0.5)
    box = oracle_boxicity(G)[0]
    cub = oracle_cubicity(G)[0]
    for k in (2, 3):
        params = ApproxParams.for_n(n, k)
        B, factor = approx_box(G, params)
        C, _ = approx_cube(G, params)
        assert validate_box_rep(G, B) and validate_cube_rep(G, C)
        print(f"{n}  {k}  {box:3d}  {len(B):6d}  {factor * box:5d} | {cub:3d}  {len(C):6d}")

G = random_connected(60, 0.5)
params = ApproxParams.for_n(60)
B, factor = approx_box(G, params)
print(f"n = 60 with default k = {params.k}, t = {params.t}: {len(B)} dimensions, factor {factor}")
