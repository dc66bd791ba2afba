"""Chain covers and poset dimension through boxicity.

The chain cover number of a bipartite graph equals the boxicity of its
complement, and the dimension of a poset is the chain cover number of the
bipartite graph of its height-two split.
"""

from boxdim import Poset, kimble_split, oracle_chain_cover, oracle_poset_dimension, poset_bipartite
from boxdim import posetdim_approx

for k in (2, 3):
    S = Poset.from_relations(2 * k, [(i, k + j) for i in range(k) for j in range(k) if i != j])
    B = poset_bipartite(kimble_split(S))
    print(f"standard example S{k}: dim {oracle_poset_dimension(S)}, "
          f"ch of split graph {oracle_chain_cover(B, max_edges=32)}, approximation {posetdim_approx(S)[0]}")

chain = Poset.from_relations(2, [(0, 1)])
split = kimble_split(chain)
print(f"2-chain: dim {oracle_poset_dimension(chain)}, dim of split {oracle_poset_dimension(split)}, "
      f"ch of split graph {oracle_chain_cover(poset_bipartite(split))}")
