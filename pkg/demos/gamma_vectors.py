"""Chamber counts of every acyclic orientation, and where the maximum sits.

Run: python3 demos/gamma_vectors.py
"""
from gammacone import gamma_vector, named_family, parse_graph, principal_decomposition, principal_orientation, reverse
from gammacone.order import Orientation, flip_until_principal
from gammacone.count import count_ideals_dp

graphs = {
    "path(4)": named_family("path", 4),
    "star(4)": named_family("star", 4),
    "4-cycle": parse_graph("0 1\n1 2\n2 3\n3 0\n"),
    "E(7)": named_family("E", 7),
}

for name, g in graphs.items():
    gv = gamma_vector(g)
    po = principal_orientation(g, principal_decomposition(g))
    pair = sorted({po.bits, reverse(po).bits})
    print(f"{name:8} {len(gv.sigma):>3} orientations, total {gv.total():>5}, vector {gv.notation()}")
    print(f"{'':8} maximum {gv.maximum} at {[bin(b) for b in gv.argmax]}; principal pair {[bin(b) for b in pair]}")

# On a tree any orientation can be pushed to a principal one; each flip
# strictly increases the count.
g = named_family("E", 7)
chain = Orientation(g, 0)  # every edge from smaller to larger label
print("\nflip path from", chain.to_bitstring())
for o in flip_until_principal(chain):
    print(f"  {o.to_bitstring()}  sigma = {count_ideals_dp(o)}")
