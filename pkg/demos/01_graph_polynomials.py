"""
Graph polynomials from spanning trees
=====================================

Each edge of a connected multigraph gets a variable t_e. The Kirchhoff
polynomial sums, over spanning trees, the product of the variables of the
edges left out of the tree.
"""

from graphmotive import Multigraph, family, psi, psi_family, spanning_tree_count, spanning_trees
from graphmotive.graph import edges_in

# A triangle with a doubled side: edges 1 and 2 are parallel.
g = Multigraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (2, 0)])
print("spanning trees:", [list(edges_in(t)) for t in spanning_trees(g)])
print("matrix-tree count:", spanning_tree_count(g))
print("Psi =", psi(g))

###############################################################################
# The four families have closed forms; the enumeration agrees with them.

for kind in ("star", "flower", "polygon", "banana"):
    p = psi(family(kind, 4))
    assert p == psi_family(kind, 4)
    print(f"{kind:8s} n=4: {p}")

###############################################################################
# Psi is homogeneous of degree n - v + 1 (the number of independent cycles),
# loops divide it, and bridges never appear in it.

lollipop = Multigraph.from_pairs(3, [(0, 1), (1, 1), (1, 2), (2, 1)])
print("loop + bridge + 2-gon:", psi(lollipop))
