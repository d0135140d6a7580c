"""
When is a graph hypersurface reducible?
=======================================

Psi factors exactly when two different blocks of the graph contain cycles.
The block-structure verdict is compared with a direct search for
factorizations of Psi.
"""

from graphmotive import Multigraph, classify_graph, classify_poly, family, psi

graphs = {
    "two triangles at a vertex": Multigraph.from_pairs(
        5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]
    ),
    "triangle + pendant edge": Multigraph.from_pairs(4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
    "flower with 3 petals": family("flower", 3),
    "banana on 4 edges": family("banana", 4),
    "path": Multigraph.from_pairs(3, [(0, 1), (1, 2)]),
}

for name, g in graphs.items():
    v = classify_graph(g)
    check = classify_poly(psi(g)).kind
    line = f"{name:28s} {v.kind.value:18s} (polynomial search: {check.value})"
    if v.witness is not None:
        w = v.witness
        line += f"\n{'':28s} split at vertex {w.separating_vertex}: ({w.factors[0]}) * ({w.factors[1]})"
    print(line)
