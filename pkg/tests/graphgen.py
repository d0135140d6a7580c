"""Graph corpora shared by the tests."""

import random
from itertools import combinations_with_replacement

from graphmotive.embedding import HEAD, TAIL, RotationSystem
from graphmotive.graph import Multigraph, is_connected


def all_connected_multigraphs(max_edges, reduced=True):
    """Every connected multigraph with 1..max_edges edges and no isolated
    vertices, as sorted edge multisets. With ``reduced`` only labelings
    whose degrees are non-increasing in the vertex index are kept, which
    still leaves at least one per isomorphism class."""
    out = []
    for n in range(1, max_edges + 1):
        for v in range(1, n + 2):
            pairs = [(a, b) for a in range(v) for b in range(a, v)]
            for chosen in combinations_with_replacement(pairs, n):
                deg = [0] * v
                for a, b in chosen:
                    deg[a] += 1
                    deg[b] += 1
                if 0 in deg or (reduced and any(deg[i] < deg[i + 1] for i in range(v - 1))):
                    continue
                g = Multigraph.from_pairs(v, chosen)
                if is_connected(g):
                    out.append(g)
    return out


def random_connected_multigraph(rng: random.Random, max_edges: int, loop_rate=0.1):
    """Random spanning tree plus extra edges (parallels and loops allowed),
    with edge ids shuffled."""
    n = rng.randint(1, max_edges)
    v = rng.randint(1 if loop_rate else 2, n + 1)
    pairs = [(rng.randrange(i), i) for i in range(1, v)]
    while len(pairs) < n:
        a = rng.randrange(v)
        if v == 1 or rng.random() < loop_rate:
            b = a
        else:
            b = rng.choice([u for u in range(v) if u != a])
        pairs.append((a, b))
    rng.shuffle(pairs)
    return Multigraph.from_pairs(v, pairs)


def random_corpus(count, max_edges, seed=20111):
    rng = random.Random(seed)
    return [random_connected_multigraph(rng, max_edges) for _ in range(count)]


def two_triangles():
    """Triangles 1-2-3 and 4-5-6 glued at vertex 0."""
    return Multigraph.from_pairs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def random_rotation(g, rng):
    """Uniformly shuffled rotation at every vertex; usually not spherical."""
    rot = [[] for _ in range(g.vertex_count)]
    for e in g.edges:
        rot[e.tail].append((e.id, TAIL))
        rot[e.head].append((e.id, HEAD))
    for cyc in rot:
        rng.shuffle(cyc)
    return RotationSystem(g, tuple(map(tuple, rot)))
