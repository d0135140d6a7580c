"""Labeled multigraphs with loops, spanning trees and block decomposition.

Edges carry ids ``1..n``; an edge subset is an int bitmask where bit ``e``
stands for edge ``e`` (bit 0 is never used).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import GraphMotiveError, NotConnectedError

MAX_EDGES = 64

FAMILIES = ("star", "flower", "polygon", "banana")


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def other(self, v: int) -> int:
        return self.head if v == self.tail else self.tail


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        edges = tuple(sorted(edges, key=lambda e: e.id))
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 1:
            raise GraphMotiveError("vertex_count must be positive")
        if len(edges) > MAX_EDGES:
            raise GraphMotiveError(f"at most {MAX_EDGES} edges supported")
        if [e.id for e in edges] != list(range(1, len(edges) + 1)):
            raise GraphMotiveError("edge ids must be exactly 1..n")
        for e in edges:
            if not (0 <= e.tail < self.vertex_count and 0 <= e.head < self.vertex_count):
                raise GraphMotiveError(f"edge {e.id} has an endpoint out of range")

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs) -> Multigraph:
        """Build from ``(tail, head)`` pairs; ids are assigned 1..n in order."""
        return cls(vertex_count, tuple(Edge(i, a, b) for i, (a, b) in enumerate(pairs, 1)))

    @property
    def n(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return ((1 << self.n) - 1) << 1

    def edge(self, edge_id: int) -> Edge:
        return self.edges[edge_id - 1]

    def incidence(self) -> list[list[Edge]]:
        inc: list[list[Edge]] = [[] for _ in range(self.vertex_count)]
        for e in self.edges:
            inc[e.tail].append(e)
            if not e.is_loop:
                inc[e.head].append(e)
        return inc

    def vertices_of(self, mask: int) -> set[int]:
        out = set()
        for e in edges_in(mask):
            edge = self.edge(e)
            out.update((edge.tail, edge.head))
        return out

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edges": [{"id": e.id, "tail": e.tail, "head": e.head} for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> Multigraph:
        try:
            edges = tuple(Edge(int(e["id"]), int(e["tail"]), int(e["head"])) for e in data["edges"])
            return cls(int(data["vertex_count"]), edges)
        except (KeyError, TypeError) as exc:
            raise GraphMotiveError(f"malformed graph JSON: {exc!r}") from exc


def edges_in(mask: int) -> Iterator[int]:
    """Edge ids set in ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(edge_ids) -> int:
    m = 0
    for e in edge_ids:
        m |= 1 << e
    return m


class _DSU:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def is_connected(g: Multigraph) -> bool:
    dsu = _DSU(g.vertex_count)
    parts = g.vertex_count
    for e in g.edges:
        if dsu.union(e.tail, e.head):
            parts -= 1
    return parts == 1


def _require_connected(g: Multigraph) -> None:
    if not is_connected(g):
        raise NotConnectedError()


def spanning_trees(g: Multigraph) -> list[int]:
    """All spanning trees as edge bitmasks, ascending.

    Backtracks over non-loop edges; an edge is skipped only if the
    remaining edges can still join the components left over.
    """
    _require_connected(g)
    candidates = [e for e in g.edges if not e.is_loop]
    need = g.vertex_count - 1
    found: list[int] = []

    def walk(i: int, parent: list[int], used: int, mask: int) -> None:
        if used == need:
            found.append(mask)
            return
        if len(candidates) - i < need - used:
            return
        e = candidates[i]

        def root(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ra, rb = root(e.tail), root(e.head)
        if ra != rb:
            joined = parent.copy()
            joined[ra] = rb
            walk(i + 1, joined, used + 1, mask | (1 << e.id))
        walk(i + 1, parent, used, mask)

    walk(0, list(range(g.vertex_count)), 0, 0)
    found.sort()
    return found


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    size = len(m)
    if size == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def laplacian(g: Multigraph) -> list[list[int]]:
    """Combinatorial Laplacian; loops contribute nothing."""
    lap = [[0] * g.vertex_count for _ in range(g.vertex_count)]
    for e in g.edges:
        if e.is_loop:
            continue
        lap[e.tail][e.tail] += 1
        lap[e.head][e.head] += 1
        lap[e.tail][e.head] -= 1
        lap[e.head][e.tail] -= 1
    return lap


def spanning_tree_count(g: Multigraph) -> int:
    """Number of spanning trees via a reduced-Laplacian determinant."""
    _require_connected(g)
    lap = laplacian(g)
    return _bareiss_det([row[1:] for row in lap[1:]])


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[int, ...]
    cut_vertices: frozenset[int]


def blocks(g: Multigraph) -> BlockDecomposition:
    """Block-cut decomposition (Hopcroft-Tarjan on an edge stack).

    Loops are split off as their own blocks. Parallel edges are told apart
    by edge id, so a parallel pair lands in one block. A cut vertex is any
    vertex lying in two or more blocks.
    """
    _require_connected(g)
    inc = g.incidence()
    depth = [-1] * g.vertex_count
    low = [0] * g.vertex_count
    found: list[int] = [1 << e.id for e in g.edges if e.is_loop]
    stack: list[int] = []

    def dfs(v: int, via: int, d: int) -> None:
        depth[v] = low[v] = d
        for e in inc[v]:
            if e.is_loop or e.id == via:
                continue
            w = e.other(v)
            if depth[w] == -1:
                stack.append(e.id)
                dfs(w, e.id, d + 1)
                low[v] = min(low[v], low[w])
                if low[w] >= depth[v]:
                    block = 0
                    while True:
                        eid = stack.pop()
                        block |= 1 << eid
                        if eid == e.id:
                            break
                    found.append(block)
            elif depth[w] < depth[v]:
                stack.append(e.id)
                low[v] = min(low[v], depth[w])

    dfs(0, 0, 0)
    found.sort()
    membership = [0] * g.vertex_count
    for b in found:
        for v in g.vertices_of(b):
            membership[v] += 1
    cuts = frozenset(v for v, k in enumerate(membership) if k >= 2)
    return BlockDecomposition(tuple(found), cuts)


def is_cyclic_block(b: int, g: Multigraph) -> bool:
    ids = list(edges_in(b))
    return len(ids) >= 2 or g.edge(ids[0]).is_loop


def subgraph(g: Multigraph, mask: int) -> tuple[Multigraph, list[int]]:
    """Restrict ``g`` to the edges in ``mask`` and their endpoints.

    Vertices are compacted in ascending order and edges renumbered 1..k in
    ascending id order. Returns the subgraph and ``id_map`` where
    ``id_map[new_id - 1]`` is the original edge id.
    """
    ids = list(edges_in(mask))
    verts = sorted(g.vertices_of(mask)) or [0]
    index = {v: i for i, v in enumerate(verts)}
    edges = tuple(Edge(i, index[g.edge(e).tail], index[g.edge(e).head]) for i, e in enumerate(ids, 1))
    return Multigraph(len(verts), edges), ids


def family(kind: str, n: int) -> Multigraph:
    """The star, flower, polygon and banana graphs on ``n`` edges."""
    if kind not in FAMILIES:
        raise GraphMotiveError(f"unknown family {kind!r}")
    lowest = 2 if kind in ("polygon", "banana") else 1
    if not (lowest <= n <= MAX_EDGES):
        raise GraphMotiveError(f"{kind} requires {lowest} <= n <= {MAX_EDGES}, got {n}")
    if kind == "star":
        return Multigraph.from_pairs(n + 1, [(0, i) for i in range(1, n + 1)])
    if kind == "flower":
        return Multigraph.from_pairs(1, [(0, 0)] * n)
    if kind == "polygon":
        return Multigraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])
    return Multigraph.from_pairs(2, [(0, 1)] * n)


def wheel(k: int) -> Multigraph:
    """Wheel W_k: hub 0 joined to a k-cycle on 1..k.

    Rim edges are 1..k (edge i runs from rim vertex i to i+1), spokes are
    k+1..2k (spoke k+i runs from the hub to rim vertex i).
    """
    if k < 3:
        raise GraphMotiveError("wheel needs at least 3 rim vertices")
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    spokes = [(0, i) for i in range(1, k + 1)]
    return Multigraph.from_pairs(k + 1, rim + spokes)


def edge_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    """True iff some vertex bijection maps every edge of ``g`` onto the
    edge of ``h`` with the same id."""
    if g.n != h.n or g.vertex_count != h.vertex_count:
        return False
    fwd: dict[int, int] = {}
    back: dict[int, int] = {}

    def bind(a, b, undo):
        if a in fwd:
            return fwd[a] == b
        if b in back:
            return False
        fwd[a], back[b] = b, a
        undo.append(a)
        return True

    def go(i: int) -> bool:
        if i == g.n:
            return True
        e, f = g.edges[i], h.edges[i]
        if e.is_loop != f.is_loop:
            return False
        for x, y in ((f.tail, f.head), (f.head, f.tail)):
            undo: list[int] = []
            if bind(e.tail, x, undo) and bind(e.head, y, undo) and go(i + 1):
                return True
            for a in undo:
                del back[fwd.pop(a)]
        return False

    return go(0)


def simple_cycles(g: Multigraph) -> list[int]:
    """Masks of every simple cycle of ``g`` by subset enumeration.

    Exponential; meant as an independent oracle on small graphs.
    """
    cycles = []
    for mask in range(2, 1 << (g.n + 1), 2):
        ids = list(edges_in(mask))
        deg: dict[int, int] = {}
        for e in ids:
            edge = g.edge(e)
            deg[edge.tail] = deg.get(edge.tail, 0) + 1
            deg[edge.head] = deg.get(edge.head, 0) + 1
        if any(d != 2 for d in deg.values()):
            continue
        sub, _ = subgraph(g, mask)
        if is_connected(sub):
            cycles.append(mask)
    return cycles


def has_unshared_edge_pair(g: Multigraph) -> bool:
    cycles = simple_cycles(g)
    for a, b in combinations(range(1, g.n + 1), 2):
        pair = (1 << a) | (1 << b)
        if not any(c & pair == pair for c in cycles):
            return True
    return False
