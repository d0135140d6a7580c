"""Rotation systems on the sphere, face tracing and planar duals.

A half-edge (dart) is ``(edge_id, end)`` with ``end`` 0 for the tail side
and 1 for the head side; it sits at that endpoint and points along the
edge. Faces are orbits of ``dart -> successor(twin(dart))``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmbeddingError
from .graph import Edge, Multigraph, _require_connected, family, wheel

TAIL, HEAD = 0, 1
_END_NAMES = ("tail", "head")

Dart = tuple[int, int]


def twin(d: Dart) -> Dart:
    return (d[0], 1 - d[1])


@dataclass(frozen=True)
class RotationSystem:
    graph: Multigraph
    rotation: tuple[tuple[Dart, ...], ...]

    def __post_init__(self):
        rot = tuple(tuple((int(e), int(s)) for e, s in cyc) for cyc in self.rotation)
        object.__setattr__(self, "rotation", rot)
        g = self.graph
        if len(rot) != g.vertex_count:
            raise EmbeddingError("rotation must list one cycle per vertex")
        seen: set[Dart] = set()
        for v, cyc in enumerate(rot):
            for e, side in cyc:
                if not (1 <= e <= g.n) or side not in (TAIL, HEAD):
                    raise EmbeddingError(f"bad half-edge {(e, side)}")
                edge = g.edge(e)
                if (edge.tail, edge.head)[side] != v:
                    raise EmbeddingError(f"half-edge {(e, _END_NAMES[side])} is not at vertex {v}")
                if (e, side) in seen:
                    raise EmbeddingError(f"half-edge {(e, _END_NAMES[side])} listed twice")
                seen.add((e, side))
        if len(seen) != 2 * g.n:
            raise EmbeddingError("rotation omits some half-edges")

    def successor_map(self) -> dict[Dart, Dart]:
        succ = {}
        for cyc in self.rotation:
            for i, d in enumerate(cyc):
                succ[d] = cyc[(i + 1) % len(cyc)]
        return succ

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "rotation": [[[e, _END_NAMES[s]] for e, s in cyc] for cyc in self.rotation],
        }

    @classmethod
    def from_json(cls, data: dict) -> RotationSystem:
        try:
            g = Multigraph.from_json(data["graph"])
            rot = tuple(tuple((int(e), _END_NAMES.index(s)) for e, s in cyc) for cyc in data["rotation"])
        except (KeyError, TypeError, ValueError) as exc:
            raise EmbeddingError(f"malformed rotation JSON: {exc!r}") from exc
        return cls(g, rot)


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[Dart, ...], ...]

    def face_of(self) -> dict[Dart, int]:
        return {d: i for i, walk in enumerate(self.faces) for d in walk}


def faces(r: RotationSystem) -> FaceSet:
    """Trace the face boundaries and check Euler's formula for the sphere.

    Each walk starts at its smallest dart and walks are ordered by that
    dart. A graph with no edges has a single empty face.
    """
    g = r.graph
    _require_connected(g)
    succ = r.successor_map()
    walks = []
    seen: set[Dart] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            d = succ[twin(d)]
        walks.append(tuple(walk))
    if not walks:
        walks.append(())
    if g.vertex_count - g.n + len(walks) != 2:
        raise EmbeddingError(
            f"not a sphere embedding: v - n + F = {g.vertex_count - g.n + len(walks)}"
        )
    return FaceSet(tuple(walks))


def dual(r: RotationSystem) -> RotationSystem:
    """Planar dual with the same edge ids.

    Dual vertex ``i`` is face ``i`` of ``faces(r)``. Dual edge ``e`` runs
    from the face holding dart ``(e, tail)`` to the face holding
    ``(e, head)``, and the rotation at a dual vertex lists the darts in the
    order the face walk meets them, so taking the dual twice gives back the
    original rotation up to a relabeling of vertices.
    """
    fs = faces(r)
    where = fs.face_of()
    edges = tuple(Edge(e.id, where[(e.id, TAIL)], where[(e.id, HEAD)]) for e in r.graph.edges)
    return RotationSystem(Multigraph(len(fs.faces), edges), fs.faces)


def family_rotation(kind: str, n: int) -> RotationSystem:
    """Canonical sphere embedding of a family graph."""
    g = family(kind, n)
    if kind == "star":
        rot = [tuple((i, TAIL) for i in range(1, n + 1))] + [((i, HEAD),) for i in range(1, n + 1)]
    elif kind == "flower":
        # nested petals: each loop's two ends are adjacent in the rotation
        rot = [tuple(d for i in range(1, n + 1) for d in ((i, TAIL), (i, HEAD)))]
    elif kind == "polygon":
        # vertex i is the head of edge i and the tail of edge i + 1
        rot = [((n, HEAD), (1, TAIL))] + [((i, HEAD), (i + 1, TAIL)) for i in range(1, n)]
    else:
        rot = [tuple((i, TAIL) for i in range(1, n + 1)), tuple((i, HEAD) for i in range(n, 0, -1))]
    return RotationSystem(g, tuple(rot))


def wheel_rotation(k: int) -> RotationSystem:
    """Wheel W_k drawn with the hub in the middle of the rim cycle."""
    g = wheel(k)
    hub = tuple((k + i, TAIL) for i in range(1, k + 1))
    rim = []
    for i in range(1, k + 1):
        prev_rim = k if i == 1 else i - 1
        # counterclockwise: outgoing rim edge, spoke from the hub, incoming rim edge
        rim.append(((i, TAIL), (k + i, HEAD), (prev_rim, HEAD)))
    return RotationSystem(g, (hub, *rim))
