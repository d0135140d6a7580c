import random

import pytest

from graphmotive.embedding import (
    HEAD,
    TAIL,
    RotationSystem,
    dual,
    faces,
    family_rotation,
    twin,
    wheel_rotation,
)
from graphmotive.errors import EmbeddingError, NotConnectedError
from graphgen import random_connected_multigraph, random_rotation
from graphmotive.graph import Multigraph, edge_isomorphic, family
from graphmotive.kirchhoff import cremona_identity_check

FAMILY_CASES = [(k, n) for k in ("star", "flower", "polygon", "banana") for n in range(2, 9)]


def random_wheel_embedding(k, rng):
    """W_k with vertex and edge labels shuffled, rotations carried along."""
    r = wheel_rotation(k)
    g = r.graph
    vperm = list(range(g.vertex_count))
    rng.shuffle(vperm)
    eperm = list(range(1, g.n + 1))
    rng.shuffle(eperm)
    new_id = {old: new for old, new in zip(range(1, g.n + 1), eperm)}
    edges = tuple((new_id[e.id], vperm[e.tail], vperm[e.head]) for e in g.edges)
    rot = [None] * g.vertex_count
    for v, cyc in enumerate(r.rotation):
        rot[vperm[v]] = tuple((new_id[e], s) for e, s in cyc)
    return RotationSystem(Multigraph(g.vertex_count, edges), tuple(rot))


def test_face_counts():
    assert len(faces(family_rotation("polygon", 3)).faces) == 2
    assert len(faces(family_rotation("star", 3)).faces) == 1
    banana = RotationSystem(
        family("banana", 3),
        (((1, TAIL), (2, TAIL), (3, TAIL)), ((3, HEAD), (2, HEAD), (1, HEAD))),
    )
    fs = faces(banana)
    assert fs.faces == (((1, TAIL), (3, HEAD)), ((1, HEAD), (2, TAIL)), ((2, HEAD), (3, TAIL)))


def test_torus_rotation_rejected():
    # same cyclic order at both ends of a 3-banana embeds it on the torus
    torus = RotationSystem(
        family("banana", 3),
        (((1, TAIL), (2, TAIL), (3, TAIL)), ((1, HEAD), (2, HEAD), (3, HEAD))),
    )
    with pytest.raises(EmbeddingError, match="not a sphere embedding"):
        faces(torus)


def test_malformed_rotations():
    g = family("banana", 2)
    with pytest.raises(EmbeddingError):
        RotationSystem(g, (((1, TAIL), (2, TAIL)), ((1, HEAD),)))
    with pytest.raises(EmbeddingError):
        RotationSystem(g, (((1, HEAD), (2, TAIL)), ((1, TAIL), (2, HEAD))))
    with pytest.raises(EmbeddingError):
        RotationSystem(g, (((1, TAIL), (1, TAIL), (2, TAIL)), ((1, HEAD), (2, HEAD))))


def test_disconnected_faces():
    g = Multigraph(3, ((1, 0, 1),))
    r = RotationSystem(g, (((1, TAIL),), ((1, HEAD),), ()))
    with pytest.raises(NotConnectedError):
        faces(r)


@pytest.mark.parametrize("kind, n", FAMILY_CASES)
def test_face_partition_and_euler(kind, n):
    r = family_rotation(kind, n)
    fs = faces(r)
    darts = [d for walk in fs.faces for d in walk]
    assert len(darts) == len(set(darts)) == 2 * n
    assert r.graph.vertex_count - n + len(fs.faces) == 2


@pytest.mark.parametrize("n", range(2, 9))
def test_dual_of_polygon_is_banana(n):
    d = dual(family_rotation("polygon", n)).graph
    assert edge_isomorphic(d, family("banana", n))


@pytest.mark.parametrize("n", range(1, 9))
def test_dual_of_star_is_flower(n):
    d = dual(family_rotation("star", n)).graph
    assert edge_isomorphic(d, family("flower", n))


@pytest.mark.parametrize("kind, n", FAMILY_CASES)
def test_double_dual(kind, n):
    r = family_rotation(kind, n)
    d = dual(r)
    assert [e.id for e in d.graph.edges] == [e.id for e in r.graph.edges]
    assert d.graph.vertex_count == len(faces(r).faces)
    assert len(faces(d).faces) == r.graph.vertex_count
    assert edge_isomorphic(dual(d).graph, r.graph)


@pytest.mark.parametrize("k", range(3, 5))
def test_random_wheel_embeddings(k):
    rng = random.Random(k)
    for _ in range(20):
        r = random_wheel_embedding(k, rng)
        d = dual(r)
        # wheels are self-dual
        assert d.graph.vertex_count == k + 1
        assert edge_isomorphic(dual(d).graph, r.graph)


def test_rotation_json_roundtrip():
    r = wheel_rotation(4)
    data = r.to_json()
    assert data["rotation"][0][0] == [5, "tail"]
    assert RotationSystem.from_json(data) == r
    with pytest.raises(EmbeddingError):
        RotationSystem.from_json({"graph": r.graph.to_json(), "rotation": [[[1, "middle"]]]})


def test_twin():
    assert twin((3, TAIL)) == (3, HEAD)
    assert twin(twin((3, HEAD))) == (3, HEAD)


def test_random_rotation_systems():
    rng = random.Random(7)
    spherical = 0
    for _ in range(600):
        g = random_connected_multigraph(rng, 10, loop_rate=0.15)
        r = random_rotation(g, rng)
        try:
            fs = faces(r)
        except EmbeddingError:
            continue
        spherical += 1
        d = dual(r)
        assert d.graph.vertex_count == len(fs.faces)
        assert len(faces(d).faces) == g.vertex_count
        assert edge_isomorphic(dual(d).graph, g)
        assert cremona_identity_check(r)
    assert spherical > 100
