import pytest

from barnette.graphs import BipartiteGraph, GraphError, with_colouring
from barnette.embedding import (
    RotationEmbedding,
    embed_planar,
    euler_check,
    face_vertices,
    faces,
    facial_c4_expansion_sites,
    next_dart,
)


def test_cube_rotation_is_planar(cube, cube_rotation):
    cube_rotation.validate(cube)
    assert euler_check(cube, cube_rotation)
    fs = faces(cube, cube_rotation)
    assert len(fs) == 6
    assert all(len(f) == 4 for f in fs)  # all faces quadrilateral
    # darts partition: every edge is traversed once in each direction
    assert sum(len(f) for f in fs) == 2 * cube.edge_count


def test_validate_rejects_foreign_rotation(cube):
    bad = RotationEmbedding(((0, 1, 2),) * 8)
    with pytest.raises(GraphError):
        bad.validate(cube)


def test_next_dart_walks_a_face(cube, cube_rotation):
    start = (0, cube.incident[0][0])
    dart = start
    steps = 0
    while True:
        dart = next_dart(cube, cube_rotation, dart)
        steps += 1
        if dart == start:
            break
    assert steps == 4


def test_embed_planar_fixtures(cube, k33, heawood, c6):
    emb = embed_planar(cube)
    assert emb is not None
    assert euler_check(cube, emb)
    assert embed_planar(k33) is None
    assert embed_planar(heawood) is None  # girth-6 but non-planar
    assert euler_check(c6, embed_planar(c6))


def test_euler_check_false_on_disconnected():
    g = BipartiteGraph(4, ((0, 1), (2, 3)))
    emb = RotationEmbedding(((0,), (0,), (1,), (1,)))
    assert not euler_check(g, emb)


def test_expansion_sites_cube(cube, cube_rotation):
    sites = facial_c4_expansion_sites(cube, cube_rotation)
    assert len(sites) == 12  # two opposite-edge pairs per quadrilateral face
    for s in sites:
        assert cube.colour[s.u] == "A" and cube.colour[s.y] == "A"
        assert cube.colour[s.v] == "B" and cube.colour[s.x] == "B"
        assert set(cube.edges[s.eid_uv]) == {s.u, s.v}
        assert set(cube.edges[s.eid_xy]) == {s.x, s.y}
        assert s.eid_uv != s.eid_xy
        assert len({s.u, s.v, s.x, s.y}) == 4


def test_expansion_sites_hexagonal_faces(c6):
    emb = embed_planar(c6)
    sites = facial_c4_expansion_sites(c6, emb)
    # each hexagonal face contributes C(3,2) pairs per parity class, twice
    assert len(sites) == 12
    fv = face_vertices(faces(c6, emb)[0])
    assert sorted(fv) == [0, 1, 2, 3, 4, 5]


def test_expansion_sites_reject_non_simple_face():
    p3 = with_colouring(BipartiteGraph(3, ((0, 1), (1, 2))))
    emb = embed_planar(p3)
    with pytest.raises(GraphError):
        facial_c4_expansion_sites(p3, emb)
