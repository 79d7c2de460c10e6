import pytest

from barnette.bruteforce import pfaffian_by_enumeration
from barnette.canon import canonical_form
from barnette.constructions import (
    CycleSaturationError,
    braces_pfaffian_consistency,
    conformal_cross,
    conformal_cycles,
    cubic_trisum,
    enumerate_simple_cycles,
    find_conformal_k33_bisubdivision,
    find_pfaffian_orientation,
    is_conformal_subgraph,
    is_oddly_oriented,
    splice,
    trisum,
)
from barnette.graphs import BipartiteGraph, GraphError
from barnette.matching import is_matching_covered
from barnette.tightcut import is_tight


def test_splice_two_cubes(cube):
    s = splice(cube, 0, cube, 0)
    assert s.graph.n == 14
    assert s.graph.is_regular(3)
    assert is_matching_covered(s.graph)
    assert s.cut.order == 3
    assert is_tight(s.graph, s.cut)
    # maps are injective on survivors and cover the glued vertex range
    survivors = [v for v in s.map1 if v is not None] + [
        v for v in s.map2 if v is not None
    ]
    assert sorted(survivors) == list(range(14))
    assert s.map1[0] is None and s.map2[0] is None


def test_splice_rejects_degree_mismatch(cube, c6):
    with pytest.raises(GraphError):
        splice(cube, 0, c6, 0)  # degree 3 against degree 2


def test_splice_explicit_pairing(cube):
    nu = sorted(cube.neighbours[0])
    pairing = {nu[0]: nu[1], nu[1]: nu[0], nu[2]: nu[2]}
    s = splice(cube, 0, cube, 0, pairing)
    assert s.graph.is_regular(3)
    with pytest.raises(GraphError):
        splice(cube, 0, cube, 0, {nu[0]: nu[0], nu[1]: nu[1], nu[2]: 99})


def test_trisum_of_cubes(cube):
    quad = (0, 1, 2, 3)  # a facial square of the cube
    out = cubic_trisum([cube, cube, cube], [quad, quad, quad])
    assert out.n == 16  # 4 shared + 3 * 4 private
    assert out.is_regular(3)
    assert is_matching_covered(out)


def test_trisum_keeps_cycle_edges_when_asked(cube):
    quad = (0, 1, 2, 3)
    out = trisum([cube, cube, cube], [quad, quad, quad], removed=())
    assert out.n == 16
    degrees = sorted(out.degree(v) for v in range(4))
    assert degrees == [5, 5, 5, 5]  # three private edges + two kept cycle edges


def test_trisum_validation(cube):
    with pytest.raises(GraphError):
        trisum([cube, cube], [(0, 1, 2, 3)] * 2)
    with pytest.raises(GraphError):
        trisum([cube] * 3, [(0, 1, 2, 4)] * 3)  # not a 4-cycle
    with pytest.raises(GraphError):
        trisum([cube] * 3, [(0, 1, 2, 3)] * 3, removed=((0, 2),))  # a diagonal


def test_conformal_subgraph_cube(cube):
    # removing an edge's endpoints leaves a matchable remainder
    assert is_conformal_subgraph(cube, [0, 1])
    assert is_conformal_subgraph(cube, [(0, 1)])
    # a facial square is conformal too
    assert is_conformal_subgraph(cube, [0, 1, 2, 3])
    with pytest.raises(GraphError):
        is_conformal_subgraph(cube, [(0, 2)])  # not an edge


def test_conformal_cross_k33(k33):
    quad = (0, 3, 1, 4)  # a 4-cycle of K33
    cross = conformal_cross(k33, quad)
    assert cross is not None
    left, right = cross
    assert left[0] == 0 and left[-1] == 1
    assert right[0] == 3 and right[-1] == 4
    assert not set(left) & set(right)


def test_conformal_cross_absent_on_cube(cube, cube_rotation):
    # no facial square of the cube carries a conformal cross
    from barnette.embedding import face_vertices, faces

    for face in faces(cube, cube_rotation):
        quad = face_vertices(face)
        assert conformal_cross(cube, quad) is None


def test_cycle_enumeration_counts(cube, k33, c6):
    assert len(enumerate_simple_cycles(c6)) == 1
    assert len(enumerate_simple_cycles(k33)) == 15  # nine 4-cycles, six 6-cycles
    assert len(enumerate_simple_cycles(cube)) == 28  # 6 + 16 + 6 by length
    with pytest.raises(CycleSaturationError):
        enumerate_simple_cycles(cube, cap=5)


def test_conformal_cycles_cube(cube):
    cycles = conformal_cycles(cube)
    # facial squares, Hamiltonian cycles, and the 6-cycles that omit an
    # adjacent pair (the four omitting an antipodal pair are not conformal)
    by_len = {}
    for c in cycles:
        by_len.setdefault(len(c), 0)
        by_len[len(c)] += 1
    assert by_len == {4: 6, 6: 12, 8: 6}


def test_pfaffian_solver_matches_enumeration(cube, k33, c6):
    for g, expect in ((c6, True), (cube, True), (k33, False)):
        got = find_pfaffian_orientation(g) is not None
        assert got == expect
        assert pfaffian_by_enumeration(g) == expect


def test_orientation_is_odd_on_all_conformal_cycles(cube, heawood):
    for g in (cube, heawood):
        orientation = find_pfaffian_orientation(g)
        assert orientation is not None
        for cyc in conformal_cycles(g):
            assert is_oddly_oriented(g, orientation, cyc)


def test_bisubdivision_witnesses(cube, k33, heawood):
    assert find_conformal_k33_bisubdivision(cube) is None
    w = find_conformal_k33_bisubdivision(k33)
    assert w is not None
    w.validate(k33)
    assert w.vertices() == frozenset(range(6))
    assert find_conformal_k33_bisubdivision(heawood) is None  # Heawood is Pfaffian


def test_routes_agree_on_fixtures(cube, k33, heawood, c6):
    for g in (c6, cube, k33, heawood):
        by_orientation = find_pfaffian_orientation(g) is not None
        by_structure = find_conformal_k33_bisubdivision(g) is None
        assert by_orientation == by_structure


def test_braces_consistency_asano(asano):
    report = braces_pfaffian_consistency(asano.graph)
    assert report["pfaffian"] is True
    assert report["direct"] is True
    assert report["consistent"] is True
    assert set(report["braces"].values()) == {True}


def test_braces_consistency_detects_k33_piece(k33, cube):
    s = splice(cube, 0, k33, 0)
    report = braces_pfaffian_consistency(s.graph)
    assert report["pfaffian"] is False
    assert report["direct"] is False
    assert report["consistent"] is True
    assert report["braces"][canonical_form(k33)] is False
