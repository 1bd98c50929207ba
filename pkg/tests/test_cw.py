import pytest

from dmbott.cw import Cell, Complex, CoveringPair, build_complex, from_simplicial
from dmbott.errors import (
    BoundarySquareNonzero,
    DanglingReference,
    DuplicateId,
    EmptySimplex,
    GradingViolation,
    NotAFace,
    NotComparable,
    RegularityInconsistent,
    UnknownCell,
)


def test_single_vertex():
    K = build_complex([Cell("v", 0)])
    assert len(K) == 1
    assert K.max_dim == 0
    assert K.facets("v") == frozenset()


def test_circle_is_valid(circle):
    assert len(circle) == 2
    assert circle.is_face("s0", "t0")
    assert circle.interval("s0", "t0") == frozenset()
    assert not circle.is_regular_face("s0", "t0")
    assert circle.incidence("t0", "s0") == 0


def test_filled_triangle_counts(triangle):
    assert len(triangle) == 7
    assert [len(triangle.cells_of_dim(k)) for k in range(3)] == [3, 3, 1]
    # interval between a vertex and the 2-cell is its two incident edges
    assert triangle.interval("n0", "n0-n1-n2") == {"n0-n1", "n0-n2"}


def test_filled_triangle_boundary_square(triangle):
    # expand the signed count by hand for each (vertex, face) pair
    for v in ("n0", "n1", "n2"):
        total = sum(
            triangle.incidence("n0-n1-n2", e) * triangle.incidence(e, v)
            for e in triangle.facets("n0-n1-n2")
            if v in triangle.faces(e)
        )
        assert total == 0


def test_hollow_triangle_counts(hollow_triangle):
    assert len(hollow_triangle) == 6
    assert hollow_triangle.max_dim == 1


def test_square_graph(square):
    assert len(square) == 9
    assert square.cofacets("B") == {"A-B", "B-C", "B-D"}
    assert square.facets("B-C") == {"B", "C"}


def test_simplicial_pairs_regular(square):
    for pair in square.covering_pairs():
        assert pair.regular
        assert square.is_regular_face(pair.face, pair.cell)


def test_closure_and_subcomplex(square):
    assert square.closure({"A-B"}) == {"A-B", "A", "B"}
    assert square.is_subcomplex(set())
    assert square.is_subcomplex({"A", "B", "A-B"})
    assert not square.is_subcomplex({"A-B"})


def test_closure_idempotent(square):
    sets = [{"A-B", "C-D"}, {"C"}, set(square.cell_ids())]
    for s in sets:
        once = square.closure(s)
        assert square.closure(once) == once


def test_filled_triangle_not_subcomplex_on_face_alone(triangle):
    assert not triangle.is_subcomplex({"n0-n1-n2"})


def test_duplicate_id():
    with pytest.raises(DuplicateId):
        build_complex([Cell("v", 0), Cell("v", 1)])


def test_dangling_reference():
    with pytest.raises(DanglingReference):
        build_complex([Cell("v", 0)], [CoveringPair("v", "w", 1)])


def test_grading_violation():
    cells = [Cell("v", 0), Cell("t", 2)]
    with pytest.raises(GradingViolation):
        build_complex(cells, [CoveringPair("v", "t", 1)])


def test_regular_needs_unit_incidence():
    cells = [Cell("v", 0), Cell("e", 1)]
    with pytest.raises(RegularityInconsistent):
        build_complex(cells, [CoveringPair("v", "e", 2, regular=True)])
    # irregular facets may carry any incidence
    K = build_complex(cells, [CoveringPair("v", "e", 2, regular=False)])
    assert K.incidence("e", "v") == 2


def test_boundary_square_violation():
    # one triangle over three edges but a flipped sign on one edge
    cells = [Cell(x, 0) for x in "abc"]
    cells += [Cell(x, 1) for x in ("ab", "ac", "bc")]
    cells += [Cell("t", 2)]
    coverings = [
        CoveringPair("a", "ab", -1),
        CoveringPair("b", "ab", 1),
        CoveringPair("a", "ac", -1),
        CoveringPair("c", "ac", 1),
        CoveringPair("b", "bc", -1),
        CoveringPair("c", "bc", 1),
        CoveringPair("ab", "t", 1),
        CoveringPair("ac", "t", 1),  # should be -1
        CoveringPair("bc", "t", 1),
    ]
    with pytest.raises(BoundarySquareNonzero):
        build_complex(cells, coverings)


def test_unknown_cell_queries(square):
    with pytest.raises(UnknownCell):
        square.facets("nope")
    with pytest.raises(UnknownCell):
        square.closure({"nope"})


def test_interval_requires_comparable(square):
    with pytest.raises(NotComparable):
        square.interval("A", "C-D")


def test_is_regular_face_requires_face(square):
    with pytest.raises(NotAFace):
        square.is_regular_face("A", "B")


def test_deep_irregular_pairs():
    cells = [Cell("n", 0), Cell("m", 0), Cell("a", 1), Cell("t", 2)]
    coverings = [
        CoveringPair("n", "a", 1),
        CoveringPair("m", "a", -1),
        CoveringPair("a", "t", 0, regular=False),
    ]
    K = build_complex(cells, coverings, deep_irregular=[("m", "t")])
    assert not K.is_regular_face("m", "t")
    assert K.is_regular_face("n", "t")
    assert K.is_regular_face("m", "a")
    assert K.irregular_up("m") == {"t"}
    assert K.irregular_down("t") == {"a", "m"}
    # a gap-1 pair cannot be declared deep irregular, nor a non-face
    with pytest.raises(NotAFace):
        build_complex(cells, coverings, deep_irregular=[("a", "t")])
    with pytest.raises(NotAFace):
        build_complex(cells, coverings, deep_irregular=[("t", "m")])


def test_pinched_sphere_fixture(pinched_sphere):
    K = pinched_sphere
    assert K.is_regular_face("n", "a")
    assert not K.is_regular_face("a", "t")
    assert K.interval("n", "t") == {"a"}
    assert K.is_regular_face("n", "t")  # deep pairs default to regular


def test_from_simplicial_rejects_empty():
    with pytest.raises(EmptySimplex):
        from_simplicial([])
    with pytest.raises(EmptySimplex):
        from_simplicial([set()])


def test_from_simplicial_four_vertex_graph():
    K = from_simplicial([{"a", "b"}, {"b", "c"}, {"a", "c"}])
    assert len(K) == 6


def test_incidence_alternating_signs():
    K = from_simplicial([{"a", "b", "c"}])
    assert K.incidence("a-b-c", "b-c") == 1
    assert K.incidence("a-b-c", "a-c") == -1
    assert K.incidence("a-b-c", "a-b") == 1
    assert K.incidence("a-b", "b") == 1
    assert K.incidence("a-b", "a") == -1


def test_complex_equality_roundtrip(square):
    clone = build_complex(square.cells, square.covering_pairs(), square.deep_irregular_pairs())
    assert clone == square
    assert hash(clone) == hash(square)
