import pytest

from dmbott.cw import Cell, Complex, CoveringPair, from_simplicial
from dmbott.functions import CellFunction

# The running examples: a square graph with one diagonal (4 vertices,
# 5 edges) carrying two functions, and a filled triangle carrying two
# more.  All expected values in the tests that use them were computed
# by exhaustive enumeration from these definitions.

SQUARE_FACETS = [{"A", "B"}, {"A", "C"}, {"B", "C"}, {"B", "D"}, {"C", "D"}]

SQUARE_LEFT_VALUES = {
    "A": 1, "B": 2, "C": 3, "D": 3,
    "A-B": 1, "A-C": 3, "B-C": 2, "B-D": 2, "C-D": 3,
}

SQUARE_RIGHT_VALUES = {
    "A": 1, "B": 2, "C": 3, "D": 2,
    "A-B": 1, "A-C": 3, "B-C": 2, "B-D": 2, "C-D": 2,
}

# Filled triangle on n0, n1, n2.  "Pinched" has one level set forming a
# four-cell collection that loses two cells under reduction; "crested"
# has its top level set equal to its own reduction.
TRIANGLE_PINCHED_VALUES = {
    "n0": 2, "n1": 1, "n2": 3,
    "n0-n1": 2, "n0-n2": 4, "n1-n2": 2,
    "n0-n1-n2": 2,
}

TRIANGLE_CRESTED_VALUES = {
    "n0": 1, "n1": 1, "n2": 2,
    "n0-n1": 2, "n0-n2": 3, "n1-n2": 3,
    "n0-n1-n2": 3,
}

# Hollow triangle with one vertex-edge pairing and one edge-vertex
# pairing: two critical cells (the minimum vertex and the top edge).
HOLLOW_PERFECT_VALUES = {
    "a": 0, "b": 1, "c": 2,
    "a-b": 1, "a-c": 2, "b-c": 3,
}


@pytest.fixture(scope="session")
def square():
    return from_simplicial(SQUARE_FACETS)


@pytest.fixture(scope="session")
def square_left(square):
    return CellFunction(square, SQUARE_LEFT_VALUES)


@pytest.fixture(scope="session")
def square_right(square):
    return CellFunction(square, SQUARE_RIGHT_VALUES)


@pytest.fixture(scope="session")
def triangle():
    return from_simplicial([{"n0", "n1", "n2"}])


@pytest.fixture(scope="session")
def triangle_pinched(triangle):
    return CellFunction(triangle, TRIANGLE_PINCHED_VALUES)


@pytest.fixture(scope="session")
def triangle_crested(triangle):
    return CellFunction(triangle, TRIANGLE_CRESTED_VALUES)


@pytest.fixture(scope="session")
def hollow_triangle():
    return from_simplicial([{"a", "b"}, {"a", "c"}, {"b", "c"}])


@pytest.fixture(scope="session")
def hollow_perfect(hollow_triangle):
    return CellFunction(hollow_triangle, HOLLOW_PERFECT_VALUES)


@pytest.fixture(scope="session")
def circle():
    """One vertex, one 1-cell attached over it twice: an irregular facet."""
    return Complex(
        [Cell("s0", 0), Cell("t0", 1)],
        [CoveringPair("s0", "t0", 0, regular=False)],
    )


@pytest.fixture(scope="session")
def two_arc_circle():
    """Two vertices joined by two parallel edges; supports a closed orbit."""
    return Complex(
        [Cell("u", 0), Cell("v", 0), Cell("e", 1), Cell("f", 1)],
        [
            CoveringPair("u", "e", 1),
            CoveringPair("v", "e", -1),
            CoveringPair("u", "f", 1),
            CoveringPair("v", "f", -1),
        ],
    )


@pytest.fixture(scope="session")
def pinched_sphere():
    """Two vertices, one edge between them, one 2-cell attached over the arc.

    The 2-cell has the edge as an irregular facet (incidence 0) while
    both vertices are regular deep faces of it.
    """
    return Complex(
        [Cell("n", 0), Cell("m", 0), Cell("a", 1), Cell("t", 2)],
        [
            CoveringPair("n", "a", 1),
            CoveringPair("m", "a", -1),
            CoveringPair("a", "t", 0, regular=False),
        ],
    )


def dim_function(complex):
    return CellFunction(complex, {c.id: c.dim for c in complex.cells})
