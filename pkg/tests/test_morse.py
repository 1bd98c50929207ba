from fractions import Fraction

import pytest

from dmbott.errors import NotMorse
from dmbott.functions import CellFunction
from dmbott.morse import (
    EXCESS_DOWN,
    EXCESS_UP,
    IRREGULAR_DOWN,
    IRREGULAR_UP,
    check_morse,
    check_pairing_bound,
    critical_cells,
    critical_counts,
    require_morse,
)

from conftest import dim_function


def test_dimension_function_is_morse(triangle):
    verdict = check_morse(triangle, dim_function(triangle))
    assert verdict.is_morse
    assert verdict.violations == ()


def test_dimension_function_all_critical(triangle):
    f = dim_function(triangle)
    assert critical_counts(triangle, f) == [3, 3, 1]


def test_square_left_not_morse(square, square_left):
    # exhaustive enumeration over the nine cells: three vertices exceed
    # the cofacet bound, four edges exceed the facet bound
    verdict = check_morse(square, square_left)
    assert not verdict.is_morse
    found = {(v.cell, v.condition): v.witnesses for v in verdict.violations}
    assert found == {
        ("B", EXCESS_UP): ("A-B", "B-C", "B-D"),
        ("C", EXCESS_UP): ("A-C", "B-C", "C-D"),
        ("D", EXCESS_UP): ("B-D", "C-D"),
        ("A-B", EXCESS_DOWN): ("A", "B"),
        ("B-C", EXCESS_DOWN): ("B", "C"),
        ("B-D", EXCESS_DOWN): ("B", "D"),
        ("C-D", EXCESS_DOWN): ("C", "D"),
    }


def test_square_left_critical_counts(square, square_left):
    assert critical_counts(square, square_left) == [0, 0]


def test_circle_irregular_violations(circle):
    f = CellFunction(circle, {"s0": 1, "t0": 0})
    verdict = check_morse(circle, f)
    assert not verdict.is_morse
    conditions = {(v.cell, v.condition, v.witnesses) for v in verdict.violations}
    assert conditions == {
        ("s0", IRREGULAR_UP, ("t0",)),
        ("t0", IRREGULAR_DOWN, ("s0",)),
    }
    # strictly increasing over the irregular facet is fine
    g = CellFunction(circle, {"s0": 0, "t0": 1})
    assert check_morse(circle, g).is_morse


def test_hollow_perfect_is_morse(hollow_triangle, hollow_perfect):
    assert check_morse(hollow_triangle, hollow_perfect).is_morse
    assert critical_counts(hollow_triangle, hollow_perfect) == [1, 1]
    graded = critical_cells(hollow_triangle, hollow_perfect)
    assert graded[0] == ("a",)
    assert graded[1] == ("b-c",)


def test_pairing_bound(triangle, hollow_triangle, hollow_perfect):
    ok, witness = check_pairing_bound(triangle, dim_function(triangle))
    assert ok and witness is None
    ok, witness = check_pairing_bound(hollow_triangle, hollow_perfect)
    assert ok


def test_pairing_bound_requires_morse(square, square_left):
    with pytest.raises(NotMorse):
        check_pairing_bound(square, square_left)


def test_exactly_one_nc_pair_fixture(hollow_triangle):
    # vertices 0,1,2 and edges 2,3,2: the only noncritical facet pair is
    # the top vertex under its right edge
    f = CellFunction(
        hollow_triangle, {"a": 0, "b": 1, "c": 2, "a-b": 2, "b-c": 3, "a-c": 2}
    )
    verdict = check_morse(hollow_triangle, f)
    assert verdict.is_morse
    from dmbott.functions import down_degree, up_degree

    sums = {cid: up_degree(f, cid) + down_degree(f, cid) for cid in hollow_triangle.cell_ids()}
    assert max(sums.values()) == 1
    assert sums["c"] == 1 and sums["a-c"] == 1


def test_morse_invariant_under_affine_rescale(square, square_left, triangle):
    cases = [
        (triangle, dim_function(triangle)),
        (square, square_left),
    ]
    for K, f in cases:
        before = check_morse(K, f)
        rescaled = f.rescaled(scale=Fraction(7, 3), shift=Fraction(-5, 2))
        after = check_morse(K, rescaled)
        assert before.is_morse == after.is_morse
        assert [(v.cell, v.condition) for v in before.violations] == [
            (v.cell, v.condition) for v in after.violations
        ]
        assert critical_cells(K, f) == critical_cells(K, rescaled)


def test_require_morse_message(square, square_left):
    with pytest.raises(NotMorse, match="excess_up"):
        require_morse(square, square_left)
