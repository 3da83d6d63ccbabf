from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from divcodes.linalg import (
    AffineForm,
    InconsistentSystemError,
    SingularSystemError,
    as_fraction,
    solve,
    vertices,
)


def test_as_fraction_refuses_floats_and_bools():
    assert as_fraction(3) == 3
    assert as_fraction("7/2") == Fraction(7, 2)
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)


def test_affine_arithmetic():
    x, y = AffineForm.var("x"), AffineForm.var("y")
    f = 3 + 2 * x - y / 2
    assert f.const == 3 and f.coeff("x") == 2 and f.coeff("y") == Fraction(-1, 2)
    assert (f - f).is_constant() and f - f == 0
    assert f.evaluate({"x": 1, "y": 4}) == 3
    g = f.substitute({"x": 5})
    assert g.variables == {"y"} and g.const == 13


def test_zero_coefficients_are_dropped():
    assert AffineForm(1, {"x": 0}) == AffineForm(1)
    assert hash(AffineForm(1, {"x": 0})) == hash(AffineForm(1))


def test_solve_numeric():
    assert solve([[2, 1], [1, 3]], [5, 10]) == [1, 3]


def test_solve_with_affine_rhs():
    x = AffineForm.var("x")
    sol = solve([[1, 1], [1, -1]], [x + 2, x])
    assert sol == [x + 1, AffineForm(1)]


def test_solve_singular_and_inconsistent():
    with pytest.raises(SingularSystemError):
        solve([[1, 2], [2, 4]], [1, 2])
    with pytest.raises(InconsistentSystemError):
        solve([[1], [1]], [1, 2])
    assert solve([[1], [2]], [3, 6]) == [3]


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3),
    st.lists(st.integers(-20, 20), min_size=3, max_size=3),
)
def test_solve_round_trip(matrix, x):
    rhs = [sum(a * b for a, b in zip(row, x)) for row in matrix]
    try:
        sol = solve(matrix, rhs)
    except SingularSystemError:
        return
    assert sol == x


def test_vertices_of_triangle():
    x, y = AffineForm.var("x"), AffineForm.var("y")
    pts = vertices([x, y, 4 - x - 2 * y], ["x", "y"])
    assert sorted(tuple(p[v] for v in "xy") for p in pts) == [(0, 0), (0, 2), (4, 0)]
