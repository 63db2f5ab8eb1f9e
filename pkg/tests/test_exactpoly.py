import random

import pytest

from src.algebra.exactpoly import (
    ExactMatrix, ExactPoly, ONE, ZERO, combine, coordinates_in, format_scalar, gaussian, parse_scalar,
    proportionality, rational, scalar_div, to_scalar,
)

VARS = ("x1", "y1")


def _xy():
    return ExactPoly.variable(VARS, "x1"), ExactPoly.variable(VARS, "y1")


@pytest.mark.parametrize('value, text', [(3, '3'), (rational(-1, 16), '-1/16'), (gaussian(rational(1, 2), rational(3, 4)), '1/2+3/4*i'),
                                         (gaussian(0, rational(-3, 4)), '-3/4*i'), (gaussian(2, -1), '2-1*i'), (0, '0')])
def test_format_scalar(value, text):
    assert format_scalar(value) == text
    assert parse_scalar(text) == to_scalar(value)


def test_scalar_division_is_exact():
    assert scalar_div(1, 3) * 3 == ONE
    with pytest.raises(ZeroDivisionError):
        scalar_div(1, 0)


def test_arithmetic_and_degree():
    x, y = _xy()
    f = (x ** 2 - y ** 2) * (x ** 2 - 1)
    assert f.degree() == 4
    assert ExactPoly(VARS).degree() == -1
    assert f.coefficient((2, 2)) == to_scalar(-1)
    assert f.coefficient((0, 2)) == ONE
    assert (f - f).is_zero


def test_evaluate_at_point():
    x, y = _xy()
    f = (x ** 2 - y ** 2) * (x ** 2 - 1) / 16
    assert f.evaluate([3, 1]) == to_scalar(4)
    assert f.evaluate([1, 1]) == ZERO


def test_evaluate_checks_arity():
    x, _ = _xy()
    with pytest.raises(ValueError):
        x.evaluate([1])


def test_variable_mismatch():
    x, _ = _xy()
    z = ExactPoly.variable(("z1", "w1"), "z1")
    with pytest.raises(ValueError):
        x + z


def test_substitute_into_other_ring():
    z, w = ExactPoly.variable(("z1", "w1"), "z1"), ExactPoly.variable(("z1", "w1"), "w1")
    x, y = _xy()
    f = z * w + 1
    g = f.substitute({"z1": (x + 1) / 2, "w1": (y - 1) / 2})
    assert g.vars == VARS
    assert g == (x + 1) * (y - 1) / 4 + 1


def test_json_round_trip_keeps_exact_coefficients():
    x, y = _xy()
    f = x ** 2 * rational(1, 16) - y * gaussian(0, 1)
    data = f.to_json()
    assert data["vars"] == ["x1", "y1"]
    assert {"exp": [2, 0], "coef": "1/16"} in data["terms"]
    assert ExactPoly.from_json(data) == f


def test_coordinates_and_combine():
    x, y = _xy()
    basis = [ExactPoly.constant(VARS, 1), x ** 2 - y ** 2]
    f = (x ** 2 - y ** 2) * 3 + 2
    coords = coordinates_in(f, basis)
    assert coords == [to_scalar(2), to_scalar(3)]
    assert combine(basis, coords) == f
    with pytest.raises(ValueError):
        coordinates_in(x, basis)


def test_leading_scaled():
    x, y = _xy()
    basis = [x ** 2 - y ** 2, x ** 2 + y ** 2]
    f = (x ** 2 - y ** 2) * rational(-2, 3)
    assert f.leading_scaled(basis) == x ** 2 - y ** 2


def test_proportionality():
    x, y = _xy()
    g = x ** 2 - y ** 2
    assert proportionality(g * rational(1, 16), g) == rational(1, 16)
    assert proportionality(g + 1, g) is None
    assert proportionality(ExactPoly(VARS), g) == ZERO


def test_matrix_nullspace_and_rank():
    m = ExactMatrix([[1, 2, 3], [2, 4, 6]])
    assert m.rank() == 1
    kernel = m.nullspace()
    assert len(kernel) == 2
    for vec in kernel:
        assert m.apply(vec) == [ZERO, ZERO]


def test_solve_affine():
    m = ExactMatrix([[1, 1], [1, -1]])
    particular, kernel = m.solve_affine([2, 0])
    assert particular == [ONE, ONE]
    assert kernel == []
    assert ExactMatrix([[1, 1], [1, 1]]).solve_affine([1, 2]) is None


def test_inverse():
    m = ExactMatrix([[2, 1], [1, 1]])
    inv = m.inverse()
    assert inv.rows == [[ONE, to_scalar(-1)], [to_scalar(-1), to_scalar(2)]]
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2, 3]]).inverse()


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])


def _random_matrix(rng, rows, cols, rank):
    """rows x cols matrix of rank at most `rank` with small rational entries"""
    left = [[rational(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rank)] for _ in range(rows)]
    right = [[rational(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rank)]
    return [[sum((left[i][n] * right[n][j] for n in range(rank)), ZERO) for j in range(cols)] for i in range(rows)]


@pytest.mark.parametrize('seed', range(8))
def test_rank_and_nullity_agree_across_orderings(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(2, 6), rng.randint(2, 6)
    entries = _random_matrix(rng, rows, cols, rng.randint(1, min(rows, cols)))
    matrix = ExactMatrix(entries, cols)
    kernel = matrix.nullspace()
    assert matrix.rank() + len(kernel) == cols
    for vec in kernel:
        assert all(not c for c in matrix.apply(vec))

    order = list(range(cols))
    rng.shuffle(order)
    permuted = ExactMatrix([[row[j] for j in order] for row in entries], cols)
    transposed = ExactMatrix([[entries[i][j] for i in range(rows)] for j in range(cols)], rows)
    reversed_rows = ExactMatrix(entries[::-1], cols)
    assert permuted.rank() == transposed.rank() == reversed_rows.rank() == matrix.rank()
    assert len(permuted.nullspace()) == len(kernel)
