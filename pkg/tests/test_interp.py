import pytest

from src.algebra.exactpoly import ExactPoly, ZERO, rational, to_scalar
from src.algebra.interp import (
    closed_form_11, degenerate_hooks, eval_point, evaluation_table, general_normalization, general_to_specialized,
    is_upper_triangular, normalization_value, rho, solve_general, solve_interpolation, table_to_csv, varrho,
    verify_extra_vanishing,
)
from src.algebra.partitions import Partition
from src.algebra.susyring import DeformedParams, SusyProfile, is_in_lambda0

P11 = SusyProfile(1, 1)


def _xy():
    return ExactPoly.variable(P11.variables, "x1"), ExactPoly.variable(P11.variables, "y1")


@pytest.mark.parametrize('parts, point', [((), [-1, 1]), ((1,), [1, 1]), ((2,), [3, 1]), ((1, 1), [1, 3]),
                                          ((2, 1), [3, 3])])
def test_eval_point(parts, point):
    assert eval_point(Partition(parts), P11) == [to_scalar(v) for v in point]


def test_rho_and_varrho():
    assert rho(P11).values == (to_scalar(-1), to_scalar(1))
    params = DeformedParams.specialized(P11)
    assert varrho(P11, params) == rho(P11).scaled(rational(-1, 2))


@pytest.mark.parametrize('parts, value', [((), 1), ((1,), 0), ((2,), 4), ((1, 1), 4)])
def test_normalization_value(parts, value):
    assert normalization_value(Partition(parts), P11) == to_scalar(value)


def test_general_normalization_degenerates_at_k_minus_3_h_2():
    assert not general_normalization(Partition((2,)), DeformedParams(-3, 2))
    assert general_normalization(Partition((2,)), DeformedParams(-3, rational(1, 3)))
    assert general_normalization(Partition((1,)), DeformedParams(-3, 2)) == to_scalar(-1)


def test_interpolation_polynomial_2():
    x, y = _xy()
    res = solve_interpolation(Partition((2,)), P11)
    assert res.poly == (x ** 2 - y ** 2) * (x ** 2 - 1) / 16
    assert res.poly.evaluate([3, 1]) == to_scalar(4)
    assert not res.degenerate_flag
    assert res.solution_dim == 0


def test_interpolation_polynomial_11():
    x, y = _xy()
    res = solve_interpolation(Partition((1, 1)), P11)
    assert res.poly == (x ** 2 - y ** 2) * (1 - y ** 2) / 16


def test_degenerate_interpolation_polynomial_1():
    x, y = _xy()
    res = solve_interpolation(Partition((1,)), P11)
    assert res.degenerate_flag
    assert res.normalization_value == ZERO
    assert res.poly == x ** 2 - y ** 2
    assert res.to_json()["degenerate"] is True


def test_empty_partition_gives_one():
    res = solve_interpolation(Partition(()), P11)
    assert res.poly == ExactPoly.constant(P11.variables, 1)


@pytest.mark.parametrize('parts', [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)])
def test_closed_form_matches_solver(parts):
    mu = Partition(parts)
    assert closed_form_11(mu) == solve_interpolation(mu, P11).poly


@pytest.mark.parametrize('p, q, parts', [(1, 1, (2,)), (1, 1, (2, 1)), (2, 1, (1,)), (2, 1, (2, 1)), (1, 2, (1, 1))])
def test_solutions_lie_in_lambda0_and_vanish_beyond(p, q, parts):
    prof = SusyProfile(p, q)
    mu = Partition(parts)
    res = solve_interpolation(mu, prof)
    assert is_in_lambda0(res.poly, prof)
    assert verify_extra_vanishing(res, mu, prof, 2) == []


def test_non_hook_rejected():
    with pytest.raises(ValueError):
        solve_interpolation(Partition((2, 2)), P11)


def test_general_solution_at_k_minus_3():
    vars = ("z1", "w1")
    z, w = ExactPoly.variable(vars, "z1"), ExactPoly.variable(vars, "w1")
    res = solve_general(Partition((1,)), P11, DeformedParams(-3, 2))
    assert res.poly == (z - 1) ** 2 - (w + rational(2, 3)) ** 2 * 3 + rational(1, 3)
    assert res.to_json()["params"] == {"k": "-3", "h": "2"}


def test_general_solver_needs_generic_k():
    with pytest.raises(ValueError):
        solve_general(Partition((1,)), P11, DeformedParams(2, 1))


def test_specialized_general_matches_interpolation():
    params = DeformedParams.specialized(P11)
    mu = Partition((2,))
    res = solve_general(mu, P11, params)
    assert general_to_specialized(res, P11) == solve_interpolation(mu, P11).poly


@pytest.mark.parametrize('k, h', [(-3, rational(1, 3)), (rational(-5, 7), 2)])
def test_generic_triangularity(k, h):
    hooks, table = evaluation_table(P11, 2, DeformedParams(k, h))
    assert is_upper_triangular(hooks, table)


@pytest.mark.parametrize('k, h', [(-3, rational(1, 3)), (rational(-5, 7), 2)])
def test_generic_triangularity_degree_3(k, h):
    hooks, table = evaluation_table(P11, 3, DeformedParams(k, h))
    assert len(hooks) == 7
    assert is_upper_triangular(hooks, table)
    assert all(table[n][n] for n in range(len(hooks)))


def test_degenerate_hooks():
    assert degenerate_hooks(P11, 3, DeformedParams(-3, 2)) == [Partition((2,))]
    assert degenerate_hooks(P11, 1, DeformedParams(-3, 2)) == []
    assert degenerate_hooks(P11, 3, DeformedParams(-3, rational(1, 3))) == []


def test_triangularity_detects_lower_entries():
    hooks = [Partition(()), Partition((1,))]
    assert not is_upper_triangular(hooks, [[to_scalar(1), ZERO], [to_scalar(1), to_scalar(1)]])
    assert is_upper_triangular(hooks, [[to_scalar(1), to_scalar(5)], [ZERO, to_scalar(1)]])
    assert not is_upper_triangular(hooks, [[ZERO, ZERO], [ZERO, to_scalar(1)]])


def test_table_to_csv():
    hooks = [Partition(()), Partition((1,))]
    text = table_to_csv(hooks, [[to_scalar(1), rational(1, 2)], [ZERO, to_scalar(-1)]])
    assert text.splitlines() == ["mu\\lambda,∅,(1)", "∅,1,1/2", "(1),0,-1"]
