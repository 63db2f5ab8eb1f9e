import pytest

from src.algebra.exactpoly import ExactPoly, ONE, rational, to_scalar
from src.algebra.superlie import (
    A_VARS, DecompositionError, NonInvariantError, SuperElt, bracket, check_bracket_table, check_k_invariant,
    check_super_jacobi, d_one, diagonal, elementary, gamma, general_linear, gl22, hc_projection,
    hc_projection_literal, is_positive, named, normal_order, normal_order_adjacent, parse_linear,
    restricted_roots, supercommutator, theta, weyl_vector,
)


def _xy():
    return ExactPoly.variable(A_VARS, "x1"), ExactPoly.variable(A_VARS, "y1")


def test_bracket_table_reproduced():
    records = check_bracket_table()
    assert len(records) == 64
    assert [r for r in records if not r.ok] == []


@pytest.mark.parametrize('m, n', [(1, 1), (2, 1), (2, 2)])
def test_super_jacobi(m, n):
    alg = general_linear(m, n)
    assert alg.dim == (m + n) ** 2
    assert check_super_jacobi(alg) == []


@pytest.mark.parametrize('a, b, expected', [('eta11', 'xi11', '<1,0,1,0>'), ('eta12', 'xi21', '<1,0,0,1>'),
                                            ('X1', 'Y1', '<1,-1,0,0>'), ('eta11', 'X2', 'eta12'),
                                            ('Y1', 'xi12', '-xi11'), ('eta22', 'xi11', '0')])
def test_named_brackets(a, b, expected):
    assert bracket(a, b) == parse_linear(expected)


def test_named_elements():
    assert named("<1,0,1,0>") == diagonal(1, 0, 1, 0) == {0: ONE, 10: ONE}
    assert named("E34") == named("X2") == {elementary(3, 4): ONE}
    assert parse_linear("X1 - Y1") == {1: ONE, 4: to_scalar(-1)}
    assert parse_linear("0") == {}
    with pytest.raises(ValueError):
        named("zeta")
    with pytest.raises(ValueError):
        named("E55")


def test_odd_parities():
    alg = gl22()
    assert alg.parities[elementary(1, 3)] == 1
    assert alg.parities[elementary(1, 2)] == 0
    assert SuperElt.of("eta11", "xi22").parity(alg) == 0


def test_normal_order_swaps_with_bracket():
    ordered = normal_order(SuperElt.of("Y1", "X1"))
    assert ordered == SuperElt.of("X1", "Y1") + SuperElt.of("E22") - SuperElt.of("E11")


def test_odd_square_is_half_bracket():
    assert normal_order(SuperElt.of("eta11", "eta11")).is_zero
    assert normal_order(SuperElt.of("xi21", "xi21")).is_zero


def test_supercommutator_of_odd_elements():
    result = normal_order(supercommutator(SuperElt.of("eta11"), SuperElt.of("xi11"), gl22()))
    assert result == SuperElt.from_vector(diagonal(1, 0, 1, 0))


@pytest.mark.parametrize('labels', [("Y1", "X1"), ("xi21", "eta12", "Y1", "X2"), ("eta21", "xi12", "eta11"),
                                    ("Y2", "xi22", "X1", "eta21")])
def test_straightening_is_confluent(labels):
    u = SuperElt.of(*labels)
    assert normal_order(u) == normal_order_adjacent(u)


def test_order_must_be_a_permutation():
    with pytest.raises(ValueError):
        normal_order(SuperElt.of("X1"), order=[0, 1])


def test_change_basis_rejects_dependent_vectors():
    alg = general_linear(1, 1)
    with pytest.raises(DecompositionError):
        alg.change_basis(["a", "b", "c", "d"], [{0: 1}, {0: 2}, {1: 1}, {2: 1}])


def test_theta_splits_k_and_p():
    assert theta(named("X1")) == {elementary(1, 2): to_scalar(-1)}
    assert theta(named("eta11")) == named("eta11")
    assert theta(named("eta12")) == {elementary(1, 4): to_scalar(-1)}


def test_restricted_roots_and_weyl_vector():
    positive = {root: dims for root, dims in restricted_roots().items() if is_positive(root)}
    assert positive == {(2, 0): (1, 0), (0, 2): (1, 0), (1, 1): (0, 2), (1, -1): (0, 2)}
    assert weyl_vector() == (to_scalar(-1), to_scalar(1))


def test_projection_of_y1_x1():
    x, _ = _xy()
    assert hc_projection(SuperElt.of("Y1", "X1")) == x ** 2 / 4 + x / 2


@pytest.mark.parametrize('labels', [("Y1", "X1"), ("X1",), ("E11",), ("eta21", "xi12"), ("xi21", "eta12")])
def test_projection_matches_literal_definition(labels):
    u = SuperElt.of(*labels)
    assert hc_projection(u) == hc_projection_literal(u)


def test_projection_of_k_is_zero():
    assert hc_projection(SuperElt.of("eta11")).is_zero
    assert hc_projection(SuperElt.of("X1", "eta22")).is_zero


def test_gamma_of_degree_one_operator():
    x, y = _xy()
    assert check_k_invariant(d_one()) == []
    assert gamma(d_one()) == (x ** 2 - y ** 2) * rational(1, 4)


def test_gamma_rejects_non_invariant_elements():
    with pytest.raises(NonInvariantError):
        gamma(SuperElt.of("X1"))
