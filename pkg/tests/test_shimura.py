import pytest

from src.algebra.exactpoly import ExactPoly, rational, to_scalar
from src.algebra.partitions import Partition
from src.algebra.shimura import (
    MAX_DEGREE, P_PLUS, dual_basis, eigenvalue_from_gamma, eigenvalue_on_spherical, gamma_of_shimura,
    isotypic_decomposition, pairing, proportionality_constant, shimura_operator, verify_shimura,
)
from src.algebra.superlie import A_VARS, d_one, gamma


def _xy():
    return ExactPoly.variable(A_VARS, "x1"), ExactPoly.variable(A_VARS, "y1")


def test_empty_operator_is_one():
    op = shimura_operator(Partition(()))
    assert op.degree == 0
    assert gamma_of_shimura(Partition(())) == ExactPoly.constant(A_VARS, 1)


def test_degree_one_image():
    x, y = _xy()
    assert gamma_of_shimura(Partition((1,))) == (x ** 2 - y ** 2) * rational(1, 4)
    assert gamma_of_shimura(Partition((1,))) == gamma(d_one())


def test_degree_one_constant_is_a_leading_ratio():
    constant, degenerate = proportionality_constant(Partition((1,)))
    assert degenerate
    assert constant == rational(1, 4)


@pytest.mark.parametrize('parts', [(), (1,), (2,), (1, 1)])
def test_verify_shimura(parts):
    report = verify_shimura(Partition(parts))
    assert report.ok, report.to_json()
    assert report.in_lambda0
    assert report.vanishing_failures == []


def test_operator_degree_matches_partition():
    assert shimura_operator(Partition((2,))).degree == 4


def test_degree_bound():
    assert MAX_DEGREE == 3
    with pytest.raises(ValueError):
        gamma_of_shimura(Partition((4,)))


def test_eigenvalue_on_spherical_vector():
    assert eigenvalue_on_spherical(2, 0) == to_scalar(2)
    assert eigenvalue_from_gamma(2, 0) == to_scalar(2)


@pytest.mark.parametrize('d', [1, 2])
def test_isotypic_components_fill_the_degree(d):
    components = isotypic_decomposition(d)
    assert sum(len(basis) for basis in components.values()) == len(P_PLUS.monomials(d))


def test_dual_basis_pairs_to_identity():
    basis, duals = dual_basis(Partition((2,)))
    assert len(basis) == len(duals)
    for i, dual in enumerate(duals):
        for j, v in enumerate(basis):
            value = sum((c * pairing(m, v) for m, c in dual.items()), to_scalar(0))
            assert value == to_scalar(1 if i == j else 0)
