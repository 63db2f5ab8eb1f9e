import pytest

from src.algebra.borel import (
    Character, MarkedWeight, hook_from_natural_11, is_dominant, is_guaranteed_spherical, kac_weight,
    kac_weight_11, natural_chain, natural_chain_weight, odd_reflect, odd_reflect_inverse, oddref_dom_holds,
    push_bullet, reflection_trace, verify_fd,
)
from src.algebra.partitions import HookProfile, Partition, enumerate_hooks

E1M, E1P = Character("e", 1, "-"), Character("e", 1, "+")
D1M, D1P = Character("d", 1, "-"), Character("d", 1, "+")


def test_natural_chain_11():
    assert natural_chain(HookProfile(1, 1)) == (E1M, D1M, D1P, E1P)
    assert [str(c) for c in natural_chain(HookProfile(2, 1))] == ['e1-', 'e2-', 'd1-', 'd1+', 'e2+', 'e1+']


def test_natural_chain_weight():
    w = natural_chain_weight(Partition((2, 1)), HookProfile(1, 1))
    assert w.coeffs == (2, 1, -1, -2)
    assert str(w) == "(•2 ×1 ×-1 •-2)"
    assert w.coefficient("d1+") == -1


@pytest.mark.parametrize('chain, coeffs, expected', [((D1P, E1P), (0, -1), (0, -1)), ((D1M, E1P), (0, 0), (0, 0)),
                                                     ((D1M, E1P), (2, 3), (4, 1)), ((E1M, D1M), (3, 1), (2, 2))])
def test_odd_reflect(chain, coeffs, expected):
    w = odd_reflect(MarkedWeight(chain, coeffs), 0)
    assert w.chain == (chain[1], chain[0])
    assert w.coeffs == expected


@pytest.mark.parametrize('coeffs', [(0, 0), (2, 3), (3, -3), (-1, 4)])
def test_odd_reflect_is_an_involution(coeffs):
    w = MarkedWeight((D1M, E1P), coeffs)
    assert odd_reflect_inverse(odd_reflect(w, 0), 0) == w


def test_odd_reflect_rejects_even_pairs_and_bad_positions():
    with pytest.raises(ValueError):
        odd_reflect(MarkedWeight((E1M, E1P), (1, 0)), 0)
    with pytest.raises(ValueError):
        odd_reflect(MarkedWeight((D1M, E1P), (1, 0)), 1)


def test_marked_weight_validation():
    with pytest.raises(ValueError):
        MarkedWeight((D1M, E1P), (1,))
    with pytest.raises(ValueError):
        MarkedWeight((D1M, D1M), (1, 2))


def test_is_dominant_reads_each_kind_separately():
    assert is_dominant(MarkedWeight((E1M, D1M, E1P, D1P), (3, 5, 1, -2)))
    assert not is_dominant(MarkedWeight((E1M, D1M, E1P, D1P), (1, 0, 2, -1)))


def test_push_bullet_trace():
    w = natural_chain_weight(Partition((1,)), HookProfile(1, 1))
    trace = push_bullet(w, 3, 1)
    assert len(trace) == 3
    assert trace[-1].chain == (E1M, E1P, D1M, D1P)
    assert trace[-1].coeffs == (1, 0, 0, -1)
    with pytest.raises(ValueError):
        push_bullet(w, 1, 3)


@pytest.mark.parametrize('a, b, expected', [(3, 0, (3, -1, -1, -1)), (1, 0, (1, 0, 0, -1)), (3, 2, (3, -2, 2, -3)),
                                            (2, 0, (2, 0, -1, -1))])
def test_kac_weight_closed_form(a, b, expected):
    assert kac_weight_11(a, b) == expected
    assert kac_weight(hook_from_natural_11(a, b), HookProfile(1, 1)).coeffs == expected


@pytest.mark.parametrize('a, b', [(a, b) for a in range(1, 6) for b in range(0, 5)])
def test_kac_weight_matches_reflections(a, b):
    assert kac_weight(hook_from_natural_11(a, b), HookProfile(1, 1)).coeffs == kac_weight_11(a, b)


def test_kac_weight_closed_form_needs_positive_a():
    with pytest.raises(ValueError):
        kac_weight_11(0, 0)


def test_verify_fd_case_two():
    report = verify_fd(Partition((1, 1)), HookProfile(1, 2))
    assert report.case == "ii"
    assert report.tau == report.l == 1
    assert report.ok


@pytest.mark.parametrize('p, q', [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)])
def test_verify_fd_small_hooks(p, q):
    prof = HookProfile(p, q)
    for lam in enumerate_hooks(prof, 4):
        assert verify_fd(lam, prof).ok, str(lam)


def test_verify_fd_rejects_non_hooks():
    with pytest.raises(ValueError):
        verify_fd(Partition((2, 2)), HookProfile(1, 1))


@pytest.mark.parametrize('parts, spherical', [((3, 1), True), ((1, 1, 1), False), ((2,), True), ((2, 1, 1), False)])
def test_guaranteed_spherical(parts, spherical):
    assert is_guaranteed_spherical(Partition(parts), HookProfile(1, 1)) is spherical


def test_hook_from_natural_11():
    assert hook_from_natural_11(3, 2) == Partition((3, 1, 1))
    assert hook_from_natural_11(0, 0) == Partition(())
    with pytest.raises(ValueError):
        hook_from_natural_11(0, 2)


def test_oddref_dom_skips_unordered_crosses():
    assert oddref_dom_holds(1, 2, 0) is None
    assert oddref_dom_holds(-5, 5, 3) is None


@pytest.mark.parametrize('x', range(-5, 6))
def test_oddref_dom_holds_on_the_box(x):
    for y in range(-5, x + 1):
        for z in range(-5, 6):
            assert oddref_dom_holds(x, y, z) is True, (x, y, z)


def test_reflection_trace_rows_align():
    report = verify_fd(Partition((2, 1)), HookProfile(1, 1))
    rows = reflection_trace(report.trace)
    assert len(rows) == len(report.trace)
    assert rows[0].startswith("•e1-=2")
