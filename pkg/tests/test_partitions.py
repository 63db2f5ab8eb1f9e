import pytest

from src.algebra.partitions import (
    EMPTY, HookProfile, Partition, contains, enumerate_hooks, hooks_not_containing, is_hook, lambda_natural,
)


@pytest.mark.parametrize('text, parts', [('3,1,1', (3, 1, 1)), ('', ()), ('∅', ()), ('(2,1)', (2, 1)),
                                         ('2', (2,))])
def test_parse(text, parts):
    assert Partition.parse(text).parts == parts


@pytest.mark.parametrize('parts', [(1, 2), (-1,), (2, 3, 1)])
def test_invalid_partitions(parts):
    with pytest.raises(ValueError):
        Partition(parts)


def test_trailing_zeros_trimmed():
    assert Partition((2, 0, 0)) == Partition((2,))
    assert Partition((0,)) == EMPTY


@pytest.mark.parametrize('parts, conj', [((3, 1), (2, 1, 1)), ((3, 1, 1), (3, 1, 1)), ((), ()), ((2, 2), (2, 2))])
def test_transpose(parts, conj):
    assert Partition(parts).transpose() == Partition(conj)


def test_arm_and_leg():
    lam = Partition((3, 1))
    assert lam.arm(1, 1) == 2
    assert lam.leg(1, 1) == 1
    assert lam.arm(2, 1) == 0 and lam.leg(2, 1) == 0
    assert list(lam.boxes()) == [(1, 1), (1, 2), (1, 3), (2, 1)]


@pytest.mark.parametrize('parts, p, q, hook', [((3, 1, 1), 1, 1, True), ((2, 2), 1, 1, False),
                                               ((2, 2), 2, 1, True), ((2, 2, 2), 2, 1, False),
                                               ((2, 2, 2), 1, 2, True), ((), 1, 1, True)])
def test_is_hook(parts, p, q, hook):
    assert is_hook(Partition(parts), HookProfile(p, q)) is hook


@pytest.mark.parametrize('parts, p, q, bosonic, fermionic', [((3, 1, 1), 1, 1, (3,), (2,)),
                                                             ((2, 1), 1, 1, (2,), (1,)),
                                                             ((1,), 2, 1, (1, 0), (0,)),
                                                             ((2, 2, 1), 1, 2, (2,), (2, 1))])
def test_lambda_natural(parts, p, q, bosonic, fermionic):
    natural = lambda_natural(Partition(parts), HookProfile(p, q))
    assert natural.bosonic == bosonic
    assert natural.fermionic == fermionic


def test_lambda_natural_rejects_non_hooks():
    with pytest.raises(ValueError):
        lambda_natural(Partition((2, 2)), HookProfile(1, 1))


@pytest.mark.parametrize('d, count', [(0, 1), (1, 2), (2, 4), (3, 7), (4, 11)])
def test_hook_counts_11(d, count):
    assert len(enumerate_hooks(HookProfile(1, 1), d)) == count


def test_enumeration_order():
    hooks = enumerate_hooks(HookProfile(1, 1), 3)
    assert [str(lam) for lam in hooks] == ['∅', '(1)', '(2)', '(1,1)', '(3)', '(2,1)', '(1,1,1)']
    assert enumerate_hooks(HookProfile(1, 1), 2, "exact") == [Partition((2,)), Partition((1, 1))]


def test_enumeration_mode_is_checked():
    with pytest.raises(ValueError):
        enumerate_hooks(HookProfile(1, 1), 2, "below")


def test_contains_reads_lambda_over_mu():
    assert contains(Partition((1,)), Partition((2, 1)))
    assert not contains(Partition((2, 1)), Partition((1,)))
    assert not contains(Partition((2,)), Partition((1, 1)))


def test_hooks_not_containing():
    found = hooks_not_containing(Partition((2,)), HookProfile(1, 1), 0, 3)
    assert found == [EMPTY, Partition((1,)), Partition((1, 1)), Partition((1, 1, 1))]


def test_profile_needs_positive_sizes():
    with pytest.raises(ValueError):
        HookProfile(0, 1)


@pytest.mark.parametrize('p, q', [(p, q) for p in range(1, 4) for q in range(1, 4)])
def test_lambda_natural_is_injective(p, q):
    prof = HookProfile(p, q)
    hooks = enumerate_hooks(prof, 6)
    coords = {lambda_natural(lam, prof).values for lam in hooks}
    assert len(coords) == len(hooks)
