"""Group-ring arithmetic, the shifted basis, and the augmentation map."""

import random

import pytest

from icochains import (
    FpMatrix,
    GroupContext,
    MOD_P,
    RingElem,
    as_difference_basis,
    augmentation,
    from_shifted_basis,
    in_augmentation_ideal,
    is_prime,
    rank,
    shifted_generator,
    shifted_monomial,
    to_shifted_basis,
)
from conftest import DESK, random_ring_elem


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_context_validation():
    with pytest.raises(ValueError):
        GroupContext(4, 1)
    with pytest.raises(ValueError):
        GroupContext(1, 1)
    with pytest.raises(ValueError):
        GroupContext(3, 0)
    ctx = GroupContext(3, 2)
    with pytest.raises(ValueError):
        ctx.check_elem((0, 3))
    with pytest.raises(ValueError):
        ctx.check_elem((0,))


def test_group_mul_wraps():
    ctx = GroupContext(3, 1)
    s1 = RingElem.from_group_elem(ctx, (1,))
    s2 = RingElem.from_group_elem(ctx, (2,))
    assert s1 * s2 == RingElem.unit(ctx)


def test_mul_unit_and_mismatch():
    ctx = GroupContext(5, 1)
    rng = random.Random(7)
    a = random_ring_elem(ctx, rng)
    assert a * RingElem.unit(ctx) == a
    with pytest.raises(ValueError):
        a * RingElem.unit(ctx, MOD_P)
    with pytest.raises(ValueError):
        a * RingElem.unit(GroupContext(5, 2))


def test_shifted_generator_squared_p2():
    # (s - 1)^2 = s^2 - 2s + 1 = 2 - 2s when s^2 = 1
    ctx = GroupContext(2, 1)
    t = shifted_generator(ctx, 1)
    assert (t * t).terms == {(0,): 2, (1,): -2}
    assert (t * t).mod_p().is_zero()


def test_shifted_monomial_p3():
    # (s-1)^2 = s^2 - 2s + 1, and mod 3 it equals (s-1) + (s^2-1)
    ctx = GroupContext(3, 1)
    sq = shifted_monomial(ctx, (2,))
    assert sq.terms == {(2,): 1, (1,): -2, (0,): 1}
    split = (RingElem.from_group_elem(ctx, (1,)) - RingElem.unit(ctx)) + \
            (RingElem.from_group_elem(ctx, (2,)) - RingElem.unit(ctx))
    assert sq.mod_p() == split.mod_p()


@pytest.mark.parametrize("p,r", DESK)
def test_high_powers_vanish_mod_p(p, r):
    ctx = GroupContext(p, r)
    for i in range(r):
        for extra in (0, 1):
            k = tuple(p + extra if j == i else 0 for j in range(r))
            assert shifted_monomial(ctx, k).mod_p().is_zero()


def test_augmentation_examples():
    ctx = GroupContext(3, 2)
    assert augmentation(RingElem.unit(ctx)) == 1
    assert augmentation(shifted_generator(ctx, 1)) == 0
    for k in [(1, 0), (2, 1), (0, 2)]:
        assert augmentation(shifted_monomial(ctx, k)) == 0
    assert in_augmentation_ideal(shifted_generator(ctx, 2))
    assert not in_augmentation_ideal(RingElem.unit(ctx))


@pytest.mark.parametrize("p,r", DESK)
def test_augmentation_is_ring_map(p, r):
    ctx = GroupContext(p, r)
    rng = random.Random(100 * p + r)
    for _ in range(25):
        a = random_ring_elem(ctx, rng)
        b = random_ring_elem(ctx, rng)
        assert augmentation(a * b) == augmentation(a) * augmentation(b)
        am, bm = a.mod_p(), b.mod_p()
        assert augmentation(am * bm) == augmentation(am) * augmentation(bm) % p


@pytest.mark.parametrize("p,r", DESK)
def test_shifted_basis_round_trip(p, r):
    ctx = GroupContext(p, r)
    rng = random.Random(200 * p + r)
    for _ in range(100):
        a = random_ring_elem(ctx, rng)
        q = to_shifted_basis(a)
        assert from_shifted_basis(q) == a
        # constant coefficient of the shifted form is the augmentation
        assert q.terms.get(ctx.identity, 0) == augmentation(a)


def test_shifted_basis_of_generator():
    for p in (2, 3):
        ctx = GroupContext(p, 1)
        s = RingElem.from_group_elem(ctx, (1,))
        assert to_shifted_basis(s).terms == {(0,): 1, (1,): 1}


def test_difference_basis():
    ctx = GroupContext(3, 1)
    t = shifted_generator(ctx, 1)
    assert as_difference_basis(t) == {(1,): 1}
    assert as_difference_basis(t * t) == {(2,): 1, (1,): -2}
    with pytest.raises(ValueError):
        as_difference_basis(RingElem.unit(ctx))


@pytest.mark.parametrize("p,r", DESK)
def test_shifted_monomials_linearly_independent_mod_p(p, r):
    # the nonconstant shifted monomials are a basis of the augmentation ideal
    ctx = GroupContext(p, r)
    elems = list(ctx.elements())
    index = {u: i for i, u in enumerate(elems)}
    columns = []
    for k in ctx.elements():
        if not any(k):
            continue
        mono = shifted_monomial(ctx, k).mod_p()
        columns.append({index[u]: c for u, c in mono.terms.items()})
    mat = FpMatrix(p, len(elems), len(columns), columns)
    assert rank(mat) == ctx.order - 1


def test_scale_and_linearity():
    ctx = GroupContext(5, 1)
    rng = random.Random(11)
    a = random_ring_elem(ctx, rng)
    assert a.scale(0).is_zero()
    assert a + a == a.scale(2)
    assert (a - a).is_zero()


def test_power():
    ctx = GroupContext(3, 1)
    t = shifted_generator(ctx, 1)
    assert t.power(0) == RingElem.unit(ctx)
    assert t.power(3) == t * t * t
    with pytest.raises(ValueError):
        t.power(-1)
