"""Explicit generator cocycles for the cohomology ring, and their probes.

Degree one is generated by the exponent-reading cocycles (the dual basis of
the group); degree two by their Bockstein images, represented by the base-p
carry cocycles.  Cup powers of these two families realize every monomial
basis class.  The probe tensors built here are the distinguished arguments
on which a cup power evaluates to 1, and their split variants resolve each
(s_i - 1)^(p-1) factor into single differences s_i^q - 1.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

from .cochain import ICochain, NormalizedCochain, Tensor, cup_many
from .group_ring import (
    INTEGERS,
    MOD_P,
    GroupContext,
    RingElem,
    shifted_generator,
    shifted_monomial,
)


def exponent_cocycle(ctx: GroupContext, i: int) -> ICochain:
    """The degree-1 mod-p cocycle sending u - 1 to the i-th exponent of u.

    On the shifted basis it is dual to s_i - 1: it gives 1 there and 0 on
    every other shifted monomial.  Represents the i-th degree-1 generator.
    """
    ctx.check_index(i)
    values = {}
    for u in ctx.nonidentity_elements():
        if u[i - 1]:
            values[(u,)] = u[i - 1]
    return ICochain(ctx, 1, MOD_P, values)


def carry_cocycle_over_z(ctx: GroupContext, i: int) -> NormalizedCochain:
    """The integral carry cocycle: (u, v) -> 1 when the i-th exponents carry.

    With u, v having i-th exponents k, l in [0, p), the value is the carry
    digit of the base-p addition k + l, i.e. 1 exactly when k + l >= p.
    """
    ctx.check_index(i)
    values = {}
    for u in ctx.nonidentity_elements():
        for v in ctx.nonidentity_elements():
            if u[i - 1] + v[i - 1] >= ctx.p:
                values[(u, v)] = 1
    return NormalizedCochain(ctx, 2, INTEGERS, values)


def carry_cocycle(ctx: GroupContext, i: int) -> NormalizedCochain:
    """Mod-p reduction of the integral carry cocycle; represents the
    Bockstein of the i-th degree-1 class."""
    return carry_cocycle_over_z(ctx, i).mod_p()


def bockstein_cocycle(ctx: GroupContext, i: int) -> ICochain:
    """The degree-2 generator as an ideal-tensor cochain.

    Defined as the ideal-tensor form of the carry cocycle.  On pairs of
    shifted monomials it is 1 exactly on (s_i-1)^k x (s_i-1)^l with
    k + l = p, and 0 elsewhere (a fact the tests verify against
    ``bockstein_pair_value``).
    """
    return carry_cocycle(ctx, i).to_icochain()


def bockstein_pair_value(ctx: GroupContext, i: int, k: int, l: int) -> int:
    """Exact integer value of the integral carry functional on
    (s_i - 1)^k x (s_i - 1)^l, 1 <= k, l <= p - 1.

    Equals the alternating binomial sum over h from p to k + l of
    (-1)^(k+l-h) C(k+l, h), which is empty (0) when k + l < p and reduces
    mod p to 1 exactly when k + l = p.
    """
    ctx.check_index(i)
    p = ctx.p
    if not (1 <= k <= p - 1 and 1 <= l <= p - 1):
        raise ValueError(f"exponents must lie in [1, {p - 1}]: {(k, l)}")
    return sum((-1) ** (k + l - h) * math.comb(k + l, h) for h in range(p, k + l + 1))


def generator_power_cocycle(ctx: GroupContext, i: int, m: int) -> ICochain:
    """The degree-m cup power realizing the m-th power of variable i.

    Even m = 2k: the cup of k copies of the degree-2 generator; odd
    m = 2k + 1: the degree-1 generator cupped with k copies of the
    degree-2 one.  m = 0 gives the constant-1 degree-0 cochain.
    """
    ctx.check_index(i)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m == 0:
        return ICochain.constant(ctx, 1)
    k, odd = divmod(m, 2)
    factors = []
    if odd:
        factors.append(exponent_cocycle(ctx, i))
    factors.extend(bockstein_cocycle(ctx, i) for _ in range(k))
    return cup_many(factors)


def probe_tensor(ctx: GroupContext, i: int, m: int) -> Tensor:
    """The degree-m probe tensor for variable i.

    Even m = 2k: k blocks (s_i-1)^(p-1) x (s_i-1); odd m: a leading
    s_i - 1 followed by the k blocks.  The degree-m cup power of
    variable i evaluates to 1 on it.
    """
    ctx.check_index(i)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    t = shifted_generator(ctx, i)
    t_top = shifted_monomial(ctx, tuple((ctx.p - 1) if j == i - 1 else 0 for j in range(ctx.r)))
    k, odd = divmod(m, 2)
    factors: list[RingElem] = [t] if odd else []
    for _ in range(k):
        factors.extend((t_top, t))
    return Tensor(ctx, factors)


def _check_q(ctx: GroupContext, m: int, q: Sequence[int]) -> tuple:
    q = tuple(q)
    if len(q) != m // 2:
        raise ValueError(f"q must have length {m // 2} for degree {m}, got {len(q)}")
    if any(not 1 <= qe <= ctx.p - 1 for qe in q):
        raise ValueError(f"q entries must lie in [1, {ctx.p - 1}]: {q!r}")
    return q


def probe_tuple(ctx: GroupContext, i: int, m: int, q: Sequence[int]) -> tuple:
    """The group-element tuple of a split probe: even m gives
    (s_i^q1, s_i, ..., s_i^qk, s_i), odd m prepends one s_i."""
    ctx.check_index(i)
    q = _check_q(ctx, m, q)
    s = ctx.generator(i)
    out = [s] if m % 2 else []
    for qe in q:
        out.extend((ctx.generator_power(i, qe), s))
    return tuple(out)


def probe_tensor_split(ctx: GroupContext, i: int, m: int, q: Sequence[int]) -> Tensor:
    """The probe with each (s_i-1)^(p-1) factor replaced by s_i^q - 1.

    Summing over all q in [1, p-1]^(m//2) recovers the probe tensor mod p,
    so mod-p cochains take equal values on the probe and on the sum of its
    splits.
    """
    us = probe_tuple(ctx, i, m, q)
    unit = RingElem.unit(ctx)
    return Tensor(ctx, [RingElem.from_group_elem(ctx, u) - unit for u in us])


def q_choices(ctx: GroupContext, m: int) -> Iterator[tuple]:
    """All split patterns for degree m: tuples in [1, p-1]^(m//2)."""
    return itertools.product(range(1, ctx.p), repeat=m // 2)


def binomial_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by base-p digit products.

    >>> binomial_mod_p(4, 2, 2)
    0
    """
    if n < 0 or k < 0:
        raise ValueError("binomial_mod_p needs nonnegative arguments")
    if k > n:
        return 0
    result = 1
    while n or k:
        nd, n = n % p, n // p
        kd, k = k % p, k // p
        if kd > nd:
            return 0
        result = result * math.comb(nd, kd) % p
    return result
