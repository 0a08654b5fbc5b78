"""Normalized cochains and ideal-tensor cochains, with coboundaries and cups.

A normalized cochain of degree n is a function on G^n vanishing whenever an
argument is the identity.  An ideal-tensor cochain (``ICochain``) is a linear
functional on the n-fold tensor power of the augmentation ideal.  The two
are in bijection: a normalized cochain a corresponds to the functional f
with ``a(u_1, ..., u_n) = f((u_1 - 1) x ... x (u_n - 1))``, so both kinds
store the same sparse map from tuples of nonidentity group elements to
coefficients.  What differs is the semantics of everything built on top:

* the coboundary of a normalized cochain follows the classical bar formula;
* the coboundary of an ICochain contracts adjacent tensor factors with the
  group-ring product, picking up only the alternating signs when the module
  action is trivial;
* an ICochain evaluates on arbitrary ideal tensors by multilinearity;
* cup products concatenate tensor factors, with the sign convention that
  (f cup g) on an (m+n)-tensor is (-1)^(m n) f(first m) g(last n).

Both coboundary routes are implemented independently and agree (a fact the
test suite checks pointwise on full bases).
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .group_ring import (
    INTEGERS,
    MOD_P,
    GroupContext,
    RingElem,
    _check_ring,
    as_difference_basis,
    augmentation,
)

# Optional module action for coefficients: (group element, value) -> value.
# None means the trivial action.  Only the unit-test surface exercises
# nontrivial actions; all shipped computations use trivial modules.
Action = Callable[[tuple, int], int]


class NotACocycleError(ValueError):
    """Raised when an operation defined on cohomology classes gets a non-cocycle."""


class _Cochain:
    """Shared storage and linear structure for both cochain kinds."""

    __slots__ = ("ctx", "degree", "ring", "values")

    def __init__(self, ctx: GroupContext, degree: int, ring: str, values: dict):
        if degree < 0:
            raise ValueError(f"degree must be >= 0, got {degree}")
        self.ctx = ctx
        self.degree = degree
        self.ring = _check_ring(ring)
        p = ctx.p
        identity = ctx.identity
        clean = {}
        for key, c in values.items():
            if not isinstance(key, tuple) or len(key) != degree:
                raise ValueError(f"key must be a {degree}-tuple of group elements: {key!r}")
            for u in key:
                ctx.check_elem(u)
                if u == identity:
                    raise ValueError("keys may not contain the identity element")
            if ring == MOD_P:
                c %= p
            if c:
                clean[key] = c
        self.values = clean

    def _compatible(self, other: "_Cochain") -> None:
        if type(self) is not type(other):
            raise ValueError("cannot mix normalized cochains and ideal-tensor cochains")
        if self.ctx != other.ctx or self.ring != other.ring or self.degree != other.degree:
            raise ValueError("context, ring, or degree mismatch")

    def __add__(self, other):
        self._compatible(other)
        values = dict(self.values)
        for key, c in other.values.items():
            values[key] = values.get(key, 0) + c
        return type(self)(self.ctx, self.degree, self.ring, values)

    def __neg__(self):
        return type(self)(self.ctx, self.degree, self.ring,
                          {k: -c for k, c in self.values.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return type(self)(self.ctx, self.degree, self.ring,
                          {k: c * v for k, v in self.values.items()})

    def __eq__(self, other) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return (self.ctx == other.ctx and self.degree == other.degree
                and self.ring == other.ring and self.values == other.values)

    def __hash__(self):
        return hash((self.ctx, self.degree, self.ring, frozenset(self.values.items())))

    def is_zero(self) -> bool:
        return not self.values

    def value_at(self, key: tuple) -> int:
        """The stored coefficient at a basis tuple (0 if absent or normalized away)."""
        if len(key) != self.degree:
            raise ValueError(f"expected a {self.degree}-tuple, got {key!r}")
        if any(u == self.ctx.identity for u in key):
            return 0
        return self.values.get(key, 0)

    def mod_p(self):
        return type(self)(self.ctx, self.degree, MOD_P, self.values)

    def __repr__(self):
        return (f"{type(self).__name__}(p={self.ctx.p}, r={self.ctx.r}, "
                f"degree={self.degree}, {self.ring}, {len(self.values)} entries)")


class NormalizedCochain(_Cochain):
    """Degree-n function on G^n over Z or F_p, zero on identity arguments."""

    @classmethod
    def zero(cls, ctx: GroupContext, degree: int, ring: str = MOD_P) -> "NormalizedCochain":
        return cls(ctx, degree, ring, {})

    @classmethod
    def constant(cls, ctx: GroupContext, value: int, ring: str = MOD_P) -> "NormalizedCochain":
        return cls(ctx, 0, ring, {(): value})

    def to_icochain(self) -> "ICochain":
        """The corresponding ideal-tensor functional (value-for-value)."""
        return ICochain(self.ctx, self.degree, self.ring, self.values)

    def coboundary(self, action: Action | None = None) -> "NormalizedCochain":
        """The bar coboundary; normalized because this cochain is.

        With the default trivial action the leading term u_1 . a(u_2, ...)
        reduces to a plain copy of a(u_2, ...).
        """
        out: dict = {}
        nonid = list(self.ctx.nonidentity_elements())
        inv = self.ctx.inverse
        n = self.degree
        trail_sign = -1 if (n + 1) % 2 else 1
        for key, c in self.values.items():
            for v in nonid:
                t = (v,) + key
                out[t] = out.get(t, 0) + (c if action is None else action(v, c))
            for j in range(1, n + 1):
                kj = key[j - 1]
                sign_c = -c if j % 2 else c
                head, tail = key[: j - 1], key[j:]
                for x in nonid:
                    if x == kj:
                        continue  # would force the second factor to be 1
                    t = head + (x, self.ctx.mul(inv(x), kj)) + tail
                    out[t] = out.get(t, 0) + sign_c
            for v in nonid:
                t = key + (v,)
                out[t] = out.get(t, 0) + trail_sign * c
        return NormalizedCochain(self.ctx, n + 1, self.ring, out)

    def is_cocycle(self) -> bool:
        return self.coboundary().is_zero()


class Tensor:
    """A tensor of augmentation-ideal elements, the argument type of ICochains."""

    __slots__ = ("ctx", "factors")

    def __init__(self, ctx: GroupContext, factors: Sequence[RingElem]):
        self.ctx = ctx
        self.factors = tuple(factors)
        for a in self.factors:
            if a.ctx != ctx:
                raise ValueError("tensor factor from a different context")
            if augmentation(a) != 0:
                raise ValueError("tensor factor outside the augmentation ideal")

    def __len__(self) -> int:
        return len(self.factors)


class ICochain(_Cochain):
    """Linear functional on the n-th tensor power of the augmentation ideal.

    Stored values are the evaluations on the difference basis
    (u_1 - 1) x ... x (u_n - 1); evaluation extends multilinearly.
    """

    @classmethod
    def zero(cls, ctx: GroupContext, degree: int, ring: str = MOD_P) -> "ICochain":
        return cls(ctx, degree, ring, {})

    @classmethod
    def constant(cls, ctx: GroupContext, value: int, ring: str = MOD_P) -> "ICochain":
        return cls(ctx, 0, ring, {(): value})

    def to_normalized(self) -> NormalizedCochain:
        """The corresponding normalized cochain (value-for-value)."""
        return NormalizedCochain(self.ctx, self.degree, self.ring, self.values)

    def evaluate(self, tensor: Tensor) -> int:
        """Evaluate on an ideal tensor by expanding each factor.

        Mod-p cochains accept factors over either coefficient ring (the
        value only depends on the factors mod p); integer cochains demand
        integer factors.
        """
        if tensor.ctx != self.ctx:
            raise ValueError("tensor from a different context")
        if len(tensor) != self.degree:
            raise ValueError(f"expected {self.degree} factors, got {len(tensor)}")
        if self.ring == INTEGERS and any(a.ring != INTEGERS for a in tensor.factors):
            raise ValueError("integer cochains require integer tensor factors")
        return self.evaluate_on_expansions([as_difference_basis(a) for a in tensor.factors])

    def evaluate_on_expansions(self, factors: Sequence[dict]) -> int:
        """Evaluate on factors already written on the difference basis."""
        if len(factors) != self.degree:
            raise ValueError(f"expected {self.degree} factors, got {len(factors)}")
        values = self.values
        total = 0
        for combo in itertools.product(*(d.items() for d in factors)):
            v = values.get(tuple(u for u, _ in combo))
            if v:
                for _, c in combo:
                    v *= c
                total += v
        return total % self.ctx.p if self.ring == MOD_P else total

    def coboundary(self, action: Action | None = None) -> "ICochain":
        """The coboundary in ideal-tensor form.

        On an (n+1)-tensor this is the alternating sum over adjacent
        factor contractions a_i a_(i+1) (a product in the group ring),
        plus the module-action term when the action is nontrivial; an
        ideal element acts as zero on a trivial module, so the default
        skips that term entirely.
        """
        out: dict = {}
        ctx = self.ctx
        nonid = list(ctx.nonidentity_elements())
        inv = ctx.inverse
        n = self.degree
        for key, c in self.values.items():
            if action is not None:
                # (v - 1) . c = action(v, c) - c on the leading slot.
                for v in nonid:
                    t = (v,) + key
                    out[t] = out.get(t, 0) + action(v, c) - c
            for i in range(1, n + 1):
                ki = key[i - 1]
                sign_c = -c if i % 2 else c
                head, tail = key[: i - 1], key[i:]
                # (x-1)(y-1) = (xy-1) - (x-1) - (y-1): the contraction at
                # slot i hits this key when xy, x, or y equals key[i-1].
                for x in nonid:
                    if x != ki:
                        t = head + (x, ctx.mul(inv(x), ki)) + tail
                        out[t] = out.get(t, 0) + sign_c
                for y in nonid:
                    t = head + (ki, y) + tail
                    out[t] = out.get(t, 0) - sign_c
                for x in nonid:
                    t = head + (x, ki) + tail
                    out[t] = out.get(t, 0) - sign_c
        return ICochain(ctx, n + 1, self.ring, out)

    def is_cocycle(self) -> bool:
        return self.coboundary().is_zero()

    def cup(self, other: "ICochain") -> "ICochain":
        """Cup product with the (-1)^(m n) front sign.

        Requires mod-p coefficients (the trivial-action hypothesis under
        which the block formula holds is automatic for our modules).
        """
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")
        if self.ring != MOD_P or other.ring != MOD_P:
            raise ValueError("cup products are defined for mod-p cochains")
        sign = -1 if (self.degree * other.degree) % 2 else 1
        values: dict = {}
        for ku, cu in self.values.items():
            for kv, cv in other.values.items():
                values[ku + kv] = sign * cu * cv
        return ICochain(self.ctx, self.degree + other.degree, MOD_P, values)


def cup_many(factors: Sequence[ICochain]) -> ICochain:
    """Cup product of several cochains in one pass.

    The front sign is (-1)^(l(l-1)/2) where l counts the odd-degree
    factors; this equals the product of the pairwise signs picked up by
    left-nested cupping, so the result coincides with reduce(cup, factors).
    """
    factors = list(factors)
    if not factors:
        raise ValueError("cup_many needs at least one factor")
    ctx = factors[0].ctx
    for f in factors:
        if f.ctx != ctx:
            raise ValueError("context mismatch")
        if f.ring != MOD_P:
            raise ValueError("cup products are defined for mod-p cochains")
    l = sum(1 for f in factors if f.degree % 2)
    sign = -1 if (l * (l - 1) // 2) % 2 else 1
    degree = sum(f.degree for f in factors)
    values: dict = {}
    for combo in itertools.product(*(f.values.items() for f in factors)):
        key = tuple(itertools.chain.from_iterable(k for k, _ in combo))
        c = sign
        for _, v in combo:
            c *= v
        values[key] = values.get(key, 0) + c
    return ICochain(ctx, degree, MOD_P, values)


# -- signed symmetric-group action -------------------------------------

def perm_inverse(perm: Sequence[int]) -> tuple:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def perm_compose(s: Sequence[int], t: Sequence[int]) -> tuple:
    """The product (s t)(i) = t(s(i)): s acts first, then t.

    This left-to-right convention is the one under which the signed slot
    action below is a group action:
    ``signed_permute(f, perm_compose(s, t)) ==
    signed_permute(signed_permute(f, t), s)``.
    """
    return tuple(t[s[i]] for i in range(len(s)))


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def signed_permute(f: ICochain, perm: Sequence[int]) -> ICochain:
    """The signed permutation action on tensor slots.

    (sigma f) evaluated on b_1 x ... x b_n is sgn(sigma) times f on the
    tensor whose j-th slot holds b at sigma^(-1)(j); permutations are
    0-based tuples with perm[i] = sigma(i).  The action satisfies
    (sigma tau) f = sigma (tau f).
    """
    if sorted(perm) != list(range(f.degree)):
        raise ValueError(f"permutation must be of size {f.degree}: {perm!r}")
    sign = perm_sign(perm)
    values = {}
    for key, c in f.values.items():
        newkey = tuple(key[perm[i]] for i in range(len(perm)))
        values[newkey] = sign * c
    return ICochain(f.ctx, f.degree, f.ring, values)
