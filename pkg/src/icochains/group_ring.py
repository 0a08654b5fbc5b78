"""Exact arithmetic in Z[G] and F_p[G] for an elementary abelian p-group G.

G is F_p^r written multiplicatively: an element is an exponent vector
``(k_1, ..., k_r)`` with ``0 <= k_i < p``, and multiplication adds exponents
mod p.  Ring elements are stored sparsely on the group basis.  Alongside it
the module provides the shifted-monomial basis, built from the differences
``s_i - 1`` of the distinguished generators, and conversions between the two
bases.  The augmentation ideal (kernel of the coefficient-sum map) has the
nonidentity differences ``u - 1`` as a second basis; ``as_difference_basis``
rewrites an element on it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

# Coefficient-ring tags.  MOD_P values are always stored reduced into [0, p).
INTEGERS = "Z"
MOD_P = "Fp"

# A group element (or a shifted-monomial exponent vector) is a plain tuple
# of ints; validation happens at the GroupContext / RingElem boundary.
GroupElem = tuple
MultiIndex = tuple


def is_prime(n: int) -> bool:
    """Trial-division primality check; fine for the small moduli used here."""
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class GroupContext:
    """Ambient parameters (p, r) for G = F_p^r, shared by all values.

    >>> ctx = GroupContext(3, 2)
    >>> ctx.mul((1, 2), (2, 2))
    (0, 1)
    >>> ctx.identity
    (0, 0)
    """

    p: int
    r: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")

    @property
    def identity(self) -> GroupElem:
        return (0,) * self.r

    @property
    def order(self) -> int:
        return self.p**self.r

    def elements(self) -> Iterator[GroupElem]:
        """All p^r exponent vectors in lexicographic order."""
        return itertools.product(range(self.p), repeat=self.r)

    def nonidentity_elements(self) -> Iterator[GroupElem]:
        return (u for u in self.elements() if any(u))

    def generator(self, i: int) -> GroupElem:
        """The i-th distinguished generator s_i (1-based)."""
        self.check_index(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.r))

    def generator_power(self, i: int, k: int) -> GroupElem:
        self.check_index(i)
        return tuple(k % self.p if j == i - 1 else 0 for j in range(self.r))

    def mul(self, u: GroupElem, v: GroupElem) -> GroupElem:
        return tuple((a + b) % self.p for a, b in zip(u, v))

    def inverse(self, u: GroupElem) -> GroupElem:
        return tuple((-a) % self.p for a in u)

    def check_elem(self, u) -> GroupElem:
        if not isinstance(u, tuple) or len(u) != self.r:
            raise ValueError(f"group element must be a tuple of length {self.r}: {u!r}")
        if any(not isinstance(a, int) or not 0 <= a < self.p for a in u):
            raise ValueError(f"exponents must be integers in [0, {self.p}): {u!r}")
        return u

    def check_index(self, i: int) -> int:
        if not 1 <= i <= self.r:
            raise ValueError(f"generator index must be in [1, {self.r}], got {i}")
        return i


def _check_ring(ring: str) -> str:
    if ring not in (INTEGERS, MOD_P):
        raise ValueError(f"unknown coefficient ring {ring!r}")
    return ring


class RingElem:
    """Sparse element of Z[G] or F_p[G], keyed by exponent vectors.

    Zero coefficients are never stored; mod-p coefficients are kept in
    [0, p).  Instances are immutable by convention: every operation
    returns a fresh element.
    """

    __slots__ = ("ctx", "ring", "terms")

    def __init__(self, ctx: GroupContext, ring: str, terms: dict):
        self.ctx = ctx
        self.ring = _check_ring(ring)
        p = ctx.p
        clean = {}
        for u, c in terms.items():
            ctx.check_elem(u)
            if ring == MOD_P:
                c %= p
            if c:
                clean[u] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ctx: GroupContext, ring: str = INTEGERS) -> "RingElem":
        return cls(ctx, ring, {})

    @classmethod
    def unit(cls, ctx: GroupContext, ring: str = INTEGERS) -> "RingElem":
        return cls(ctx, ring, {ctx.identity: 1})

    @classmethod
    def from_group_elem(cls, ctx: GroupContext, u: GroupElem, ring: str = INTEGERS) -> "RingElem":
        return cls(ctx, ring, {u: 1})

    # -- ring structure -----------------------------------------------

    def _compatible(self, other: "RingElem") -> None:
        if self.ctx != other.ctx or self.ring != other.ring:
            raise ValueError("context or coefficient-ring mismatch")

    def __add__(self, other: "RingElem") -> "RingElem":
        self._compatible(other)
        terms = dict(self.terms)
        for u, c in other.terms.items():
            terms[u] = terms.get(u, 0) + c
        return RingElem(self.ctx, self.ring, terms)

    def __neg__(self) -> "RingElem":
        return RingElem(self.ctx, self.ring, {u: -c for u, c in self.terms.items()})

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __mul__(self, other: "RingElem") -> "RingElem":
        # Convolution product induced by s^k * s^l = s^(k+l mod p).
        self._compatible(other)
        ctx = self.ctx
        terms: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = ctx.mul(u, v)
                terms[w] = terms.get(w, 0) + cu * cv
        return RingElem(ctx, self.ring, terms)

    def scale(self, c: int) -> "RingElem":
        return RingElem(self.ctx, self.ring, {u: c * v for u, v in self.terms.items()})

    def power(self, k: int) -> "RingElem":
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = RingElem.unit(self.ctx, self.ring)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ctx == other.ctx and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, self.ring, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, u: GroupElem) -> int:
        return self.terms.get(u, 0)

    def mod_p(self) -> "RingElem":
        """The image in F_p[G] (identity if already mod p)."""
        return RingElem(self.ctx, MOD_P, self.terms)

    def __repr__(self):
        items = ", ".join(f"{u}: {c}" for u, c in sorted(self.terms.items()))
        return f"RingElem(p={self.ctx.p}, r={self.ctx.r}, {self.ring}, {{{items}}})"


class ShiftedPolynomial:
    """An element of the group ring written on the shifted-monomial basis.

    A shifted monomial with exponent vector k is the product of the
    differences (s_i - 1)^(k_i); with 0 <= k_i < p these monomials form a
    basis of Z[G].  This is a derived view: the group basis is canonical
    and multiplication lives on RingElem.
    """

    __slots__ = ("ctx", "ring", "terms")

    def __init__(self, ctx: GroupContext, ring: str, terms: dict):
        self.ctx = ctx
        self.ring = _check_ring(ring)
        p = ctx.p
        clean = {}
        for k, c in terms.items():
            ctx.check_elem(k)  # same shape constraint as group elements
            if ring == MOD_P:
                c %= p
            if c:
                clean[k] = c
        self.terms = clean

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftedPolynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.ring == other.ring and self.terms == other.terms

    def __repr__(self):
        items = ", ".join(f"{k}: {c}" for k, c in sorted(self.terms.items()))
        return f"ShiftedPolynomial(p={self.ctx.p}, r={self.ctx.r}, {self.ring}, {{{items}}})"


def augmentation(a: RingElem) -> int:
    """Sum of the coefficients; a ring map onto the coefficient ring."""
    total = sum(a.terms.values())
    return total % a.ctx.p if a.ring == MOD_P else total


def in_augmentation_ideal(a: RingElem) -> bool:
    return augmentation(a) == 0


def shifted_generator(ctx: GroupContext, i: int, ring: str = INTEGERS) -> RingElem:
    """The difference s_i - 1 of the i-th generator."""
    ctx.check_index(i)
    return RingElem(ctx, ring, {ctx.generator(i): 1, ctx.identity: -1})


def shifted_monomial(ctx: GroupContext, k, ring: str = INTEGERS) -> RingElem:
    """The product of (s_i - 1)^(k_i), expanded on the group basis.

    Exponents >= p are legal: the power is taken honestly in the group
    ring (where s_i^p = 1), which is what transient computations with
    (s_i - 1)^p need.  Only basis enumeration restricts to k_i <= p - 1.

    >>> ctx = GroupContext(2, 1)
    >>> shifted_monomial(ctx, (2,)).terms == {(0,): 2, (1,): -2}
    True
    """
    if len(k) != ctx.r or any(not isinstance(a, int) or a < 0 for a in k):
        raise ValueError(f"exponent vector must be {ctx.r} nonnegative integers: {k!r}")
    result = RingElem.unit(ctx, ring)
    for i, e in enumerate(k, start=1):
        result = result * shifted_generator(ctx, i, ring).power(e)
    return result


def to_shifted_basis(a: RingElem) -> ShiftedPolynomial:
    """Rewrite a on the shifted-monomial basis.

    Substitutes s^m = prod_i (1 + (s_i - 1))^(m_i) and expands binomially;
    since every m_i < p the resulting exponents stay below p.  The
    coefficient of the constant monomial equals the augmentation.
    """
    terms: dict = {}
    for m, c in a.terms.items():
        for k in itertools.product(*(range(mi + 1) for mi in m)):
            coeff = c
            for mi, ki in zip(m, k):
                coeff *= math.comb(mi, ki)
            terms[k] = terms.get(k, 0) + coeff
    return ShiftedPolynomial(a.ctx, a.ring, terms)


def from_shifted_basis(q: ShiftedPolynomial) -> RingElem:
    """Expand a shifted polynomial back onto the group basis."""
    result = RingElem.zero(q.ctx, q.ring)
    for k, c in q.terms.items():
        result = result + shifted_monomial(q.ctx, k, q.ring).scale(c)
    return result


def as_difference_basis(a: RingElem) -> dict:
    """Write an augmentation-ideal element as sum of c_u * (u - 1), u != 1.

    The coefficient of u - 1 is simply the group-basis coefficient of u;
    the identity coefficient is then forced by augmentation zero.  Raises
    if a is not in the ideal.
    """
    if augmentation(a) != 0:
        raise ValueError("element has nonzero augmentation, not in the augmentation ideal")
    identity = a.ctx.identity
    return {u: c for u, c in a.terms.items() if u != identity}
