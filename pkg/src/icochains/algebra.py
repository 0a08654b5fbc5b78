"""The target algebra, shuffle combinatorics, and the inverse isomorphism.

For p = 2 the cohomology ring of G = F_p^r is a polynomial algebra on r
degree-1 variables; for p > 2 it is the exterior algebra on r degree-1
variables tensored with a polynomial algebra on their r degree-2 Bockstein
images.  In both cases a monomial basis of the degree-n part is indexed by
exponent signatures (n_1, ..., n_r) with sum n, where for p > 2 the parity
of n_i splits into the exterior part (odd) and the polynomial part (even):
signature entry m = 2k + l, l in {0, 1}, stands for (i-th degree-1
variable)^l times (its Bockstein)^k.

``realize`` maps a signature to an explicit cocycle by cupping generator
powers.  ``invert`` is the reverse map on cochain representatives: for
p = 2 it reads off values on tensors of shifted generators; for p > 2 each
coefficient is a signed sum, over shuffles of the blocks, of evaluations on
a fixed probe tensor.  ``invert_normalized`` computes the same coefficients
directly from normalized-cochain values on explicit group-element tuples.
Both kill coboundaries exactly, so they are well defined on cohomology.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

from .cochain import (
    ICochain,
    NormalizedCochain,
    NotACocycleError,
    cup_many,
    perm_sign,
)
from .generators import generator_power_cocycle, probe_tuple, q_choices
from .group_ring import MOD_P, GroupContext, as_difference_basis, shifted_monomial

MonomialSig = tuple  # r nonnegative ints; degree = their sum


def compositions(n: int, parts: int) -> Iterator[tuple]:
    """All tuples of `parts` nonnegative integers summing to n."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def monomial_mul(a: MonomialSig, b: MonomialSig, p: int) -> tuple[int, MonomialSig]:
    """Multiply two monomial signatures; returns (sign, combined signature).

    For p = 2 the product is the plain exponent sum with sign +1.  For
    p > 2 the product vanishes (sign 0) when some variable is odd in both
    factors (its exterior part squares to zero); otherwise the exponents
    add and the sign is the Koszul sign from moving the odd parts of b
    past the odd parts of a with larger index.
    """
    if len(a) != len(b):
        raise ValueError("signature length mismatch")
    combined = tuple(x + y for x, y in zip(a, b))
    if p == 2:
        return 1, combined
    if any(x % 2 and y % 2 for x, y in zip(a, b)):
        return 0, combined
    inversions = 0
    for j, y in enumerate(b):
        if y % 2:
            inversions += sum(1 for x in a[j + 1:] if x % 2)
    return (-1 if inversions % 2 else 1), combined


class AlgebraElem:
    """Sparse element of the target algebra in the monomial-signature basis."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: GroupContext, terms: dict):
        self.ctx = ctx
        clean = {}
        for sig, c in terms.items():
            if not isinstance(sig, tuple) or len(sig) != ctx.r:
                raise ValueError(f"signature must be a tuple of length {ctx.r}: {sig!r}")
            if any(not isinstance(m, int) or m < 0 for m in sig):
                raise ValueError(f"signature entries must be nonnegative integers: {sig!r}")
            c %= ctx.p
            if c:
                clean[sig] = c
        self.terms = clean

    @classmethod
    def zero(cls, ctx: GroupContext) -> "AlgebraElem":
        return cls(ctx, {})

    @classmethod
    def unit(cls, ctx: GroupContext) -> "AlgebraElem":
        return cls(ctx, {(0,) * ctx.r: 1})

    @classmethod
    def monomial(cls, ctx: GroupContext, sig: Sequence[int], coeff: int = 1) -> "AlgebraElem":
        return cls(ctx, {tuple(sig): coeff})

    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")
        terms = dict(self.terms)
        for sig, c in other.terms.items():
            terms[sig] = terms.get(sig, 0) + c
        return AlgebraElem(self.ctx, terms)

    def __neg__(self) -> "AlgebraElem":
        return AlgebraElem(self.ctx, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElem") -> "AlgebraElem":
        return self + (-other)

    def scale(self, c: int) -> "AlgebraElem":
        return AlgebraElem(self.ctx, {s: c * v for s, v in self.terms.items()})

    def __mul__(self, other: "AlgebraElem") -> "AlgebraElem":
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")
        p = self.ctx.p
        terms: dict = {}
        for sa, ca in self.terms.items():
            for sb, cb in other.terms.items():
                sign, sig = monomial_mul(sa, sb, p)
                if sign:
                    terms[sig] = terms.get(sig, 0) + sign * ca * cb
        return AlgebraElem(self.ctx, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum(sig) for sig in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for sig in sorted(self.terms, key=lambda s: (sum(s), s)):
            c = self.terms[sig]
            factors = []
            for i, m in enumerate(sig, start=1):
                k, odd = divmod(m, 2)
                if self.ctx.p == 2:
                    if m:
                        factors.append(f"x{i}" + (f"^{m}" if m > 1 else ""))
                    continue
                if odd:
                    factors.append(f"x{i}")
                if k:
                    factors.append(f"y{i}" + (f"^{k}" if k > 1 else ""))
            mono = "*".join(factors) if factors else "1"
            parts.append(mono if c == 1 and factors else f"{c}*{mono}" if factors else str(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgebraElem(p={self.ctx.p}, r={self.ctx.r}, {self.terms!r})"


# -- shuffles -----------------------------------------------------------

def shuffles(block_sizes: Sequence[int]) -> Iterator[tuple]:
    """All permutations increasing on each consecutive block.

    Permutations are 0-based tuples with perm[j] the image of position j.
    Generated by choosing image sets block by block (never by filtering
    the full symmetric group), so the cost is the multinomial coefficient.

    >>> sorted(shuffles((1, 1)))
    [(0, 1), (1, 0)]
    """
    n = sum(block_sizes)

    def rec(avail: tuple, sizes: tuple) -> Iterator[tuple]:
        if not sizes:
            yield ()
            return
        for chosen in itertools.combinations(avail, sizes[0]):
            chosen_set = set(chosen)
            remaining = tuple(x for x in avail if x not in chosen_set)
            for tail in rec(remaining, sizes[1:]):
                yield chosen + tail

    return rec(tuple(range(n)), tuple(block_sizes))


def shuffle_count(block_sizes: Sequence[int]) -> int:
    total = sum(block_sizes)
    count = 1
    for b in block_sizes:
        count *= math.comb(total, b)
        total -= b
    return count


# -- the forward map ----------------------------------------------------

def realize(e: AlgebraElem) -> ICochain:
    """Realize a homogeneous algebra element as an explicit cocycle.

    A basis signature (n_1, ..., n_r) maps to the cup product of the
    degree-n_i generator powers of the r variables, taken in variable
    order; the map extends linearly.
    """
    if not e.is_homogeneous():
        raise ValueError("can only realize homogeneous elements")
    ctx = e.ctx
    if e.is_zero():
        return ICochain.zero(ctx, 0)
    degree = next(iter(e.degrees()))
    result = ICochain.zero(ctx, degree)
    for sig, c in e.terms.items():
        cocycle = cup_many([generator_power_cocycle(ctx, i, m)
                            for i, m in enumerate(sig, start=1)])
        result = result + cocycle.scale(c)
    return result


# -- the inverse map ----------------------------------------------------

def _probe_expansions(ctx: GroupContext, i: int, m: int) -> list[dict]:
    """Difference-basis expansions of the degree-m probe factors for
    variable i, reduced mod p."""
    p = ctx.p
    s = ctx.generator(i)
    t_exp = {s: 1}
    top = as_difference_basis(shifted_monomial(
        ctx, tuple((p - 1) if j == i - 1 else 0 for j in range(ctx.r))))
    top_exp = {u: c % p for u, c in top.items() if c % p}
    k, odd = divmod(m, 2)
    out = [t_exp] if odd else []
    for _ in range(k):
        out.extend((top_exp, t_exp))
    return out


def _require_mod_p(f) -> None:
    if f.ring != MOD_P:
        raise ValueError("the inverse map is defined for mod-p cochains")


def invert(f: ICochain) -> AlgebraElem:
    """Map a degree-n cochain to algebra coordinates.

    This is the raw linear map on cochains; it vanishes on coboundaries,
    so on cocycles it computes the inverse of ``realize`` on classes.  Use
    ``invert_class`` to insist on cocycle input.
    """
    _require_mod_p(f)
    if f.ctx.p == 2:
        return _invert_direct_p2(f)
    return invert_via_shuffles(f)


def _invert_direct_p2(f: ICochain) -> AlgebraElem:
    # Coefficient of a monomial = sum of values on all tensors of shifted
    # generators whose index word has that content.
    ctx = f.ctx
    gens = [ctx.generator(i) for i in range(1, ctx.r + 1)]
    terms: dict = {}
    for word in itertools.product(range(ctx.r), repeat=f.degree):
        v = f.values.get(tuple(gens[i] for i in word))
        if v:
            sig = [0] * ctx.r
            for i in word:
                sig[i] += 1
            sig = tuple(sig)
            terms[sig] = terms.get(sig, 0) + v
    return AlgebraElem(ctx, terms)


def invert_via_shuffles(f: ICochain) -> AlgebraElem:
    """The shuffle-sum form of the inverse map, valid for every p.

    For each signature (n_1, ..., n_r) of the degree, the coefficient is
    (-1)^(l(l-1)/2) (l = number of odd n_i) times the sum over block
    shuffles sigma of sgn(sigma) times f evaluated on the probe tensor
    with its slots scattered by sigma.  For p = 2 this agrees with the
    direct form used by ``invert``.
    """
    _require_mod_p(f)
    ctx = f.ctx
    n = f.degree
    terms: dict = {}
    for comp in compositions(n, ctx.r):
        factors: list[dict] = []
        for i, ni in enumerate(comp, start=1):
            factors.extend(_probe_expansions(ctx, i, ni))
        total = 0
        for sigma in shuffles(comp):
            permuted: list = [None] * n
            for j, d in enumerate(factors):
                permuted[sigma[j]] = d
            total += perm_sign(sigma) * f.evaluate_on_expansions(permuted)
        l = sum(1 for ni in comp if ni % 2)
        if (l * (l - 1) // 2) % 2:
            total = -total
        if total % ctx.p:
            terms[comp] = total
    return AlgebraElem(ctx, terms)


def invert_class(f: ICochain) -> AlgebraElem:
    """Inverse map on a cohomology class; raises unless f is a cocycle."""
    _require_mod_p(f)
    if not f.is_cocycle():
        raise NotACocycleError("input cochain is not a cocycle")
    return invert(f)


def invert_normalized(a: NormalizedCochain) -> AlgebraElem:
    """Inverse map computed from normalized-cochain values directly.

    Evaluates a on explicit group-element tuples (no ideal-tensor detour);
    agrees exactly with ``invert`` of the corresponding ICochain.
    """
    return invert_normalized_counted(a)[0]


def invert_normalized_counted(a: NormalizedCochain) -> tuple[AlgebraElem, int]:
    """Like ``invert_normalized``, also reporting the number of cochain
    evaluations performed (the advertised term count of the formula)."""
    _require_mod_p(a)
    ctx = a.ctx
    n = a.degree
    evaluations = 0
    terms: dict = {}
    if ctx.p == 2:
        gens = [ctx.generator(i) for i in range(1, ctx.r + 1)]
        for word in itertools.product(range(ctx.r), repeat=n):
            evaluations += 1
            v = a.values.get(tuple(gens[i] for i in word))
            if v:
                sig = [0] * ctx.r
                for i in word:
                    sig[i] += 1
                sig = tuple(sig)
                terms[sig] = terms.get(sig, 0) + v
        return AlgebraElem(ctx, terms), evaluations
    for comp in compositions(n, ctx.r):
        block_tuples = [
            [probe_tuple(ctx, i, ni, q) for q in q_choices(ctx, ni)]
            for i, ni in enumerate(comp, start=1)
        ]
        total = 0
        for sigma in shuffles(comp):
            sgn = perm_sign(sigma)
            for blocks in itertools.product(*block_tuples):
                arg: list = [None] * n
                for j, u in enumerate(itertools.chain.from_iterable(blocks)):
                    arg[sigma[j]] = u
                evaluations += 1
                v = a.values.get(tuple(arg))
                if v:
                    total += sgn * v
        l = sum(1 for ni in comp if ni % 2)
        if (l * (l - 1) // 2) % 2:
            total = -total
        if total % ctx.p:
            terms[comp] = total
    return AlgebraElem(ctx, terms), evaluations


# -- term counting ------------------------------------------------------

def count_terms(ctx: GroupContext, n: int) -> int:
    """Exact number of cochain evaluations in the degree-n inverse formula.

    Each signature contributes the multinomial number of shuffles times
    (p-1)^(number of split choices).

    >>> count_terms(GroupContext(3, 2), 2)
    6
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    for comp in compositions(n, ctx.r):
        total += shuffle_count(comp) * (ctx.p - 1) ** sum(ni // 2 for ni in comp)
    return total


def count_terms_closed_form(ctx: GroupContext, n: int) -> float:
    """Closed form of ``count_terms`` via the exponential generating function.

    With w = sqrt(p-1), A = (1 + 1/w)/2 and B = (1 - 1/w)/2, the count is
    sum over k of C(r, k) A^(r-k) B^k ((r-2k) w)^n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    w = math.sqrt(ctx.p - 1)
    a, b = (1 + 1 / w) / 2, (1 - 1 / w) / 2
    return sum(
        math.comb(ctx.r, k) * a ** (ctx.r - k) * b**k * ((ctx.r - 2 * k) * w) ** n
        for k in range(ctx.r + 1)
    )


def graded_dimension(ctx: GroupContext, n: int) -> int:
    """Number of monomial signatures of degree n (the expected dim H^n).

    For p = 2 this is the count of degree-n monomials in r variables; for
    p > 2 it splits over the exterior part of size l and the polynomial
    part of total degree k with 2k + l = n.  Both equal C(n+r-1, r-1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if ctx.p == 2:
        return math.comb(n + ctx.r - 1, ctx.r - 1)
    total = 0
    for l in range(min(ctx.r, n) + 1):
        if (n - l) % 2 == 0:
            k = (n - l) // 2
            total += math.comb(ctx.r, l) * math.comb(k + ctx.r - 1, ctx.r - 1)
    return total
