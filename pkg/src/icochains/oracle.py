"""Brute-force verification by exact linear algebra over F_p.

Builds coboundary matrices on the full difference-tensor basis, computes
ranks and kernels by Gauss-Jordan elimination mod p, and answers the
questions the rest of the library is checked against: cohomology
dimensions, coboundary membership, class equality, and seeded random
cocycles.  Nothing here depends on the inverse-map code, so agreement with
it is meaningful evidence.

Matrix sizes grow as (p^r - 1)^(2n+1); anything whose dense form exceeds a
configurable entry budget is refused with an explicit error rather than
attempted.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass

import numpy as np

from .cochain import ICochain, NotACocycleError
from .group_ring import MOD_P, GroupContext

DEFAULT_MAX_ENTRIES = 1 << 24


class BudgetExceededError(RuntimeError):
    """A matrix would exceed the configured entry budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"matrix needs {required} entries, over the budget of {budget}; "
            "raise max_entries to proceed"
        )
        self.required = required
        self.budget = budget


def _check_budget(rows: int, cols: int, max_entries: int) -> None:
    if rows * cols > max_entries:
        raise BudgetExceededError(rows * cols, max_entries)


@functools.lru_cache(maxsize=None)
def cochain_basis(ctx: GroupContext, n: int) -> tuple:
    """All degree-n basis keys (tuples of nonidentity elements), in
    lexicographic order."""
    return tuple(itertools.product(tuple(ctx.nonidentity_elements()), repeat=n))


@functools.lru_cache(maxsize=None)
def _basis_index(ctx: GroupContext, n: int) -> dict:
    return {key: i for i, key in enumerate(cochain_basis(ctx, n))}


class FpMatrix:
    """Matrix over F_p stored as sparse columns; densified for elimination."""

    __slots__ = ("p", "rows", "cols", "columns")

    def __init__(self, p: int, rows: int, cols: int, columns,
                 max_entries: int = DEFAULT_MAX_ENTRIES):
        _check_budget(rows, cols, max_entries)
        if len(columns) != cols:
            raise ValueError("column count mismatch")
        self.p = p
        self.rows = rows
        self.cols = cols
        self.columns = [{i: v % p for i, v in col.items() if v % p} for col in columns]

    @classmethod
    def from_dense(cls, p: int, array, max_entries: int = DEFAULT_MAX_ENTRIES) -> "FpMatrix":
        array = np.asarray(array, dtype=np.int64) % p
        rows, cols = array.shape
        columns = []
        for j in range(cols):
            nz = np.nonzero(array[:, j])[0]
            columns.append({int(i): int(array[i, j]) for i in nz})
        return cls(p, rows, cols, columns, max_entries)

    def to_dense(self):
        dense = np.zeros((self.rows, self.cols), dtype=np.int64)
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                dense[i, j] = v
        return dense


def _rref(mat, p: int):
    """Reduced row echelon form mod p; returns (array, pivot columns)."""
    red = np.asarray(mat, dtype=np.int64).copy() % p
    rows, cols = red.shape
    pivots = []
    rank_so_far = 0
    for col in range(cols):
        if rank_so_far == rows:
            break
        nz = np.nonzero(red[rank_so_far:, col])[0]
        if nz.size == 0:
            continue
        pivot_row = rank_so_far + int(nz[0])
        if pivot_row != rank_so_far:
            red[[rank_so_far, pivot_row]] = red[[pivot_row, rank_so_far]]
        inv = pow(int(red[rank_so_far, col]), -1, p)
        red[rank_so_far] = red[rank_so_far] * inv % p
        col_vals = red[:, col].copy()
        col_vals[rank_so_far] = 0
        mask = col_vals != 0
        if mask.any():
            red[mask] = (red[mask] - np.outer(col_vals[mask], red[rank_so_far])) % p
        pivots.append(col)
        rank_so_far += 1
    return red, pivots


def rank(m: FpMatrix) -> int:
    return len(_rref(m.to_dense(), m.p)[1])


def kernel_basis(m: FpMatrix) -> list:
    """A basis of the null space, one numpy vector per free column."""
    red, pivots = _rref(m.to_dense(), m.p)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = np.zeros(m.cols, dtype=np.int64)
        v[free] = 1
        for row_idx, pc in enumerate(pivots):
            v[pc] = (-red[row_idx, free]) % m.p
        basis.append(v)
    return basis


def d_matrix(ctx: GroupContext, n: int,
             max_entries: int = DEFAULT_MAX_ENTRIES) -> FpMatrix:
    """Matrix of the degree-n coboundary on the difference-tensor bases.

    Column j is the coboundary of the j-th basis cochain of degree n,
    written in coordinates on the degree-(n+1) basis.  Rows and columns
    follow the lexicographic basis order of ``cochain_basis``.
    """
    dim_src = (ctx.order - 1) ** n
    dim_dst = (ctx.order - 1) ** (n + 1)
    _check_budget(dim_dst, dim_src, max_entries)
    src = cochain_basis(ctx, n)
    dst_index = _basis_index(ctx, n + 1)
    columns = []
    for key in src:
        delta = ICochain(ctx, n, MOD_P, {key: 1})
        image = delta.coboundary()
        columns.append({dst_index[t]: c for t, c in image.values.items()})
    return FpMatrix(ctx.p, dim_dst, dim_src, columns, max_entries)


def vectorize(f: ICochain):
    """Coordinates of a cochain on the lexicographic basis."""
    index = _basis_index(f.ctx, f.degree)
    v = np.zeros(len(index), dtype=np.int64)
    for key, c in f.values.items():
        v[index[key]] = c
    return v


def cochain_from_vector(ctx: GroupContext, n: int, vec) -> ICochain:
    basis = cochain_basis(ctx, n)
    return ICochain(ctx, n, MOD_P, {basis[i]: int(c) for i, c in enumerate(vec) if c % ctx.p})


@dataclass(frozen=True)
class CohomologyReport:
    """Dimension bookkeeping for one degree, from ranks alone."""

    p: int
    r: int
    n: int
    dim_cochains: int
    rank_dn: int
    dim_ker_dn: int
    rank_d_prev: int
    dim_h: int


def cohomology_report(ctx: GroupContext, n: int,
                      max_entries: int = DEFAULT_MAX_ENTRIES) -> CohomologyReport:
    """Compute dim H^n as nullity(d_n) minus rank(d_(n-1))."""
    dim_c = (ctx.order - 1) ** n
    rank_dn = _rank_cached(ctx, n, max_entries)
    dim_ker = dim_c - rank_dn
    rank_prev = _rank_cached(ctx, n - 1, max_entries) if n > 0 else 0
    return CohomologyReport(ctx.p, ctx.r, n, dim_c, rank_dn, dim_ker,
                            rank_prev, dim_ker - rank_prev)


@functools.lru_cache(maxsize=None)
def _rank_cached(ctx: GroupContext, n: int, max_entries: int) -> int:
    return rank(d_matrix(ctx, n, max_entries))


@functools.lru_cache(maxsize=None)
def _kernel_basis_cached(ctx: GroupContext, n: int, max_entries: int) -> tuple:
    return tuple(kernel_basis(d_matrix(ctx, n, max_entries)))


@functools.lru_cache(maxsize=None)
def _image_reducer(ctx: GroupContext, n: int, max_entries: int):
    """Echelonized column space of d_(n-1), for membership queries.

    Returns (rows, pivots): the reduced row echelon form of the transpose,
    whose row space is the space of degree-n coboundaries.
    """
    mat = d_matrix(ctx, n - 1, max_entries)
    red, pivots = _rref(mat.to_dense().T, ctx.p)
    return red[: len(pivots)], pivots


def is_coboundary(f: ICochain, max_entries: int = DEFAULT_MAX_ENTRIES) -> bool:
    """Decide whether a cocycle is a coboundary, by solving d x = f.

    Raises NotACocycleError on non-cocycle input; the question only makes
    sense inside the kernel.
    """
    if f.ring != MOD_P:
        raise ValueError("coboundary membership is a mod-p question here")
    if not f.is_cocycle():
        raise NotACocycleError("input cochain is not a cocycle")
    if f.degree == 0:
        return f.is_zero()  # nothing maps into degree 0
    red, pivots = _image_reducer(f.ctx, f.degree, max_entries)
    v = vectorize(f)
    for row_idx, pc in enumerate(pivots):
        if v[pc]:
            v = (v - v[pc] * red[row_idx]) % f.ctx.p
    return not v.any()


def classes_equal(f: ICochain, g: ICochain,
                  max_entries: int = DEFAULT_MAX_ENTRIES) -> bool:
    """Whether two cocycles represent the same cohomology class."""
    if f.ctx != g.ctx or f.degree != g.degree:
        raise ValueError("cocycles must share context and degree")
    return is_coboundary(f - g, max_entries)


def random_cocycle(ctx: GroupContext, n: int, seed: int,
                   max_entries: int = DEFAULT_MAX_ENTRIES) -> ICochain:
    """A uniformly random element of ker d_n, deterministic per seed."""
    basis = _kernel_basis_cached(ctx, n, max_entries)
    rng = random.Random(seed)
    v = np.zeros((ctx.order - 1) ** n, dtype=np.int64)
    for b in basis:
        v = (v + rng.randrange(ctx.p) * b) % ctx.p
    return cochain_from_vector(ctx, n, v)
