"""Mod-p cohomology rings of elementary abelian p-groups at cochain level.

The library computes with explicit cochain representatives: normalized
cochains on tuples of group elements and, equivalently, linear functionals
on tensor powers of the augmentation ideal.  It realizes every monomial
basis class of the cohomology ring as an explicit cocycle, inverts that
realization by closed formulas evaluated on cochain values, and checks
everything against an independent rank/kernel oracle over F_p.
"""

from .algebra import (
    AlgebraElem,
    compositions,
    count_terms,
    count_terms_closed_form,
    graded_dimension,
    invert,
    invert_class,
    invert_normalized,
    invert_normalized_counted,
    invert_via_shuffles,
    monomial_mul,
    realize,
    shuffle_count,
    shuffles,
)
from .cochain import (
    ICochain,
    NormalizedCochain,
    NotACocycleError,
    Tensor,
    cup_many,
    perm_compose,
    perm_inverse,
    perm_sign,
    signed_permute,
)
from .generators import (
    binomial_mod_p,
    bockstein_cocycle,
    bockstein_pair_value,
    carry_cocycle,
    carry_cocycle_over_z,
    exponent_cocycle,
    generator_power_cocycle,
    probe_tensor,
    probe_tensor_split,
    probe_tuple,
    q_choices,
)
from .group_ring import (
    INTEGERS,
    MOD_P,
    GroupContext,
    RingElem,
    ShiftedPolynomial,
    as_difference_basis,
    augmentation,
    from_shifted_basis,
    in_augmentation_ideal,
    is_prime,
    shifted_generator,
    shifted_monomial,
    to_shifted_basis,
)
from .oracle import (
    DEFAULT_MAX_ENTRIES,
    BudgetExceededError,
    CohomologyReport,
    FpMatrix,
    classes_equal,
    cochain_basis,
    cohomology_report,
    d_matrix,
    is_coboundary,
    kernel_basis,
    random_cocycle,
    rank,
    vectorize,
)

__version__ = "0.1.0"
