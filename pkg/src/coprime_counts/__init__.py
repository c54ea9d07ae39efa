"""Exact counts of relatively prime subsets of finite integer sets."""

from ._kernels import BACKEND
from .arith import (
    MobiusTable,
    binomial,
    build_mobius_table,
    divisors,
    euler_phi,
    gcd_set,
    mertens,
)
from .classify import (
    AlphaStatus,
    alpha_status,
    alpha_status_to_n,
    count_coprime_free_subsets,
    count_pairwise_coprime_subsets,
    is_coprime_free,
    is_pairwise_coprime,
)
from .counting import (
    coprime_element_count,
    f_alpha,
    f_incremental,
    f_interval,
    f_set,
    phi_alpha,
    phi_interval,
    phi_set,
)
from .errors import DomainError, EnumerationLimitError, LimitError, SieveLimitError
from .identities import (
    IdentityReport,
    mertens_bound,
    mertens_pair,
    mertens_triple,
    scaled_mertens,
)
from .intset import (
    IntSet,
    count_multiples,
    count_multiples_floor,
    make_set,
    multiples_of,
    scale_set,
)
from .oracle import SubsetPredicate, brute_count

__version__ = "0.1.0"
