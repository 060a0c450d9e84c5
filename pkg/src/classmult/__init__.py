"""Exact conjugacy-class-size multiplicities of symmetric, alternating and
small permutation groups."""

from .family import (
    BelowThresholdError,
    BlockChoice,
    FamilyMember,
    FamilyParams,
    build_family,
    choose_k,
    equal_class_family,
    family_params,
    thresholds,
    verify_family,
)
from .numtheory import (
    divisor_count_factorial,
    factorial_factorization,
    growth_ratio,
    totient,
    totient_bound_check,
)
from .partitions import (
    Partition,
    centralizer_order,
    class_size_sym,
    enumerate_partitions,
    make_partition,
    part_counts,
    prepend,
    sign,
)
from .symalt import (
    ClassRecord,
    MultiplicityReport,
    alt_classes,
    multiplicity_report,
    splits_in_alt,
)

__version__ = "0.1.0"
