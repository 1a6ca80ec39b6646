"""Exact Frobenius matrices, Frobenius graphs and subgroup depth for small
permutation groups."""

from .catalog import affine_diam3_criterion, construct, parse_group_spec
from .chartab import character_table, table_stats
from .cyclo import Cyclotomic
from .depth import minimal_depth
from .frobenius import (
    frobenius_matrix,
    induced_gram,
    is_diameter_three,
    is_rich,
    mackey_inner_product,
    permutation_character,
    satisfies_bii,
)
from .graph import frobenius_graph, irr_action_orbits
from .group import (
    PermGroup,
    Subgroup,
    conjugacy_classes,
    core,
    coset_action,
    derived_subgroup,
    group_from_generators,
    normalizer,
    subgroups_conjugate,
)
from .perm import Permutation
from .subgroups import (
    classify_subgroups,
    enumerate_subgroup_classes,
    has_diameter_three_subgroup,
    is_minimal_rich_group,
)

__all__ = [name for name in dir() if not name.startswith("_")]
