"""Finite-group computation kit.

Dense Cayley-table groups, full subgroup lattices, normality-flavoured
subgroup predicates (NC, NE, H-subgroup, pronormal, normally embedded),
group classes built on them (PNC, PE, ON, NSN, T-groups, Dedekind), and an
executable registry of structural claims verified over a fixed catalog of
finite groups.
"""

from .catalog import GroupSpec, build_group, parse_spec, standard_catalog
from .config import Budget
from .groups import Group, order_fingerprint
from .lattice import Subgroup, all_subgroups
from .predicates import classify_group

__all__ = [
    "Budget",
    "Group",
    "GroupSpec",
    "Subgroup",
    "all_subgroups",
    "build_group",
    "classify_group",
    "order_fingerprint",
    "parse_spec",
    "standard_catalog",
]
