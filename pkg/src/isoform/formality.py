"""Equivariant formality certificate for the isotropy action of a symmetric pair.

The torus-fixed set of G/K has 2^(rank G - rank K) * r dimensional
cohomology, where r = |W(k')| / |W(k)| counts compartments in one k-Weyl
chamber.  The action is equivariantly formal iff that equals dim H*(G/K).
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import SymmetricPairEntry, evaluate_dim_formula
from .errors import CatalogInconsistencyError, HsiangViolationError
from .restricted import RestrictedRootSystem, restricted_of_type, total_compartments
from .rootsys import CartanType


@dataclass(frozen=True)
class FormalityReport:
    entry: SymmetricPairEntry
    r: int
    total_compartments: int
    fixed_component_dim: int
    dim_fixed_set: int
    dim_M: int
    formal: bool
    kprime_type: tuple[CartanType, ...]
    kprime_name: str
    nonreduced: bool


def restricted_system(entry: SymmetricPairEntry) -> RestrictedRootSystem:
    return restricted_of_type(entry.g_type, entry.involution_spec)


def _ratio(total: int, entry: SymmetricPairEntry) -> int:
    if total % entry.k_weyl_order:
        raise CatalogInconsistencyError(
            f"catalog inconsistency: |W(k)| = {entry.k_weyl_order} does not divide "
            f"{total} compartments for {entry.name()}"
        )
    return total // entry.k_weyl_order


def compartments_per_chamber(entry: SymmetricPairEntry) -> int:
    """r = |W(k')| / |W(k)|."""
    return _ratio(total_compartments(restricted_system(entry)), entry)


def fixed_set_dimension(entry: SymmetricPairEntry, r: int) -> int:
    if r < 1:
        raise ValueError("r must be positive")
    return 2 ** (entry.rank_g - entry.rank_k) * r


def target_dimension(entry: SymmetricPairEntry) -> int:
    return evaluate_dim_formula(
        entry.dim_M_formula, entry.param_dict, entry.g_type, entry.k_weyl_order, entry.rank_space
    )


def check_formality(entry: SymmetricPairEntry) -> FormalityReport:
    rrs = restricted_system(entry)
    total = total_compartments(rrs)
    r = _ratio(total, entry)
    dim_fixed = fixed_set_dimension(entry, r)
    dim_m = target_dimension(entry)
    if dim_fixed > dim_m:
        raise HsiangViolationError(
            f"Hsiang violation for {entry.name()}: dim H*(M^T) = {dim_fixed} > dim H*(M) = {dim_m}"
        )
    return FormalityReport(
        entry=entry,
        r=r,
        total_compartments=total,
        fixed_component_dim=entry.rank_g - entry.rank_k,
        dim_fixed_set=dim_fixed,
        dim_M=dim_m,
        formal=dim_fixed == dim_m,
        kprime_type=rrs.kprime_type,
        kprime_name=rrs.folded_name(),
        nonreduced=rrs.nonreduced,
    )
