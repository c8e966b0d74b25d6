"""Restricted root systems of a diagram involution and the symmetric subalgebra k'."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PositivityViolationError, RestrictionAxiomError
from .involution import DiagramInvolution, TorusSplit, involution_of_type, restrict_root, split_torus
from .linalg import SpanSolver, Vec, is_zero, rank, scale
from .rootsys import (
    CartanType,
    RootSystem,
    check_reflection_axioms,
    check_root_system,
    dynkin_components,
)
from .weyl import weyl_order_closed_form


@dataclass(frozen=True)
class RestrictedRootSystem:
    involution: DiagramInvolution
    carrier: TorusSplit
    restricted_roots: frozenset[Vec]
    restricted_simple: tuple[Vec, ...]
    nonreduced_components: frozenset[int]
    reduced: RootSystem
    kprime_type: tuple[CartanType, ...]

    @property
    def nonreduced(self) -> bool:
        return bool(self.nonreduced_components)

    def folded_name(self) -> str:
        """Type names with BC for nonreduced components, e.g. ``BC2``."""
        names = []
        for k, (series, n) in enumerate(self.kprime_type):
            if k in self.nonreduced_components:
                names.append(f"BC{n}")
            else:
                names.append(f"{series}{n}")
        return "+".join(names)


@dataclass(frozen=True)
class PositivityReport:
    simple: tuple[Vec, ...]
    coefficients: dict[Vec, tuple[int, ...]]

    def positive(self) -> dict[Vec, tuple[int, ...]]:
        return {b: c for b, c in self.coefficients.items() if all(x >= 0 for x in c)}


def _positivity(simple: tuple[Vec, ...], roots) -> dict[Vec, tuple[int, ...]]:
    solve = SpanSolver(simple)
    table = {}
    for beta in sorted(roots):
        coeffs = solve(beta)
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            raise PositivityViolationError(f"positivity violation: {beta} has coordinates {coeffs}")
        if not (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)):
            raise PositivityViolationError(f"positivity violation: mixed signs {coeffs}")
        table[beta] = tuple(int(c) for c in coeffs)
    return table


def build_restricted(inv: DiagramInvolution) -> RestrictedRootSystem:
    """Restrict every root to t_k and verify the root system axioms on the result."""
    split = split_torus(inv)
    base = inv.base
    restricted = frozenset(restrict_root(inv, a) for a in base.roots)

    in_tk = SpanSolver(split.t_k_basis)
    for beta in restricted:
        if is_zero(beta):
            raise RestrictionAxiomError("restriction axiom violation: zero restricted root")
        if scale(-1, beta) not in restricted:
            raise RestrictionAxiomError(f"restriction axiom violation: -{beta} missing")
        if in_tk(beta) is None:
            raise RestrictionAxiomError(f"restriction axiom violation: {beta} not in t_k")
    check_reflection_axioms(restricted, RestrictionAxiomError)

    simple: list[Vec] = []
    for a in base.simple_roots:
        h = restrict_root(inv, a)
        if h not in simple:
            simple.append(h)
    simple_t = tuple(simple)
    if len(simple_t) != split.dim_k or rank(simple_t) != split.dim_k:
        raise RestrictionAxiomError("restriction axiom violation: restricted simple roots are not a basis of t_k")
    _positivity(simple_t, restricted)

    half = Fraction(1, 2)
    reduced_roots = frozenset(b for b in restricted if scale(half, b) not in restricted)
    reduced = RootSystem.from_simple_roots(simple_t)
    if reduced.roots != reduced_roots:
        raise RestrictionAxiomError("restriction axiom violation: reduced subsystem mismatch")
    check_root_system(reduced, RestrictionAxiomError)

    comps = dynkin_components(simple_t)
    solve = SpanSolver(simple_t)
    nonreduced = set()
    for b in restricted:
        if scale(2, b) in restricted:
            support = {i for i, c in enumerate(solve(b)) if c}
            nonreduced.update(k for k, comp in enumerate(comps) if support & set(comp))

    return RestrictedRootSystem(
        involution=inv,
        carrier=split,
        restricted_roots=restricted,
        restricted_simple=simple_t,
        nonreduced_components=frozenset(nonreduced),
        reduced=reduced,
        kprime_type=reduced.components,
    )


@lru_cache(maxsize=64)
def restricted_of_type(g_type: tuple[CartanType, ...], involution: str) -> RestrictedRootSystem:
    return build_restricted(involution_of_type(g_type, involution))


def total_compartments(rrs: RestrictedRootSystem) -> int:
    """Number of chambers of the restricted arrangement, |W(k')|."""
    return weyl_order_closed_form(rrs.kprime_type).value


def check_simple_positivity(rrs: RestrictedRootSystem) -> PositivityReport:
    return PositivityReport(rrs.restricted_simple, _positivity(rrs.restricted_simple, rrs.restricted_roots))
