"""Chamber-preserving involutions given by Dynkin diagram automorphisms."""

from __future__ import annotations

import enum
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    InputError,
    LemmaViolationError,
    NotDiagramAutomorphismError,
    RootVanishesError,
)
from .linalg import (
    Matrix,
    Vec,
    add,
    apply,
    dot,
    identity,
    inverse,
    is_zero,
    matmul,
    nullspace,
    scale,
    sub,
    transpose,
)
from .rootsys import CartanType, RootSystem, build_root_system, cartan_integer, format_type

INVOLUTION_NAMES = ("identity", "flip", "fork-swap", "swap")

# Bourbaki numbering: chain 1-3-4-5-6, node 2 attached to node 4.
_E6_FLIP = (5, 1, 4, 3, 2, 0)


class PairCase(enum.Enum):
    FIXED = "Fixed"
    ORTHOGONAL = "Orthogonal"
    MINUS1 = "Minus1"


@dataclass(frozen=True)
class DiagramInvolution:
    base: RootSystem
    perm: tuple[int, ...]
    ambient_map: Matrix

    def __call__(self, x: Vec) -> Vec:
        return apply(self.ambient_map, x)

    def orbits(self) -> list[tuple[int, ...]]:
        return sorted({tuple(sorted({i, p})) for i, p in enumerate(self.perm)})


@dataclass(frozen=True)
class TorusSplit:
    t_k_basis: tuple[Vec, ...]
    t_p_basis: tuple[Vec, ...]

    @property
    def dim_k(self) -> int:
        return len(self.t_k_basis)

    @property
    def dim_p(self) -> int:
        return len(self.t_p_basis)


def _complement(rs: RootSystem) -> list[Vec]:
    return nullspace(list(rs.simple_roots), rs.ambient_dim)


def make_involution(rs: RootSystem, perm: Sequence[int]) -> DiagramInvolution:
    """Validate ``perm`` (0-based image of each simple root) and extend it isometrically."""
    perm = tuple(int(p) for p in perm)
    n = rs.rank
    if sorted(perm) != list(range(n)):
        raise NotDiagramAutomorphismError(f"not a permutation of the {n} simple roots: {perm}")
    if any(perm[perm[i]] != i for i in range(n)):
        raise NotDiagramAutomorphismError(f"permutation is not involutive: {perm}")
    simple = rs.simple_roots
    for i in range(n):
        for j in range(n):
            if cartan_integer(simple[perm[i]], simple[perm[j]]) != cartan_integer(simple[i], simple[j]):
                raise NotDiagramAutomorphismError(
                    f"not a diagram automorphism: Cartan entry ({i + 1}, {j + 1}) not preserved"
                )
    comp = _complement(rs)
    source = list(simple) + comp
    image = [simple[p] for p in perm] + comp
    m = matmul(transpose(tuple(image)), inverse(transpose(tuple(source))))
    d = rs.ambient_dim
    if matmul(transpose(m), m) != identity(d):
        raise NotDiagramAutomorphismError("not a diagram automorphism: extension is not an isometry")
    if matmul(m, m) != identity(d):
        raise NotDiagramAutomorphismError("extension does not square to the identity")
    if any(apply(m, a) not in rs.roots for a in rs.roots):
        raise NotDiagramAutomorphismError("extension does not permute the roots")
    return DiagramInvolution(rs, perm, m)


def standard_perm(rs: RootSystem, name: str) -> tuple[int, ...]:
    """The named diagram involution on ``rs`` (see ``INVOLUTION_NAMES``).

    ``flip`` reverses every A_n component and applies the nontrivial E6
    symmetry; ``fork-swap`` exchanges the two fork nodes of every D_n
    component; ``swap`` exchanges the two identical factors of a doubled
    diagram.
    """
    if name not in INVOLUTION_NAMES:
        raise InputError(f"unknown involution {name!r}; expected one of {', '.join(INVOLUTION_NAMES)}")
    perm = list(range(rs.rank))
    if name == "identity":
        return tuple(perm)
    if name == "swap":
        comps = rs.components
        if len(comps) != 2 or comps[0] != comps[1]:
            raise NotDiagramAutomorphismError(
                "swap needs exactly two identical components, got "
                + "+".join(format_type(c) for c in comps)
            )
        r = comps[0][1]
        return tuple(list(range(r, 2 * r)) + list(range(r)))
    offset = 0
    for series, n in rs.components:
        block = range(offset, offset + n)
        if name == "flip" and series == "A":
            for k, i in enumerate(block):
                perm[i] = offset + n - 1 - k
        elif name == "flip" and (series, n) == ("E", 6):
            for k, i in enumerate(block):
                perm[i] = offset + _E6_FLIP[k]
        elif name == "fork-swap" and series == "D":
            perm[offset + n - 2], perm[offset + n - 1] = offset + n - 1, offset + n - 2
        else:
            raise NotDiagramAutomorphismError(f"no {name} involution on {format_type((series, n))}")
        offset += n
    return tuple(perm)


def standard_involution(rs: RootSystem, name: str) -> DiagramInvolution:
    return make_involution(rs, standard_perm(rs, name))


@lru_cache(maxsize=64)
def involution_of_type(g_type: tuple[CartanType, ...], name: str) -> DiagramInvolution:
    """Cached ``standard_involution`` on the standard realization of ``g_type``."""
    return standard_involution(build_root_system(g_type), name)


def split_torus(inv: DiagramInvolution) -> TorusSplit:
    """Exact bases of the +1 and -1 eigenspaces of the involution on the root span."""
    rs = inv.base
    d = rs.ambient_dim
    comp = _complement(rs)
    eye = identity(d)
    minus = [sub(row, e) for row, e in zip(inv.ambient_map, eye)]
    plus = [add(row, e) for row, e in zip(inv.ambient_map, eye)]
    t_k = tuple(nullspace(minus + comp, d))
    t_p = tuple(nullspace(plus + comp, d))
    if len(t_k) + len(t_p) != rs.rank:
        raise LemmaViolationError("eigenspaces do not fill the root span")
    if any(dot(u, v) != 0 for u in t_k for v in t_p):
        raise LemmaViolationError("eigenspaces are not orthogonal")
    if len(t_k) != len(inv.orbits()):
        raise LemmaViolationError("dim t_k differs from the number of orbits on simple roots")
    return TorusSplit(t_k, t_p)


def _check_root(inv: DiagramInvolution, alpha: Vec) -> Vec:
    alpha = tuple(Fraction(a) for a in alpha)
    if alpha not in inv.base.roots:
        raise InputError(f"{alpha} is not a root")
    return alpha


def restrict_root(inv: DiagramInvolution, alpha: Vec) -> Vec:
    """Vector representing the restriction of ``alpha`` to t_k: (alpha + sigma(alpha))/2."""
    alpha = _check_root(inv, alpha)
    h = scale(Fraction(1, 2), add(alpha, inv(alpha)))
    if is_zero(h):
        raise RootVanishesError(f"root {alpha} vanishes on t_k")
    return h


def pair_case(inv: DiagramInvolution, alpha: Vec) -> PairCase:
    """Which case of the root-pair dichotomy ``alpha`` falls in, with its length identity checked."""
    alpha = _check_root(inv, alpha)
    partner = inv(alpha)
    if partner == alpha:
        return PairCase.FIXED
    hk = scale(Fraction(1, 2), add(alpha, partner))
    hp = scale(Fraction(1, 2), sub(alpha, partner))
    nk, np_ = dot(hk, hk), dot(hp, hp)
    if dot(alpha, partner) == 0:
        if np_ != nk:
            raise LemmaViolationError(f"orthogonal pair with |H^p|^2 = {np_} != |H^k|^2 = {nk}")
        return PairCase.ORTHOGONAL
    if cartan_integer(alpha, partner) == -1:
        if np_ != 3 * nk:
            raise LemmaViolationError(f"|H^p|^2 = {np_} != 3|H^k|^2 = {3 * nk}")
        if add(alpha, partner) not in inv.base.roots:
            raise LemmaViolationError("alpha + sigma(alpha) is not a root")
        return PairCase.MINUS1
    raise LemmaViolationError(f"pair outside the lemma's cases: <a, s(a)> = {dot(alpha, partner)}")
