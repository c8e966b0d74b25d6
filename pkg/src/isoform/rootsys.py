"""Reduced root systems in exact rational coordinates.

Realizations follow Bourbaki: A_n lives in dimension n+1, B/C/D_n in
dimension n, G2 in dimension 3 and the E series and F4 in dimension 8 resp. 4.
The bilinear form is the standard dot product of the realization.
"""

from __future__ import annotations

import re
from math import lcm
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    NotCartanIntegralError,
    NotDynkinDiagramError,
    RestrictionAxiomError,
    UnsupportedTypeError,
    ZeroRootError,
)
from .linalg import SpanSolver, Vec, as_vec, dot, is_zero, rank, scale, sub

CartanType = tuple[str, int]

SERIES = "ABCDEFG"


def parse_type(text: str) -> CartanType:
    """``"B3"`` -> ``("B", 3)``."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
    if not m:
        raise UnsupportedTypeError(f"unsupported type: {text!r}")
    return m.group(1).upper(), int(m.group(2))


def format_type(t: CartanType) -> str:
    return f"{t[0]}{t[1]}"


def format_types(types: Iterable[CartanType]) -> str:
    names = [format_type(t) for t in types]
    return "+".join(names) if names else "0"


def is_admissible(t: CartanType) -> bool:
    series, n = t
    return (
        (series == "A" and n >= 1)
        or (series in "BC" and n >= 2)
        or (series == "D" and n >= 2)
        or (series == "E" and n in (6, 7, 8))
        or (series == "F" and n == 4)
        or (series == "G" and n == 2)
    ) and len(series) == 1


def canonical_type(t: CartanType) -> list[CartanType]:
    """Canonical names for the low-rank coincidences."""
    series, n = t
    if series in "BC" and n == 1:
        return [("A", 1)]
    if series == "C" and n == 2:
        return [("B", 2)]
    if series == "D" and n == 3:
        return [("A", 3)]
    if series == "D" and n == 2:
        return [("A", 1), ("A", 1)]
    return [(series, n)]


def canonicalize(types: Iterable[CartanType]) -> list[CartanType]:
    out: list[CartanType] = []
    for t in types:
        out.extend(canonical_type(t))
    return out


def _e(i: int, dim: int, c=1) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(c)
    return v


def _standard_simple_roots(t: CartanType) -> tuple[int, list[Vec]]:
    series, n = t
    if not is_admissible(t):
        raise UnsupportedTypeError(f"unsupported type: {format_type(t)}")
    half = Fraction(1, 2)
    if series == "A":
        dim = n + 1
        return dim, [sub(as_vec(_e(i, dim)), as_vec(_e(i + 1, dim))) for i in range(n)]
    if series in "BCD":
        dim = n
        chain = [sub(as_vec(_e(i, dim)), as_vec(_e(i + 1, dim))) for i in range(n - 1)]
        if series == "B":
            last = as_vec(_e(n - 1, dim))
        elif series == "C":
            last = as_vec(_e(n - 1, dim, 2))
        else:
            last = tuple(Fraction(1) if k in (n - 2, n - 1) else Fraction(0) for k in range(dim))
        return dim, chain + [last]
    if series == "G":
        return 3, [as_vec([1, -1, 0]), as_vec([-2, 1, 1])]
    if series == "F":
        return 4, [
            as_vec([0, 1, -1, 0]),
            as_vec([0, 0, 1, -1]),
            as_vec([0, 0, 0, 1]),
            as_vec([half, -half, -half, -half]),
        ]
    # E_n: the first n Bourbaki simple roots of E8
    e8 = [as_vec([half, -half, -half, -half, -half, -half, -half, half]), as_vec([1, 1, 0, 0, 0, 0, 0, 0])]
    for i in range(6):
        v = [0] * 8
        v[i], v[i + 1] = -1, 1
        e8.append(as_vec(v))
    return 8, e8[:n]


def cartan_integer(alpha: Vec, beta: Vec) -> int:
    """2<beta, alpha>/<alpha, alpha>, required to be an integer."""
    norm = dot(alpha, alpha)
    if norm == 0:
        raise ZeroRootError("zero root")
    value = 2 * dot(beta, alpha) / norm
    if value.denominator != 1:
        raise NotCartanIntegralError(f"not Cartan-integral: 2<b,a>/<a,a> = {value}")
    return int(value)


def reflect(x: Vec, alpha: Vec) -> Vec:
    """Reflect ``x`` in the hyperplane orthogonal to ``alpha``."""
    norm = dot(alpha, alpha)
    if norm == 0:
        raise ZeroRootError("zero root")
    c = 2 * dot(x, alpha) / norm
    if not c:
        return x
    return tuple(a - c * b if b else a for a, b in zip(x, alpha))


def reflection_closure(generators: Sequence[Vec], seeds: Iterable[Vec]) -> frozenset[Vec]:
    """Orbit of ``seeds`` under the group generated by reflections in ``generators``."""
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for a in generators:
            y = reflect(x, a)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


@dataclass(frozen=True)
class RootSystem:
    ambient_dim: int
    simple_roots: tuple[Vec, ...]
    roots: frozenset[Vec]
    components: tuple[CartanType, ...]

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @classmethod
    def from_simple_roots(cls, simple_roots: Sequence[Vec], components=None) -> "RootSystem":
        simple = tuple(as_vec(a) for a in simple_roots)
        if not simple:
            raise UnsupportedTypeError("empty root system")
        roots = reflection_closure(simple, simple)
        if components is None:
            components = classify_simple_roots(simple)
        return cls(len(simple[0]), simple, roots, tuple(components))

    def sorted_roots(self) -> list[Vec]:
        return sorted(self.roots)

    def cartan_matrix(self) -> list[list[int]]:
        return [[cartan_integer(a, b) for b in self.simple_roots] for a in self.simple_roots]

    @cached_property
    def _solver(self) -> SpanSolver:
        return SpanSolver(self.simple_roots)

    def simple_coordinates(self, x: Vec) -> Vec | None:
        return self._solver(x)


def build_root_system(components: Sequence[CartanType]) -> RootSystem:
    """Orthogonal direct sum of the standard realizations of ``components``."""
    if not components:
        raise UnsupportedTypeError("unsupported type: empty component list")
    return _build_root_system(tuple((str(s).upper(), int(n)) for s, n in components))


@lru_cache(maxsize=64)
def _build_root_system(components: tuple[CartanType, ...]) -> RootSystem:
    blocks = [_standard_simple_roots(t) for t in components]
    total = sum(dim for dim, _ in blocks)
    simple: list[Vec] = []
    offset = 0
    for dim, roots in blocks:
        pad_l = (Fraction(0),) * offset
        pad_r = (Fraction(0),) * (total - offset - dim)
        simple.extend(pad_l + r + pad_r for r in roots)
        offset += dim
    return RootSystem.from_simple_roots(simple, components)


def check_reflection_axioms(roots: Iterable[Vec], error=RestrictionAxiomError) -> None:
    """Cartan integrality and reflection closure for every ordered pair of roots.

    Vectors are rescaled to a common integer lattice so the quadratic loop
    runs on ints; the check stays exact.
    """
    roots = list(roots)
    scale_by = lcm(*(x.denominator for r in roots for x in r)) if roots else 1
    ints = [tuple(int(x * scale_by) for x in r) for r in roots]
    present = set(ints)
    for a in ints:
        norm = sum(x * x for x in a)
        for b in ints:
            c, rem = divmod(2 * sum(x * y for x, y in zip(a, b)), norm)
            if rem:
                raise error(f"not Cartan-integral: 2<b,a>/<a,a> = {Fraction(c * norm + rem, norm)}")
            if c and tuple(y - c * x for x, y in zip(a, b)) not in present:
                raise error("root set not closed under reflections")


def check_root_system(rs: RootSystem, error=RestrictionAxiomError) -> None:
    """Verify the reduced root system axioms explicitly; raise ``error`` on failure."""
    roots = rs.roots
    for a in roots:
        if is_zero(a):
            raise error("zero vector in root set")
        if scale(-1, a) not in roots:
            raise error(f"root set not symmetric at {a}")
        if scale(2, a) in roots:
            raise error(f"root system not reduced at {a}")
    check_reflection_axioms(roots, error)
    for a in roots:
        coeffs = rs.simple_coordinates(a)
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            raise error(f"root {a} is not an integer combination of simple roots")
        if not (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)):
            raise error(f"root {a} has mixed-sign simple coordinates")


def dynkin_bonds(simple_roots: Sequence[Vec]) -> list[tuple[int, int, int]]:
    """Edges ``(i, j, multiplicity)`` with i < j of the Dynkin diagram."""
    bonds = []
    n = len(simple_roots)
    for i in range(n):
        for j in range(i + 1, n):
            aij = cartan_integer(simple_roots[i], simple_roots[j])
            aji = cartan_integer(simple_roots[j], simple_roots[i])
            if aij == 0 and aji == 0:
                continue
            if aij == 0 or aji == 0 or aij > 0 or aji > 0 or min(-aij, -aji) != 1 or aij * aji > 3:
                raise NotDynkinDiagramError(f"not a Dynkin diagram: bad Cartan pair ({aij}, {aji})")
            bonds.append((i, j, aij * aji))
    return bonds


def _classify_component(nodes: list[int], bonds, norms) -> CartanType:
    n = len(nodes)
    if n == 1:
        return ("A", 1)
    edges = [b for b in bonds if b[0] in nodes]
    if len(edges) != n - 1:
        raise NotDynkinDiagramError("not a Dynkin diagram: cycle")
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    mult: dict[frozenset, int] = {}
    for i, j, m in edges:
        adj[i].append(j)
        adj[j].append(i)
        mult[frozenset((i, j))] = m
    degrees = {v: len(adj[v]) for v in nodes}
    multiple = [e for e in edges if e[2] > 1]

    if any(e[2] == 3 for e in edges):
        if n == 2:
            return ("G", 2)
        raise NotDynkinDiagramError("not a Dynkin diagram: triple bond in rank > 2")
    if len(multiple) > 1 or max(degrees.values()) > 3:
        raise NotDynkinDiagramError("not a Dynkin diagram")

    branch = [v for v in nodes if degrees[v] == 3]
    if not branch:
        start = next(v for v in nodes if degrees[v] == 1)
        path = [start]
        while len(path) < n:
            path.append(next(w for w in adj[path[-1]] if w not in path))
        if not multiple:
            return ("A", n)
        if n == 2:
            return ("B", 2)
        k = next(i for i in range(n - 1) if mult[frozenset((path[i], path[i + 1]))] == 2)
        if k in (0, n - 2):
            end, other = (path[0], path[1]) if k == 0 else (path[-1], path[-2])
            return ("B", n) if norms[end] < norms[other] else ("C", n)
        if n == 4 and k == 1:
            return ("F", 4)
        raise NotDynkinDiagramError("not a Dynkin diagram: misplaced double bond")

    if len(branch) > 1 or multiple:
        raise NotDynkinDiagramError("not a Dynkin diagram")
    centre = branch[0]
    arms = []
    for w in adj[centre]:
        length, prev, cur = 1, centre, w
        while degrees[cur] == 2:
            prev, cur = cur, next(x for x in adj[cur] if x != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", n)
    raise NotDynkinDiagramError(f"not a Dynkin diagram: branch arms {arms}")


def _components(n: int, bonds) -> list[list[int]]:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j, _ in bonds:
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=min)


def dynkin_components(simple_roots: Sequence[Vec]) -> list[list[int]]:
    """Connected components of the Dynkin diagram as lists of simple-root indices."""
    return _components(len(simple_roots), dynkin_bonds(simple_roots))


def classify_simple_roots(simple_roots: Sequence[Vec]) -> list[CartanType]:
    """Name the Dynkin type of a set of simple roots, one entry per component.

    Components are listed in order of their lowest-indexed simple root.
    """
    simple = [as_vec(a) for a in simple_roots]
    if not simple:
        return []
    if rank(simple) != len(simple):
        raise NotDynkinDiagramError("not a Dynkin diagram: simple roots are linearly dependent")
    bonds = dynkin_bonds(simple)
    norms = [dot(a, a) for a in simple]
    comps = _components(len(simple), bonds)
    return [_classify_component(c, bonds, norms) for c in comps]


def closed_form_root_count(t: CartanType) -> int:
    series, n = t
    if series == "A":
        return n * (n + 1)
    if series in "BC":
        return 2 * n * n
    if series == "D":
        return 2 * n * (n - 1)
    return {("E", 6): 72, ("E", 7): 126, ("E", 8): 240, ("F", 4): 48, ("G", 2): 12}[t]
