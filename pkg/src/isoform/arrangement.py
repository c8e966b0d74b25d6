"""Region count of a central hyperplane arrangement by Zaslavsky's theorem.

Independent of any group theory: builds the intersection lattice from the
hyperplane normals and sums |mu(0, X)| over all flats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .linalg import Vec, rref


def _normalize(v: Vec) -> Vec:
    lead = next(a for a in v if a != 0)
    return tuple(Fraction(a) / lead for a in v)


def count_regions(normals: Iterable[Vec]) -> int:
    """Number of connected components of the complement of the hyperplanes ker<n, .>."""
    hyper = sorted({_normalize(n) for n in normals if any(a != 0 for a in n)})
    if not hyper:
        return 1
    m = len(hyper)

    def closure(idx: frozenset[int]) -> frozenset[int]:
        rows, pivots = rref([hyper[i] for i in idx])
        rows = rows[: len(pivots)]
        members = set(idx)
        for i in range(m):
            if i in members:
                continue
            v = list(hyper[i])
            for row, c in zip(rows, pivots):
                if v[c]:
                    f = v[c]
                    v = [a - f * b for a, b in zip(v, row)]
            if not any(v):
                members.add(i)
        return frozenset(members)

    bottom: frozenset[int] = frozenset()
    levels = [[bottom]]
    while True:
        nxt = set()
        for flat in levels[-1]:
            covered = set(flat)
            for i in range(m):
                if i not in covered:
                    cover = closure(flat | {i})
                    covered |= cover
                    nxt.add(cover)
        if not nxt:
            break
        levels.append(sorted(nxt, key=sorted))

    mobius = {bottom: 1}
    total = 1
    for level in levels[1:]:
        for flat in level:
            mu = -sum(v for y, v in mobius.items() if y < flat)
            mobius[flat] = mu
            total += abs(mu)
    return total
