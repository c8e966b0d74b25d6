"""Exact linear algebra over the rationals for the small matrices used here.

Matrices are tuples of row tuples of Fractions; vectors are tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = tuple[Fraction, ...]
Matrix = tuple[Vec, ...]


def as_vec(xs: Sequence) -> Vec:
    return tuple(Fraction(x) for x in xs)


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(as_vec(r) for r in rows)


def dot(x: Vec, y: Vec) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    # root vectors are mostly zero; skipping zeros avoids costly Fraction products
    return sum((a * b for a, b in zip(x, y) if a and b), Fraction(0))


def add(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in x)


def is_zero(x: Vec) -> bool:
    return all(a == 0 for a in x)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def apply(m: Matrix, x: Vec) -> Vec:
    return tuple(dot(row, x) for row in m)


def rref(rows: Sequence[Vec]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Vec]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Vec], ncols: int | None = None) -> list[Vec]:
    """Basis of {x : rows . x = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(tuple(x))
    return basis


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [tuple(row) + identity(n)[i] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red[:n])


class SpanSolver:
    """Coordinates of vectors in a fixed linearly independent basis."""

    def __init__(self, basis: Sequence[Vec]):
        self.basis = tuple(basis)
        gram = tuple(tuple(dot(u, v) for v in self.basis) for u in self.basis)
        self._gram_inv = inverse(gram)

    def __call__(self, x: Vec) -> Vec | None:
        """Coordinates of ``x``, or None if ``x`` is outside the span."""
        coeffs = apply(self._gram_inv, tuple(dot(u, x) for u in self.basis))
        recon = [Fraction(0)] * len(x)
        for c, u in zip(coeffs, self.basis):
            if c:
                for k, a in enumerate(u):
                    recon[k] += c * a
        return coeffs if tuple(recon) == tuple(x) else None


def solve_in_span(basis: Sequence[Vec], x: Vec) -> Vec | None:
    return SpanSolver(basis)(x)
