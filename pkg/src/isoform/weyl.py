"""Weyl group orders: closed-form table and brute-force generation."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Literal, Sequence

from .errors import OracleTooLargeError, UnsupportedTypeError
from .rootsys import CartanType, RootSystem, cartan_integer, format_type

BFS_MAX_RANK = 6
BFS_MAX_ORDER = 10**6

_EXCEPTIONAL = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


@dataclass(frozen=True)
class WeylOrder:
    value: int
    method: Literal["closed_form", "bfs"]

    def __int__(self) -> int:
        return self.value


def _component_order(t: CartanType) -> int:
    series, n = t
    if series == "A" and n >= 1:
        return factorial(n + 1)
    if series in ("B", "C") and n >= 1:
        return 2**n * factorial(n)
    if series == "D" and n >= 2:
        return 2 ** (n - 1) * factorial(n)
    if t in _EXCEPTIONAL:
        return _EXCEPTIONAL[t]
    raise UnsupportedTypeError(f"unsupported type: {format_type(t)}")


def weyl_order_closed_form(components: Sequence[CartanType]) -> WeylOrder:
    """Product of the standard per-component orders (empty product is 1)."""
    value = 1
    for t in components:
        value *= _component_order((str(t[0]).upper(), int(t[1])))
    return WeylOrder(value, "closed_form")


def weyl_order_bfs(rs: RootSystem) -> WeylOrder:
    """Count the group generated by the simple reflections by breadth-first closure.

    Elements are integer matrices in the simple-root basis.  Left
    multiplication by the simple reflection s_i only rewrites row i:
    new_row_i = row_i - sum_j A[i][j] row_j, with A[i][j] = <a_i^vee, a_j>.
    """
    n = rs.rank
    predicted = weyl_order_closed_form(rs.components).value
    if n > BFS_MAX_RANK or predicted > BFS_MAX_ORDER:
        raise OracleTooLargeError(
            f"oracle too large: rank {n}, predicted order {predicted}"
        )
    cartan = [[cartan_integer(a, b) for b in rs.simple_roots] for a in rs.simple_roots]
    support = [[(j, c) for j, c in enumerate(row) if c] for row in cartan]
    start = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                row = tuple(
                    m[i][k] - sum(c * m[j][k] for j, c in support[i]) for k in range(n)
                )
                g = m[:i] + (row,) + m[i + 1 :]
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return WeylOrder(len(seen), "bfs")
