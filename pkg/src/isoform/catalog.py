"""Catalog of symmetric pairs at the Lie-algebra level.

Rows live in ``data/catalog.json`` (schema in ``data/catalog.schema.json``).
Ranks may be integer expressions in the row's parameters, e.g. ``"2*p+1"``.
``k_type`` additionally accepts the classical algebras ``so``, ``su``,
``sp``, ``u`` (argument is the matrix size) and ``T`` for a central torus.
"""

from __future__ import annotations

import ast
import json
import operator
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import comb
from pathlib import Path
from typing import Any, Mapping, Sequence

import jsonschema

from .errors import (
    CatalogFormatError,
    CatalogInconsistencyError,
    UnknownPairError,
    UnsupportedTypeError,
)
from .involution import involution_of_type, split_torus
from .rootsys import CartanType, canonical_type, format_types, is_admissible
from .weyl import weyl_order_closed_form

ENV_VAR = "ISOFORM_CATALOG"

REGIMES = ("equal_rank", "split_rank", "outer_nonsplit", "group_type_II")

SUITE: tuple[tuple[str, dict[str, int]], ...] = (
    *(("AI", {"n": n}) for n in range(3, 8)),
    ("BDI-odd", {"p": 1, "q": 1}),
    ("BDI-odd", {"p": 1, "q": 2}),
    ("BDI-odd", {"p": 2, "q": 2}),
    ("EI", {}),
    ("AII", {"n": 2}),
    ("AII", {"n": 3}),
    ("EIV", {}),
    ("TypeII-A1", {}),
    ("TypeII-A2", {}),
    ("TypeII-B2", {}),
    ("TypeII-G2", {}),
    ("CI", {"n": 2}),
    ("CI", {"n": 3}),
    ("DIII", {"n": 3}),
    ("G", {}),
)


@dataclass(frozen=True)
class SymmetricPairEntry:
    label: str
    params: tuple[tuple[str, int], ...]
    g_type: tuple[CartanType, ...]
    involution_spec: str
    k_type: tuple[CartanType, ...]
    k_torus_rank: int
    k_name: str
    k_weyl_order: int
    rank_g: int
    rank_k: int
    rank_space: int
    regime: str
    dim_M_formula: str
    dim_M: int
    provenance: str

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    def params_text(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params)

    def name(self) -> str:
        p = self.params_text()
        return f"{self.label}({p})" if p else self.label


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
}
_FUNCS = {"min": min, "max": max}


def evaluate_rank(expr: int | str, params: Mapping[str, int]) -> int:
    """Evaluate an integer rank expression over ``params``."""
    if isinstance(expr, int):
        return expr

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in params:
                raise CatalogFormatError(f"unknown parameter {node.id!r} in {expr!r}")
            return params[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS:
            return _FUNCS[node.func.id](*(ev(a) for a in node.args))
        raise CatalogFormatError(f"unsupported rank expression {expr!r}")

    try:
        tree = ast.parse(str(expr), mode="eval")
    except SyntaxError as exc:
        raise CatalogFormatError(f"bad rank expression {expr!r}") from exc
    return ev(tree)


def expand_k_factor(kind: str, size: int) -> tuple[list[CartanType], int]:
    """Root-system components and central torus rank of one factor of k."""
    if kind == "T":
        return [], size
    if kind == "su":
        return ([("A", size - 1)] if size >= 2 else []), 0
    if kind == "u":
        return ([("A", size - 1)] if size >= 2 else []), 1
    if kind == "sp":
        return (canonical_type(("C", size)) if size >= 1 else []), 0
    if kind == "so":
        if size <= 1:
            return [], 0
        if size == 2:
            return [], 1
        if size % 2:
            return canonical_type(("B", size // 2)), 0
        return canonical_type(("D", size // 2)), 0
    return canonical_type((kind, size)), 0


def _factor_name(kind: str, size: int) -> str:
    if kind == "T":
        return f"T{size}"
    if kind in ("so", "su", "sp", "u"):
        return f"{kind}({size})"
    return f"{kind}{size}"


def evaluate_dim_formula(
    tag: str,
    params: Mapping[str, int],
    g_type: Sequence[CartanType],
    k_weyl_order: int,
    rank_space: int,
) -> int:
    """dim H*(M) from a formula tag."""
    if tag == "equal_rank_quotient":
        wg = weyl_order_closed_form(g_type).value
        if wg % k_weyl_order:
            raise CatalogInconsistencyError(
                f"catalog inconsistency: |W(k)| = {k_weyl_order} does not divide |W(g)| = {wg}"
            )
        return wg // k_weyl_order
    if tag == "split_rank_power":
        return 2**rank_space
    if tag == "two_pow_m":
        return 2 ** (params["n"] // 2)
    if tag == "two_binom":
        return 2 * comb(params["p"] + params["q"], params["p"])
    if tag.startswith("const:"):
        try:
            value = int(tag[len("const:") :])
        except ValueError:
            value = 0
        if value > 0:
            return value
    raise CatalogFormatError(f"unknown formula tag {tag!r}")


@lru_cache(maxsize=None)
def _schema() -> dict:
    text = resources.files("isoform.data").joinpath("catalog.schema.json").read_text("utf-8")
    return json.loads(text)


class Catalog:
    """A validated list of catalog rows indexed by label."""

    def __init__(self, rows: list[dict[str, Any]], source: str = "<memory>"):
        try:
            jsonschema.validate(rows, _schema())
        except jsonschema.ValidationError as exc:
            raise CatalogFormatError(f"{source}: {exc.message}") from exc
        self.source = source
        self.rows: dict[str, dict[str, Any]] = {}
        for row in rows:
            if row["label"] in self.rows:
                raise CatalogFormatError(f"{source}: duplicate label {row['label']!r}")
            self.rows[row["label"]] = row

    @classmethod
    def from_path(cls, path: str | os.PathLike) -> "Catalog":
        p = Path(path)
        try:
            rows = json.loads(p.read_text("utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise CatalogFormatError(f"cannot read catalog {p}: {exc}") from exc
        return cls(rows, str(p))

    @property
    def labels(self) -> list[str]:
        return list(self.rows)

    def instantiate(self, label: str, params: Mapping[str, int] | None = None) -> SymmetricPairEntry:
        if label not in self.rows:
            raise UnknownPairError(f"unknown pair label {label!r}")
        row = self.rows[label]
        params = dict(params or {})
        ranges = row["params"]
        extra = set(params) - set(ranges)
        missing = set(ranges) - set(params)
        if extra or missing:
            raise UnknownPairError(
                f"{label} takes parameters {sorted(ranges) or 'none'}; got {sorted(params) or 'none'}"
            )
        for key, (lo, hi) in ranges.items():
            v = params[key]
            if not isinstance(v, int) or v < lo or (hi is not None and v > hi):
                bound = f"[{lo}, {hi if hi is not None else 'inf'}]"
                raise UnknownPairError(f"{label}: parameter {key}={v} outside {bound}")
        return _build_entry(row, params)


def _build_entry(row: Mapping[str, Any], params: dict[str, int]) -> SymmetricPairEntry:
    label = row["label"]
    g_type = tuple((s, evaluate_rank(r, params)) for s, r in row["g_type"])
    for t in g_type:
        if not is_admissible(t):
            raise UnknownPairError(f"{label}: unsupported g type {format_types([t])}")

    k_comps: list[CartanType] = []
    torus = 0
    names = []
    for kind, expr in row["k_type"]:
        size = evaluate_rank(expr, params)
        try:
            comps, t = expand_k_factor(kind, size)
        except UnsupportedTypeError as exc:
            raise CatalogFormatError(f"{label}: {exc}") from exc
        k_comps.extend(comps)
        torus += t
        names.append(_factor_name(kind, size))
    k_weyl = weyl_order_closed_form(k_comps).value

    rank_g = sum(n for _, n in g_type)
    rank_k = sum(n for _, n in k_comps) + torus
    rank_space = evaluate_rank(row["rank_space"], params)
    regime = row["regime"]
    involution = row["involution"]

    split = split_torus(involution_of_type(g_type, involution))
    if split.dim_k != rank_k:
        raise CatalogInconsistencyError(
            f"catalog inconsistency: {label} has rank k = {rank_k} but dim t_k = {split.dim_k}"
        )
    if rank_g - rank_k > rank_space:
        raise CatalogInconsistencyError(f"catalog inconsistency: {label} violates rank G - rank K <= rank G/K")
    split_equal = rank_g == rank_k + rank_space
    if split_equal != (regime in ("split_rank", "group_type_II")):
        raise CatalogInconsistencyError(f"catalog inconsistency: {label} regime {regime} vs split-rank equality")
    if (regime == "equal_rank") != (involution == "identity"):
        raise CatalogInconsistencyError(f"catalog inconsistency: {label} regime {regime} vs involution {involution}")
    if (regime == "equal_rank") != (rank_g == rank_k):
        raise CatalogInconsistencyError(f"catalog inconsistency: {label} equal-rank flag vs ranks")

    dim_m = evaluate_dim_formula(row["dim_M_formula"], params, g_type, k_weyl, rank_space)
    return SymmetricPairEntry(
        label=label,
        params=tuple(sorted(params.items())),
        g_type=g_type,
        involution_spec=involution,
        k_type=tuple(k_comps),
        k_torus_rank=torus,
        k_name="+".join(names),
        k_weyl_order=k_weyl,
        rank_g=rank_g,
        rank_k=rank_k,
        rank_space=rank_space,
        regime=regime,
        dim_M_formula=row["dim_M_formula"],
        dim_M=dim_m,
        provenance=row["provenance"],
    )


@lru_cache(maxsize=1)
def _embedded() -> Catalog:
    text = resources.files("isoform.data").joinpath("catalog.json").read_text("utf-8")
    return Catalog(json.loads(text), "<embedded>")


def load_catalog(path: str | os.PathLike | None = None) -> Catalog:
    """Catalog from ``path``, else ``$ISOFORM_CATALOG``, else the embedded file."""
    path = path or os.environ.get(ENV_VAR)
    if path:
        return Catalog.from_path(path)
    return _embedded()


def instantiate(label: str, params: Mapping[str, int] | None = None, catalog: Catalog | None = None) -> SymmetricPairEntry:
    return (catalog or load_catalog()).instantiate(label, params)


def enumerate_suite(catalog: Catalog | None = None) -> list[SymmetricPairEntry]:
    cat = catalog or load_catalog()
    return [cat.instantiate(label, params) for label, params in SUITE]
