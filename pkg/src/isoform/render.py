"""Serialization of reports, fold results and oracle tables.

JSON documents follow ``data/report.schema.json``.  Rationals are written as
strings (``"1/2"``) so the output is exact and byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Sequence

from .formality import FormalityReport
from .involution import restrict_root
from .linalg import Vec, dot
from .restricted import RestrictedRootSystem, total_compartments
from .rootsys import cartan_integer, dynkin_bonds, format_type, format_types


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _vec(v: Vec) -> list[str]:
    return [str(x) for x in v]


def report_dict(rep: FormalityReport) -> dict[str, Any]:
    e = rep.entry
    return {
        "label": e.label,
        "params": e.param_dict,
        "g_type": [format_type(t) for t in e.g_type],
        "involution": e.involution_spec,
        "k": e.k_name,
        "k_type": [format_type(t) for t in e.k_type],
        "k_torus_rank": e.k_torus_rank,
        "k_weyl_order": e.k_weyl_order,
        "regime": e.regime,
        "rank_g": e.rank_g,
        "rank_k": e.rank_k,
        "rank_space": e.rank_space,
        "kprime": rep.kprime_name,
        "kprime_type": [format_type(t) for t in rep.kprime_type],
        "nonreduced": rep.nonreduced,
        "total_compartments": rep.total_compartments,
        "r": rep.r,
        "fixed_component_dim": rep.fixed_component_dim,
        "dim_fixed_set": rep.dim_fixed_set,
        "dim_M": rep.dim_M,
        "dim_M_formula": e.dim_M_formula,
        "provenance": e.provenance,
        "formal": rep.formal,
    }


def report_markdown(rep: FormalityReport) -> str:
    d = report_dict(rep)
    lines = [f"## {rep.entry.name()}", "", "| quantity | value |", "|---|---|"]
    for key, value in d.items():
        if isinstance(value, list):
            value = "+".join(value) or "0"
        elif isinstance(value, dict):
            value = ",".join(f"{k}={v}" for k, v in value.items()) or "-"
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"| {key} | {value} |")
    return "\n".join(lines) + "\n"


SUITE_COLUMNS = ("label", "params", "g", "k", "k′", "r", "2^{rkG−rkK}·r", "dim H*(M)", "formal")


@dataclass(frozen=True)
class SuiteRow:
    label: str
    params: dict[str, int]
    report: FormalityReport | None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.report is not None and self.report.formal


def suite_dict(rows: Sequence[SuiteRow]) -> dict[str, Any]:
    out = []
    for row in rows:
        if row.report is not None:
            out.append(report_dict(row.report))
        else:
            out.append({"label": row.label, "params": row.params, "formal": False, "error": row.error})
    return {"all_formal": all(r.ok for r in rows), "rows": out}


def suite_markdown(rows: Sequence[SuiteRow]) -> str:
    lines = [
        "| " + " | ".join(SUITE_COLUMNS) + " |",
        "|" + "---|" * len(SUITE_COLUMNS),
    ]
    for row in rows:
        params = ",".join(f"{k}={v}" for k, v in row.params.items()) or "-"
        rep = row.report
        if rep is None:
            cells = [row.label, params, "", "", "", "", "", "", f"**FAIL** ({row.error})"]
        else:
            e = rep.entry
            verdict = "true" if rep.formal else "**false**"
            cells = [
                e.label,
                params,
                format_types(e.g_type),
                e.k_name,
                rep.kprime_name,
                str(rep.r),
                str(rep.dim_fixed_set),
                str(rep.dim_M),
                verdict,
            ]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def fold_dict(rrs: RestrictedRootSystem, source: str, involution: str) -> dict[str, Any]:
    inv = rrs.involution
    simple = rrs.restricted_simple
    return {
        "source_type": source,
        "involution": involution,
        "perm": [p + 1 for p in inv.perm],
        "orbits": [[i + 1 for i in o] for o in inv.orbits()],
        "dim_t_k": rrs.carrier.dim_k,
        "dim_t_p": rrs.carrier.dim_p,
        "restricted_simple": [_vec(v) for v in simple],
        "restricted_cartan_matrix": [[cartan_integer(a, b) for b in simple] for a in simple],
        "restricted_root_count": len(rrs.restricted_roots),
        "folded_type": rrs.folded_name(),
        "kprime_type": [format_type(t) for t in rrs.kprime_type],
        "nonreduced": rrs.nonreduced,
        "total_compartments": total_compartments(rrs),
    }


def fold_markdown(rrs: RestrictedRootSystem, source: str, involution: str) -> str:
    d = fold_dict(rrs, source, involution)
    lines = [
        f"## {source} / {involution} -> {d['folded_type']}",
        "",
        f"- orbits on simple roots: {d['orbits']}",
        f"- dim t_k = {d['dim_t_k']}, dim t_p = {d['dim_t_p']}",
        f"- restricted roots: {d['restricted_root_count']}",
        f"- folded type: {d['folded_type']} (reduced: {'+'.join(d['kprime_type'])})",
        f"- nonreduced: {str(d['nonreduced']).lower()}",
        f"- compartments |W(k')|: {d['total_compartments']}",
        "",
        "| restricted simple root | coordinates | squared length |",
        "|---|---|---|",
    ]
    for j, v in enumerate(rrs.restricted_simple):
        lines.append(f"| β{j + 1} | ({', '.join(_vec(v))}) | {dot(v, v)} |")
    return "\n".join(lines) + "\n"


def _dynkin_dot(prefix: str, symbol: str, simple: Sequence[Vec]) -> list[str]:
    lines = []
    for i in range(len(simple)):
        lines.append(f'    {prefix}{i + 1} [label="{symbol}{i + 1}"];')
    for i, j, mult in dynkin_bonds(simple):
        attrs = [f'label="{mult}"' if mult > 1 else 'label=""', f"multiplicity={mult}"]
        if mult == 1:
            attrs.append("dir=none")
            tail, head = i, j
        else:
            attrs.append('color="' + ":".join(["black"] * mult) + '"')
            # arrow points at the shorter root
            tail, head = (i, j) if dot(simple[i], simple[i]) > dot(simple[j], simple[j]) else (j, i)
        lines.append(f"    {prefix}{tail + 1} -> {prefix}{head + 1} [{', '.join(attrs)}];")
    return lines


def fold_dot(rrs: RestrictedRootSystem, source: str, involution: str) -> str:
    inv = rrs.involution
    base = inv.base.simple_roots
    lines = ["digraph fold {", "  rankdir=LR;", "  node [shape=circle];"]
    lines += ["  subgraph cluster_source {", f'    label="{source}";']
    lines += _dynkin_dot("a", "α", base)
    for orbit in inv.orbits():
        if len(orbit) == 2:
            i, j = orbit
            lines.append(f"    a{i + 1} -> a{j + 1} [style=dotted, dir=both, constraint=false];")
    lines.append("  }")
    lines += ["  subgraph cluster_folded {", f'    label="{rrs.folded_name()}";']
    lines += _dynkin_dot("b", "β", rrs.restricted_simple)
    lines.append("  }")
    for i, a in enumerate(base):
        j = rrs.restricted_simple.index(restrict_root(inv, a))
        lines.append(f"  a{i + 1} -> b{j + 1} [style=dashed, color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class OracleRow:
    name: str
    closed_form: int | None
    bfs: int | None
    status: str  # "match", "mismatch" or "skipped"
    extra: dict[str, Any] | None = None


def oracle_dict(weyl_rows: Sequence[OracleRow], restricted_rows: Sequence[OracleRow]) -> dict[str, Any]:
    def row(r: OracleRow) -> dict[str, Any]:
        d = {"type": r.name, "closed_form": r.closed_form, "bfs": r.bfs, "status": r.status}
        if r.extra:
            d.update(r.extra)
        return d

    return {
        "all_match": all(r.status != "mismatch" for r in [*weyl_rows, *restricted_rows]),
        "weyl": [row(r) for r in weyl_rows],
        "restricted": [row(r) for r in restricted_rows],
    }


def oracle_markdown(weyl_rows: Sequence[OracleRow], restricted_rows: Sequence[OracleRow]) -> str:
    lines = ["| type | closed form | bfs | status |", "|---|---|---|---|"]
    for r in weyl_rows:
        lines.append(f"| {r.name} | {r.closed_form} | {r.bfs if r.bfs is not None else '-'} | {r.status} |")
    lines += [
        "",
        "| pair | k′ | total compartments | bfs | arrangement regions | status |",
        "|---|---|---|---|---|---|",
    ]
    for r in restricted_rows:
        extra = r.extra or {}
        lines.append(
            f"| {r.name} | {extra.get('kprime', '')} | {r.closed_form} | {r.bfs} | "
            f"{extra.get('regions', '-')} | {r.status} |"
        )
    return "\n".join(lines) + "\n"
