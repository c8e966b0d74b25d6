"""Acceptance criteria, each timed against its budget.

Every test prints one ``PASS``/``FAIL`` line to the terminal.
"""

import json
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb, factorial, lcm

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from isoform.arrangement import count_regions
from isoform.catalog import SUITE
from isoform.cli import main
from isoform.formality import check_formality, restricted_system
from isoform.involution import PairCase, pair_case, standard_involution
from isoform.linalg import add, dot, scale, sub
from isoform.restricted import build_restricted, check_simple_positivity
from isoform.rootsys import build_root_system, cartan_integer, reflect
from isoform.weyl import weyl_order_bfs, weyl_order_closed_form


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def timed(number, title, budget):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            ok = elapsed < budget
            assert ok, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                verdict = "PASS" if ok else "FAIL"
                print(f"\n[{verdict}] criterion {number}: {title} ({elapsed:.2f}s < {budget}s)")

    return timed


def test_criterion_1_ai_even(catalog, criterion):
    with criterion(1, "AI with n = 2m, m in {2,3}: r = 2, dim = 2^m", 1.0):
        for m in (2, 3):
            rep = check_formality(catalog.instantiate("AI", {"n": 2 * m}))
            assert rep.r == 2
            assert rep.dim_fixed_set == 2**m == rep.dim_M
            assert rep.formal


def test_criterion_2_ai_odd(catalog, criterion):
    with criterion(2, "AI with n = 2m+1, m in {1,2}: BC_m, reduced B_m, r = 1", 1.0):
        for m in (1, 2):
            entry = catalog.instantiate("AI", {"n": 2 * m + 1})
            rrs = restricted_system(entry)
            assert rrs.nonreduced
            assert rrs.folded_name() == f"BC{m}"
            # B1 is written A1 canonically
            assert rrs.kprime_type == ((("A", 1),) if m == 1 else (("B", m),))
            assert weyl_order_closed_form(rrs.kprime_type).value == weyl_order_closed_form([("B", m)]).value
            rep = check_formality(entry)
            assert rep.r == 1
            assert rep.dim_fixed_set == 2**m == rep.dim_M


def test_criterion_3_bdi(catalog, criterion):
    with criterion(3, "BDI odd: folded B_{p+q}, r = binom(p+q,p)", 1.0):
        for p, q in ((1, 1), (1, 2), (2, 2)):
            rep = check_formality(catalog.instantiate("BDI-odd", {"p": p, "q": q}))
            assert rep.kprime_name == f"B{p + q}"
            assert rep.r == comb(p + q, p)
            assert rep.dim_fixed_set == 2 * comb(p + q, p) == rep.dim_M


def test_criterion_4_ei(catalog, criterion):
    with criterion(4, "EI: k' = F4, r = 1152/384 = 3, dim = 12", 1.0):
        rep = check_formality(catalog.instantiate("EI"))
        assert rep.kprime_name == "F4"
        assert rep.total_compartments == 1152 and rep.entry.k_weyl_order == 384
        assert rep.r == 3
        assert rep.dim_fixed_set == 12 == rep.dim_M


def test_criterion_5_regimes(suite, criterion):
    with criterion(5, "split rank gives r = 1; equal rank gives |W(g)|/|W(k)|", 5.0):
        seen = set()
        for e in suite:
            rep = check_formality(e)
            seen.add(e.regime)
            if e.regime in ("split_rank", "group_type_II"):
                assert rep.r == 1, e.name()
            if e.regime == "equal_rank":
                assert rep.dim_fixed_set == weyl_order_closed_form(e.g_type).value // e.k_weyl_order
        assert {"split_rank", "equal_rank"} <= seen


ORACLE_TYPES = (
    [("A", n) for n in range(1, 5)]
    + [("B", n) for n in range(2, 5)]
    + [("C", n) for n in range(3, 5)]
    + [("D", 4), ("F", 4), ("G", 2), ("A", 5), ("D", 5), ("E", 6)]
)


def test_criterion_6_oracle(criterion):
    with criterion(6, "Weyl BFS equals closed form up to rank 4 plus A5, D5, E6", 30.0):
        verified = set()
        for t in ORACLE_TYPES:
            bfs = weyl_order_bfs(build_root_system([t])).value
            assert bfs == weyl_order_closed_form([t]).value, t
            verified.add(bfs)
        assert {2**m * factorial(m) for m in (2, 3, 4)} <= verified
        assert {2 ** (m - 1) * factorial(m) for m in (4, 5)} <= verified
        assert {1152, 384} <= verified


def _catalog_involutions(catalog):
    out = {}
    for label in catalog.labels:
        params = {k: lo for k, (lo, _) in catalog.rows[label]["params"].items()}
        e = catalog.instantiate(label, params)
        out.setdefault((e.g_type, e.involution_spec), None)
    for label, params in SUITE:
        e = catalog.instantiate(label, params)
        out.setdefault((e.g_type, e.involution_spec), None)
    return [build_restricted(standard_involution(build_root_system(g), name)) for g, name in out]


def _check_pair(rrs, a, b):
    n = cartan_integer(a, b)
    assert n.denominator == 1
    assert reflect(b, a) in rrs.restricted_roots


def _check_all_pairs(roots):
    """Exhaustive integrality and closure on integer-rescaled copies of the roots."""
    d = lcm(*(x.denominator for v in roots for x in v))
    ints = [tuple(int(x * d) for x in v) for v in roots]
    lattice = set(ints)
    for a in ints:
        aa = sum(x * x for x in a)
        for b in ints:
            ab = 2 * sum(x * y for x, y in zip(a, b) if x and y)
            assert ab % aa == 0
            c = ab // aa
            assert tuple(y - c * x for x, y in zip(a, b)) in lattice


def test_criterion_7_axioms(catalog, criterion):
    with criterion(7, "restricted axioms on every catalog involution", 10.0):
        systems = _catalog_involutions(catalog)
        for rrs in systems:
            roots = sorted(rrs.restricted_roots)
            for a in roots:
                assert scale(-1, a) in rrs.restricted_roots
            _check_all_pairs(roots)
            check_simple_positivity(rrs)
            inv = rrs.involution
            for alpha in inv.base.roots:
                case = pair_case(inv, alpha)
                hk = scale(Fraction(1, 2), add(alpha, inv(alpha)))
                hp = scale(Fraction(1, 2), sub(alpha, inv(alpha)))
                factor = {PairCase.FIXED: 0, PairCase.ORTHOGONAL: 1, PairCase.MINUS1: 3}[case]
                assert dot(hp, hp) == factor * dot(hk, hk)

        @settings(max_examples=200, deadline=None, suppress_health_check=list(HealthCheck))
        @given(st.data())
        def sampled(data):
            rrs = data.draw(st.sampled_from(systems))
            roots = sorted(rrs.restricted_roots)
            a = data.draw(st.sampled_from(roots))
            b = data.draw(st.sampled_from(roots))
            _check_pair(rrs, a, b)

        sampled()


def test_criterion_8_verify_all(catalog, suite, criterion, capsys):
    with criterion(8, "verify-all exits 0, every entry formal, Hsiang checked first", 30.0):
        for e in suite:
            # independent of the library's Weyl tables: chambers by arrangement counting
            regions = count_regions(restricted_system(e).restricted_roots)
            assert regions % e.k_weyl_order == 0
            assert 2 ** (e.rank_g - e.rank_k) * (regions // e.k_weyl_order) <= e.dim_M, e.name()
        code = main(["verify-all", "--format", "json"])
        out = capsys.readouterr().out
        assert code == 0
        doc = json.loads(out)
        assert doc["all_formal"]
        assert len(doc["rows"]) == len(SUITE)
        assert all(row["formal"] is True for row in doc["rows"])
