from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isoform.errors import NotCartanIntegralError, NotDynkinDiagramError, UnsupportedTypeError, ZeroRootError
from isoform.linalg import as_vec, scale
from isoform.rootsys import (
    build_root_system,
    canonicalize,
    cartan_integer,
    check_root_system,
    classify_simple_roots,
    closed_form_root_count,
    parse_type,
    reflect,
)
from oracles import explicit_roots

H = Fraction(1, 2)

ADMISSIBLE = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(2, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def test_a1_roots():
    rs = build_root_system([("A", 1)])
    assert rs.roots == {as_vec([1, -1]), as_vec([-1, 1])}


@pytest.mark.parametrize("t, count", [(("A", 2), 6), (("F", 4), 48)])
def test_root_counts_examples(t, count):
    assert len(build_root_system([t]).roots) == count


def test_direct_sum():
    rs = build_root_system([("B", 2), ("A", 1)])
    assert len(rs.roots) == 10
    assert rs.components == (("B", 2), ("A", 1))
    assert classify_simple_roots(rs.simple_roots) == [("B", 2), ("A", 1)]


@pytest.mark.parametrize("t", ADMISSIBLE, ids=lambda t: f"{t[0]}{t[1]}")
def test_closure_matches_explicit_root_list(t):
    rs = build_root_system([t])
    assert rs.roots == explicit_roots(*t)
    assert len(rs.roots) == closed_form_root_count(t)


@pytest.mark.parametrize("t", [t for t in ADMISSIBLE if t[1] <= 6], ids=lambda t: f"{t[0]}{t[1]}")
def test_axioms(t):
    check_root_system(build_root_system([t]))


def test_cartan_integer_examples():
    a1, a2 = build_root_system([("A", 2)]).simple_roots
    assert cartan_integer(a1, a1) == 2
    assert cartan_integer(a1, a2) == -1
    assert cartan_integer(as_vec([1, 0]), as_vec([0, 1])) == 0
    with pytest.raises(NotCartanIntegralError):
        cartan_integer(as_vec([1, 1, 1]), as_vec([1, 0, 0]))
    with pytest.raises(ZeroRootError):
        cartan_integer(as_vec([0, 0]), as_vec([1, 1]))


def test_reflect_examples():
    a1, a2 = build_root_system([("A", 2)]).simple_roots
    assert reflect(a1, a1) == scale(-1, a1)
    x = as_vec([1, 1, 1])
    assert reflect(x, a1) == x
    assert reflect(a1, a2) == as_vec([1, 0, -1])  # a1 + a2
    with pytest.raises(ZeroRootError):
        reflect(x, as_vec([0, 0, 0]))


def test_classify_examples():
    assert classify_simple_roots(build_root_system([("B", 3)]).simple_roots) == [("B", 3)]
    folded = [as_vec([H, -H, H, -H]), as_vec([0, 1, -1, 0])]
    assert classify_simple_roots(folded) == [("B", 2)]
    assert classify_simple_roots(build_root_system([("C", 2)]).simple_roots) == [("B", 2)]
    assert classify_simple_roots(build_root_system([("C", 3)]).simple_roots) == [("C", 3)]
    assert classify_simple_roots(build_root_system([("D", 3)]).simple_roots) == [("A", 3)]


def test_classify_rejects_non_dynkin():
    # affine A2: a cycle, necessarily linearly dependent
    cycle = [as_vec([1, -1, 0]), as_vec([0, 1, -1]), as_vec([-1, 0, 1])]
    with pytest.raises(NotDynkinDiagramError):
        classify_simple_roots(cycle)
    # acute pair: positive Cartan integer
    with pytest.raises(NotDynkinDiagramError):
        classify_simple_roots([as_vec([1, -1, 0]), as_vec([1, 0, -1])])


def test_unsupported_types():
    for t in [("B", 1), ("E", 5), ("F", 3), ("G", 3), ("A", 0), ("H", 3)]:
        with pytest.raises(UnsupportedTypeError):
            build_root_system([t])
    with pytest.raises(UnsupportedTypeError):
        parse_type("X9")
    assert parse_type("e6") == ("E", 6)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([t for t in ADMISSIBLE if t[1] <= 4]), min_size=1, max_size=3))
def test_round_trip_direct_sums(types):
    rs = build_root_system(types)
    assert classify_simple_roots(rs.simple_roots) == canonicalize(types)


@pytest.mark.parametrize("t", ADMISSIBLE, ids=lambda t: f"{t[0]}{t[1]}")
def test_round_trip(t):
    assert classify_simple_roots(build_root_system([t]).simple_roots) == canonicalize([t])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("B", 3), ("G", 2), ("F", 4), ("D", 4), ("E", 6)]), st.data())
def test_reflection_closure_property(t, data):
    rs = build_root_system([t])
    roots = rs.sorted_roots()
    a = data.draw(st.sampled_from(roots))
    b = data.draw(st.sampled_from(roots))
    assert reflect(b, a) in rs.roots
    assert isinstance(cartan_integer(a, b), int)
    assert reflect(reflect(b, a), a) == b
