import pytest

from isoform.arrangement import count_regions
from isoform.involution import PairCase, pair_case, standard_involution
from isoform.linalg import as_vec
from isoform.restricted import build_restricted, check_simple_positivity, total_compartments
from isoform.rootsys import build_root_system, check_root_system
from isoform.weyl import weyl_order_bfs


def fold(types, name):
    return build_restricted(standard_involution(build_root_system(types), name))


@pytest.mark.parametrize(
    "types, name, folded, reduced, count",
    [
        ([("A", 2)], "flip", "BC1", (("A", 1),), 4),
        ([("A", 3)], "flip", "B2", (("B", 2),), 8),
        ([("A", 4)], "flip", "BC2", (("B", 2),), 12),
        ([("A", 5)], "flip", "C3", (("C", 3),), 18),
        ([("A", 6)], "flip", "BC3", (("B", 3),), 24),
        ([("D", 3)], "fork-swap", "B2", (("B", 2),), 8),
        ([("D", 4)], "fork-swap", "B3", (("B", 3),), 18),
        ([("D", 5)], "fork-swap", "B4", (("B", 4),), 32),
        ([("E", 6)], "flip", "F4", (("F", 4),), 48),
        ([("B", 2), ("B", 2)], "swap", "B2", (("B", 2),), 8),
        ([("G", 2), ("G", 2)], "swap", "G2", (("G", 2),), 12),
        ([("B", 3)], "identity", "B3", (("B", 3),), 18),
    ],
)
def test_fold_table(types, name, folded, reduced, count):
    rrs = fold(types, name)
    assert rrs.folded_name() == folded
    assert rrs.kprime_type == reduced
    assert len(rrs.restricted_roots) == count


def test_positivity_coefficients():
    rrs = fold([("A", 3)], "flip")
    b1, b2 = rrs.restricted_simple
    table = check_simple_positivity(rrs).coefficients
    long = tuple(2 * x + y for x, y in zip(b1, b2))
    assert long in rrs.restricted_roots
    assert table[long] == (2, 1)

    rrs = fold([("A", 2)], "flip")
    (b,) = rrs.restricted_simple
    assert check_simple_positivity(rrs).coefficients[tuple(2 * x for x in b)] == (2,)


def test_positive_half():
    rrs = fold([("A", 4)], "flip")
    pos = check_simple_positivity(rrs).positive()
    assert 2 * len(pos) == len(rrs.restricted_roots)


FOLDS = [
    ([("A", n)], "flip") for n in range(2, 7)
] + [([("D", n)], "fork-swap") for n in range(3, 6)] + [
    ([("E", 6)], "flip"),
    ([("A", 2), ("A", 2)], "swap"),
    ([("C", 3)], "identity"),
]


@pytest.mark.parametrize("types, name", FOLDS)
def test_nonreduced_iff_minus1_pair(types, name):
    rrs = fold(types, name)
    inv = rrs.involution
    has_minus1 = any(pair_case(inv, a) is PairCase.MINUS1 for a in inv.base.roots)
    assert rrs.nonreduced == has_minus1
    check_root_system(rrs.reduced)


@pytest.mark.parametrize("types, name", FOLDS)
def test_compartment_oracles_agree(types, name):
    rrs = fold(types, name)
    total = total_compartments(rrs)
    assert weyl_order_bfs(rrs.reduced).value == total
    assert count_regions(rrs.restricted_roots) == total


def test_restricted_simple_is_basis():
    rrs = fold([("E", 6)], "flip")
    assert len(rrs.restricted_simple) == rrs.carrier.dim_k == 4
    assert as_vec([0] * 8) not in rrs.restricted_roots
