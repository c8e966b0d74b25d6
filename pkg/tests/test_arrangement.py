from itertools import combinations

import pytest

from isoform.arrangement import count_regions
from isoform.linalg import as_vec
from isoform.rootsys import build_root_system
from isoform.weyl import weyl_order_closed_form


def test_coordinate_hyperplanes():
    normals = [as_vec(v) for v in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]
    assert count_regions(normals) == 8


def test_duplicates_and_negatives_ignored():
    normals = [as_vec([1, 0]), as_vec([-2, 0]), as_vec([0, 3])]
    assert count_regions(normals) == 4


def test_lines_through_origin_in_plane():
    # k distinct lines through the origin cut the plane into 2k regions
    normals = [as_vec([1, k]) for k in range(5)]
    assert count_regions(normals) == 10


@pytest.mark.parametrize("n", [2, 3, 4])
def test_braid_arrangement(n):
    dim = n + 1
    normals = []
    for i, j in combinations(range(dim), 2):
        v = [0] * dim
        v[i], v[j] = 1, -1
        normals.append(as_vec(v))
    assert count_regions(normals) == weyl_order_closed_form([("A", n)]).value


@pytest.mark.parametrize("t", [("B", 3), ("G", 2), ("D", 4), ("F", 4)])
def test_reflection_arrangements(t):
    rs = build_root_system([t])
    assert count_regions(rs.roots) == weyl_order_closed_form([t]).value
