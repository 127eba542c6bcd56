import io

import pytest
from hypothesis import given, strategies as st

from mpulam.enumeration import (
    chunk_ranges,
    distance_matrix,
    enumerate_space,
    histogram_sphere_sizes,
    next_multiset_permutation,
    rank_multipermutation,
    space_size,
    unrank_multipermutation,
    write_histogram_csv,
)
from mpulam.exceptions import CapacityError
from oracles import bfs_all_moves, divisors, space_by_projection


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_projection_oracle(n):
    for r in divisors(n):
        space = list(enumerate_space(n, r))
        assert space == space_by_projection(n, r)
        assert len(space) == space_size(n, r)


def test_next_permutation_end():
    assert next_multiset_permutation((1, 1, 2)) == (1, 2, 1)
    assert next_multiset_permutation((2, 1, 1)) is None


@given(st.integers(0, 1679))
def test_rank_unrank(k):
    m = unrank_multipermutation(9, 3, k)
    assert rank_multipermutation(m) == k


def test_slices_agree_with_full_scan():
    full = list(enumerate_space(6, 2))
    assert list(enumerate_space(6, 2, start=10, stop=25)) == full[10:25]


def test_chunks_cover_range():
    chunks = chunk_ranges(90, 4)
    assert chunks[0][0] == 0 and chunks[-1][1] == 90
    assert all(a[1] == b[0] for a, b in zip(chunks, chunks[1:]))


def test_space_cap():
    with pytest.raises(CapacityError):
        list(enumerate_space(8, 1, cap=100))


def test_distance_matrix_small():
    mat = distance_matrix(4, 2)
    assert len(mat) == 6 and all(mat[i][i] == 0 for i in range(6))


def test_histogram_matches_oracle():
    hist = histogram_sphere_sizes(6, 2, 1)
    expected = {}
    for m in space_by_projection(6, 2):
        size = len(bfs_all_moves(m, 1))
        expected[size] = expected.get(size, 0) + 1
    assert hist == expected
    buf = io.StringIO()
    write_histogram_csv(hist, buf)
    assert buf.getvalue().splitlines()[0] == "sphere_size,centers"
