import itertools

import pytest
from hypothesis import given, settings, strategies as st

from mpulam import (
    Permutation,
    bfs_translocation_distance,
    class_min_distance_oracle,
    distance,
    lcs_length,
    ulam_distance_perm,
    ulam_distance_r,
)
from mpulam.exceptions import ParameterError
from mpulam.metric import lcs_witness, longest_nondecreasing_length
from oracles import bfs_all_moves, lcs_by_subsets, space_by_projection


@st.composite
def multiperm_pair(draw, max_k=4, max_r=3):
    k = draw(st.integers(1, max_k))
    r = draw(st.integers(1, max_r))
    base = [s for s in range(1, k + 1) for _ in range(r)]
    return tuple(draw(st.permutations(base))), tuple(draw(st.permutations(base)))


def test_lcs_example():
    a, b = (2, 1, 2, 1, 3, 3), (3, 2, 2, 1, 3, 1)
    res = distance(a, b, witness=True)
    assert (res.lcs_length, res.distance) == (4, 2)
    ia, ib = res.witness
    assert [a[i - 1] for i in ia] == [b[j - 1] for j in ib]
    assert (ia, ib) == ((1, 3, 4, 5), (2, 3, 4, 5))


@given(multiperm_pair())
@settings(max_examples=150)
def test_lcs_matches_subset_oracle(pair):
    a, b = pair
    assert lcs_length(a, b) == lcs_by_subsets(a, b)


@given(multiperm_pair())
def test_witness_is_common_subsequence(pair):
    a, b = pair
    ia, ib = lcs_witness(a, b)
    assert len(ia) == len(ib) == lcs_length(a, b)
    assert list(ia) == sorted(set(ia)) and list(ib) == sorted(set(ib))
    assert [a[i - 1] for i in ia] == [b[j - 1] for j in ib]


@given(multiperm_pair())
def test_distance_symmetric_and_zero(pair):
    a, b = pair
    assert distance(a, b).distance == distance(b, a).distance
    assert distance(a, a).distance == 0
    assert (distance(a, b).distance == 0) == (a == b)


def test_length_and_content_mismatch():
    with pytest.raises(ValueError):
        lcs_length((1, 2), (1, 2, 3))
    with pytest.raises(ValueError):
        distance((1, 1, 2, 2), (1, 2, 2, 2))


@pytest.mark.parametrize("n,r", [(4, 2), (6, 3), (6, 2), (5, 1)])
def test_lcs_equals_bfs_oracle(n, r):
    space = space_by_projection(n, r)
    for a in space:
        reach = {0: {a}}
        seen = {a}
        for t in range(1, n):
            layer = bfs_all_moves(a, t) - seen
            reach[t] = layer
            seen |= layer
        for t, layer in reach.items():
            for b in layer:
                assert n - lcs_length(a, b) == t


def test_bfs_translocation_distance():
    assert bfs_translocation_distance((1, 1, 2, 2), (2, 2, 1, 1)) == 2
    assert bfs_translocation_distance((1, 2, 3, 4, 5), (5, 4, 3, 2, 1), cap=2) is None
    with pytest.raises(ParameterError):
        bfs_translocation_distance((1, 1, 2), (1, 2, 2))


def test_class_min_oracle_matches_projection():
    sigma, pi = Permutation((1, 5, 2, 4, 3, 6)), Permutation((6, 5, 4, 3, 2, 1))
    assert class_min_distance_oracle(sigma, pi, 2) == ulam_distance_r(sigma, pi, 2)


def test_ulam_perm():
    assert ulam_distance_perm((1, 2, 3, 4), (4, 1, 2, 3)) == 1
    assert ulam_distance_perm((1, 2, 3, 4), (4, 3, 2, 1)) == 3


@pytest.mark.parametrize("seq", list(itertools.product(range(1, 4), repeat=5)))
def test_longest_nondecreasing(seq):
    best = max(
        k for k in range(len(seq) + 1)
        for idx in itertools.combinations(range(len(seq)), k)
        if all(seq[idx[p]] <= seq[idx[p + 1]] for p in range(k - 1))
    )
    assert longest_nondecreasing_length(seq) == best
