"""Longest common subsequences and the r-regular Ulam distance.

The distance between two multipermutations is ``n - lcs_length(a, b)``.  Two
independent routes to the same number are provided for checking: a
breadth-first search over translocations, and the literal minimum of the
permutation Ulam distance over both equivalence classes.
"""
from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import (
    Permutation,
    as_tuple,
    iter_equivalence_class,
    equivalence_class_size,
    project,
    translocate,
)
from .exceptions import CapacityError, DimensionError, ParameterError
from .spheres import translocation_moves

#: Largest |R_r(sigma)| * |R_r(pi)| the class-minimum oracle will enumerate.
DEFAULT_CLASS_PAIR_CAP = 250_000


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    lcs_length: int
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def to_dict(self) -> dict:
        out = {"distance": self.distance, "lcs": self.lcs_length}
        if self.witness is not None:
            out["witness"] = {"a_indices": list(self.witness[0]), "b_indices": list(self.witness[1])}
        return out


def _check_lengths(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionError(f"sequences have lengths {len(u)} and {len(v)}")


def lcs_length(u, v) -> int:
    """Length of a longest common subsequence, O(n^2) dynamic programming."""
    u, v = as_tuple(u), as_tuple(v)
    _check_lengths(u, v)
    prev = [0] * (len(v) + 1)
    for a in u:
        cur = [0]
        for b_idx, b in enumerate(v):
            if a == b:
                cur.append(prev[b_idx] + 1)
            else:
                cur.append(cur[-1] if cur[-1] > prev[b_idx + 1] else prev[b_idx + 1])
        prev = cur
    return prev[-1]


def lcs_witness(u, v) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lexicographically smallest 1-based index sequences realizing an LCS.

    Sequences are compared as the list of pairs ``(i_1, j_1), (i_2, j_2), ...``.
    """
    u, v = as_tuple(u), as_tuple(v)
    _check_lengths(u, v)
    n, m = len(u), len(v)
    # suffix[a][b] = LCS of u[a:], v[b:]
    suffix = [[0] * (m + 1) for _ in range(n + 1)]
    for a in range(n - 1, -1, -1):
        for b in range(m - 1, -1, -1):
            if u[a] == v[b]:
                suffix[a][b] = suffix[a + 1][b + 1] + 1
            else:
                suffix[a][b] = max(suffix[a + 1][b], suffix[a][b + 1])
    a = b = 0
    need = suffix[0][0]
    left, right = [], []
    while need:
        found = False
        for i in range(a, n):
            for j in range(b, m):
                if u[i] == v[j] and suffix[i + 1][j + 1] == need - 1:
                    left.append(i + 1)
                    right.append(j + 1)
                    a, b, need = i + 1, j + 1, need - 1
                    found = True
                    break
            if found:
                break
    return tuple(left), tuple(right)


def longest_nondecreasing_length(seq) -> int:
    """O(n log n) patience-style length of the longest non-decreasing subsequence."""
    tails: list[int] = []
    for x in as_tuple(seq):
        pos = bisect_right(tails, x)
        if pos == len(tails):
            tails.append(x)
        else:
            tails[pos] = x
    return len(tails)


def distance(a, b, witness: bool = False) -> DistanceResult:
    """r-regular Ulam distance between two tuples of equal content."""
    a, b = as_tuple(a), as_tuple(b)
    _check_lengths(a, b)
    if Counter(a) != Counter(b):
        raise ParameterError("sequences have different content")
    if witness:
        wa, wb = lcs_witness(a, b)
        return DistanceResult(len(a) - len(wa), len(wa), (wa, wb))
    k = lcs_length(a, b)
    return DistanceResult(len(a) - k, k)


def ulam_distance_perm(sigma, pi) -> int:
    """Permutation Ulam distance n - LCS(sigma, pi)."""
    s, p = as_tuple(sigma), as_tuple(pi)
    _check_lengths(s, p)
    return len(s) - lcs_length(s, p)


def ulam_distance_r(sigma, pi, r: int) -> int:
    """r-regular Ulam distance between the classes of two permutations."""
    if len(sigma) != len(pi):
        raise DimensionError(f"permutations have lengths {len(sigma)} and {len(pi)}")
    ms, mp = project(sigma, r), project(pi, r)
    return ms.n - lcs_length(ms.symbols, mp.symbols)


def multiperm_distance(a, b) -> int:
    """n - LCS for two multipermutations given directly as tuples."""
    a, b = as_tuple(a), as_tuple(b)
    _check_lengths(a, b)
    return len(a) - lcs_length(a, b)


def bfs_distances(source, cap: int | None = None) -> dict[tuple[int, ...], int]:
    """Translocation distance from ``source`` to every tuple within ``cap`` moves."""
    start = as_tuple(source)
    n = len(start)
    cap = n if cap is None else cap
    moves = translocation_moves(n)
    dist = {start: 0}
    frontier = [start]
    depth = 0
    while frontier and depth < cap:
        depth += 1
        nxt = []
        for state in frontier:
            for i, j in moves:
                cand = translocate(state, i, j)
                if cand not in dist:
                    dist[cand] = depth
                    nxt.append(cand)
        frontier = nxt
    return dist


def bfs_translocation_distance(m1, m2, cap: int | None = None) -> int | None:
    """Fewest translocations turning m1 into m2, by breadth-first search.

    Returns ``None`` when the distance exceeds ``cap`` (default n).
    """
    a, b = as_tuple(m1), as_tuple(m2)
    _check_lengths(a, b)
    if Counter(a) != Counter(b):
        raise ParameterError("multipermutations have different content")
    cap = len(a) if cap is None else cap
    if a == b:
        return 0
    moves = translocation_moves(len(a))
    seen = {a}
    frontier = [a]
    for depth in range(1, cap + 1):
        nxt = []
        for state in frontier:
            for i, j in moves:
                cand = translocate(state, i, j)
                if cand == b:
                    return depth
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        if not nxt:
            break
        frontier = nxt
    return None


def class_min_distance_oracle(sigma, pi, r: int, cap: int = DEFAULT_CLASS_PAIR_CAP) -> int:
    """Minimum permutation Ulam distance over R_r(sigma) x R_r(pi), by enumeration."""
    sigma = sigma if isinstance(sigma, Permutation) else Permutation(tuple(sigma))
    pi = pi if isinstance(pi, Permutation) else Permutation(tuple(pi))
    if sigma.n != pi.n:
        raise DimensionError(f"permutations have lengths {sigma.n} and {pi.n}")
    pairs = equivalence_class_size(sigma.n, r) ** 2
    if pairs > cap:
        raise CapacityError(f"{pairs} class pairs exceed cap {cap}")
    left = [p.images for p in iter_equivalence_class(sigma, r)]
    right = [p.images for p in iter_equivalence_class(pi, r)]
    return min(ulam_distance_perm(s, p) for s, p in product(left, right))
