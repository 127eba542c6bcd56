"""Brute-force reference implementations used only by the tests.

None of these share code with the package: they re-derive each quantity from
its definition, as slowly and directly as possible.
"""
from __future__ import annotations

import itertools
from functools import lru_cache


def divisors(n):
    return [r for r in range(1, n + 1) if n % r == 0]


def translocation_images(n, i, j):
    """Image list of phi(i, j), written out from the two-case definition."""
    if i < j:
        return list(range(1, i)) + list(range(i + 1, j + 1)) + [i] + list(range(j + 1, n + 1))
    if i > j:
        return list(range(1, j)) + [i, j] + list(range(j + 1, i)) + list(range(i + 1, n + 1))
    return list(range(1, n + 1))


def act_by_images(m, images):
    """(m . sigma)(k) = m(sigma(k))."""
    return tuple(m[s - 1] for s in images)


def delete_insert(m, i, j):
    lst = list(m)
    x = lst.pop(i - 1)
    lst.insert(j - 1, x)
    return tuple(lst)


def space_by_projection(n, r):
    """Every r-regular multipermutation, obtained by projecting all of S_n."""
    return sorted({tuple(-(-v // r) for v in p) for p in itertools.permutations(range(1, n + 1))})


def lcs_by_subsets(u, v):
    """Longest common subsequence by trying index subsets of u, longest first."""
    n = len(u)
    for k in range(n, 0, -1):
        subs_v = {tuple(v[j] for j in idx) for idx in itertools.combinations(range(n), k)}
        for idx in itertools.combinations(range(n), k):
            if tuple(u[i] for i in idx) in subs_v:
                return k
    return 0


def bfs_all_moves(start, t):
    """Tuples reachable from start with <= t delete/insert moves over all (i, j)."""
    n = len(start)
    seen = {tuple(start)}
    frontier = [tuple(start)]
    for _ in range(t):
        nxt = []
        for s in frontier:
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    c = delete_insert(s, i, j)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
        frontier = nxt
    return seen


def syt_count_backtrack(shape):
    """Count standard tableaux by placing 1, 2, ... at addable corners."""
    shape = tuple(shape)

    @lru_cache(maxsize=None)
    def count(filled):
        if filled == shape:
            return 1
        total = 0
        for row in range(len(shape)):
            if filled[row] < shape[row] and (row == 0 or filled[row - 1] > filled[row]):
                nxt = list(filled)
                nxt[row] += 1
                total += count(tuple(nxt))
        return total

    return count(tuple(0 for _ in shape))


def ssyt_content_count_rowmajor(shape, r):
    """Count fillings of shape, cell by cell in row-major order, with content (r, ..., r)."""
    n = sum(shape)
    k = n // r
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = {}
    left = [r] * (k + 1)

    def fill(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for v in range(1, k + 1):
            if not left[v]:
                continue
            if j > 0 and grid[(i, j - 1)] > v:
                continue
            if i > 0 and grid[(i - 1, j)] >= v:
                continue
            grid[(i, j)] = v
            left[v] -= 1
            total += fill(idx + 1)
            left[v] += 1
            del grid[(i, j)]
        return total

    return fill(0)


def partition_count(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(partition_count(n - k, k) for k in range(1, min(n, largest) + 1))


def alternating(seq):
    if len(seq) <= 1:
        return True
    a, b = seq[0], seq[1]
    return a != b and all(x == (a if p % 2 == 0 else b) for p, x in enumerate(seq))


def e_star(m):
    """Index pairs of alternating substrings of even length >= 4."""
    n = len(m)
    return {(i, j) for i in range(1, n + 1) for j in range(i, n + 1)
            if (j - i + 1) >= 4 and (j - i + 1) % 2 == 0 and alternating(m[i - 1 : j])}
