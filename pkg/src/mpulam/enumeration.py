"""Lexicographic generation of the r-regular multipermutation space.

Tuples are generated with the multiset next-permutation successor, so the
cost is proportional to the number of multipermutations, not n!.  Ranking and
unranking let callers split the space into contiguous chunks for workers.
"""
from __future__ import annotations

import csv
import math
from collections import Counter
from typing import Iterable, Iterator, Sequence, TextIO

from .core import check_divides, format_sequence
from .exceptions import CapacityError, ParameterError

#: Refuse to stream spaces larger than this unless the caller raises the cap.
DEFAULT_SPACE_CAP = 10**7
#: Largest space for which ``distance_matrix`` builds the full matrix.
DEFAULT_MATRIX_CAP = 5000


def space_size(n: int, r: int) -> int:
    """Number of r-regular multipermutations of length n: n! / (r!)^(n/r)."""
    check_divides(n, r)
    return math.factorial(n) // math.factorial(r) ** (n // r)


def _multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    total = math.factorial(sum(counts))
    for c in counts:
        total //= math.factorial(c)
    return total


def next_multiset_permutation(seq: Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographic successor of ``seq`` among rearrangements of its multiset.

    Returns ``None`` when ``seq`` is already the last (non-increasing) arrangement.
    """
    a = list(seq)
    k = len(a) - 2
    while k >= 0 and a[k] >= a[k + 1]:
        k -= 1
    if k < 0:
        return None
    l = len(a) - 1
    while a[l] <= a[k]:
        l -= 1
    a[k], a[l] = a[l], a[k]
    a[k + 1 :] = reversed(a[k + 1 :])
    return tuple(a)


def rank_multipermutation(m: Sequence[int]) -> int:
    """0-based lexicographic rank of ``m`` among arrangements of its multiset."""
    counts = Counter(m)
    rank = 0
    for value in m:
        for smaller in sorted(s for s in counts if s < value and counts[s]):
            counts[smaller] -= 1
            rank += _multinomial(counts.values())
            counts[smaller] += 1
        counts[value] -= 1
    return rank


def unrank_multipermutation(n: int, r: int, k: int) -> tuple[int, ...]:
    """The k-th (0-based) r-regular multipermutation in lexicographic order."""
    total = space_size(n, r)
    if not 0 <= k < total:
        raise ParameterError(f"rank {k} outside [0, {total})")
    counts = {v: r for v in range(1, n // r + 1)}
    out = []
    for _ in range(n):
        for v in sorted(counts):
            if not counts[v]:
                continue
            counts[v] -= 1
            block = _multinomial(counts.values())
            if k < block:
                out.append(v)
                break
            k -= block
            counts[v] += 1
    return tuple(out)


def enumerate_space(
    n: int, r: int, start: int = 0, stop: int | None = None, cap: int = DEFAULT_SPACE_CAP
) -> Iterator[tuple[int, ...]]:
    """Stream r-regular multipermutations of length n in lexicographic order.

    ``start``/``stop`` select the rank range ``[start, stop)`` so the space can
    be split across workers.  Raises ``CapacityError`` if the whole space is
    larger than ``cap``.
    """
    total = space_size(n, r)
    if total > cap:
        raise CapacityError(f"space of size {total} exceeds cap {cap}")
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    current: tuple[int, ...] | None = unrank_multipermutation(n, r, start)
    for _ in range(stop - start):
        yield current
        current = next_multiset_permutation(current)


def chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def distance_matrix(n: int, r: int, cap: int = DEFAULT_MATRIX_CAP) -> list[list[int]]:
    """Pairwise r-regular Ulam distances over the space in lexicographic order."""
    from .metric import lcs_length

    total = space_size(n, r)
    if total > cap:
        raise CapacityError(f"matrix over {total} points exceeds cap {cap}")
    points = list(enumerate_space(n, r))
    matrix = [[0] * total for _ in range(total)]
    for a in range(total):
        for b in range(a + 1, total):
            d = n - lcs_length(points[a], points[b])
            matrix[a][b] = matrix[b][a] = d
    return matrix


def _sizes_for_range(args) -> list[tuple[tuple[int, ...], int]]:
    from .spheres import sphere_enumerate

    n, r, t, lo, hi = args
    return [(c, len(sphere_enumerate(c, t))) for c in enumerate_space(n, r, lo, hi)]


def sphere_sizes_by_center(n: int, r: int, t: int, workers: int = 1) -> list[tuple[tuple[int, ...], int]]:
    """``(center, |S(center, t)|)`` for every center, in lexicographic center order."""
    total = space_size(n, r)
    if total > DEFAULT_SPACE_CAP:
        raise CapacityError(f"space of size {total} exceeds cap {DEFAULT_SPACE_CAP}")
    jobs = [(n, r, t, lo, hi) for lo, hi in chunk_ranges(total, workers)]
    if workers <= 1 or len(jobs) == 1:
        chunks = map(_sizes_for_range, jobs)
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_sizes_for_range, jobs))
    return [pair for chunk in chunks for pair in chunk]


def histogram_sphere_sizes(n: int, r: int, t: int, workers: int = 1) -> dict[int, int]:
    """Map sphere size -> number of centers with that size (keys ascending)."""
    counts = Counter(size for _, size in sphere_sizes_by_center(n, r, t, workers))
    return dict(sorted(counts.items()))


def write_histogram_csv(histogram: dict[int, int], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["sphere_size", "centers"])
    for size, count in histogram.items():
        writer.writerow([size, count])


def write_matrix_csv(matrix: list[list[int]], labels: Sequence[Sequence[int]], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    names = [format_sequence(lab) for lab in labels]
    writer.writerow([""] + names)
    for name, row in zip(names, matrix):
        writer.writerow([name] + row)
