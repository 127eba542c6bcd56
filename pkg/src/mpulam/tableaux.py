"""Young tableaux, RSK, and sphere sizes around the identity multipermutation.

The number of r-regular multipermutations within distance t of
``(1,..,1, 2,..,2, ...)`` equals the number of RSK pairs (P, Q) whose common
shape has at least n - t columns: sum of f^lambda * K^lambda_r over those
shapes.  All counts are exact Python integers.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .core import as_tuple, check_divides
from .exceptions import ParameterError, StructuralError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise StructuralError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise StructuralError(f"partition parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, idx):
        return self.parts[idx]

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def cells(self) -> Iterator[tuple[int, int]]:
        """0-based ``(row, col)`` cells in row-major order."""
        for row, length in enumerate(self.parts):
            for col in range(length):
                yield row, col


@dataclass(frozen=True)
class Tableau:
    """Rows of a (semi)standard Young tableau; equality is shape plus entries."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        validate_tableau(rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def num_columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entries(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def is_standard(self) -> bool:
        return sorted(self.entries()) == list(range(1, len(self.entries()) + 1))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def validate_tableau(rows: Sequence[Sequence[int]]) -> None:
    for row in rows:
        if not row:
            raise StructuralError("tableau rows must be non-empty")
        if any(a > b for a, b in zip(row, row[1:])):
            raise StructuralError(f"row {list(row)} is not weakly increasing")
    for upper, lower in zip(rows, rows[1:]):
        if len(lower) > len(upper):
            raise StructuralError("row lengths must be weakly decreasing")
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            raise StructuralError("columns must be strictly increasing")


def _bump(rows: list[list[int]], x: int) -> int:
    """Insert x in place; return the 0-based row that gained a box."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i
        row = rows[i]
        if x >= row[-1]:
            row.append(x)
            return i
        pos = bisect_right(row, x)  # leftmost entry strictly greater than x
        row[pos], x = x, row[pos]
        i += 1


def schensted_insert(t: Tableau, x: int) -> Tableau:
    """Row-insert x into t, bumping the leftmost strictly larger entry down."""
    rows = [list(row) for row in t.rows]
    _bump(rows, int(x))
    return Tableau(tuple(tuple(row) for row in rows))


def rsk(m) -> tuple[Tableau, Tableau]:
    """Insertion tableau P and recording tableau Q of a sequence."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(as_tuple(m), start=1):
        row = _bump(p_rows, x)
        if row == len(q_rows):
            q_rows.append([])
        q_rows[row].append(step)
    return Tableau(tuple(map(tuple, p_rows))), Tableau(tuple(map(tuple, q_rows)))


def _as_parts(lam) -> tuple[int, ...]:
    return lam.parts if isinstance(lam, Partition) else Partition(tuple(lam)).parts


def hook_lengths(lam) -> list[list[int]]:
    parts = _as_parts(lam)
    conj = Partition(parts).conjugate().parts
    return [[(parts[i] - j) + (conj[j] - i) - 1 for j in range(parts[i])] for i in range(len(parts))]


def hook_length_count(lam) -> int:
    """f^lambda, the number of standard tableaux of shape lambda."""
    parts = _as_parts(lam)
    denom = 1
    for row in hook_lengths(parts):
        for h in row:
            denom *= h
    return math.factorial(sum(parts)) // denom


@lru_cache(maxsize=None)
def _strip_count(shape: tuple[int, ...], symbols_left: int, r: int) -> int:
    # The cells holding the largest symbol form a horizontal strip of r cells;
    # peel it off (leaving mu with shape[i] >= mu[i] >= shape[i+1]) and recurse.
    if symbols_left == 0:
        return 0 if shape else 1
    rows = len(shape)
    inner = list(shape)

    def peel(row: int, remaining: int) -> int:
        if row == rows:
            if remaining:
                return 0
            return _strip_count(tuple(p for p in inner if p), symbols_left - 1, r)
        floor = shape[row + 1] if row + 1 < rows else 0
        acc = 0
        for take in range(min(remaining, shape[row] - floor) + 1):
            inner[row] = shape[row] - take
            acc += peel(row + 1, remaining - take)
        inner[row] = shape[row]
        return acc

    return peel(0, r)


def count_content_tableaux(lam, r: int) -> int:
    """K^lambda_r: semistandard fillings of lambda using each of 1..n/r exactly r times."""
    parts = _as_parts(lam)
    n = sum(parts)
    check_divides(n, r)
    if len(parts) > n // r:
        return 0  # a column cannot hold more distinct symbols than exist
    return _strip_count(parts, n // r, r)


def partitions_with_min_first_part(n: int, min_first: int) -> Iterator[Partition]:
    """Partitions of n with largest part >= ``min_first``, reverse-lexicographic."""
    if not 1 <= min_first <= n:
        raise ParameterError(f"min_first must lie in [1, {n}], got {min_first}")

    def below(total: int, largest: int) -> Iterator[tuple[int, ...]]:
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in below(total - first, first):
                yield (first,) + rest

    for first in range(n, min_first - 1, -1):
        for rest in below(n - first, first):
            yield Partition((first,) + rest)


def sphere_size_identity(n: int, r: int, t: int) -> int:
    """|S(m_e^r, t)| = sum over lambda with lambda_1 >= n - t of f^lambda * K^lambda_r."""
    check_divides(n, r)
    if not 0 <= t <= n - 1:
        raise ParameterError(f"radius must lie in [0, {n - 1}], got {t}")
    return sum(
        hook_length_count(lam) * count_content_tableaux(lam, r)
        for lam in partitions_with_min_first_part(n, n - t)
    )
