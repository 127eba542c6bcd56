"""Code-size bounds and a greedy code construction.

Bounds are exact ``Fraction`` values with a companion integer: the floor for
upper bounds and the ceiling for lower bounds.  A code counts as single-error
correcting when its minimum distance is at least ``SINGLE_ERROR_MIN_DISTANCE``
(d >= 2t + 1 with t = 1); callers may pass a different threshold.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from .core import as_tuple, check_divides, format_sequence, infer_regularity
from .enumeration import DEFAULT_SPACE_CAP, enumerate_space, space_size
from .exceptions import ParameterError, UnsupportedRegimeError
from .metric import lcs_length
from .spheres import sphere_enumerate

SINGLE_ERROR_MIN_DISTANCE = 3

SPHERE_PACKING_UPPER = "sphere_packing_upper"
PERFECT_LOWER = "perfect_lower"
GV_LOWER = "gv_lower"


@dataclass(frozen=True)
class BoundReport:
    n: int
    r: int
    bound_kind: str
    space_size: int
    bound_value: Fraction
    bound_integer: int
    d: int | None = None
    t: int | None = None

    def to_dict(self) -> dict:
        # big integers travel as decimal strings
        return {
            "n": self.n,
            "r": self.r,
            "d": self.d,
            "t": self.t,
            "bound_kind": self.bound_kind,
            "space_size": str(self.space_size),
            "bound_value": f"{self.bound_value.numerator}/{self.bound_value.denominator}",
            "bound_integer": str(self.bound_integer),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def min_sphere_size_radius1(n: int, r: int) -> int:
    """Smallest radius-1 sphere, attained at the identity center: 1 + (n-1)(n/r - 1)."""
    check_divides(n, r)
    return 1 + (n - 1) * (n // r - 1)


def max_sphere_size_radius1(n: int, r: int) -> int:
    """Largest radius-1 sphere for n/r != 2: 1 + (n-1)^2 - (r-1)n, or 1 when n = r."""
    check_divides(n, r)
    k = n // r
    if k == 2:
        raise UnsupportedRegimeError("no closed form for the largest sphere when n/r = 2")
    if k == 1:
        return 1  # the space is the single tuple (1, ..., 1)
    return 1 + (n - 1) ** 2 - (r - 1) * n


def sphere_packing_upper(n: int, r: int) -> BoundReport:
    """Upper bound on single-error-correcting codes: |space| / smallest sphere."""
    space = space_size(n, r)
    value = Fraction(space, min_sphere_size_radius1(n, r))
    return BoundReport(n, r, SPHERE_PACKING_UPPER, space, value, math.floor(value), t=1)


def perfect_code_lower(n: int, r: int) -> BoundReport:
    """Lower bound on the size of a perfect single-error-correcting code."""
    space = space_size(n, r)
    value = Fraction(space, max_sphere_size_radius1(n, r))
    return BoundReport(n, r, PERFECT_LOWER, space, value, _ceil(value), t=1)


def gv_lower(n: int, r: int, d: int) -> BoundReport:
    """Gilbert-Varshamov lower bound: |space| / (largest radius-1 sphere)^(d-1)."""
    space = space_size(n, r)
    if not 1 <= d <= max(n - 1, 1):
        raise ParameterError(f"d must lie in [1, {n - 1}], got {d}")
    value = Fraction(space, max_sphere_size_radius1(n, r) ** (d - 1))
    return BoundReport(n, r, GV_LOWER, space, value, _ceil(value), d=d)


@dataclass
class CodeSet:
    """Codewords of an r-regular multipermutation code and their verified minimum distance."""

    codewords: list[tuple[int, ...]]
    min_distance: int
    n: int = field(default=0)
    r: int = field(default=0)

    def __len__(self) -> int:
        return len(self.codewords)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "min_distance": self.min_distance,
            "size": len(self.codewords),
            "codewords": [format_sequence(c) for c in self.codewords],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def write_text(self, fh: TextIO) -> None:
        for c in self.codewords:
            fh.write(format_sequence(c) + "\n")

    @classmethod
    def read_text(cls, fh: Iterable[str], min_distance: int = 1) -> CodeSet:
        from .core import parse_sequence

        words = [parse_sequence(line) for line in fh if line.strip()]
        n = len(words[0]) if words else 0
        r = infer_regularity(words[0]) if words else 0
        return cls(words, min_distance, n, r)


def greedy_code(
    n: int, r: int, d: int, seed: int | None = None, cap: int = DEFAULT_SPACE_CAP
) -> CodeSet:
    """Scan the space and keep every tuple at distance >= d from all kept ones.

    The scan is lexicographic unless ``seed`` is given, in which case the
    order is a seeded shuffle.  The result is maximal: every rejected tuple
    lies within distance d - 1 of a codeword.
    """
    check_divides(n, r)
    if d < 1:
        raise ParameterError(f"d must be >= 1, got {d}")
    space = list(enumerate_space(n, r, cap=cap))
    if seed is not None:
        random.Random(seed).shuffle(space)
    chosen: list[tuple[int, ...]] = []
    blocked: set[tuple[int, ...]] = set()
    for word in space:
        if word in blocked:
            continue
        chosen.append(word)
        if d > 1:
            blocked |= sphere_enumerate(word, d - 1)
    return CodeSet(chosen, d, n, r)


def verify_code(code: CodeSet | Sequence[Sequence[int]], d: int | None = None):
    """Check that all pairs of codewords are at r-regular Ulam distance >= d.

    Returns ``(True, None)`` or ``(False, (a, b))`` with the first violating
    pair in codeword order.
    """
    words = [as_tuple(c) for c in (code.codewords if isinstance(code, CodeSet) else code)]
    if d is None:
        d = code.min_distance if isinstance(code, CodeSet) else 1
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            u, v = words[a], words[b]
            if len(u) - lcs_length(u, v) < d:
                return False, (u, v)
    return True, None
