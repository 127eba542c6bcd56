"""Radius-1 spheres around arbitrary centers via duplicate-translocation sets.

The size of the radius-1 sphere around m is ``|T_n| - |D(m)| - |E(m)|``,
where T_n drops the redundant moves phi(i, i-1), D(m) collects moves that
repeat another move because of equal symbols, and E(m) collects the extra
coincidences inside alternating runs (a, b, a, b, ...).  Every function that
evaluates the formula also has an enumerating counterpart so the two can be
compared.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from functools import lru_cache

from .core import (
    Multipermutation,
    Permutation,
    Translocation,
    as_tuple,
    check_divides,
    format_sequence,
    infer_regularity,
    project,
    translocate,
)
from .exceptions import CapacityError, ParameterError

#: Largest number of states ``sphere_enumerate`` may visit.
DEFAULT_SPHERE_STATE_CAP = 2 * 10**6


@dataclass(frozen=True)
class AlternatingRun:
    """A locally maximal alternating substring ``m[start..end]`` (1-based, inclusive)."""

    start: int
    end: int
    substring: tuple[int, ...]

    def __len__(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class DuplicationReport:
    n: int
    r: int
    center: tuple[int, ...]
    size_T: int
    size_D: int
    size_E: int
    sphere_size_formula: int
    sphere_size_enumerated: int

    @property
    def agrees(self) -> bool:
        return self.sphere_size_formula == self.sphere_size_enumerated

    def to_dict(self) -> dict:
        out = asdict(self)
        out["center"] = format_sequence(self.center)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@lru_cache(maxsize=64)
def translocation_moves(n: int) -> tuple[tuple[int, int], ...]:
    """The non-identity members of T_n as ``(i, j)`` pairs, row-major order."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j and i - j != 1)


def unique_translocations(n: int) -> frozenset[Translocation]:
    """T_n: every phi(i, j) with i - j != 1, identities collapsed to one element."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    return frozenset([Translocation.identity()] + [Translocation(i, j) for i, j in translocation_moves(n)])


def radius1_products(m) -> set[tuple[int, ...]]:
    """``{m . phi : phi in T_n}``, i.e. the radius-1 sphere by enumeration."""
    values = as_tuple(m)
    out = {values}
    for i, j in translocation_moves(len(values)):
        out.add(translocate(values, i, j))
    return out


def _repeat_flags(values: tuple) -> list[bool]:
    # flags[i-1] is True when m(i) == m(i-1); position 1 never repeats.
    return [False] + [values[p] == values[p - 1] for p in range(1, len(values))]


def duplication_set_D(m) -> frozenset[Translocation]:
    """Standard duplicate translocations of m.

    For a position whose symbol repeats its left neighbour every non-identity
    move of that entry is a duplicate (n - 2 of them); for any other position,
    including the first, the moves landing on an equal symbol are duplicates
    (r - 1 of them).
    """
    values = as_tuple(m)
    repeats = _repeat_flags(values)
    out = set()
    for i, j in translocation_moves(len(values)):
        if repeats[i - 1] or values[j - 1] == values[i - 1]:
            out.add(Translocation(i, j))
    return frozenset(out)


def duplication_set_D_size(m, r: int | None = None) -> int:
    """|D(m)| = (n - 2)*A + (r - 1)*(n - A), A = number of repeated positions."""
    values = as_tuple(m)
    n = len(values)
    r = infer_regularity(values) if r is None else r
    repeated = sum(_repeat_flags(values))
    return (n - 2) * repeated + (r - 1) * (n - repeated)


def is_alternating(seq) -> bool:
    """True for singletons and for ``(a, b, a, b, ...)`` with a != b."""
    seq = tuple(seq)
    if len(seq) <= 1:
        return True
    if seq[0] == seq[1]:
        return False
    return all(seq[p] == seq[p % 2] for p in range(len(seq)))


def alternating_runs(m) -> list[AlternatingRun]:
    """All locally maximal alternating substrings of m, left to right.

    Consecutive runs of length >= 2 share at most their boundary index; an
    index with equal neighbours on both sides forms a singleton run.
    """
    values = as_tuple(m)
    n = len(values)
    runs = []
    s = 0
    while s < n:
        e = s
        while e + 1 < n and values[e] != values[e + 1] and (e == s or values[e + 1] == values[e - 1]):
            e += 1
        runs.append(AlternatingRun(s + 1, e + 1, values[s : e + 1]))
        if e == n - 1:
            break
        # an unequal neighbour pair starts a new run at e; an equal one at e + 1
        s = e if values[e] != values[e + 1] else e + 1
    return runs


def _run_contribution(k: int) -> int:
    if k < 4:
        return 0
    if k % 2 == 0:
        return ((k - 2) // 2) ** 2
    return ((k - 3) // 2) * ((k - 1) // 2)


def duplication_set_E_size(m) -> int:
    """|E(m)| from the lengths of the locally maximal alternating runs."""
    return sum(_run_contribution(len(run)) for run in alternating_runs(m))


def alternating_pairs(m) -> frozenset[tuple[int, int]]:
    """E*(m): index pairs (i, j) with m[i..j] alternating, of even length >= 4."""
    values = as_tuple(m)
    n = len(values)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 3, n + 1, 2)
        if is_alternating(values[i - 1 : j])
    )


def duplication_set_E_bruteforce(m) -> frozenset[Translocation]:
    """E(m) by its literal membership test over pairs of moves in T_n minus D(m).

    O(n^3) comparisons of length-n tuples; intended for small n.
    """
    values = as_tuple(m)
    n = len(values)
    dset = {(phi.i, phi.j) for phi in duplication_set_D(values)}
    allowed = {move: translocate(values, *move) for move in translocation_moves(n) if move not in dset}
    out = set()
    for (i, j), product in allowed.items():
        if i >= j:
            continue
        for k in range(i, j - 1):
            other = allowed.get((j, k))
            if other is not None and other == product:
                out.add(Translocation(i, j))
                break
    return frozenset(out)


def sphere_size_radius1(m, r: int | None = None) -> DuplicationReport:
    """Radius-1 sphere size by the duplication formula and by enumeration."""
    values = as_tuple(m)
    if isinstance(m, Multipermutation):
        r = m.r
    r = infer_regularity(values) if r is None else r
    n = len(values)
    size_T = 1 + (n - 1) ** 2
    size_D = duplication_set_D_size(values, r)
    size_E = duplication_set_E_size(values)
    return DuplicationReport(
        n=n,
        r=r,
        center=values,
        size_T=size_T,
        size_D=size_D,
        size_E=size_E,
        sphere_size_formula=size_T - size_D - size_E,
        sphere_size_enumerated=len(radius1_products(values)),
    )


def sphere_enumerate(m, t: int, cap: int = DEFAULT_SPHERE_STATE_CAP) -> frozenset[tuple[int, ...]]:
    """Every tuple reachable from m with at most t translocations (plain tuples)."""
    if t < 0:
        raise ParameterError(f"radius must be >= 0, got {t}")
    values = as_tuple(m)
    moves = translocation_moves(len(values))
    seen = {values}
    frontier = [values]
    for _ in range(t):
        nxt = []
        for state in frontier:
            for i, j in moves:
                cand = translocate(state, i, j)
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        if len(seen) > cap:
            raise CapacityError(f"sphere enumeration visited {len(seen)} states (cap {cap})")
        if not nxt:
            break
        frontier = nxt
    return frozenset(seen)


def omega_center(n: int, r: int) -> tuple[Permutation, Multipermutation]:
    """The interleaving center whose projection cycles 1, 2, ..., n/r repeatedly."""
    check_divides(n, r)
    k = n // r
    omega = Permutation(tuple(((i - 1) % k) * r - (-i * r // n) for i in range(1, n + 1)))
    return omega, project(omega, r)


@dataclass(frozen=True)
class ExtremalScan:
    n: int
    r: int
    t: int
    min_center: tuple[int, ...]
    min_size: int
    max_center: tuple[int, ...]
    max_size: int

    def to_dict(self) -> dict:
        out = asdict(self)
        out["min_center"] = format_sequence(self.min_center)
        out["max_center"] = format_sequence(self.max_center)
        return out


def extremal_center_scan(n: int, r: int, t: int = 1, workers: int = 1) -> ExtremalScan:
    """Exhaustive argmin/argmax of the radius-t sphere size over all centers.

    Ties go to the lexicographically smallest center.
    """
    from .enumeration import sphere_sizes_by_center

    check_divides(n, r)
    sizes = sphere_sizes_by_center(n, r, t, workers)
    # centers arrive in lexicographic order, so strict comparisons keep the first
    min_center, min_size = sizes[0]
    max_center, max_size = sizes[0]
    for center, size in sizes[1:]:
        if size < min_size:
            min_center, min_size = center, size
        if size > max_size:
            max_center, max_size = center, size
    return ExtremalScan(n, r, t, min_center, min_size, max_center, max_size)
