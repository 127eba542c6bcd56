"""Exhaustive and seeded-random invariant sweeps, as used by ``mpulam verify``.

Each suite walks instances in increasing n and lexicographic order and stops
at the first failure, so the reported counterexample is the smallest one the
sweep can reach.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from .bounds import SINGLE_ERROR_MIN_DISTANCE, gv_lower, greedy_code, sphere_packing_upper, verify_code
from .core import (
    Permutation,
    check_divides,
    equivalence_class_size,
    format_sequence,
    identity_multipermutation,
    project,
    translocate,
)
from .enumeration import enumerate_space, space_size
from .metric import (
    DEFAULT_CLASS_PAIR_CAP,
    bfs_distances,
    class_min_distance_oracle,
    lcs_length,
    longest_nondecreasing_length,
)
from .spheres import (
    duplication_set_D,
    duplication_set_E_bruteforce,
    duplication_set_E_size,
    radius1_products,
    sphere_size_radius1,
    translocation_moves,
)
from .tableaux import (
    count_content_tableaux,
    hook_length_count,
    partitions_with_min_first_part,
    rsk,
    sphere_size_identity,
)

SUITES = ("metric", "rsk", "spheres", "bounds")

EXAMPLE_CENTER = (1, 1, 1, 2, 3, 2, 3, 2, 4, 4, 3, 4)


class _Failure(Exception):
    def __init__(self, check: str, example: str):
        super().__init__(f"{check}: {example}")
        self.check = check
        self.example = example


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    seconds: float
    failed_check: str | None = None
    counterexample: str | None = None
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "seconds": round(self.seconds, 3),
            "failed_check": self.failed_check,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }


def divisors(n: int) -> list[int]:
    return [r for r in range(1, n + 1) if n % r == 0]


def _fmt(*seqs) -> str:
    return " | ".join(format_sequence(s) for s in seqs)


class _Counter:
    def __init__(self):
        self.checks = 0

    def require(self, condition: bool, check: str, *example):
        self.checks += 1
        if not condition:
            raise _Failure(check, _fmt(*example) if example else "")


def _run(name: str, body, *args) -> SuiteResult:
    counter = _Counter()
    notes: dict = {}
    start = time.perf_counter()
    try:
        body(counter, notes, *args)
    except _Failure as exc:
        return SuiteResult(name, False, counter.checks, time.perf_counter() - start, exc.check, exc.example, notes)
    return SuiteResult(name, True, counter.checks, time.perf_counter() - start, notes=notes)


def pairwise_distances(points) -> np.ndarray:
    n = len(points[0])
    size = len(points)
    out = np.zeros((size, size), dtype=np.int64)
    for a in range(size):
        for b in range(a + 1, size):
            out[a, b] = out[b, a] = n - lcs_length(points[a], points[b])
    return out


def triangle_violation(matrix: np.ndarray) -> tuple[int, int, int] | None:
    """First ``(a, x, b)`` with d(a, b) > d(a, x) + d(x, b), or None."""
    for x in range(len(matrix)):
        bad = matrix > matrix[:, x : x + 1] + matrix[x : x + 1, :]
        if bad.any():
            a, b = map(int, np.argwhere(bad)[0])
            return a, x, b
    return None


def non_left_invariance_pair(n: int, r: int) -> tuple[Permutation, Permutation]:
    """The (sigma', pi') pair showing the r-regular distance is not left invariant."""
    check_divides(n, r)
    if r < 2 or n // r < 2:
        raise ValueError("needs r >= 2 and n/r >= 2")
    tail = list(range(2 * r + 1, n + 1))
    sigma = list(range(2 * r, 0, -1)) + tail
    pi = [v for k in range(1, r + 1) for v in (k, r + k)] + tail
    return Permutation(tuple(sigma)), Permutation(tuple(pi))


def _metric_suite(c: _Counter, notes: dict, n_max: int, seed: int, samples: int):
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        for r in divisors(n):
            space = list(enumerate_space(n, r))
            if n <= 6:
                matrix = pairwise_distances(space)
                zero_bad = np.argwhere((matrix == 0) != np.eye(len(space), dtype=bool))
                c.require(not len(zero_bad), "distance zero iff equal", *(space[k] for k in (zero_bad[:1].ravel())))
                asym = np.argwhere(matrix != matrix.T)
                c.require(not len(asym), "symmetry", *(space[k] for k in (asym[:1].ravel())))
                bad = triangle_violation(matrix)
                c.require(bad is None, "triangle inequality", *(space[k] for k in (bad or ())))
            if n <= 5:
                for a in space:
                    dist = bfs_distances(a)
                    for b in space:
                        c.require(dist[b] == n - lcs_length(a, b), "n - LCS equals BFS translocation distance", a, b)
            pairs = equivalence_class_size(n, r) ** 2
            if pairs <= DEFAULT_CLASS_PAIR_CAP and n <= 5:
                perms = [Permutation(tuple(p)) for p in enumerate_space(n, 1)]
                reps = {}
                for p in perms:
                    reps.setdefault(project(p, r).symbols, p)
                for ma, pa in reps.items():
                    for mb, pb in reps.items():
                        c.require(
                            class_min_distance_oracle(pa, pb, r) == n - lcs_length(ma, mb),
                            "class-minimum Ulam distance equals n - LCS",
                            ma,
                            mb,
                        )
    for n in range(4, n_max + 1):
        for r in divisors(n):
            if r >= 2 and n // r >= 2:
                sigma, pi = non_left_invariance_pair(n, r)
                e = Permutation.identity(n)
                d1 = n - lcs_length(project(e, r).symbols, project(sigma, r).symbols)
                d2 = n - lcs_length(project(pi, r).symbols, project(pi * sigma, r).symbols)
                c.require(d1 == r and d2 == 1, "non-left-invariance construction", sigma, pi)
    for _ in range(samples):
        n = rng.choice([n for n in range(2, n_max + 1)] or [1])
        perm = list(range(1, n + 1))
        s, p, t = (tuple(rng.sample(perm, n)) for _ in range(3))
        ts = tuple(t[v - 1] for v in s)
        tp = tuple(t[v - 1] for v in p)
        c.require(lcs_length(s, p) == lcs_length(ts, tp), "left invariance at r = 1", s, p, t)


def _rsk_suite(c: _Counter, notes: dict, n_max: int):
    for n in range(1, n_max + 1):
        for r in divisors(n):
            space = list(enumerate_space(n, r))
            seen = set()
            for m in space:
                p, q = rsk(m)
                c.require(p.num_columns == longest_nondecreasing_length(m), "columns of P = longest nondecreasing", m)
                c.require(p.shape == q.shape and q.is_standard(), "RSK pair shape", m)
                key = (p.rows, q.rows)
                c.require(key not in seen, "RSK injective", m)
                seen.add(key)
            mass = sum(hook_length_count(l) * count_content_tableaux(l, r) for l in partitions_with_min_first_part(n, 1))
            c.require(mass == space_size(n, r), "mass identity", (n, r))
            center = identity_multipermutation(n, r).symbols
            dist = bfs_distances(center)
            for t in range(n):
                bfs = sum(1 for v in dist.values() if v <= t)
                c.require(sphere_size_identity(n, r, t) == bfs, "identity sphere = BFS sphere", (n, r, t))


def _spheres_suite(c: _Counter, notes: dict, n_max: int):
    for n in range(1, n_max + 1):
        moves = translocation_moves(n)
        for r in divisors(n):
            for m in enumerate_space(n, r):
                dset = {(p.i, p.j) for p in duplication_set_D(m)}
                eset = {(p.i, p.j) for p in duplication_set_E_bruteforce(m)}
                full = radius1_products(m)
                reduced = {m} | {translocate(m, i, j) for i, j in moves if (i, j) not in dset}
                c.require(full == reduced, "products over T_n equal products over T_n minus D", m)
                kept = [translocate(m, i, j) for i, j in moves if (i, j) not in dset and (i, j) not in eset]
                kept.append(m)
                c.require(len(set(kept)) == len(kept), "injective on T_n minus D*", m)
                c.require(not (dset & eset), "D and E disjoint", m)
                c.require(len(eset) == duplication_set_E_size(m), "|E| from runs equals literal E", m)
                report = sphere_size_radius1(m, r)
                c.require(report.agrees, "radius-1 formula equals enumeration", m)
    report = sphere_size_radius1(EXAMPLE_CENTER, 3)
    notes["example_center"] = format_sequence(EXAMPLE_CENTER)
    notes["size_D"] = report.size_D
    notes["size_E"] = report.size_E
    notes["enumerated_sphere_size"] = report.sphere_size_enumerated
    notes["with_plus_one"] = report.size_T - report.size_D - report.size_E
    notes["without_plus_one"] = (report.n - 1) ** 2 - report.size_D - report.size_E
    c.require(report.agrees, "radius-1 formula equals enumeration at the 12-symbol example", EXAMPLE_CENTER)


def _bounds_suite(c: _Counter, notes: dict, n_max: int):
    for n in range(1, n_max + 1):
        for r in divisors(n):
            if space_size(n, r) > 3000:
                continue
            for d in range(1, n):
                code = greedy_code(n, r, d)
                ok, pair = verify_code(code, d)
                c.require(ok, "greedy code verifies", *(pair or ()))
                for word in enumerate_space(n, r):
                    if word not in code.codewords:
                        near = any(n - lcs_length(word, w) < d for w in code.codewords)
                        c.require(near, "greedy code is maximal", word)
                if n // r != 2:
                    c.require(len(code) >= gv_lower(n, r, d).bound_integer, "greedy meets GV bound", (n, r, d))
                if d >= SINGLE_ERROR_MIN_DISTANCE:
                    c.require(len(code) <= sphere_packing_upper(n, r).bound_integer, "sphere-packing bound", (n, r, d))


def run_suite(name: str, n_max: int, seed: int = 0, samples: int = 200) -> SuiteResult:
    if name == "metric":
        return _run(name, _metric_suite, n_max, seed, samples)
    if name == "rsk":
        return _run(name, _rsk_suite, n_max)
    if name == "spheres":
        return _run(name, _spheres_suite, n_max)
    if name == "bounds":
        return _run(name, _bounds_suite, n_max)
    raise ValueError(f"unknown suite {name!r}")
