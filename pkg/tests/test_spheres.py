import pytest
from hypothesis import given, strategies as st

from mpulam import (
    Translocation,
    alternating_runs,
    duplication_set_D,
    duplication_set_E_bruteforce,
    duplication_set_E_size,
    omega_center,
    sphere_enumerate,
    sphere_size_radius1,
    unique_translocations,
)
from mpulam.spheres import alternating_pairs, duplication_set_D_size, extremal_center_scan
from oracles import bfs_all_moves, divisors, e_star, space_by_projection

EXAMPLE = (1, 1, 1, 2, 3, 2, 3, 2, 4, 4, 3, 4)


@st.composite
def multiperms(draw, max_k=4, max_r=3):
    k = draw(st.integers(1, max_k))
    r = draw(st.integers(1, max_r))
    return tuple(draw(st.permutations([s for s in range(1, k + 1) for _ in range(r)]))), r


@pytest.mark.parametrize("n", range(1, 10))
def test_unique_translocation_count(n):
    assert len(unique_translocations(n)) == 1 + (n - 1) ** 2
    assert Translocation.identity() in unique_translocations(n)


def test_example_center_counts():
    report = sphere_size_radius1(EXAMPLE, 3)
    assert (report.size_T, report.size_D, report.size_E) == (122, 48, 2)
    assert report.sphere_size_formula == report.sphere_size_enumerated == 72
    assert report.to_dict()["center"] == "1,1,1,2,3,2,3,2,4,4,3,4"


def test_example_runs():
    runs = [(run.start, run.end) for run in alternating_runs(EXAMPLE) if len(run) >= 4]
    assert runs == [(4, 8)]
    assert alternating_pairs(EXAMPLE) == frozenset(e_star(EXAMPLE))


@given(multiperms())
def test_d_size_rule_matches_set(mr):
    m, r = mr
    assert duplication_set_D_size(m, r) == len(duplication_set_D(m))


@given(multiperms())
def test_e_size_matches_literal(mr):
    m, _ = mr
    assert duplication_set_E_size(m) == len(duplication_set_E_bruteforce(m)) == len(e_star(m))
    assert not duplication_set_D(m) & duplication_set_E_bruteforce(m)


@given(multiperms())
def test_radius1_formula_matches_oracle(mr):
    m, r = mr
    report = sphere_size_radius1(m, r)
    assert report.sphere_size_formula == len(bfs_all_moves(m, 1))
    assert report.agrees


@pytest.mark.parametrize("n,r", [(4, 2), (6, 2), (6, 3), (6, 1)])
def test_sphere_enumerate_matches_oracle(n, r):
    for m in space_by_projection(n, r)[:20]:
        for t in range(3):
            assert sphere_enumerate(m, t) == frozenset(bfs_all_moves(m, t))


def test_omega_center():
    omega, m = omega_center(6, 2)
    assert m.symbols == (1, 2, 3, 1, 2, 3)
    assert sorted(omega.images) == list(range(1, 7))
    _, m = omega_center(9, 3)
    assert m.symbols == (1, 2, 3) * 3


@pytest.mark.parametrize("n", range(3, 10))
def test_omega_attains_closed_form(n):
    for r in divisors(n):
        if n // r > 2:
            _, m = omega_center(n, r)
            assert len(bfs_all_moves(m.symbols, 1)) == 1 + (n - 1) ** 2 - (r - 1) * n


def test_scan_at_six_three_has_no_closed_form_max():
    # with two symbols the interleaved center is not the largest sphere
    scan = extremal_center_scan(6, 3, 1)
    assert (scan.min_size, scan.max_size) == (6, 11)
    _, m = omega_center(6, 3)
    assert len(bfs_all_moves(m.symbols, 1)) == 10
