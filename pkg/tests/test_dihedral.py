from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minroots.core import INF
from minroots.cyclo import embed, get_ring, sign
from minroots.dihedral import coeff_C, coeff_C_closed, dihedral_depth, dihedral_system
from minroots.oracle import realization_matrices, apply
from minroots.catalog import dihedral
from minroots.table import NEG, PLUS


def _coords(m):
    return {d.k: d.coeffs for d in dihedral_system(0, 1, m)}


def _by_value(m):
    return sorted((tuple(float(x) for x in d.coeffs) for d in dihedral_system(0, 1, m)))


def test_m3_table():
    # alpha, beta, t alpha = s beta = alpha + beta
    assert _by_value(3) == [(0.0, 1.0), (1.0, 0.0), (1.0, 1.0)]


def test_m4_table_from_the_text():
    r = get_ring(4)
    s2 = embed(4, r)
    got = {d.coeffs for d in dihedral_system(0, 1, 4)}
    assert got == {(r.one, r.zero), (r.zero, r.one), (r.one, s2), (s2, r.one)}


def test_m6_table_from_the_text():
    r = get_ring(6)
    s3 = embed(6, r)
    got = {d.coeffs for d in dihedral_system(0, 1, 6)}
    want = {(r.one, r.zero), (r.zero, r.one), (r.one, s3), (s3, r.one), (r.const(2), s3), (s3, r.const(2))}
    assert got == want


def test_m5_table_up_to_orientation():
    r = get_ring(5)
    th = embed(5, r)
    got = {frozenset((a.render(), b.render())) for a, b in (d.coeffs for d in dihedral_system(0, 1, 5))}
    want = {frozenset(p) for p in [("1", "0"), ("0", "1"), ("1", th.render()), (th.render(), th.render())]}
    assert got == want
    # orientation: t alpha = alpha + theta beta
    t_alpha = [d for d in dihedral_system(0, 1, 5) if d.k == 3][0]
    assert t_alpha.coeffs == (r.one, th)


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8, 12])
def test_roots_agree_with_reflection_closure(m):
    # reflect alpha and beta through the matrices until nothing new appears
    sys = dihedral(m)
    ring = get_ring(m)
    M = realization_matrices(sys, ring)
    seen = set()
    frontier = [(ring.one, ring.zero), (ring.zero, ring.one)]
    while frontier:
        v = frontier.pop()
        if v in seen or any(sign(x) < 0 for x in v):
            continue
        seen.add(v)
        frontier += [apply(M[s], v) for s in (0, 1)]
    assert seen == {d.coeffs for d in dihedral_system(0, 1, m)}


@pytest.mark.parametrize("m", [3, 4, 5, 7, 10])
def test_images_match_matrices(m):
    ring = get_ring(m)
    M = realization_matrices(dihedral(m), ring)
    roots = dihedral_system(0, 1, m)
    for d in roots:
        for s, img in ((0, d.s_image), (1, d.t_image)):
            v = apply(M[s], d.coeffs)
            if img == NEG:
                assert any(sign(x) < 0 for x in v)
            else:
                assert v == roots[img].coeffs


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 9])
def test_depth_is_distance_to_a_simple_root(m):
    roots = dihedral_system(0, 1, m)
    dist = {0: 1, m - 1: 1}
    frontier = [0, m - 1]
    while frontier:
        nxt = []
        for k in frontier:
            for img in (roots[k].s_image, roots[k].t_image):
                if img >= 0 and img not in dist:
                    dist[img] = dist[k] + 1
                    nxt.append(img)
        frontier = nxt
    assert {k: roots[k].depth for k in range(m)} == dist


def test_first_depth_four_root_is_at_m7():
    assert max(d.depth for d in dihedral_system(0, 1, 6)) == 3
    assert max(d.depth for d in dihedral_system(0, 1, 7)) == 4
    assert dihedral_depth(3, 7) == 4


def test_infinite_edge_has_two_minimal_roots():
    roots = dihedral_system(0, 1, INF)
    assert len(roots) == 2
    assert (roots[0].s_image, roots[0].t_image) == (NEG, PLUS)
    assert (roots[1].s_image, roots[1].t_image) == (PLUS, NEG)


def test_infinite_C_grows_linearly():
    # c = 2, so C_n = n
    assert [int(coeff_C(n, INF)) for n in range(8)] == list(range(8))


@given(st.integers(2, 30).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))))
@settings(max_examples=200, deadline=None)
def test_closed_form_matches_recurrence(mn):
    m, n = mn
    assert coeff_C(n, m) == coeff_C_closed(n, m)


@given(st.integers(2, 30).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))))
@settings(max_examples=200, deadline=None)
def test_C_is_a_ratio_of_sines(mn):
    m, n = mn
    assert math.isclose(float(coeff_C(n, m)), math.sin(math.pi * n / m) / math.sin(math.pi / m), abs_tol=1e-9)


@pytest.mark.parametrize("m", range(2, 31))
def test_C_increases_exactly_up_to_half(m):
    # C_n - C_{n-1} is proportional to cos(pi (2n - 1) / 2m), positive iff 2n <= m
    for n in range(1, m + 1):
        d = sign(coeff_C(n, m) - coeff_C(n - 1, m))
        assert (d > 0) == (2 * n <= m), (m, n)
