import random
from itertools import combinations
from math import comb

import pytest

from polybetti.hochster import bigraded_betti
from polybetti.koszul import (
    StanleyReisnerData,
    _multidegree,
    koszul_basis,
    koszul_slice,
    monomial_basis,
    slice_betti,
    tor_betti_via_koszul,
)
from polybetti.verify import TABLE1

TWO_POINTS = StanleyReisnerData.from_maximal_faces(2, [(0,), (1,)])


def _sparse_compose(left, right):
    out = {}
    for (r, k), a in left.items():
        for (k2, c), b in right.items():
            if k == k2:
                out[(r, c)] = out.get((r, c), 0) + a * b
    return {rc: v for rc, v in out.items() if v}


def test_minimal_nonfaces(P, tet, octa):
    assert StanleyReisnerData.from_triangulation(tet).minimal_nonfaces == [(0, 1, 2, 3)]
    assert len(StanleyReisnerData.from_triangulation(octa).minimal_nonfaces) == 3
    sr = StanleyReisnerData.from_triangulation(P)
    assert len(sr.minimal_nonfaces) == 28
    assert all(len(f) in (2, 3) for f in sr.minimal_nonfaces)
    assert TWO_POINTS.minimal_nonfaces == [(0, 1)]


def test_monomial_basis_examples(octa):
    assert monomial_basis(TWO_POINTS, 0) == [(0, 0)]
    assert monomial_basis(TWO_POINTS, 2) == [(0, 2), (2, 0)]
    assert len(monomial_basis(StanleyReisnerData.from_triangulation(octa), 2)) == 18


def test_monomial_count_formula(P):
    sr = StanleyReisnerData.from_triangulation(P)
    sizes = [bin(f).count("1") for f in sr.faces if f]
    for t in range(1, 7):
        assert len(monomial_basis(sr, t)) == sum(comb(t - 1, s - 1) for s in sizes)


def test_two_points_slice():
    sl = koszul_slice(TWO_POINTS, 1, 2)
    assert sl.basis == (
        ((0,), (0, 1)),
        ((0,), (1, 0)),
        ((1,), (0, 1)),
        ((1,), (1, 0)),
    )
    assert sl.target_basis == (((), (0, 2)), ((), (2, 0)))
    # u1 v2 and u2 v1 are cycles; u_k v_k maps to v_k^2
    assert sl.d_out.entries == ((0, 0, 1, 0), (0, 1, 0, 0))
    assert "d_out 2x4" in sl.dump()


def test_degree_zero_slice_has_no_outgoing_map(octa):
    sr = StanleyReisnerData.from_triangulation(octa)
    sl = koszul_slice(sr, 0, 3)
    assert sl.d_out.shape == (0, len(sl.basis))


def test_slice_out_of_range(tet):
    sr = StanleyReisnerData.from_triangulation(tet)
    with pytest.raises(ValueError):
        koszul_slice(sr, 3, 2)


def test_slice_dimension_formula(octa):
    sr = StanleyReisnerData.from_triangulation(octa)
    for j in range(0, 5):
        for i in range(0, j + 1):
            assert len(koszul_slice(sr, i, j).basis) == comb(6, i) * len(monomial_basis(sr, j - i))


def test_d_squared_zero_and_homogeneous(octa, P):
    for t, max_j in ((octa, 4), (P, 3)):
        sr = StanleyReisnerData.from_triangulation(t)
        for j in range(1, max_j + 1):
            for i in range(2, j + 1):
                upper = koszul_slice(sr, i, j)
                lower = koszul_slice(sr, i - 1, j)
                assert _sparse_compose(lower.d_entries(), upper.d_entries()) == {}
                targets = upper.target_basis
                for (r, c) in upper.d_entries():
                    assert _multidegree(targets[r]) == _multidegree(upper.basis[c])


def test_dense_slice_ranks_match_blocked(octa):
    from polybetti.linalg import rank_exact

    sr = StanleyReisnerData.from_triangulation(octa)
    for j in range(0, 4):
        for i in range(0, j + 1):
            here = koszul_slice(sr, i, j)
            above = koszul_slice(sr, i + 1, j) if i + 1 <= j else None
            dim = len(here.basis)
            r_out = rank_exact(here.d_out) if i else 0
            r_in = rank_exact(above.d_out) if above else 0
            assert dim - r_out - r_in == slice_betti(sr, i, j)


def test_tetrahedron(tet):
    assert tor_betti_via_koszul(tet).values == {(0, 0): 1, (1, 4): 1}


def test_two_points_direct():
    # S^1 x S^1 type: Tor of Q[v1,v2]/(v1 v2)
    assert tor_betti_via_koszul(TWO_POINTS).values == {(0, 0): 1, (1, 2): 1}


def test_P_slice_cells(P):
    sr = StanleyReisnerData.from_triangulation(P)
    assert slice_betti(sr, 2, 4) == 4
    assert slice_betti(sr, 1, 2) == 28
    assert slice_betti(sr, 1, 3) == 0
    assert slice_betti(sr, 3, 5) == 39


def test_P_full_table(P):
    assert tor_betti_via_koszul(P).values == TABLE1


def test_requested_cells_only(P):
    b = tor_betti_via_koszul(P, cells=[(2, 4), (1, 2), (3, 3)])
    assert b.values == {(1, 2): 28, (2, 4): 4}


def test_oracle_equivalence_small(small_triangulations):
    for n, items in small_triangulations.items():
        sample = items if n <= 8 else random.Random(n).sample(items, 10)
        for r in sample:
            t = r.to_triangulation()
            assert tor_betti_via_koszul(t) == bigraded_betti(t)


def test_oracle_equivalence_random_complexes():
    # non-spherical complexes: arbitrary flag-free face families on 6 vertices
    rnd = random.Random(11)
    for _ in range(20):
        faces = [tuple(sorted(rnd.sample(range(6), rnd.randint(1, 3)))) for _ in range(rnd.randint(1, 6))]
        sr = StanleyReisnerData.from_maximal_faces(6, faces)
        via_slices = {}
        for j in range(0, 7):
            for i in range(0, j + 1):
                v = slice_betti(sr, i, j)
                if v:
                    via_slices[(i, j)] = v
        assert tor_betti_via_koszul(sr).values == via_slices
