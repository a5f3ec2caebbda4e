"""Truncated simplicial sets, monotone actions, and the homology engine."""

import math
import random

from hammock_lab import corpus as C
from hammock_lab import sset as S
from hammock_lab.fincat import monotone_maps, nerve


def test_standard_simplex_counts():
    x = S.standard_simplex(2, 3)
    assert x.level_counts() == [
        math.comb(n + 3, n + 1) for n in range(4)
    ] == [3, 6, 10, 15]
    assert not S.validate_sset(x)


def test_boundary_simplex_counts_and_pi0():
    b = S.boundary_simplex(2, 2)
    # only the full-image 2-simplex (0,1,2) is dropped
    assert b.level_counts() == [3, 6, 9]
    assert not S.validate_sset(b)
    assert len(S.pi0(b)[0]) == 1
    assert len(S.pi0(S.discrete(["x", "y"], 2))[0]) == 2


def test_monotone_action_is_precomposition_on_simplices():
    # on a standard simplex the contravariant action by vals: [m] -> [n]
    # must send the simplex t: [n] -> [p] to t o vals
    x = S.standard_simplex(2, 3)
    for m in range(4):
        for n in range(4):
            for vals in monotone_maps(m, n):
                action = S.monotone_action(x, vals, m, n)
                for t in x.level(n):
                    assert action[t] == tuple(t[v] for v in vals)


def test_homology_oracles():
    nz = nerve(C.z2_category(), 3)
    h1 = S.homology(nz, 1)
    assert h1["torsion"] == [2] and h1["free_rank"] == 0 and h1["reliable"]
    h2 = S.homology(nz, 2)
    assert h2["torsion"] == [] and h2["free_rank"] == 0 and h2["reliable"]
    b = S.boundary_simplex(2, 3)
    hb = S.homology(b, 1)
    assert hb["torsion"] == [] and hb["free_rank"] == 1 and hb["reliable"]
    assert S.is_homology_point(S.standard_simplex(3, 3), 2)


def test_smith_normal_form_transforms_verified():
    rng = random.Random(7)
    for _ in range(10):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        invariants, u, v = S.smith_normal_form(m)
        assert S.det_unimodular(u) in (1, -1)
        assert S.det_unimodular(v) in (1, -1)
        d = S.mat_mul(S.mat_mul(u, m), v)
        for i in range(rows):
            for j in range(cols):
                if i == j and i < len(invariants):
                    assert d[i][j] == invariants[i]
                else:
                    assert d[i][j] == 0
        for a, b in zip(invariants, invariants[1:]):
            assert b % a == 0


def test_invariant_factors_sparse_matches_dense():
    rng = random.Random(11)
    for _ in range(10):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = [
            [rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(cols)]
            for _ in range(rows)
        ]
        sparse = [
            {i: m[i][j] for i in range(rows) if m[i][j]} for j in range(cols)
        ]
        assert S.invariant_factors(m) == S.invariant_factors(sparse)


def test_invariant_factors_matches_witnessed_snf():
    rng = random.Random(3)
    for _ in range(100):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        inv, _, _ = S.smith_normal_form(m)
        assert tuple(sorted(S.invariant_factors(m))) == tuple(sorted(inv))


def test_kan_check():
    assert S.kan_check(nerve(C.z2_category(), 3), 2)["pass"]
    rep = S.kan_check(S.boundary_simplex(2, 2), 2)
    assert not rep["pass"] and rep["unfilled"]


def test_weq_evidence():
    x = S.standard_simplex(1, 2)
    assert S.weq_evidence(S.identity_map(x), 1)
    b = S.boundary_simplex(2, 2)
    pt = S.standard_simplex(0, 2)
    include = S.SSetMap(
        pt, b, {n: {sx: (0,) * (n + 1) for sx in pt.level(n)} for n in range(3)}
    )
    assert not S.sset_map_violations(include)
    assert not S.weq_evidence(include, 1)


def test_external_product_and_diagonal():
    x = S.standard_simplex(1, 2)
    pt = S.standard_simplex(0, 2)
    bx = S.external_product(pt, x)
    assert not S.validate_bisset(bx)
    diag = S.diagonal(bx)
    assert diag.level_counts() == x.level_counts()
    assert not S.validate_sset(diag)


def test_normalized_chain_counts():
    b = S.boundary_simplex(2, 2)
    c = S.normalized_chain_complex(b)
    assert c.ranks == [3, 3, 0]


def test_pi0_map_on_components():
    two = S.discrete(["x", "y"], 1)
    pt = S.standard_simplex(0, 1)
    collapse = S.SSetMap(
        two, pt, {n: {sx: (0,) * (n + 1) for sx in two.level(n)} for n in range(2)}
    )
    assert not S.pi0_bijective(collapse)
