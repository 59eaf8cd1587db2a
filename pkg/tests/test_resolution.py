"""Associated graded ideal, double complex, mapping cone, Betti numbers."""

import pytest

from transferideals import QQ
from transferideals.resolution import (
    HookTableauBasis,
    associated_graded_ideal,
    betti_crosscheck,
    betti_table_text,
    build_F,
    build_G,
    chain_map_identity,
    comparison_map,
    double_complex_identities,
    expected_betti,
    koszul_complex,
    mapping_cone,
    prime_ring,
    homogenized_minors_gb_check,
    verify_resolution,
)


def test_associated_graded_ideal_p3():
    I = associated_graded_ideal(3, QQ)
    gens = sorted(str(g) for g in I.gens)
    assert gens == ["-e2*e4 + e1*e5", "e4*e5", "e4^2", "e5^2"]


@pytest.mark.parametrize("p,ngens", [(3, 4), (5, 16)])
def test_homogenized_minors_groebner(p, ngens):
    res = homogenized_minors_gb_check(p, QQ)
    assert res["pass"]
    assert res["generators"] == ngens


def test_koszul_complex_ranks():
    R = prime_ring(3, QQ)
    K = koszul_complex(R)
    assert K.ranks() == [1, 4, 6, 4, 1]
    assert K.d_squared_zero()


def test_hook_tableau_dimensions():
    # shape (2, 1^{k}) over an m-dimensional space: (k+1) * C(m+1, k+2)
    for k, m, expected in [(1, 3, 8), (1, 2, 2), (2, 3, 3)]:
        basis = HookTableauBasis(k, m, QQ)
        assert basis.dim() == expected
        assert basis.hook_formula() == expected


def test_F_and_G_ranks_p3():
    F = build_F(3, QQ)
    assert F.ranks() == [1, 2, 1]
    G = build_G(3, QQ)
    assert G.ranks() == [1, 3, 2]
    assert F.d_squared_zero()
    assert G.d_squared_zero()


def test_double_complex_identities():
    for p in (3, 4):
        assert double_complex_identities(p, QQ)


def test_chain_map_and_cone_p4():
    F = build_F(4, QQ)
    G = build_G(4, QQ)
    phis = comparison_map(4, F, G, QQ)
    assert chain_map_identity(F, G, phis)
    cone = mapping_cone(F, G, phis)
    assert cone.d_squared_zero()


@pytest.mark.parametrize(
    "p,betti",
    [
        (3, [1, 4, 4, 1]),
        (4, [1, 9, 18, 15, 6, 1]),
        (5, [1, 16, 48, 68, 56, 28, 8, 1]),
    ],
)
def test_resolution_report(p, betti):
    res = verify_resolution(p, degree_bound=6)
    assert res["pass"]
    assert res["betti"] == betti
    assert res["pdim"] == 2 * p - 3
    assert res["betti"] == expected_betti(p)
    assert res["exact"]
    assert res["minimal"]
    assert res["linear"]


@pytest.mark.parametrize("p", [3, 4])
def test_betti_crosscheck(p):
    res = betti_crosscheck(p)
    assert res["pass"]
    assert res["betti"] == expected_betti(p)


def test_betti_table_text():
    text = betti_table_text([1, 4, 4, 1], 3)
    assert "total:" in text
    lines = text.splitlines()
    assert lines[-1].split()[1:] == ["1", "4", "4", "1"]
