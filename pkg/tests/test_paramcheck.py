"""Parametrization pipeline: gradings, kernel, initial algebra, psi/phi."""

import pytest

from transferideals import QQ, ideal_equal
from transferideals.paramcheck import (
    ParamHom,
    dim_initial_algebra,
    factorize,
    initial_algebra_member,
    initial_algebra_monomials,
    kernel_ideal,
    monomial_multidegree,
    multidegrees_upto,
    phi_inverse,
    psi,
    s_monomials_of_multidegree,
    verify_q2_conjecture,
)
from transferideals.transfer import (
    TransferFamily,
    has_large_gap,
)


def test_hom_is_graded():
    for p in (3, 4, 5):
        assert ParamHom(p, QQ).is_homogeneous()


def test_kernel_equals_elimination_p3():
    ker = kernel_ideal(3)
    assert len(ker.gens) == 4
    I = TransferFamily(3, 2, 0, QQ).elimination_ideal()
    assert ideal_equal(ker, I)


def test_initial_algebra_membership():
    p = 3
    # u1 * a^3: a mixed multidegree, always in
    assert initial_algebra_member((1, 0, 0, 3), p)
    # a^2: pure eps_p with a-exponent above the u_p exponent: out
    assert not initial_algebra_member((0, 0, 0, 2), p)
    # u_p^2 * a: in
    assert initial_algebra_member((0, 0, 2, 1), p)


def test_dimension_closed_form():
    p = 3
    assert dim_initial_algebra(p, (1, 1, 3)) == 4
    assert dim_initial_algebra(p, (0, 0, 4)) == 3
    for d in multidegrees_upto(p, 5):
        assert len(initial_algebra_monomials(p, d)) == dim_initial_algebra(
            p, d
        )


def test_monomial_multidegree():
    assert monomial_multidegree((1, 0, 2, 3), 3) == (1, 0, 5)


def test_factorization_examples():
    p = 3
    # u1 u2 u3^2 a: strip u3*a, left with u1 u2 u3
    assert sorted(factorize((1, 1, 2, 1), p)) == sorted(
        [("ua", 3), ("u", 1), ("u", 2), ("u", 3)]
    )
    # pure a-power leftovers are allowed
    assert factorize((0, 0, 0, 2), p) == [("a",), ("a",)]


def test_psi_examples_p3():
    p = 3
    # u1 u2 u3^2 a -> e1 e2 e3 e6
    assert psi((1, 1, 2, 1), p) == (1, 1, 1, 0, 0, 1)
    # u1 u2 a^3 -> e3 e4 e5
    assert psi((1, 1, 0, 3), p) == (0, 0, 1, 1, 1, 0)
    # u1 u2 u3^3 -> e1 e2 e3^3
    assert psi((1, 1, 3, 0), p) == (1, 1, 3, 0, 0, 0)
    # u1 u2 u3 a^2 -> e1 e5 e6
    assert psi((1, 1, 1, 2), p) == (1, 0, 0, 0, 1, 1)


def test_psi_lands_outside_L():
    p = 3
    for d in multidegrees_upto(p, 5):
        for u in initial_algebra_monomials(p, d):
            m = psi(u, p)
            assert has_large_gap(m, p)
            # psi preserves the multidegree
            expected = list(m[:p])
            for i in range(p):
                expected[i] += m[p + i]
            expected[p - 1] += sum(m[p:])
            assert monomial_multidegree(u, p) == tuple(expected)


def test_phi_is_right_inverse_of_psi():
    p = 3
    hom = ParamHom(p, QQ)
    for d in multidegrees_upto(p, 5):
        for m in s_monomials_of_multidegree(p, d):
            if not has_large_gap(m, p):
                continue
            u = phi_inverse(m, p)
            assert psi(u, p) == m
            # u is a term of the actual image of m
            img = hom.apply(hom.source.monomial(m))
            assert u in {e for e, _ in img.terms}


@pytest.mark.parametrize("p", [3, 4])
def test_pipeline_report(p):
    res = verify_q2_conjecture(p, degree_bound=4)
    assert res["kernel_matches_elimination"]
    assert res["ideal_equal"]
    for row in res["per_degree"]:
        assert row["dim_SL"] == row["dim_SI"] == row["dim_inA"]
        assert row["psi_phi_ok"]
    assert res["pass"]
