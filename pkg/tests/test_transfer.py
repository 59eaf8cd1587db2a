"""Transfer families, elimination ideals, minors, and gap combinatorics."""

import pytest

from transferideals import GF, QQ, IdealBasis, ideal_contains, ideal_equal
from transferideals.transfer import (
    TransferFamily,
    build_A,
    build_A_prime,
    check_stability,
    columns_match,
    gap_membership_report,
    has_large_gap,
    ideal_L,
    iota_map,
    maximal_minors,
    sum_of_minors_generators,
    transfer_image_sanity,
    typed_minors,
    verify_antidiagonal_lead,
)


def test_family_shape_p3_q2():
    fam = TransferFamily(3, 2, 0, QQ)
    polys = [str(f) for f in fam.polys]
    assert polys == ["t^2 + t*e3 + e6", "t*e1 + e4", "t*e2 + e5"]


def test_family_degrees_with_r():
    # k <= r keeps t-degree q, r < k < p drops to q - 1
    fam = TransferFamily(5, 3, 2, QQ)
    tdegs = [max(e[0] for e, _ in f.terms) for f in fam.polys]
    assert tdegs == [3, 3, 3, 2, 2]


def test_family_q_zero_edge():
    fam = TransferFamily(3, 0, 0, QQ)
    assert fam.polys[0] == fam.tring.one()


def test_family_validation():
    with pytest.raises(ValueError):
        TransferFamily(3, 2, 3, QQ)  # r out of range
    with pytest.raises(ValueError):
        TransferFamily(3, 2, 0, GF(2))  # characteristic must be 0 or p


def test_iota_images_p3_q2_r1():
    _, target, images = iota_map(3, 2, 1, QQ)
    e = {name: target.var(name) for name in target.names}
    assert images["e1"] == e["e4"] - e["e3"] * e["e1"]
    assert images["e4"] == e["e7"] - e["e6"] * e["e1"]
    # indices congruent to 0 or > r stay put
    assert images["e3"] == e["e3"]
    assert images["e2"] == e["e2"]


@pytest.mark.parametrize("r", [0, 1, 2])
@pytest.mark.parametrize("field", [GF(3), QQ])
def test_stability_p3_q2(r, field):
    res = check_stability(3, 2, r, degree_bound=8, field=field)
    assert res["ideal_equal"]
    assert res["hilbert_equal"]
    assert res["pass"]


def test_matrix_columns_match_closed_form():
    for p, q in [(3, 2), (3, 3), (4, 2)]:
        assert columns_match(build_A(p, q, QQ), build_A_prime(p, q, QQ))


def test_conjectured_equality_small_cases():
    for p, q in [(3, 2), (4, 2), (3, 3)]:
        fam = TransferFamily(p, q, 0, QQ)
        I = fam.elimination_ideal()
        J = maximal_minors(build_A(p, q, QQ))
        assert ideal_equal(I, J)


def test_typed_minors_generate_minor_ideal():
    J = maximal_minors(build_A(3, 2, QQ))
    T = typed_minors(3, 2, QQ)
    assert ideal_equal(J, IdealBasis(J.ring, T))


def test_sum_of_minors_lie_in_ideal():
    J = maximal_minors(build_A(3, 2, QQ))
    gens = sum_of_minors_generators(3, 2, QQ)
    assert len(gens) == 3
    for g in gens.values():
        assert ideal_contains(J, IdealBasis(g.ring, [g]))


def test_large_gap_window():
    # e2*e4 in k[e1..e6] (p = 3): zero run of length 2 exists at the
    # tail but no run starts within the first q*p - p + 2 positions
    assert not has_large_gap((0, 1, 0, 1, 0, 0), 3)
    # e4*e6: zeros at positions 0,1 qualify
    assert has_large_gap((0, 0, 0, 1, 0, 1), 3)
    # constants always have a gap
    assert has_large_gap((0,) * 6, 3)


def test_ideal_L_standard_monomials_are_gapped():
    L = ideal_L(3, 2, QQ)
    from transferideals.groebner import monomial_ideal_member

    import itertools

    for exp in itertools.product(range(3), repeat=6):
        assert monomial_ideal_member(exp, L) != has_large_gap(exp, 3)


@pytest.mark.parametrize("p,q,count", [(3, 2, 10), (3, 3, 56), (4, 2, 35)])
def test_antidiagonal_leads(p, q, count):
    res = verify_antidiagonal_lead(p, q, QQ)
    assert res["pass"]
    assert res["minors_checked"] == count


@pytest.mark.parametrize("p,q,count", [(3, 2, 210), (3, 3, 715)])
def test_gap_membership(p, q, count):
    res = gap_membership_report(p, q, 4, QQ)
    assert res["pass"]
    assert res["monomials_checked"] == count


def test_transfer_image_sanity_p3():
    res = transfer_image_sanity(3)
    assert res["elimination_matches"]
    assert res["failures"] == []
    assert res["pass"]
