"""Order formulas, projective actions, census, identifications."""

import pytest

from fsg.errors import ResourceLimitError, ValidationError
from fsg.fields import make_field
from fsg.matgroups import (
    FamilyOrderQuery,
    KNOWN_ISOMORPHISMS,
    MatrixGF,
    all_invertible_matrices,
    census_table,
    order_formula,
    projective_action,
    simple_census,
    verify_claimed_identifications,
)
from fsg.perms import (
    conjugacy_classes,
    is_simple,
    transitivity_degree,
)


def O(family, q, n=0):
    return order_formula(FamilyOrderQuery(family, q, n)).order


def test_gl_sl_psl_orders():
    assert O("GL", 2, 2) == 6
    assert O("GL", 2, 3) == (2 ** 3 - 1) * (2 ** 3 - 2) * (2 ** 3 - 4) == 168
    assert O("GL", 2, 4) == 20160
    assert O("PSL", 4, 3) == 20160
    assert O("GL", 3, 4) == 24261120
    assert O("SL", 3, 4) == 12130560
    assert O("PSL", 3, 4) == 6065280
    assert O("SL", 3, 3) == 5616
    assert O("PSL", 9, 2) == 360
    assert O("SL", 8, 2) == O("PSL", 8, 2) == 504
    assert O("PSL", 11, 2) == 660
    assert O("PSL", 5, 2) == 60
    assert O("PSL", 7, 2) == 168


def test_pgl_order_and_divisibility():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
        pgl = O("GL", q, 2) // (q - 1)
        assert pgl == (q + 1) * q * (q - 1)
        assert pgl % 6 == 0
        if q % 2 == 1:
            assert pgl % 24 == 0


def test_exceptional_and_twisted_orders():
    assert O("G2", 2) == 12096
    assert O("2B2", 8) == 29120
    assert O("3D4", 2) == 211341312
    assert O("2G2", 27) == 10073444472
    assert O("PSU", 9, 3) == 6048      # unitary over the square field 9
    # against the published orders of the smallest members
    assert O("G2", 3) == 4245696
    assert O("G2", 4) == 251596800
    assert O("F4", 2) == 3311126603366400
    assert O("E6", 2) == 214841575522005575270400
    assert O("E7", 2) == 7997476042075799759100487262680802918400
    assert O("E8", 2) == int(
        "3378047531436348062613881906140855950799916922424676515761609599"
        "09068800000")
    assert O("2E6", 2) == 76532479683774853939200
    assert O("2F4", 2) == 35942400     # twice the order of its derived group
    assert O("2B2", 32) == 32537600
    assert O("PSp", 4, 2) == 979200
    assert O("POmega_odd", 3, 3) == 4585351680
    assert O("2Dn", 2, 4) == 197406720
    assert O("PSU", 9, 4) == 3265920


def test_symplectic_and_orthogonal():
    assert O("PSp", 3, 2) == 25920
    assert O("PSU", 4, 4) == 25920     # the cross-family coincidence
    # odd orthogonal at l=1 coincides with PSL_2
    assert O("POmega_odd", 5, 1) == O("PSL", 5, 2)
    assert O("POmega_odd", 7, 1) == O("PSL", 7, 2)


def test_dimension_count_identities():
    for n in range(1, 12):
        assert n * n - n * (n + 1) // 2 == n * (n - 1) // 2
        assert n * n - n * (n - 1) // 2 == n * (n + 1) // 2


def test_field_constraints():
    with pytest.raises(ValidationError):
        FamilyOrderQuery("2G2", 9)     # even power of 3
    with pytest.raises(ValidationError):
        FamilyOrderQuery("2B2", 4)
    with pytest.raises(ValidationError):
        FamilyOrderQuery("2F4", 16)
    with pytest.raises(ValidationError):
        FamilyOrderQuery("PSU", 3, 3)  # 3 is not a square
    with pytest.raises(ValidationError):
        FamilyOrderQuery("PSL", 6, 2)  # 6 is not a prime power
    with pytest.raises(ValidationError):
        FamilyOrderQuery("POmega_odd", 4, 3)  # characteristic 2 unsupported


def test_non_simple_exceptions_flagged():
    assert order_formula(FamilyOrderQuery("PSL", 2, 2)).exceptions
    assert order_formula(FamilyOrderQuery("PSL", 3, 2)).exceptions
    assert order_formula(FamilyOrderQuery("PSp", 2, 2)).exceptions
    assert order_formula(FamilyOrderQuery("G2", 2)).exceptions
    assert order_formula(FamilyOrderQuery("PSU", 4, 2)).exceptions
    assert not order_formula(FamilyOrderQuery("PSL", 5, 2)).exceptions


def test_projective_actions():
    g = projective_action("PSL", 2, make_field(5))
    assert g.order() == 60 and g.degree == 6 and is_simple(g)

    g = projective_action("PGL", 2, make_field(3, 2))
    assert g.order() == 720 and g.degree == 10
    assert transitivity_degree(g) == (3, True)

    g = projective_action("PSL", 2, make_field(2))
    assert g.order() == 6
    assert conjugacy_classes(g).class_sizes == (1, 3, 2)

    g = projective_action("PSL", 3, make_field(2, 2))
    assert g.order() == 20160 and g.degree == 21

    g = projective_action("PSL", 2, make_field(2, 3))
    assert g.order() == 504 and is_simple(g)


def test_projective_point_count():
    for n, q, f in ((2, 7, 1), (3, 3, 1), (2, 9, 2)):
        p = {7: 7, 3: 3, 9: 3}[q]
        g = projective_action("PSL", n, make_field(p, f))
        assert g.degree == (q ** n - 1) // (q - 1)


def test_projective_bound():
    with pytest.raises(ResourceLimitError):
        projective_action("PSL", 3, make_field(89))


def test_census_10000():
    entries = simple_census(10000)
    orders = [e.order for e in entries]
    assert orders == [60, 168, 360, 504, 660, 1092, 2448, 2520, 3420, 4080,
                      5616, 6048, 6072, 7800, 7920, 9828]
    assert len(entries) == 16
    by_order = {e.order: e for e in entries}
    assert by_order[60].names == ("Alt_5", "PSL_2(4)", "PSL_2(5)")
    assert by_order[7920].is_sporadic
    assert by_order[9828].names == ("PSL_2(27)",)
    # every nonabelian simple order has >= 3 distinct primes, one of them 2
    from fsg.zoo import factorize
    for e in entries:
        fac = factorize(e.order)
        assert len(fac) >= 3 and 2 in fac


def test_census_small_bounds():
    assert [e.order for e in simple_census(100)] == [60]
    assert [e.order for e in simple_census(1000)] == [60, 168, 360, 504, 660]
    table = census_table(10000)
    assert len(table) == 20
    assert [e.order for e in table[:5]] == [2, 3, 5, 7, 60]


def test_census_20160_split():
    entries = simple_census(25000)
    at = [e for e in entries if e.order == 20160]
    assert len(at) == 2  # Alt_8 = PSL_4(2), and PSL_3(4), not isomorphic
    names = sorted(e.names for e in at)
    assert names == [("Alt_8", "PSL_4(2)"), ("PSL_3(4)",)]


def test_known_isomorphism_table_is_consistent():
    for iso in KNOWN_ISOMORPHISMS:
        assert len(iso) >= 2


def test_verify_claimed_identifications():
    report = verify_claimed_identifications()
    assert all(r["pass"] for r in report)
    claims = {r["claim"] for r in report}
    assert any("Alt_8" in c for c in claims)


def test_matrix_determinants():
    F = make_field(3)
    m = MatrixGF.from_ints(F, [[1, 2], [0, 1]])
    assert m.determinant() == F.one()
    singular = MatrixGF.from_ints(F, [[1, 2], [2, 1]])
    assert singular.determinant().is_zero()  # det = 1 - 4 = -3 = 0 mod 3
    # invertible count matches |GL_2(3)| = 48
    assert len(all_invertible_matrices(F, 2)) == O("GL", 3, 2) == 48


def test_symplectic_2x2_matrices_are_unimodular():
    # a 2x2 matrix preserving the standard alternating form has det 1,
    # i.e. Sp sits inside SL already in the first rank
    for p in (3, 5):
        F = make_field(p)
        j = MatrixGF.from_ints(F, [[0, 1], [p - 1, 0]])
        sp_members = [m for m in all_invertible_matrices(F, 2)
                      if m.transpose().mul(j).mul(m).entries == j.entries]
        assert len(sp_members) == O("SL", p, 2)
        assert all(m.determinant() == F.one() for m in sp_members)


def test_twisted_tags_match_untwisted_families():
    # the two Aut-twisted biparametric families coincide with the unitary
    # and minus-type orthogonal ones
    assert O("2An", 9, 2) == O("PSU", 9, 3)
    assert O("2An", 4, 3) == O("PSU", 4, 4)
    assert O("2Dn", 3, 4) == O("POmega_even_minus", 3, 4)
    assert O("2Dn", 5, 4) == O("POmega_even_minus", 5, 4)
