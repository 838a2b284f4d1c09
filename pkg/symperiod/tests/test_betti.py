"""
Symperiod Test Suite -- Betti vectors and Poincaré polynomials.
"""

import pytest

from symperiod.algebra.series import is_palindromic
from symperiod.catalog.groups import GroupDescriptor
from symperiod.catalog.spaces import IrreducibleSpace, SpaceKind, enumerate_spaces
from symperiod.core.errors import InvalidParameter, NotApplicable, RankMismatch, UnknownBetti
from symperiod.topology.betti import (
    BettiVector,
    betti_vector,
    borel_polynomial,
    closed_form_polynomial,
    connected_sum_betti,
    convolve,
    euler_characteristic_check,
    poincare_equal_rank,
    poincare_polynomial,
    product_betti,
)
from symperiod.topology.tables import leading_terms

S = IrreducibleSpace.sphere


def space(kind: SpaceKind, *params: int) -> IrreducibleSpace:
    return IrreducibleSpace(kind, params)


# ─────────────────────────────────────────────────────────────
# BettiVector
# ─────────────────────────────────────────────────────────────


class TestBettiVector:
    def test_exact_trims_trailing_zeros(self):
        b = BettiVector.exact((1, 0, 1, 0, 0))
        assert b.horizon == 2
        assert b[7] == 0

    def test_incomplete_is_unknown_beyond_horizon(self):
        b = BettiVector.exact((1, 0, 1), complete=False)
        assert b.bounds(5) == (0, None)
        with pytest.raises(UnknownBetti):
            b[5]

    def test_inconsistent_bounds(self):
        with pytest.raises(InvalidParameter):
            BettiVector((2,), (1,))

    def test_truncated(self):
        b = betti_vector(space(SpaceKind.HP, 3), 12).truncated(5)
        assert not b.complete
        assert b.values() == (1, 0, 0, 0, 1, 0)

    def test_str(self):
        assert str(BettiVector((1, 0, 2), (1, 0, None), complete=False)) == "(1, 0, >=2, ?)"

    def test_convolve_bounds(self):
        a = BettiVector.exact((1, 0, 1))
        b = BettiVector((1, 0, 1), (1, 0, None), complete=False)
        c = convolve(a, b)
        assert c.horizon == 2
        assert c.bounds(2) == (2, None)


# ─────────────────────────────────────────────────────────────
# Polynomials of catalog spaces
# ─────────────────────────────────────────────────────────────


class TestPolynomials:
    def test_closed_forms(self):
        assert poincare_polynomial(space(SpaceKind.HP, 3)).coeffs == (1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1)
        assert poincare_polynomial(S(5)).coeffs == (1, 0, 0, 0, 0, 1)
        assert poincare_polynomial(IrreducibleSpace.lie_group("SU(3)")).coeffs == (1, 0, 0, 1, 0, 1, 0, 0, 1)

    @pytest.mark.parametrize(
        "s",
        [space(SpaceKind.CP, 3), space(SpaceKind.HP, 4), IrreducibleSpace(SpaceKind.CAP2), S(6)],
    )
    def test_closed_form_agrees_with_borel(self, s):
        assert closed_form_polynomial(s) == borel_polynomial(s)

    def test_equal_rank_from_descriptors(self):
        g = GroupDescriptor.parse
        assert poincare_equal_rank(g("G2"), [g("Spin(3)"), g("Spin(3)")]).coeffs == (1, 0, 0, 0, 1, 0, 0, 0, 1)
        assert poincare_equal_rank(g("Sp(2)"), [g("U(2)")]).coeffs == (1, 0, 1, 0, 1, 0, 1)
        p = poincare_equal_rank(g("Sp(4)"), [g("U(4)")])
        assert p.degree == 20
        assert is_palindromic(p)

    def test_equal_rank_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            poincare_equal_rank(GroupDescriptor.parse("Sp(2)"), [GroupDescriptor.parse("U(1)")])

    def test_g2_mod_so4(self):
        assert poincare_polynomial(IrreducibleSpace(SpaceKind.G2SO4)).coeffs == (1, 0, 0, 0, 1, 0, 0, 0, 1)

    def test_quaternionic_grassmannian(self):
        p = poincare_polynomial(space(SpaceKind.QUAT_GR, 2, 2))
        assert [d for d, _ in p.terms()] == [0, 4, 8, 12, 16]
        assert [v for _, v in p.terms()] == [1, 1, 2, 1, 1]

    def test_cayley_plane(self):
        assert dict(poincare_polynomial(IrreducibleSpace(SpaceKind.CAP2)).terms()) == {0: 1, 8: 1, 16: 1}

    def test_leading_terms(self):
        assert leading_terms(space(SpaceKind.SP_MOD_U, 4), 6) == "t^2 + t^4 + 2t^6 + ..."
        assert leading_terms(space(SpaceKind.SO_MOD_U, 5), 6) == "t^2 + t^4 + 2t^6 + ..."
        assert leading_terms(space(SpaceKind.QUAT_GR, 2, 2), 8) == "t^4 + 2t^8 + ..."
        assert leading_terms(IrreducibleSpace(SpaceKind.EIX), 12) == "t^4 + t^8 + 2t^12 + ..."
        assert leading_terms(IrreducibleSpace(SpaceKind.G2SO4), 12) == "t^4 + t^8"

    def test_lowest_degrees_of_e7_quotients(self):
        # E7/SU(8) starts in degree 6, E7/E6xSO(2) in degree 2
        ev = poincare_polynomial(IrreducibleSpace(SpaceKind.EV))
        assert [ev[i] for i in range(9)] == [1, 0, 0, 0, 0, 0, 1, 0, 1]
        evii = poincare_polynomial(IrreducibleSpace(SpaceKind.EVII))
        assert [evii[i] for i in range(0, 13, 2)] == [1, 1, 1, 1, 1, 2, 2]

    def test_witness_space_has_no_polynomial(self):
        with pytest.raises(NotApplicable):
            poincare_polynomial(space(SpaceKind.SU_MOD_SO, 6))

    def test_equal_rank_suite(self):
        checked = 0
        for s in enumerate_spaces(64, 10):
            if not s.equal_rank:
                continue
            p = poincare_polynomial(s)
            assert is_palindromic(p), s.label
            assert p.degree == s.dim, s.label
            assert all(v >= 0 for v in p.coeffs), s.label
            assert euler_characteristic_check(s), s.label
            checked += 1
        assert checked > 50


class TestEuler:
    def test_even_sphere(self):
        assert euler_characteristic_check(S(4))
        assert poincare_polynomial(S(4)).value_at_one() == 2

    def test_odd_sphere_not_equal_rank(self):
        with pytest.raises(NotApplicable):
            euler_characteristic_check(S(5))


# ─────────────────────────────────────────────────────────────
# Vectors of spaces and products
# ─────────────────────────────────────────────────────────────


class TestVectors:
    def test_betti_vector_of_hp(self):
        b = betti_vector(space(SpaceKind.HP, 3), 12)
        assert b.values() == (1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1)
        assert b.is_fully_exact()

    def test_witness_vector(self):
        b = betti_vector(space(SpaceKind.SU_MOD_SO, 6), 20)
        assert b[0] == 1 and b[1] == 0 and b[20] == 1
        assert b.bounds(5) == (1, None)
        assert b.bounds(15) == (1, None)
        with pytest.raises(UnknownBetti):
            b[5]

    def test_hp_pattern_vector(self):
        b = betti_vector(space(SpaceKind.REAL_GR, 3, 7), 21)
        assert b.values(7) == (1, 0, 0, 0, 1, 0, 0, 0)
        assert b.bounds(10) == (0, None)
        assert b[17] == 1

    def test_product(self):
        assert product_betti([S(2), S(2)], 4).values() == (1, 0, 2, 0, 1)

    def test_product_truncates(self):
        b = product_betti([IrreducibleSpace.lie_group("E8"), space(SpaceKind.HP, 3)], 16)
        assert b.values() == (1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 2, 0)

    def test_product_needs_factors(self):
        with pytest.raises(InvalidParameter):
            product_betti([], 4)

    def test_connected_sum(self):
        hp = betti_vector(space(SpaceKind.HP, 3), 12)
        b = connected_sum_betti(hp, hp, 12)
        assert b.values() == (1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1)

    def test_connected_sum_dimension_mismatch(self):
        with pytest.raises(InvalidParameter):
            connected_sum_betti(betti_vector(S(4), 4), betti_vector(S(5), 5), 4)

    def test_connected_sum_needs_exact_vectors(self):
        w = betti_vector(space(SpaceKind.SU_MOD_SO, 6), 20)
        with pytest.raises(InvalidParameter):
            connected_sum_betti(w, w, 20)
