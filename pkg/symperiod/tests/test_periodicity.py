"""
Symperiod Test Suite -- 4-periodicity checker.

Covers:
    - Verdicts and lowest obstructions on computed and witness vectors
    - Connected sums of projective spaces
    - Product lemma, closed-form patterns, low-degree gap
    - Classification sweep over the catalog
"""

import pytest

from symperiod.catalog.spaces import BettiSource, IrreducibleSpace, SpaceKind, enumerate_spaces
from symperiod.core.errors import InvalidParameter, NotFailing, PreconditionViolation
from symperiod.topology.betti import BettiVector, betti_vector, product_betti
from symperiod.topology.periodicity import (
    BettiPattern,
    Branch,
    Obstruction,
    ObstructionKind,
    PeriodicityReport,
    Verdict,
    cheeger_sums,
    check_4periodic,
    classify_irreducibles,
    gap_survey,
    low_degree_gap,
    obstruction_string,
    pattern_classify,
    product_factor_analysis,
)

S = IrreducibleSpace.sphere


def space(kind: SpaceKind, *params: int) -> IrreducibleSpace:
    return IrreducibleSpace(kind, params)


def check(s: IrreducibleSpace, c: int = 16) -> PeriodicityReport:
    return check_4periodic(betti_vector(s, c), c)


# ─────────────────────────────────────────────────────────────
# Checker
# ─────────────────────────────────────────────────────────────


class TestChecker:
    def test_quaternionic_projective_space(self):
        report = check(space(SpaceKind.HP, 4))
        assert report.verdict is Verdict.PERIODIC
        assert report.branch is Branch.PERIODIC
        assert report.violations == ()

    def test_complex_projective_space(self):
        assert check(space(SpaceKind.CP, 8)).verdict is Verdict.PERIODIC

    def test_product_of_large_spheres(self):
        b = product_betti([S(17), S(20)], 16)
        report = check_4periodic(b, 16)
        assert report.verdict is Verdict.PERIODIC
        assert report.branch is Branch.CONNECTED

    @pytest.mark.parametrize(
        "s, expected",
        [
            (IrreducibleSpace(SpaceKind.G2SO4), "b_8>b_12"),
            (space(SpaceKind.QUAT_GR, 2, 2), "b_4<b_8"),
            (space(SpaceKind.REAL_GR, 4, 4), "1<b_4"),
            (space(SpaceKind.COMPLEX_GR, 2, 4), "1<b_4"),
            (space(SpaceKind.REAL_GR, 3, 8), "b_4<b_8"),
            (space(SpaceKind.SP_MOD_U, 4), "b_2<b_6"),
            (IrreducibleSpace(SpaceKind.EIX), "b_8<b_12"),
            (IrreducibleSpace(SpaceKind.EIII), "b_4<b_8"),
            (IrreducibleSpace(SpaceKind.EVII), "b_6<b_10"),
            (space(SpaceKind.SU_MOD_SO, 6), "b_5>0"),
            (IrreducibleSpace(SpaceKind.EI), "b_9>0"),
        ],
    )
    def test_lowest_obstruction(self, s, expected):
        report = check(s)
        assert report.verdict is Verdict.FAILS
        assert obstruction_string(report) == expected

    def test_lowest_obstruction_below_cited_one(self):
        report = check(IrreducibleSpace(SpaceKind.EV))
        assert obstruction_string(report) == "b_6>0"
        assert "b_4<b_8" in report.rendered_violations

    def test_injection_failure(self):
        report = check(space(SpaceKind.CP, 3), 8)
        assert obstruction_string(report) == "b_4>b_8"

    def test_undetermined_without_witnesses(self):
        report = check(space(SpaceKind.SU_MOD_SO, 5), 8)
        assert report.verdict is Verdict.UNDETERMINED
        assert report.obstruction is None
        assert report.label == "AI(5)"

    def test_undetermined_hp_pattern(self):
        assert check(space(SpaceKind.REAL_GR, 3, 7)).verdict is Verdict.UNDETERMINED

    def test_shift_across_c(self):
        b = product_betti([IrreducibleSpace.lie_group("E8"), space(SpaceKind.HP, 3)], 16)
        assert check_4periodic(b.truncated(15), 15).verdict is Verdict.PERIODIC
        report = check_4periodic(b, 16)
        assert obstruction_string(report) == "b_11<b_15"

    def test_small_c_rejected(self):
        with pytest.raises(InvalidParameter):
            check(S(5), 7)

    def test_obstruction_string_needs_failure(self):
        with pytest.raises(NotFailing):
            obstruction_string(check(space(SpaceKind.HP, 4)))

    def test_report_consistency(self):
        with pytest.raises(InvalidParameter):
            PeriodicityReport(Verdict.FAILS, 16)
        with pytest.raises(InvalidParameter):
            PeriodicityReport(Verdict.PERIODIC, 16, Obstruction(ObstructionKind.POSITIVE, 5))

    def test_to_dict(self):
        d = check(IrreducibleSpace(SpaceKind.G2SO4)).to_dict()
        assert d == {
            "space": "G",
            "c": 16,
            "verdict": "Fails",
            "branch": "PeriodicBranch",
            "obstruction": "b_8>b_12",
            "violations": ["b_8>b_12", "b_8>0"],
        }

    def test_render(self):
        assert Obstruction(ObstructionKind.SHIFT_LESS, 11).render() == "b_11<b_15"
        assert Obstruction(ObstructionKind.SHIFT_LESS, 11).upper_degree == 15
        assert str(Obstruction(ObstructionKind.POSITIVE, 9)) == "b_9>0"

    def test_failure_persists_as_c_grows(self):
        computed = [s for s in enumerate_spaces(40, 8) if s.source is BettiSource.COMPUTED]
        for s in computed:
            failed = False
            for c in range(8, 21):
                verdict = check(s, c).verdict
                assert verdict is not Verdict.UNDETERMINED, s.label
                if failed:
                    assert verdict is Verdict.FAILS, (s.label, c)
                failed = verdict is Verdict.FAILS


# ─────────────────────────────────────────────────────────────
# Connected sums
# ─────────────────────────────────────────────────────────────


class TestConnectedSums:
    def test_all_fail(self):
        reports = cheeger_sums()
        assert [r.label for r in reports] == [
            "CP^5 # CP^5",
            "HP^3 # HP^3",
            "HP^4 # CaP2",
            "CaP2 # CaP2",
        ]
        assert [obstruction_string(r) for r in reports] == ["1<b_4", "1<b_4", "b_4<b_8", "b_4<b_8"]


# ─────────────────────────────────────────────────────────────
# Products, patterns and gaps
# ─────────────────────────────────────────────────────────────


class TestProductLemma:
    def test_periodic_factor(self):
        report = product_factor_analysis(betti_vector(space(SpaceKind.HP, 4), 16), betti_vector(S(2), 16), 16)
        assert report.branch == "periodic_factor"
        assert report.holds
        assert report.conclusions["first_factor_periodic"]

    def test_connected(self):
        report = product_factor_analysis(betti_vector(S(17), 16), betti_vector(S(20), 16), 16)
        assert report.connected
        assert report.branch == "connected"

    def test_failing_factor_detected(self):
        report = product_factor_analysis(betti_vector(space(SpaceKind.HP, 2), 16), betti_vector(S(12), 16), 16)
        assert not report.holds
        assert "first_factor_periodic" in report.failures

    def test_small_c(self):
        with pytest.raises(PreconditionViolation):
            product_factor_analysis(betti_vector(space(SpaceKind.HP, 4), 8), betti_vector(S(2), 8), 8)

    def test_factor_order(self):
        with pytest.raises(PreconditionViolation):
            product_factor_analysis(betti_vector(S(2), 16), betti_vector(space(SpaceKind.HP, 4), 16), 16)

    def test_product_must_be_periodic(self):
        with pytest.raises(PreconditionViolation):
            product_factor_analysis(betti_vector(space(SpaceKind.QUAT_GR, 2, 2), 16), betti_vector(S(2), 16), 16)


class TestPatterns:
    def test_rank_one(self):
        assert pattern_classify(betti_vector(space(SpaceKind.HP, 3), 12), 12) is BettiPattern.HP_LIKE
        assert pattern_classify(betti_vector(space(SpaceKind.CP, 3), 6), 6) is BettiPattern.CP_LIKE
        assert pattern_classify(betti_vector(S(5), 5), 5) is BettiPattern.SPHERE_LIKE

    def test_sphere_times_hp(self):
        b = product_betti([S(3), space(SpaceKind.HP, 2)], 11)
        assert pattern_classify(b, 11) is BettiPattern.S3_X_HP_LIKE

    def test_no_match(self):
        assert pattern_classify(betti_vector(space(SpaceKind.QUAT_GR, 2, 2), 16), 16) is None

    def test_incomplete_vector(self):
        assert pattern_classify(betti_vector(space(SpaceKind.HP, 4), 8), 16) is None


class TestGap:
    def test_low_degree_gap(self):
        assert low_degree_gap(betti_vector(S(16), 15))
        assert not low_degree_gap(betti_vector(space(SpaceKind.HP, 4), 15))

    def test_survey(self):
        members = gap_survey(20, 4)
        assert S(16) in members
        assert S(3) in members
        assert space(SpaceKind.HP, 4) not in members


# ─────────────────────────────────────────────────────────────
# Classification sweep
# ─────────────────────────────────────────────────────────────


class TestClassification:
    @pytest.fixture(scope="class")
    def results(self):
        return classify_irreducibles(16, 64, 20, workers=2)

    def test_dimensions_in_range(self, results):
        assert results
        assert all(16 <= s.dim <= 64 for s, _ in results)

    def test_periodic_spaces_are_listed_kinds(self, results):
        for s, report in results:
            if report.verdict is not Verdict.PERIODIC:
                continue
            if s.kind is SpaceKind.REAL_GR:
                assert s.params[0] in (2, 3), s.label
            else:
                assert s.kind in (SpaceKind.SPHERE, SpaceKind.CP, SpaceKind.HP), s.label

    def test_known_verdicts(self, results):
        verdicts = {s.label: report for s, report in results}
        assert verdicts["HP^4"].verdict is Verdict.PERIODIC
        assert verdicts["S^16"].verdict is Verdict.PERIODIC
        assert obstruction_string(verdicts["GrR(2,8)"]) == "b_4<b_8"
        assert obstruction_string(verdicts["CaP2"]) == "b_4<b_8"

    def test_sorted(self, results):
        keys = [s.sort_key() for s, _ in results]
        assert keys == sorted(keys)

    def test_small_c(self):
        with pytest.raises(InvalidParameter):
            classify_irreducibles(12, 20, 4)


def test_bounds_drive_verdict():
    # b_4 known to be 2 decides the failure even when the rest is open
    b = BettiVector((1, 0, 0, 0, 2), (1, 0, None, None, 2), complete=False)
    report = check_4periodic(b, 8)
    assert report.verdict is Verdict.FAILS
    assert obstruction_string(report) == "1<b_4"
