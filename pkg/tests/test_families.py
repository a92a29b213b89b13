from fractions import Fraction
from math import inf

import pytest

from icis.errors import InconclusiveError
from icis.families import (
    CurveProbe,
    DeformationFamily,
    conservation_check,
    converges_to_origin,
    zero_fiber_forces_origin_check,
    critical_locus_report,
    greuel_conditions,
    splitting_check,
    radical_implies_axis_check,
)
from icis.ideals import IdealPresentation
from icis.poly import Polynomial

from family_suite import FUNCTION_CASES, RING, SPACE_CASES, t, x, y

S = ("s",)
s = Polynomial.variable(S, "s")


def _case_id(case):
    return case.name


@pytest.fixture(scope="module")
def greuel_reports():
    return {case.name: greuel_conditions(case.family()) for case in FUNCTION_CASES}


class TestGreuelConditions:
    @pytest.mark.parametrize("case", FUNCTION_CASES, ids=_case_id)
    def test_condition_flags(self, case, greuel_reports):
        rep = greuel_reports[case.name]
        assert rep.cond1_mu_constant == case.cond1
        assert rep.cond5_radical == case.cond5
        assert rep.cond6_variety == case.cond6
        assert rep.mu_origin_base == case.mu_origin_base
        assert all(v == case.totals for v in rep.totals.values())

    @pytest.mark.parametrize("case", FUNCTION_CASES, ids=_case_id)
    def test_radical_implies_variety_condition(self, case, greuel_reports):
        # the implication cond5 => cond6 must never be refuted
        rep = greuel_reports[case.name]
        assert rep.implications_ok
        assert not (rep.cond5_radical and not rep.cond6_variety)

    @pytest.mark.parametrize(
        "case",
        [c for c in FUNCTION_CASES if c.affine_clean],
        ids=_case_id,
    )
    def test_mu_constant_iff_variety_condition_when_affine_clean(
        self, case, greuel_reports
    ):
        rep = greuel_reports[case.name]
        assert rep.cond1_mu_constant == rep.cond6_variety

    @pytest.mark.parametrize("case", FUNCTION_CASES, ids=_case_id)
    def test_theorem_verdicts(self, case):
        fam = case.family()
        verdict44, _ = radical_implies_axis_check(fam)
        assert verdict44 == case.radical_axis
        verdict41, _ = zero_fiber_forces_origin_check(fam)
        assert verdict41 == case.zero_fiber

    @pytest.mark.parametrize("case", FUNCTION_CASES, ids=_case_id)
    def test_conservation(self, case):
        assert conservation_check(case.family()) == case.conservation


class TestCriticalLocus:
    def test_jump_family_accounting(self):
        case = next(c for c in FUNCTION_CASES if c.name == "jump-2-3")
        rep = critical_locus_report(case.family(), 1)
        assert rep.total_colength == 4
        assert rep.local_mu_origin == 3
        assert rep.off_origin_budget == 1
        assert rep.distinct_points == 2
        assert rep.converges_to_origin

    def test_sum_of_local_milnor_numbers(self):
        # 1 Morse point at (-8/27, 4/9) plus mu = 3 at the origin
        from icis.germs import milnor_at_point

        case = next(c for c in FUNCTION_CASES if c.name == "jump-2-3")
        fam = case.family()
        germ = fam.specialize(1)
        pt = {"x": Fraction(-8, 27), "y": Fraction(4, 9)}
        origin = {"x": Fraction(0), "y": Fraction(0)}
        assert milnor_at_point(germ, pt) + milnor_at_point(germ, origin) == 4

    def test_totals_constant_across_samples(self):
        case = next(c for c in FUNCTION_CASES if c.name == "jump-3-5")
        fam = case.family()
        totals = {critical_locus_report(fam, t0).total_colength for t0 in (1, Fraction(1, 2), 3)}
        assert totals == {12}


class TestConvergenceCertificate:
    def test_certified(self):
        I = IdealPresentation(RING, (x**2 - y**3, t * y**2 - y**2 + x * t))
        # at t = 0: <x^2 - y^3, -y^2> cuts out only the origin
        assert converges_to_origin(I, "t", ("x", "y"))

    def test_escaping_branch_refused(self):
        # x = 1 branch lives at every t, including t = 0
        I = IdealPresentation(RING, (x - 1, y))
        assert not converges_to_origin(I, "t", ("x", "y"))

    def test_conservation_requires_certificate(self):
        # critical points sit at x = +/- 1 for every t: totals are affine
        # only, so the conservation question is refused, not answered
        fam = DeformationFamily.function_deformation(RING, "t", [y], x**3 - x**2)
        with pytest.raises(InconclusiveError):
            conservation_check(fam)


class TestCurveProbes:
    def test_witness_curve_refutes_radical_condition(self):
        # gamma(s) = (-3/2 s, s^3, s^2) lies inside the critical variety,
        # so dF/dt has finite order while the minors vanish identically
        case = next(c for c in FUNCTION_CASES if c.name == "jump-2-3")
        probe = CurveProbe(
            {"t": Fraction(-3, 2) * s, "x": s**3, "y": s**2}
        )
        rep = greuel_conditions(case.family(), probes=(probe,))
        (res,) = rep.curve_probes
        assert res.on_variety
        assert res.numerator_order == 2
        assert res.denominator_order == inf
        assert not res.strict
        assert not res.weak

    def test_probe_must_pass_through_origin(self):
        with pytest.raises(ValueError):
            CurveProbe({"t": s, "x": s + 1, "y": s})

    def test_probe_components_univariate(self):
        with pytest.raises(ValueError):
            CurveProbe({"t": s, "x": x, "y": s})


class TestSplitting:
    @pytest.mark.parametrize("case", SPACE_CASES, ids=_case_id)
    def test_verdicts(self, case):
        rep = splitting_check(case.family())
        assert rep.verdict == case.splitting
        assert rep.base_fiber_mu == case.base_fiber_mu
        assert tuple(sm.singular_count for sm in rep.samples) == case.sample_counts
        assert tuple(sm.total_fiber_mu for sm in rep.samples) == case.sample_totals

    def test_constant_total_forces_no_splitting(self):
        # whenever the total fiber Milnor number matches the base, the
        # fiber must have a single singular point
        for case in SPACE_CASES:
            rep = splitting_check(case.family())
            for sample in rep.samples:
                if sample.total_fiber_mu == rep.base_fiber_mu:
                    assert sample.singular_count == 1
