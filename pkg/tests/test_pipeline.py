"""Tests for the run pipeline, the survey and the verification suites."""

from unittest.mock import patch

import numpy as np
import pytest

from algebra import whole_ideal
from cli.survey import run_survey
from config import RunConfig
from core.exceptions import HomologicalError, NotGorensteinWithinCutoff, SuiteError, TorsionError
from core.pipeline import SURVEY_COLUMNS, CategoryPipeline, SurveyRow, word_label
from homdim import ABOVE_CUTOFF, DimensionReport
from suites import SuiteReport, SuiteRunner
from weyl import DynkinType, element_from_word, identity, longest_element


class TestCategoryPipeline:
    """Test cases for CategoryPipeline on A1 and A2."""

    def setup_method(self):
        self.config = RunConfig(type="A1", seed=5, cutoff=4, samples=2)
        self.pipeline = CategoryPipeline(self.config)

    def test_word_label(self):
        a2 = DynkinType("A", 2)
        assert word_label(identity(a2)) == "e"
        assert word_label(longest_element(a2)) == "1,2,1"

    def test_elements_and_pairs(self):
        assert [word_label(x) for x in self.pipeline.elements] == ["e", "1"]
        assert len(self.pipeline.pairs()) == 4
        assert self.pipeline.element("1") == self.pipeline.elements[1]

    def test_rng_is_independent_of_order(self):
        v, w = self.pipeline.pairs()[3]
        first = self.pipeline.rng_for(v, w).integers(0, 10**6, size=4)
        self.pipeline.rng_for(*self.pipeline.pairs()[0]).integers(0, 10)
        again = CategoryPipeline(self.config).rng_for(v, w).integers(0, 10**6, size=4)
        assert np.array_equal(first, again)

    def test_categories_are_cached(self):
        v, w = self.pipeline.pairs()[1]
        assert self.pipeline.category(v, w) is self.pipeline.category(v, w)

    def test_row_columns_follow_survey_order(self):
        row = self.pipeline.survey_row(*self.pipeline.pairs()[1])
        assert isinstance(row, SurveyRow)
        assert tuple(row.to_dict()) == SURVEY_COLUMNS

    def test_survey_of_a1(self):
        rows = run_survey(self.config, self.pipeline)
        assert [(r.v, r.w) for r in rows] == [("e", "e"), ("e", "1"), ("1", "e"), ("1", "1")]
        assert all(r.virdim == "0" for r in rows)
        assert all(r.frobenius_ok and r.commutativity_ok for r in rows)
        whole = rows[1]
        assert whole.dim_P == 1
        assert whole.summands == 1
        assert rows[0].dim_P == 0

    def test_failed_commutativity_names_the_pair(self):
        v, w = self.pipeline.pairs()[1]
        with patch("preproj.FrobeniusCategory.generators_agree", return_value=False):
            with pytest.raises(TorsionError) as excinfo:
                self.pipeline.survey_row(v, w)
        assert "v=[e] w=[1] seed=5" in str(excinfo.value)

    def test_non_gorenstein_row_names_the_pair(self):
        v, w = self.pipeline.pairs()[1]
        report = DimensionReport(ABOVE_CUTOFF, ABOVE_CUTOFF, ABOVE_CUTOFF, 4)
        with patch("core.pipeline.dimension_report", return_value=report):
            with pytest.raises(NotGorensteinWithinCutoff) as excinfo:
                self.pipeline.survey_row(v, w)
        assert "v=[e] w=[1] seed=5" in str(excinfo.value)
        assert "injdim left >4" in str(excinfo.value)

    def test_virdim_above_two_aborts(self):
        v, w = self.pipeline.pairs()[1]
        with patch("core.pipeline.dimension_report", return_value=DimensionReport(3, 3, 3, 4)):
            with pytest.raises(HomologicalError) as excinfo:
                self.pipeline.survey_row(v, w)
        assert "v=[e] w=[1] seed=5" in str(excinfo.value)
        assert "exceeds 2" in str(excinfo.value)


class TestSuiteRunner:
    """Test cases for suite dispatch and reporting."""

    def setup_method(self):
        self.config = RunConfig(type="A2", seed=3, cutoff=4, samples=2)
        self.runner = SuiteRunner(self.config)

    def test_suite_names(self):
        names = self.runner.suite_names
        assert len(names) == 16
        assert "u2-counterexample" in names
        assert "example-leclerc" in names

    def test_unknown_suite(self):
        with pytest.raises(SuiteError):
            self.runner.run("no-such-suite")

    def test_library_error_becomes_failed_assertion(self):
        def broken(report):
            raise TorsionError("boom")

        self.runner.suite_handlers["frobenius"] = broken
        report = self.runner.run("frobenius")
        assert not report.passed
        (failure,) = report.failures
        assert failure.name == "frobenius completed"
        assert failure.detail == "boom"
        assert failure.seed == 3

    def test_u2_counterexample_suite(self):
        report = self.runner.run("u2-counterexample")
        assert report.passed, [a.to_dict() for a in report.failures]
        assert len(report.assertions) == 3

    def test_frobenius_suite_on_a2(self):
        report = self.runner.run("frobenius")
        assert len(report.assertions) == 36
        assert report.passed

    def test_torsion_suite_compares_with_rationals(self):
        report = self.runner.run("torsion")
        assert report.passed, [a.to_dict() for a in report.failures]
        (check,) = [a for a in report.assertions if "agree with ℚ" in a.name]
        assert check.detail == "no discrepancy"

    def test_torsion_suite_compares_reduced_words(self):
        whole = whole_ideal(self.runner.pipeline.pi.algebra)
        with patch("suites.runner.ideal_along_word", return_value=whole):
            report = self.runner.run("torsion")
        (check,) = [a for a in report.assertions if "independent of reduced word" in a.name]
        assert not check.passed
        assert check.detail == "[1,2,1] vs [2,1,2]"

    def test_torsion_suite_checks_ideal_action(self):
        report = self.runner.run("torsion")
        checks = [a for a in report.assertions if a.name.startswith("I_w·M ⊆ t(M)")]
        assert len(checks) == 6
        assert all(a.passed for a in checks)

    def test_commutativity_suite_on_a2(self):
        report = self.runner.run("commutativity")
        assert report.passed, [a.to_dict() for a in report.failures]
        assert len(report.assertions) == 36
        details = {a.name: a.detail for a in report.assertions}
        assert details["add f_v t_w Π = add t_w f_v Π (1 | 2)"] == "same add, other multiplicities"
        assert details["add f_v t_w Π = add t_w f_v Π (e | 1,2,1)"] == "≅"

    def test_duality_suite_on_a2(self):
        report = self.runner.run("duality")
        assert report.passed, [a.to_dict() for a in report.failures]

    def test_exhaustive_pairs_default_up_to_a3(self):
        assert RunConfig(type="A3").exhaustive_pairs
        assert not RunConfig(type="A4").exhaustive_pairs
        assert not RunConfig(type="D4").exhaustive_pairs
        assert not RunConfig(type="A3", exhaustive=False).exhaustive_pairs
        assert RunConfig(type="D4", exhaustive=True).exhaustive_pairs

    def test_sampled_run_keeps_the_sample(self):
        runner = SuiteRunner(RunConfig(type="A3", seed=3, samples=2, exhaustive=False))
        e = identity(runner.pipeline.dynkin)
        with patch.object(runner.pipeline, "pairs", return_value=[(e, e)] * 40):
            assert len(runner._pairs(exhaustive=True)) == 3

    def test_exhaustive_a3_run_records_the_spectrum(self):
        runner = SuiteRunner(RunConfig(type="A3", seed=3, cutoff=4, samples=2))
        e = identity(runner.pipeline.dynkin)
        with patch.object(runner.pipeline, "pairs", return_value=[(e, e)] * 40):
            report = runner.run("virdim-bounds")
        (check,) = [a for a in report.assertions if a.name == "virdim spectrum over A3 is {0, 1, 2}"]
        assert not check.passed
        assert check.detail == "values []"

    def test_example_suite_needs_a3(self):
        report = self.runner.run("example-leclerc")
        assert not report.passed
        assert "needs type A3" in report.failures[0].detail

    def test_report_dict(self):
        report = SuiteReport("torsion", "A2", 3)
        report.check("one", True)
        report.check("two", False, "detail", 3)
        data = report.to_dict()
        assert data["passed"] is False
        assert data["assertions"] == [
            {"name": "one", "passed": True},
            {"name": "two", "passed": False, "detail": "detail", "seed": 3},
        ]


@pytest.mark.slow
class TestExamplePair:
    """Test cases for the A3 pair v = s2, w = s1 s3 s2 s1 s3."""

    def setup_method(self):
        self.config = RunConfig(type="A3", seed=1, cutoff=6, samples=2)
        self.pipeline = CategoryPipeline(self.config)
        self.v = element_from_word(self.pipeline.dynkin, [2])
        self.w = element_from_word(self.pipeline.dynkin, [1, 3, 2, 1, 3])

    def test_survey_row(self):
        row = self.pipeline.survey_row(self.v, self.w)
        assert row.summands == 4
        assert row.phi2_injective
        assert not row.phi2_surjective
        assert row.phi2_coker_dim == 1
        assert row.virdim == "2"
        assert row.gldim == "2"
        assert not row.condition_P

    def test_example_suite(self):
        report = SuiteRunner(self.config, self.pipeline).run("example-leclerc")
        assert report.passed, [a.to_dict() for a in report.failures]
