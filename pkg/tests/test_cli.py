"""Tests for the frobcat command line."""

import json
from pathlib import Path
from unittest.mock import patch

from click.testing import CliRunner

from cli.main import cli, presentation_payload
from config import RunConfig
from core.pipeline import CategoryPipeline
from suites import SuiteReport


FIXTURES = Path(__file__).parent / "fixtures"


class TestCli:
    """Test cases for the CLI commands."""

    def setup_method(self):
        self.runner = CliRunner()

    def test_help(self):
        result = self.runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for command in ("survey", "verify", "present", "validate-config"):
            assert command in result.output

    def test_validate_config(self):
        result = self.runner.invoke(cli, ["-q", "validate-config", str(FIXTURES / "run-config.yaml")])
        assert result.exit_code == 0
        assert "type: A2" in result.output
        assert "Configuration is valid" in result.output

    def test_validate_config_rejects_bad_file(self, tmp_path):
        bad = tmp_path / "bad.yaml"
        bad.write_text("type: G2\n")
        result = self.runner.invoke(cli, ["-q", "validate-config", str(bad)])
        assert result.exit_code == 1
        assert "Validation failed" in result.output

    def test_survey_of_a1(self, tmp_path):
        target = tmp_path / "survey.tsv"
        result = self.runner.invoke(cli, ["-q", "survey", "--type", "A1", "--cutoff", "4", "-o", str(target)])
        assert result.exit_code == 0, result.output
        lines = target.read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("type\tv\tw\tl_v\tl_w")
        assert len(lines) == 5
        assert "# virdim 0: 4" in result.output

    def test_verify_counterexample(self, tmp_path):
        target = tmp_path / "report.json"
        result = self.runner.invoke(
            cli, ["-q", "verify", "--type", "A2", "--suite", "u2-counterexample", "-o", str(target)]
        )
        assert result.exit_code == 0, result.output
        data = json.loads(target.read_text(encoding="utf-8"))
        assert data["suite"] == "u2-counterexample"
        assert data["passed"] is True
        assert "PASS u2-counterexample: 3/3" in result.output

    @patch("cli.main.SuiteRunner")
    def test_verify_exit_code_on_failure(self, mock_runner, tmp_path):
        report = SuiteReport("torsion", "A2", 9)
        report.check("I_u I_v = I_(u⋆v)", False, "dims differ", 9)
        mock_runner.return_value.run.return_value = report
        result = self.runner.invoke(
            cli, ["-q", "verify", "--suite", "torsion", "--seed", "9", "-o", str(tmp_path / "r.json")]
        )
        assert result.exit_code == 1
        assert "FAIL torsion: 0/1" in result.output
        assert "dims differ (seed 9)" in result.output
        mock_runner.return_value.run.assert_called_once_with("torsion")

    @patch("cli.main.SuiteRunner")
    def test_verify_sampled_flag(self, mock_runner, tmp_path):
        mock_runner.return_value.run.return_value = SuiteReport("commutativity", "A3", 0)
        result = self.runner.invoke(
            cli, ["-q", "verify", "--type", "A3", "--sampled", "--suite", "commutativity", "-o", str(tmp_path / "r.json")]
        )
        assert result.exit_code == 0, result.output
        config = mock_runner.call_args[0][0]
        assert config.exhaustive is False
        assert not config.exhaustive_pairs

    def test_unknown_suite_is_an_error(self):
        result = self.runner.invoke(cli, ["-q", "verify", "--type", "A1", "--suite", "bogus"])
        assert result.exit_code == 1
        assert "Unknown suite: bogus" in result.output

    def test_present(self, tmp_path):
        target = tmp_path / "present.json"
        result = self.runner.invoke(
            cli, ["-q", "present", "--type", "A2", "--v", "e", "--w", "1,2,1", "-o", str(target)]
        )
        assert result.exit_code == 0, result.output
        data = json.loads(target.read_text(encoding="utf-8"))
        assert data["w"] == "1,2,1"
        assert data["fingerprint"]["dim"] == 4
        assert data["fingerprint"]["simples"] == 2

    def test_present_rejects_bad_word(self):
        result = self.runner.invoke(cli, ["-q", "present", "--type", "A2", "--v", "e", "--w", "1,5"])
        assert result.exit_code == 1
        assert "Error:" in result.output


class TestPresentationPayload:
    """Test cases for the JSON payload of the present command."""

    def test_identity_pair_of_a1(self):
        pipeline = CategoryPipeline(RunConfig(type="A1"))
        payload = presentation_payload(pipeline, "e", "1")
        assert payload["v"] == "e"
        assert payload["presentation"]["arrows"] == []
        assert payload["fingerprint"]["cartan"] == [[1]]
