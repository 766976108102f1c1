"""
Tests for the command-line entry point
"""

import json
from pathlib import Path

import pytest

from main import EXIT_CHECK_FAILURE, EXIT_CONFIGURATION_ERROR, EXIT_PASS, build_parser, main

SETTINGS = str(Path(__file__).parent.parent / "config" / "settings.yaml")


def _run(*args):
    return main(list(args) + ["--settings", SETTINGS, "--log-level", "WARNING"])


class TestParser:
    """Tests for argument parsing"""

    def test_verify_defaults(self):
        """Test verify without options"""
        args = build_parser().parse_args(["verify"])
        assert args.command == "verify"
        assert args.suite is None
        assert args.kmax is None

    def test_repeated_kmax(self):
        """Test converge collects cutoffs"""
        args = build_parser().parse_args(["converge", "--kmax", "25", "--kmax", "50"])
        assert args.kmax == [25.0, 50.0]

    def test_unknown_suite(self):
        """Test suite choices"""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["verify", "--suite", "everything"])

    def test_command_required(self):
        """Test a subcommand is required"""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


class TestExitCodes:
    """Tests for exit codes and written reports"""

    def test_pass(self, tmp_path):
        """Test a passing suite writes a report"""
        code = _run("verify", "--suite", "tensoralg", "--out", str(tmp_path))
        report = json.loads((tmp_path / "verification_report.json").read_text())

        assert code == EXIT_PASS
        assert report["summary"]["status"] == "pass"
        assert list(report["suites"]) == ["tensoralg"]

    def test_seed_override(self, tmp_path):
        """Test flags land in the reported configuration"""
        _run("verify", "--suite", "tensoralg", "--out", str(tmp_path), "--seed", "77")
        report = json.loads((tmp_path / "verification_report.json").read_text())
        assert report["config"]["seed"] == 77

    def test_missing_config(self, tmp_path):
        """Test an absent config file"""
        code = _run("verify", "--config", str(tmp_path / "absent.cfg"), "--out", str(tmp_path))
        assert code == EXIT_CONFIGURATION_ERROR

    def test_invalid_config(self, tmp_path):
        """Test an odd grid size"""
        path = tmp_path / "bad.cfg"
        path.write_text("points_per_axis = 7\n")
        code = _run("verify", "--config", str(path), "--out", str(tmp_path))
        assert code == EXIT_CONFIGURATION_ERROR

    def test_empty_lattice(self, tmp_path):
        """Test a cutoff below the smallest mode"""
        path = tmp_path / "tiny.cfg"
        path.write_text("field_kmax = 1.0\nsuite = maxwell\n")
        code = _run("verify", "--config", str(path), "--out", str(tmp_path))
        assert code == EXIT_CONFIGURATION_ERROR

    def test_check_failure(self, tmp_path):
        """Test an injected longitudinal field fails verification"""
        path = tmp_path / "broken.cfg"
        path.write_text("longitudinal_amplitude = 1.0\n")
        code = _run("verify", "--suite", "commutators", "--config", str(path), "--out", str(tmp_path))
        report = json.loads((tmp_path / "verification_report.json").read_text())

        assert code == EXIT_CHECK_FAILURE
        assert report["summary"]["failures"] == [
            "subsidiary_condition [eps_kls M_kls = 32 pi hbar c div F vanishes for transverse fields]"
        ]

    def test_converge(self, tmp_path):
        """Test the convergence command writes its CSV"""
        code = _run("converge", "--kmax", "25", "--kmax", "50", "--kmax", "100", "--out", str(tmp_path))
        lines = (tmp_path / "convergence.csv").read_text().splitlines()

        assert code == EXIT_PASS
        assert lines[0] == "check,pair,k,l,tau,cutoff,analytic,modesum_re,modesum_im,rel_error"
        assert len(lines) == 13

    def test_decreasing_cutoffs(self, tmp_path):
        """Test cutoffs must increase"""
        code = _run("converge", "--kmax", "50", "--kmax", "25", "--out", str(tmp_path))
        assert code == EXIT_CONFIGURATION_ERROR


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
