"""
Field Quantization Lab - Main Entry Point

Verifies the quantization of the free electromagnetic field numerically.
Each relation is evaluated twice where possible, once from smeared closed
forms and once from photon mode sums:
1. Maxwell equations, evolution, energy and momentum
2. P, T, C, D transformations
3. Tensor index identities
4. Equal-time and unequal-time commutators, microcausality
5. Convergence of mode sums with the cutoff
"""

import sys
import argparse
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.utils.logger import setup_logger, get_logger
from src.utils.config import SUITES, RunConfig, load_run_config, load_settings
from src.utils.errors import ConfigurationError, ValidationError
from src.verification import (
    SuiteResult,
    VerificationSuites,
    convergence_checks,
    run_converge,
    write_convergence_csv,
    write_report,
)

EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_CONFIGURATION_ERROR = 2


class VerificationPipeline:
    """
    Runs verification suites and convergence studies for one configuration.

    Steps:
    1. Merge settings, config file and command-line overrides
    2. Build grid and mode lattices
    3. Run the selected suites
    4. Write the JSON report, text summary and convergence CSV
    """

    def __init__(
        self,
        settings_path: str = "config/settings.yaml",
        config_path: Optional[str] = None,
        overrides: Optional[Dict[str, Any]] = None,
        log_level: Optional[str] = None
    ):
        """
        Initialize the pipeline.

        Args:
            settings_path: Application settings (YAML)
            config_path: Optional run configuration (YAML or key=value)
            overrides: Command-line values, later wins
            log_level: Overrides the configured log level
        """
        self.settings = load_settings(settings_path)

        # Setup logging
        app_config = self.settings.get("app", {}) or {}
        setup_logger(
            log_level=log_level or app_config.get("log_level", "INFO"),
            log_file=app_config.get("log_file"),
            serialize=bool(app_config.get("log_json", False)),
            force=True
        )
        self.logger = get_logger("Pipeline")

        self.config: RunConfig = load_run_config(config_path, overrides, self.settings)
        self.out_dir = Path(self.config.out_dir)
        self.out_dir.mkdir(parents=True, exist_ok=True)

        self.logger.info(f"Pipeline initialized: suites {', '.join(self.config.suites())}")

    def verify(self) -> List[SuiteResult]:
        """
        Run every selected suite and write the report.

        Returns:
            Suite results in execution order
        """
        suites = VerificationSuites(self.config)
        results = []

        for name in self.config.suites():
            self.logger.info(f"Suite: {name}")
            if name == "converge":
                results.append(self._converge())
            else:
                results.append(suites.runners[name]())

        write_report(results, self.config.to_dict(), str(self.out_dir))
        return results

    def converge(self) -> List[SuiteResult]:
        """Run only the convergence study"""
        results = [self._converge()]
        write_report(results, self.config.to_dict(), str(self.out_dir))
        return results

    def _converge(self) -> SuiteResult:
        rows = run_converge(self.config)
        write_convergence_csv(rows, str(self.out_dir))
        return convergence_checks(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Field Quantization Lab - numerical verification of free-field quantization",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py verify                          # All suites, default configuration
  python main.py verify --suite tensoralg        # Exact index identities only
  python main.py verify --config config/default.cfg --out output/run1
  python main.py converge --kmax 25 --kmax 50 --kmax 100
        """
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        type=str,
        default=None,
        help="Run configuration file (YAML or key=value)"
    )
    common.add_argument(
        "--settings",
        type=str,
        default="config/settings.yaml",
        help="Application settings file"
    )
    common.add_argument(
        "--out",
        type=str,
        default=None,
        help="Output directory for reports"
    )
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Random seed for generated states and sample points"
    )
    common.add_argument(
        "--kmax",
        type=float,
        action="append",
        default=None,
        help="Mode cutoff (repeatable for converge)"
    )
    common.add_argument(
        "--log-level",
        type=str,
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level"
    )

    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument(
        "--suite",
        type=str,
        default=None,
        choices=list(SUITES),
        help="Suite to run (default: all)"
    )

    commands.add_parser("converge", parents=[common], help="Run the cutoff convergence study")
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    overrides = {"out_dir": args.out, "seed": args.seed}
    if args.command == "verify":
        overrides["suite"] = args.suite
        if args.kmax:
            overrides["k_max"] = args.kmax[-1]
    elif args.kmax:
        overrides["cutoffs"] = args.kmax
    return overrides


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)

    print("\n" + "=" * 60)
    print("  Field Quantization Lab")
    print("=" * 60 + "\n")

    try:
        pipeline = VerificationPipeline(
            settings_path=args.settings,
            config_path=args.config,
            overrides=_overrides(args),
            log_level=args.log_level
        )
        results = pipeline.verify() if args.command == "verify" else pipeline.converge()
    except (ConfigurationError, ValidationError) as e:
        get_logger("Pipeline").error(f"Configuration error: {e}")
        print(f"Status: CONFIGURATION ERROR\n  {e}\n")
        return EXIT_CONFIGURATION_ERROR

    failures = [(suite.name, check) for suite in results for check in suite.failures]
    total = sum(len(suite.checks) for suite in results)

    if not failures:
        print(f"Status: PASS ({total} checks)\n")
    else:
        print(f"Status: FAILED ({len(failures)} of {total} checks)\n")
        print("Failures:")
        for suite_name, check in failures:
            print(f"  - {suite_name}/{check.name} [{check.anchor}]: {check.value:.3e} > {check.tolerance:.1e}")

    print(f"\nReport: {pipeline.out_dir}")
    print("\n" + "=" * 60 + "\n")

    return EXIT_PASS if not failures else EXIT_CHECK_FAILURE


if __name__ == "__main__":
    sys.exit(main())
