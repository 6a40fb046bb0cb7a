import argparse
import logging
import sys
from contextlib import contextmanager
from typing import Dict, List, Optional

from src.config.experiment import ALGORITHMS, FAMILIES, WEIGHT_SCHEMES, ExperimentConfig
from src.config.settings import CONFIG
from src.errors import ExitCode, SecretaryError
from src.experiment.records import write_records
from src.experiment.runner import format_weight, offline_optimum, run
from src.experiment.verifier import verify

logger = logging.getLogger(__name__)

# flag dest -> ExperimentConfig field
FLAG_FIELDS = {
    "family": "family", "n": "n", "k": "k", "weight_scheme": "weight_scheme", "base": "base",
    "weights": "weights_path", "instance": "instance_path", "algorithm": "algorithm", "tau": "tau",
    "delta": "delta", "order": "order", "order_k": "order_k", "trials": "trials", "seed": "seed",
    "output": "output", "p_s": "p_s", "workers": "workers", "monte_carlo": "monte_carlo",
    "mc_trials": "mc_trials", "axioms": "axioms", "orders": "orders",
}


def setup_logging(verbose: bool = False):
    """Diagnostics go to stderr; stdout is reserved for results"""
    level = logging.INFO if verbose else getattr(logging, CONFIG['LOG_LEVEL'], logging.WARNING)
    if CONFIG['DEBUG']:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def _experiment_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--config", help="key = value experiment file; flags override it")
    parser.add_argument("--family", choices=FAMILIES)
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int, help="family parameter (rank, blocks, sets, vertices, left vertices)")
    parser.add_argument("--weight-scheme", dest="weight_scheme", choices=WEIGHT_SCHEMES)
    parser.add_argument("--base", type=float)
    parser.add_argument("--weights", help="weights file; implies --weight-scheme from-file")
    parser.add_argument("--instance", help="instance file, replacing --family/--n/--k")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--output", help="CSV destination (default: stdout)")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="secretary",
                                     description="Matroid secretary simulator and bound verifier")
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", help="simulate trials and write one CSV row per trial")
    _experiment_flags(run_parser)
    run_parser.add_argument("--algorithm", choices=ALGORITHMS)
    run_parser.add_argument("--order", help="random, increasing, decreasing, worst-of-k or worst-of-<k>")
    run_parser.add_argument("--order-k", dest="order_k", type=int)
    run_parser.add_argument("--trials", type=int)
    run_parser.add_argument("--p-s", dest="p_s", type=float, help="sampling probability of the bucket greedy")
    run_parser.add_argument("--tau", type=int)
    run_parser.add_argument("--delta", type=int)

    verify_parser = commands.add_parser("verify", help="check the selection bounds and write a report CSV")
    _experiment_flags(verify_parser)
    verify_parser.add_argument("--monte-carlo", dest="monte_carlo", action="store_true", default=None)
    verify_parser.add_argument("--trials", dest="mc_trials", type=int, help="Monte Carlo trials")
    verify_parser.add_argument("--orders", type=int, help="arrival orders for exact checks")
    verify_parser.add_argument("--axioms", action="store_true", default=None)

    opt_parser = commands.add_parser("opt", help="print the offline optimum of an instance")
    opt_parser.add_argument("--instance", required=True)
    opt_parser.add_argument("--weights", required=True)
    opt_parser.add_argument("--verbose", action="store_true")
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    overrides: Dict[str, object] = {}
    for dest, name in FLAG_FIELDS.items():
        value = getattr(args, dest, None)
        if value is not None:
            overrides[name] = value
    if "weights_path" in overrides and "weight_scheme" not in overrides:
        overrides["weight_scheme"] = "from-file"
    return ExperimentConfig.from_sources(args.config, overrides)


@contextmanager
def _csv_destination(path: Optional[str]):
    if path is None:
        yield sys.stdout
        return
    with open(path, 'w', encoding='utf-8', newline='') as f:
        yield f


def _emit_summary(lines: List[str], to_stdout: bool):
    """The summary goes to stderr when the CSV itself occupies stdout"""
    stream = sys.stdout if to_stdout else sys.stderr
    for line in lines:
        print(line, file=stream)


def command_run(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    result = run(config)
    with _csv_destination(config.output) as stream:
        write_records(result.records, stream)
    logger.info("wrote %d trial records", len(result.records))
    _emit_summary(result.summary_lines(), to_stdout=config.output is not None)
    return ExitCode.FAILED_CHECK if result.dependent_trials else ExitCode.OK


def command_verify(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    report, m, _ = verify(config)
    with _csv_destination(config.output) as stream:
        report.write_csv(stream)
    mode = "axioms" if config.axioms else "monte-carlo" if config.monte_carlo else "exact"
    lines = [f"instance={m.describe()}", f"mode={mode}", f"rows={len(report.rows)}",
             f"failed={len(report.failures)}", f"known_gaps={len(report.known_gaps)}"] + report.summary()
    _emit_summary(lines, to_stdout=config.output is not None)
    return ExitCode.OK if report.passed else ExitCode.FAILED_CHECK


def command_opt(args: argparse.Namespace) -> int:
    elements, total = offline_optimum(args.instance, args.weights)
    print(f"elements={','.join(map(str, elements))}")
    print(f"weight={format_weight(total)}")
    return ExitCode.OK


COMMANDS = {"run": command_run, "verify": command_verify, "opt": command_opt}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        return int(COMMANDS[args.command](args))
    except SecretaryError as e:
        print(f"error: {e}", file=sys.stderr)
        return int(e.exit_code)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCode.IO)
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
