"""Command-line driver for benchmark and custom-problem runs."""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from ..exceptions import (
    ComponentSolveError,
    ConfigurationError,
    DivergenceError,
    NonConvergenceError,
)
from ..interp import ProlongationMethod
from ..problem import list_benchmarks
from ..sweeper import DerivativeMode
from .config import RunMode, build_run_config, load_config
from .runner import RunReport, run_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_IO = 4

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# argparse destinations that map one-to-one onto RunConfig fields
_RUN_FIELDS = (
    "example", "case", "mode", "prolongation", "derivative_mode", "nh", "nr", "nl",
    "gamma", "epsilon", "delta", "first_order_delta", "max_iterations", "workers",
    "study", "compare", "table_out", "field_out", "timing_out", "log_level",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparse-sweep",
        description="Sparse-grid fixed-point fast sweeping WENO solver for static Hamilton-Jacobi equations",
    )
    parser.add_argument("--config", help="TOML run file; flags override its values")
    parser.add_argument("--list", action="store_true", help="List the benchmark problems and exit")

    problem = parser.add_argument_group("problem")
    problem.add_argument("--example", type=int, help="Benchmark id 1-6")
    problem.add_argument("--case", help="2D or 3D (examples 5 and 6)")

    solver = parser.add_argument_group("solver")
    solver.add_argument("--mode", choices=[m.value for m in RunMode], help="single or sparse (default: sparse)")
    solver.add_argument(
        "--derivatives", dest="derivative_mode", choices=[m.value for m in DerivativeMode],
        help="Derivative approximation (default: linear3 for example 1, weno3 otherwise)",
    )
    solver.add_argument("--nh", type=int, help="Cells per axis of the single grid")
    solver.add_argument("--gamma", type=float, help="Override the problem's gamma")
    solver.add_argument("--epsilon", type=float, help="WENO epsilon (default: 1e-6)")
    solver.add_argument("--delta", type=float, help="Convergence threshold (default: 1e-11)")
    solver.add_argument("--first-order-delta", type=float, help="Warm-start threshold (default: 1e-4)")
    solver.add_argument("--max-iter", dest="max_iterations", type=int, help="Sweep limit per solve")

    sparse = parser.add_argument_group("sparse")
    sparse.add_argument(
        "--prolongation", choices=[m.value for m in ProlongationMethod],
        help="Prolongation method (default: lagrange for examples 1-2, weno otherwise)",
    )
    sparse.add_argument("--nr", type=int, help="Cells per axis of the root grid")
    sparse.add_argument("--nl", type=int, help="Finest refinement level (default: 3)")
    sparse.add_argument("--workers", type=int, help="Concurrent component solves")
    sparse.add_argument(
        "--compare", action="store_const", const=True,
        help="Also solve the single grid at the target resolution and compare",
    )

    output = parser.add_argument_group("output")
    output.add_argument("--study", type=int, help="Rows of the refinement ladder (default: 1)")
    output.add_argument("--table-out", help="CSV error table")
    output.add_argument("--field-out", help="Field dump of the last row")
    output.add_argument("--timing-out", help="JSON timing record")
    output.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging level (default: INFO)"
    )
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {name: getattr(args, name) for name in _RUN_FIELDS}


def _print_listing() -> None:
    for entry in list_benchmarks():
        case = f" {entry['case']}" if entry["case"] else ""
        exact = "exact" if entry["has_exact"] else "no exact"
        print(f"{entry['id']}{case}: {entry['description']} (gamma={entry['gamma']}, {exact})")


def _print_report(report: RunReport) -> None:
    print("=" * 60)
    print(f"{report.problem} ({report.dim}D, {report.mode.value}, {report.derivative_mode})")
    for record in report.records:
        errors = ""
        if record.l1 is not None:
            errors = f"  L1={record.l1:.3e}  Linf={record.linf:.3e}"
        print(f"N={record.n:5d}{errors}  sweeps={record.iterations}  time={record.wall_time:.2f}s")
    if report.comparison is not None:
        c = report.comparison
        print(
            f"single {c.target_cells}: {c.single_time:.2f}s, sparse {c.sparse_time:.2f}s, "
            f"ratio {c.time_ratio:.2f}, max deviation {c.max_deviation:.3e}"
        )
    for kind, path in report.outputs.items():
        print(f"{kind}: {path}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG

    if args.list:
        _print_listing()
        return EXIT_OK

    try:
        file_values = load_config(args.config) if args.config else {}
        cfg = build_run_config(file_values, _overrides(args))
    except (ConfigurationError, ValidationError) as exc:
        logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
        logger.error("Invalid configuration: %s", exc)
        return EXIT_CONFIG
    except OSError as exc:
        logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
        logger.error("Cannot read config: %s", exc)
        return EXIT_IO

    logging.basicConfig(level=getattr(logging, cfg.log_level.upper(), logging.INFO), format=LOG_FORMAT)

    try:
        report = run_config(cfg)
    except (ConfigurationError, ValidationError) as exc:
        logger.error("Invalid configuration: %s", exc)
        return EXIT_CONFIG
    except (NonConvergenceError, DivergenceError, ComponentSolveError) as exc:
        logger.error("Solve failed: %s", exc)
        return EXIT_SOLVER
    except OSError as exc:
        logger.error("Output failed: %s", exc)
        return EXIT_IO

    _print_report(report)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
