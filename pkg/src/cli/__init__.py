"""Command-line driver, run configuration and output files."""

from .config import CustomProblem, RunConfig, RunMode, build_run_config, flatten_sections, load_config
from .field_io import dump_field, load_field
from .main import EXIT_CONFIG, EXIT_IO, EXIT_OK, EXIT_SOLVER, build_parser, main
from .runner import ComparisonRecord, RunRecord, RunReport, TimingRecord, run_config

__all__ = [
    "CustomProblem",
    "RunConfig",
    "RunMode",
    "build_run_config",
    "flatten_sections",
    "load_config",
    "dump_field",
    "load_field",
    "EXIT_CONFIG",
    "EXIT_IO",
    "EXIT_OK",
    "EXIT_SOLVER",
    "build_parser",
    "main",
    "ComparisonRecord",
    "RunRecord",
    "RunReport",
    "TimingRecord",
    "run_config",
]
