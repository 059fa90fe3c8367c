"""Experiment harness: config ingestion, study drivers, order fitting,
presets, and the `logse` CLI."""

from .config import StudyConfig, load_config, parse_config, validate_config
from .fitting import FitResult, fit_order
from .studies import StudyReport, run_convergence, run_epsilon_study, run_long_time, run_study

__all__ = [
    "StudyConfig", "load_config", "parse_config", "validate_config",
    "FitResult", "fit_order",
    "StudyReport", "run_convergence", "run_epsilon_study", "run_long_time",
    "run_study",
]
