"""Solver workbench for the regularized logarithmic Schrodinger equation
on periodic 1D domains: splitting and conservative finite-difference time
steppers, exact Gaussian references, and a convergence/dynamics harness."""

from .core import (
    ComplexField,
    ConfigurationError,
    Grid1D,
    GridMismatchError,
    ModelParams,
    energy_regularized,
    energy_split,
    error_field,
    h1_seminorm,
    make_grid,
    mass,
    momentum,
    norm,
)
from .errors import ConvergenceError, NanAbortError
from .flows import FlowWorkspace, flow_A, flow_B, phi_eps
from .splitting import SplitScheme, Trajectory, evolve, step

__version__ = "0.1.0"

__all__ = [
    "ComplexField", "ConfigurationError", "Grid1D", "GridMismatchError",
    "ModelParams", "energy_regularized", "energy_split", "error_field",
    "h1_seminorm", "make_grid", "mass", "momentum", "norm",
    "ConvergenceError", "NanAbortError",
    "FlowWorkspace", "flow_A", "flow_B", "phi_eps",
    "SplitScheme", "Trajectory", "evolve", "step",
    "__version__",
]
