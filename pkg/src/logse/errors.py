"""Runtime failures raised by the time steppers."""


class NanAbortError(RuntimeError):
    """A non-finite value appeared in the field during time marching."""

    def __init__(self, step_index: int, time: float):
        self.step_index = step_index
        self.time = time
        super().__init__(
            f"non-finite field values at step {step_index} (t = {time:g})")


class ConvergenceError(RuntimeError):
    """The implicit step's fixed-point iteration failed to converge."""

    def __init__(self, iterations: int, residual: float, tolerance: float):
        self.iterations = iterations
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"fixed-point iteration did not converge after {iterations} "
            f"iterations (residual {residual:.3e}, tolerance {tolerance:.3e})")
