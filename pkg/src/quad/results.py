from dataclasses import dataclass
from typing import Tuple


class TruncationError(RuntimeError):
    def __init__(self, message: str, last_estimate: float):
        super().__init__(message)
        self.last_estimate = last_estimate


@dataclass(frozen=True)
class EvalResult:
    value: complex
    est_error: float
    truncations: Tuple[float, ...] = ()
    magnitude: float = 0.0

    def __post_init__(self):
        if not self.est_error >= 0.0:
            raise ValueError(f"est_error must be non-negative, got {self.est_error}")
