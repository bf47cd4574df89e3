from dataclasses import dataclass
from typing import Optional, Tuple

from src.automorphism import AutomorphismWord


@dataclass(frozen=True)
class ConvergenceReport:
    ok: bool
    position: Optional[Tuple[str, ...]] = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "position": list(self.position) if self.position else None, "reason": self.reason}

    def __str__(self):
        if self.ok:
            return "ok"
        return f"violation at {', '.join(self.position)}: {self.reason}"


def convergence_check(word: AutomorphismWord) -> ConvergenceReport:
    sequence = word.polynomial_sequence()
    for label, poly in sequence:
        if poly.degree < 2:
            return ConvergenceReport(
                ok=False,
                position=(label,),
                reason=f"{label} = {poly} has degree {poly.degree}; every layer needs degree >= 2",
            )
    for (label_a, a), (label_b, b) in zip(sequence, sequence[1:]):
        if a.degree == 2 and b.degree == 2:
            return ConvergenceReport(
                ok=False,
                position=(label_a, label_b),
                reason=f"consecutive quadratic layers {label_a}, {label_b}; the integral may degenerate "
                       f"to a delta-type distribution",
            )
    return ConvergenceReport(ok=True)
