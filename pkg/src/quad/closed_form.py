import cmath
from math import comb, factorial
from typing import Optional

from src.params import QuadratureSpec

from .representation import IntegralRep, Moment
from .results import EvalResult


class ClosedFormPsi:
    """
    m = 0: psi_0 = e^{xz}. A moment (j, k) stands for Dz^j Dx^k, so
    Dx^k (x^j e^{xz}) = sum_i C(k, i) j!/(j-i)! x^(j-i) z^(k-i) e^{xz}.
    """

    def __init__(self, rep: IntegralRep):
        if rep.m != 0:
            raise ValueError(f"ClosedFormPsi handles m = 0 only, got m = {rep.m}")
        self.rep = rep

    def evaluate(self, x: complex, z: complex, spec: QuadratureSpec, moment: Optional[Moment] = None,
                 truncations=None) -> EvalResult:
        moment = moment or self.rep.moment
        j, k = moment.j, moment.k
        total = 0j
        for i in range(min(j, k) + 1):
            total += comb(k, i) * (factorial(j) // factorial(j - i)) * x ** (j - i) * z ** (k - i)
        value = total * cmath.exp(x * z)
        return EvalResult(value=value, est_error=0.0, truncations=(), magnitude=abs(value))
