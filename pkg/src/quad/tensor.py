import numpy as np

from .chain import ChainQuadraturePsi
from .representation import IntegralRep


class TensorProductPsi(ChainQuadraturePsi):
    """
    m = 1 only: forms the full (u, v) grid of the integrand and sums it,
    without the chained contraction. Same nodes and weights, so it agrees with
    ChainQuadraturePsi to rounding; kept as a cross-check of the contraction.
    """

    def __init__(self, rep: IntegralRep):
        if rep.m != 1:
            raise ValueError(f"TensorProductPsi supports m = 1 only, got m = {rep.m}")
        super().__init__(rep)

    def integrate(self, x, z, truncations, spec, insertions=None):
        insertions = insertions or {}
        u, logw_u = self.layer_nodes(0, truncations[0], spec)
        v, logw_v = self.layer_nodes(1, truncations[1], spec)
        wu = np.exp(logw_u) * (insertions[0](u) if 0 in insertions else 1.0)
        wv = np.exp(logw_v) * (insertions[1](v) if 1 in insertions else 1.0)
        U, V = np.meshgrid(u, v, indexing="ij")
        with np.errstate(over="ignore", invalid="ignore"):
            integrand = wu[:, None] * wv[None, :] * np.exp(U * z - U * V + x * V)
        integrand = np.where(np.isfinite(integrand), integrand, 0.0)
        value = complex(integrand.sum())
        mass = float(np.abs(integrand.sum(axis=0)).sum())
        return value, mass
