from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.special import roots_legendre


@lru_cache(maxsize=None)
def _legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = roots_legendre(n)
    return nodes, weights


@lru_cache(maxsize=None)
def graded_panel_rule(nodes_per_panel: int, panels: int, ratio: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre rule on [0, 1] with panel edges
    0, r^(panels-1), ..., r, 1, i.e. refined geometrically toward 0.
    Scale by T for a ray truncated at T.
    """
    edges = np.concatenate(([0.0], ratio ** np.arange(panels - 1, -1, -1, dtype=float)))
    x, w = _legendre(nodes_per_panel)
    lo, hi = edges[:-1, None], edges[1:, None]
    half = 0.5 * (hi - lo)
    t = (lo + half * (x[None, :] + 1.0)).ravel()
    weights = (half * w[None, :]).ravel()
    t.setflags(write=False)
    weights.setflags(write=False)
    return t, weights


def ray_rule(nodes_per_panel: int, panels: int, ratio: float, truncation: float) -> Tuple[np.ndarray, np.ndarray]:
    t, w = graded_panel_rule(nodes_per_panel, panels, float(ratio))
    return t * truncation, w * truncation
