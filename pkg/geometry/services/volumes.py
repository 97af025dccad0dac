"""
Volumes of the regular ideal hyperbolic octahedron and 24-cell.
"""
from functools import lru_cache

import numpy as np
from scipy.integrate import quad


def lobachevsky(theta: float) -> float:
    """Lobachevsky function -int_0^theta log|2 sin t| dt."""
    value, _ = quad(lambda t: -np.log(np.abs(2.0 * np.sin(t))), 0.0, theta, limit=200)
    return value


@lru_cache(maxsize=None)
def octahedron_volume() -> float:
    """v_O = 8 L(pi/4), approximately 3.663862376708876."""
    return 8.0 * lobachevsky(np.pi / 4.0)


@lru_cache(maxsize=None)
def cell24_volume() -> float:
    """v_m = 4 pi^2 / 3."""
    return 4.0 * np.pi**2 / 3.0
