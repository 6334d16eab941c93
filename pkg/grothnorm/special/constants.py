"""Named constants and bound functions.

Grothendieck-type constants for the γ, Γ and G norms are not known exactly;
the table stores proven bounds and labels them as such.
"""
import logging
from dataclasses import dataclass, asdict
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from scipy import optimize, special

from grothnorm.classes import ConeLabel
from grothnorm.readwrite import to_jsonable
from grothnorm.utils import FieldTag, DomainError
from .phi import phi_real, b1_coefficient, _real_dimension

__all__ = ["alpha_d", "alpha_gw", "conic_lower_bound", "sharpness_bound_finite", "a0", "sdd_constant",
           "conic_constant", "ConstantsTable", "constants_table", "ALPHA_GRID"]

logger = logging.getLogger(__name__)

ALPHA_GRID = 10_000
ALPHA_TOL = 1e-10

SINH_HALF_PI = float(np.sinh(np.pi / 2))
HAAGERUP_BOUND = 8 / np.pi - 1
KH_BOUNDS_R = (1.67696, 1.78221)
KH_BOUNDS_C = (1.33807, 1.40491)


@lru_cache(maxsize=None)
def alpha_d(d: int, field=FieldTag.REAL) -> float:
    """inf over x in [0, 1] of (1 + φ_d(x)) / (1 + x).

    A 10⁴-point grid locates the minimum, golden-section search refines it.
    """
    dim = _real_dimension(d, field)

    def ratio(x):
        return (1 + phi_real(x, dim)) / (1 + x)

    grid = np.linspace(0.0, 1.0, ALPHA_GRID)
    values = ratio(grid)
    i = int(np.argmin(values))
    best = float(values[i])
    if 0 < i < ALPHA_GRID - 1:
        try:
            result = optimize.minimize_scalar(ratio, bracket=(grid[i - 1], grid[i], grid[i + 1]), method='golden',
                                              tol=ALPHA_TOL)
        except ValueError:
            # flat triple on the grid, nothing to refine
            result = None
        if result is not None and 0 <= result.x <= 1:
            best = min(best, float(result.fun))
    logger.debug("alpha_%d (real dimension %d) = %.15f", d, dim, best)
    return best


def alpha_gw(field=FieldTag.REAL) -> float:
    return alpha_d(1, FieldTag.parse(field))


def conic_lower_bound(d: int, p=np.inf, field=FieldTag.REAL) -> float:
    """Lower bound on the conic constant of rank d against rank p; 1/b_{1,d} when p is infinite.

    Parameters
    ----------
    d : int
    p : int or numpy.inf
    field : FieldTag

    Returns
    -------
    bound : float
    """
    field = FieldTag.parse(field)
    if d < 1 or d > p:
        raise DomainError(f"Need 1 <= d <= p, got d={d}, p={p}.")
    if np.isinf(p):
        return 1 / b1_coefficient(d, field)
    gl = special.gammaln
    if field.is_real:
        log_ratio = gl((p + 1) / 2) + gl(d / 2) - gl(p / 2) - gl((d + 1) / 2)
    else:
        log_ratio = gl(p + 0.5) + gl(d) - gl(p) - gl(d + 0.5)
    return float(d / p * np.exp(2 * log_ratio))


def sharpness_bound_finite(n: int, field=FieldTag.REAL) -> float:
    """Sharp ratio of the PSD bound in dimension n; tends to π/2 (real) or 4/π (complex)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}.")
    gl = special.gammaln
    if FieldTag.parse(field).is_real:
        return float(np.pi / 2 * np.exp(2 * (gl((n + 1) / 2) - gl(n / 2))) / (n / 2))
    return float(4 / np.pi * np.exp(2 * (gl(n + 0.5) - gl(n))) / n)


def a0(field=FieldTag.REAL) -> float:
    """b_{1,1}: 2/π over the reals, π/4 over the complex numbers."""
    return b1_coefficient(1, field)


def sdd_constant(field=FieldTag.REAL) -> float:
    """1 + (1 - a₀)/α_GW, the bound for diagonally dominant matrices."""
    return 1 + (1 - a0(field)) / alpha_gw(field)


def conic_constant(label: ConeLabel, field=FieldTag.REAL) -> Optional[float]:
    """The constant c with ‖A‖_γ <= c ‖A‖_θ on the cone, as used by the verification suite.

    Returns None for labels without a cone-specific constant.
    """
    field = FieldTag.parse(field)
    if label is ConeLabel.PSD:
        return 1 / a0(field)
    if label is ConeLabel.WEIGHTED_LAPLACIAN:
        return 1 / alpha_gw(field)
    if label is ConeLabel.DIAGONALLY_DOMINANT:
        return sdd_constant(field)
    if label is ConeLabel.NONNEGATIVE:
        return 1.0
    return None


@dataclass(frozen=True)
class ConstantsTable:
    """Every named constant; ``*_bound*`` and ``kh_bounds_*`` entries are bounds, not exact values."""
    K_gamma_bound_R: float
    K_gamma_bound_R_improved: float
    K_gamma_bound_C: float
    nesterov_R: float
    nesterov_C: float
    alpha_gw_R: float
    alpha_gw_C: float
    kh_bounds_R: Tuple[float, float]
    kh_bounds_C: Tuple[float, float]
    a0_R: float
    a0_C: float
    sdd_constant_R: float
    sdd_constant_C: float
    krivine_G12: float

    def sdd_constant(self, field=FieldTag.REAL) -> float:
        return self.sdd_constant_R if FieldTag.parse(field).is_real else self.sdd_constant_C

    def K_gamma_bound(self, field=FieldTag.REAL) -> float:
        return self.K_gamma_bound_R if FieldTag.parse(field).is_real else self.K_gamma_bound_C

    def as_dict(self):
        """JSON-ready mapping with 15 significant digits."""
        return to_jsonable(asdict(self))


@lru_cache(maxsize=1)
def constants_table() -> ConstantsTable:
    return ConstantsTable(
        K_gamma_bound_R=SINH_HALF_PI,
        K_gamma_bound_R_improved=float(np.sqrt(2) * HAAGERUP_BOUND),
        K_gamma_bound_C=float(HAAGERUP_BOUND),
        nesterov_R=float(np.pi / 2),
        nesterov_C=float(4 / np.pi),
        alpha_gw_R=alpha_gw(FieldTag.REAL),
        alpha_gw_C=alpha_gw(FieldTag.COMPLEX),
        kh_bounds_R=KH_BOUNDS_R,
        kh_bounds_C=KH_BOUNDS_C,
        a0_R=a0(FieldTag.REAL),
        a0_C=a0(FieldTag.COMPLEX),
        sdd_constant_R=sdd_constant(FieldTag.REAL),
        sdd_constant_C=sdd_constant(FieldTag.COMPLEX),
        krivine_G12=float(np.sqrt(2)),
    )
