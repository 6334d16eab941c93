"""Inverses of φ₁ and their odd power series."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np
from scipy import optimize

from grothnorm.utils import FieldTag, DomainError, NumericalError, SizeLimitError, csign
from .phi import phi_real, _check_disk

__all__ = ["InverseSeries", "phi_inverse", "phi_complex_inverse_coeffs", "phi_real_inverse_coeffs",
           "MAX_INVERSE_TERMS", "INVERSE_XTOL"]

logger = logging.getLogger(__name__)

MAX_INVERSE_TERMS = 60
INVERSE_XTOL = 1e-13


@dataclass(frozen=True, eq=False)
class InverseSeries:
    """Coefficients c_{2k+1} of φ⁻¹(z) = Σ c_{2k+1} z |z|^{2k}, for k < K.

    Parameters
    ----------
    field : FieldTag
    coeffs : numpy array
    partial_abs_sum : float
        Σ_{k<K} |c_{2k+1}|
    tail : float
        Σ_{k>=K} |c_{2k+1}|, known in closed form from the value of the full sum

    """
    field: FieldTag
    coeffs: np.ndarray
    partial_abs_sum: float
    tail: float

    @property
    def K(self):
        return len(self.coeffs)

    @property
    def partial_sum(self):
        return float(np.sum(self.coeffs))

    def to_dict(self):
        return {"field": self.field.value, "K": self.K, "coeffs": self.coeffs.tolist(),
                "partial_abs_sum": self.partial_abs_sum, "tail": self.tail}


def _radial_inverse(y):
    if y == 0 or y == 1:
        return float(y)
    return optimize.brentq(lambda r: phi_real(r, 2) - y, 0.0, 1.0, xtol=INVERSE_XTOL, rtol=4 * np.finfo(float).eps)


def phi_inverse(y, field=FieldTag.REAL):
    """Inverse of φ₁ on the closed disk.

    Over the reals this is sin(πy/2). Over the complex numbers it is
    sign(y) h⁻¹(|y|), where h = φ₁ on [0, 1] is increasing and is inverted by
    bracketing root search.
    """
    field = FieldTag.parse(field)
    y = np.asarray(y)
    r = _check_disk(y)
    if field.is_real:
        if np.iscomplexobj(y):
            raise DomainError("The real inverse takes real arguments.")
        value = np.sin(np.pi / 2 * y)
    else:
        value = csign(y) * np.vectorize(_radial_inverse, otypes=[float])(r)
        value = np.where(r > 0, value, 0j)
    return value.item() if value.ndim == 0 else value


def _radial_taylor(K):
    """Exact coefficients p_k = ((½)_k)² / ((k+1)! k!) of φ₁(r) = (π/4) r Σ p_k r^{2k} over ℂ."""
    p = [Fraction(1)]
    for j in range(K - 1):
        p.append(p[-1] * Fraction(2 * j + 1, 2) ** 2 / ((j + 2) * (j + 1)))
    return p


def _power_coefficient(p, alpha, k):
    """[s^k] p(s)^alpha for p(0) = 1, by the recurrence m e_m = Σ ((α+1)j - m) p_j e_{m-j}."""
    e = [Fraction(1)]
    for m in range(1, k + 1):
        e.append(sum(((alpha + 1) * j - m) * p[j] * e[m - j] for j in range(1, m + 1)) / m)
    return e[k]


@lru_cache(maxsize=None)
def _inverse_coefficients():
    p = _radial_taylor(MAX_INVERSE_TERMS)
    scale = 4 / np.pi
    return tuple(float(_power_coefficient(p, -(2 * k + 1), k) / (2 * k + 1)) * scale ** (2 * k + 1)
                 for k in range(MAX_INVERSE_TERMS))


def phi_complex_inverse_coeffs(K: int = 40) -> InverseSeries:
    """Reversion of the radial series of φ₁ over the complex numbers.

    With φ(r) = (π/4) g(r), g(r) = r p(r²), Lagrange inversion gives the
    coefficients of g⁻¹ in rational arithmetic,
    [y^{2k+1}] g⁻¹ = [s^k] p(s)^{-(2k+1)} / (2k+1), and
    c_{2k+1} = (4/π)^{2k+1} [y^{2k+1}] g⁻¹. c₁ = 4/π, every later
    coefficient is nonpositive and Σ c = 1, so the absolute tail beyond K
    is Σ_{k<K} c - 1 and Σ |c| = 8/π - 1.

    Parameters
    ----------
    K : int
        number of coefficients, at most 60

    Returns
    -------
    series : InverseSeries
    """
    if not 1 <= K <= MAX_INVERSE_TERMS:
        raise SizeLimitError(f"Series reversion limited to 1 <= K <= {MAX_INVERSE_TERMS}, got {K}.")
    Q = np.array(_inverse_coefficients()[:K])

    if np.any(Q[1:] > 0):
        raise NumericalError(f"Positive inverse coefficient {np.max(Q[1:]):.3e} beyond the first.")
    partial_abs = float(np.sum(np.abs(Q)))
    tail = max(0.0, float(np.sum(Q)) - 1.0)
    logger.debug("inverse series: K=%d partial |c| sum %.12f tail %.3e", K, partial_abs, tail)
    return InverseSeries(FieldTag.COMPLEX, Q, partial_abs, tail)


def phi_real_inverse_coeffs(K: int = 20) -> InverseSeries:
    """Coefficients (-1)^k (π/2)^{2k+1} / (2k+1)! of sin(πx/2); Σ |c| = sinh(π/2)."""
    if K < 1:
        raise DomainError("At least one coefficient is needed.")
    coeffs = np.array([(-1) ** k * (np.pi / 2) ** (2 * k + 1) / factorial(2 * k + 1) for k in range(K)])
    partial_abs = float(np.sum(np.abs(coeffs)))
    return InverseSeries(FieldTag.REAL, coeffs, partial_abs, max(0.0, float(np.sinh(np.pi / 2)) - partial_abs))
