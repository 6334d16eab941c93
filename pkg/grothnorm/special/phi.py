"""The functions φ_d.

For unit vectors u, v and a d x n Gaussian matrix Z,
φ_d(⟨u, v⟩) = E ⟨Zu, Zv⟩ / (‖Zu‖ ‖Zv‖). Over the reals
φ_d(x) = b₁ x ₂F₁(½, ½; d/2 + 1; x²) with b₁ the first Taylor coefficient,
which is (2/π) arcsin x for d = 1. Over the complex numbers
φ_d(z) = sign(z) φ_{2d}(|z|) with the real function of twice the dimension.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import integrate, special

from grothnorm.classes import SymMatrix
from grothnorm.utils import FieldTag, DomainError, RngStream, TOL_PSD, csign

__all__ = ["PhiSeries", "phi_series", "phi_real", "phi_complex", "phi", "haagerup_integral", "phi_iterate",
           "apply_phi_entrywise", "mc_phi", "b1_coefficient", "DEFAULT_TERMS", "DISK_TOL"]

logger = logging.getLogger(__name__)

DEFAULT_TERMS = 64
DISK_TOL = 1e-12


def _real_dimension(d: int, field) -> int:
    if d < 1:
        raise DomainError(f"The dimension d must be at least 1, got {d}.")
    return d if FieldTag.parse(field).is_real else 2 * d


def b1_coefficient(d: int, field=FieldTag.REAL) -> float:
    """First Taylor coefficient of φ_d: (2/d)(Γ((d+1)/2)/Γ(d/2))², and b_{1,2d} over the complex field."""
    k = _real_dimension(d, field)
    return float(2 / k * np.exp(2 * (special.gammaln((k + 1) / 2) - special.gammaln(k / 2))))


def _check_disk(x, what="argument"):
    modulus = np.abs(x)
    if np.any(modulus > 1 + DISK_TOL):
        raise DomainError(f"The {what} must lie in the closed unit disk, got modulus {np.max(modulus):.17g}.")
    return np.minimum(modulus, 1.0)


@dataclass(frozen=True, eq=False)
class PhiSeries:
    """Taylor coefficients b_{2k+1} of φ_d, for k < K.

    Parameters
    ----------
    d : int
    field : FieldTag
    coeffs : numpy array
        nonnegative, summing to at most 1
    truncation_error_bound : float
        1 - Σ coeffs, a bound on the remainder over the closed disk

    """
    d: int
    field: FieldTag
    coeffs: np.ndarray
    truncation_error_bound: float

    def __post_init__(self):
        if np.any(self.coeffs < 0):
            raise ValueError("Taylor coefficients of φ are nonnegative.")
        if self.truncation_error_bound < -1e-12:
            raise ValueError(f"Coefficients sum to {1 - self.truncation_error_bound:.17g} > 1.")

    @property
    def K(self):
        return len(self.coeffs)

    def __call__(self, z):
        """Truncated series Σ b_{2k+1} z |z|^{2k}."""
        z = np.asarray(z)
        r = _check_disk(z)
        radial = np.polynomial.polynomial.polyval(r ** 2, self.coeffs) * r
        return csign(z) * radial if np.iscomplexobj(z) else np.sign(z) * radial

    def remainder_bound(self, z) -> float:
        return self.truncation_error_bound * float(np.max(np.abs(z))) ** (2 * self.K + 1)


def phi_series(d: int = 1, field=FieldTag.REAL, K: int = DEFAULT_TERMS) -> PhiSeries:
    """The first K odd Taylor coefficients b₁ ((½)_k)² / ((d/2 + 1)_k k!)."""
    field = FieldTag.parse(field)
    dim = _real_dimension(d, field)
    k = np.arange(K)
    c = dim / 2 + 1
    log_ratio = (2 * (special.gammaln(k + 0.5) - special.gammaln(0.5))
                 - (special.gammaln(c + k) - special.gammaln(c)) - special.gammaln(k + 1))
    coeffs = b1_coefficient(dim) * np.exp(log_ratio)
    return PhiSeries(d, field, coeffs, float(max(0.0, 1 - np.sum(coeffs))))


def _scalar_or_array(value, like):
    return value.item() if np.ndim(like) == 0 else value


def phi_real(x, d: int = 1, K: int = None):
    """φ_d over the reals.

    Parameters
    ----------
    x : float or array
        in [-1, 1]
    d : int
    K : int, optional
        when given, evaluate the K-term Taylor polynomial instead of the
        hypergeometric closed form

    Returns
    -------
    value : float or array
    """
    x = np.asarray(x, dtype=float)
    r = _check_disk(x)
    if K is not None:
        return _scalar_or_array(phi_series(d, FieldTag.REAL, K)(x), x)
    if d == 1:
        radial = 2 / np.pi * np.arcsin(r)
    else:
        radial = b1_coefficient(d) * r * special.hyp2f1(0.5, 0.5, d / 2 + 1, r ** 2)
    radial = np.where(r == 1, 1.0, radial)
    return _scalar_or_array(np.where(x < 0, -radial, radial), x)


def phi_complex(z, d: int = 1, K: int = None):
    """φ_d over the complex numbers: sign(z) φ_{2d}(|z|)."""
    z = np.asarray(z, dtype=complex)
    r = _check_disk(z)
    radial = np.asarray(phi_real(r, 2 * d, K))
    return _scalar_or_array(np.where(r > 0, csign(z) * radial, 0j), z)


def phi(z, d: int = 1, field=FieldTag.REAL):
    return phi_real(z, d) if FieldTag.parse(field).is_real else phi_complex(z, d)


def haagerup_integral(z) -> complex:
    """z ∫₀^{π/2} cos²t / √(1 - |z|² sin²t) dt, which is φ₁ over the complex field."""
    r = float(_check_disk(z))
    value, _ = integrate.quad(lambda t: np.cos(t) ** 2 / np.sqrt(1 - r ** 2 * np.sin(t) ** 2), 0, np.pi / 2,
                              epsabs=1e-14, epsrel=1e-13, limit=200)
    return complex(z) * value


def phi_iterate(z, k: int, field=FieldTag.REAL, d: int = 1):
    """k-fold composition of φ_d; every orbit from inside the open disk tends to 0."""
    for _ in range(k):
        z = phi(z, d, field)
    return z


def apply_phi_entrywise(G: SymMatrix, d: int = 1, field=None) -> SymMatrix:
    """Φ_d(G) = (φ_d(g_ij)).

    G must have entries in the closed disk and a constant diagonal. For a
    correlation matrix G, Φ_d(G) - b_{1,d} G is positive semidefinite; this
    is checked and logged.
    """
    field = FieldTag.parse(field) if field is not None else G.field
    diagonal = G.diagonal
    if np.any(np.abs(diagonal - diagonal[0]) > DISK_TOL):
        raise DomainError("Φ applies to matrices with equal diagonal entries.")
    _check_disk(G.entries, "entries")
    image = SymMatrix(phi(G.entries, d, field), field)
    if np.all(np.abs(diagonal - 1) <= DISK_TOL) and G.smallest_eigenvalue() >= -TOL_PSD:
        gap = float(np.linalg.eigvalsh(image.entries - b1_coefficient(d, field) * G.entries)[0])
        logger.debug("smallest eigenvalue of Φ(G) - b1 G: %.3e", gap)
        if gap < -TOL_PSD:
            logger.warning("Φ(G) - b1 G has eigenvalue %.3e below zero", gap)
    return image


def mc_phi(x, d: int = 1, field=FieldTag.REAL, N: int = 200_000, rng: RngStream = None) -> Tuple[complex, float]:
    """Monte-Carlo estimate of φ_d(x) from its defining expectation.

    Draws correlated Gaussian vectors w₁ = z₁, w₂ = x z₁ + √(1 - |x|²) z₂ so
    that E w₁* w₂ = d x, and averages the normalized inner product.

    Returns
    -------
    mean : float or complex
    stderr : float
    """
    field = FieldTag.parse(field)
    rng = rng or RngStream()
    modulus = float(_check_disk(x))
    z1 = rng.normal((N, d), field)
    z2 = rng.normal((N, d), field)
    w2 = x * z1 + np.sqrt(1 - modulus ** 2) * z2
    samples = np.sum(np.conj(z1) * w2, axis=1) / (np.linalg.norm(z1, axis=1) * np.linalg.norm(w2, axis=1))
    if field.is_real:
        samples = samples.real
    mean = samples.mean()
    return (float(mean) if field.is_real else complex(mean)), float(np.std(samples) / np.sqrt(N))
