"""Uniform sampling on spheres and Gaussian sign rounding.

A normalized standard Gaussian vector (real, or with independent complex
normal coordinates) is uniform on the unit sphere. Rounding a family of
unit vectors x_i with one Gaussian direction z gives δ_i = sign⟨x_i, z⟩
with sign 0 = 1, so that every δ lies on the torus.
"""
from dataclasses import dataclass

import numpy as np
from scipy import integrate, stats

from grothnorm.classes import SymMatrix, GramFactor, Constraint
from grothnorm.special import phi, density_f
from grothnorm.utils import FieldTag, RngStream, DomainError, csign

__all__ = ["sample_sphere", "sample_sphere_batch", "gaussian_sign_round", "gaussian_sign_round_batch",
           "RoundingAverage", "averaged_rounding", "mc_moments", "density_histogram_test"]


def sample_sphere_batch(N: int, dim: int, field=FieldTag.REAL, rng: RngStream = None) -> np.ndarray:
    """N independent uniform unit vectors, one per row."""
    if dim < 1:
        raise DomainError(f"dim must be positive, got {dim}.")
    rng = rng or RngStream()
    Z = rng.normal((N, dim), FieldTag.parse(field))
    norms = np.linalg.norm(Z, axis=1, keepdims=True)
    # a zero Gaussian vector has probability zero
    return Z / np.where(norms > 0, norms, 1.0)


def sample_sphere(dim: int, field=FieldTag.REAL, rng: RngStream = None) -> np.ndarray:
    return sample_sphere_batch(1, dim, field, rng)[0]


def gaussian_sign_round_batch(xs: GramFactor, N: int, rng: RngStream = None) -> np.ndarray:
    """N roundings of ``xs`` as the columns of an n x N array."""
    rng = rng or RngStream()
    Z = rng.normal((xs.d, N), xs.field)
    return csign(xs.vectors.conj().T @ Z)


def gaussian_sign_round(xs: GramFactor, rng: RngStream = None) -> np.ndarray:
    """One rounding δ_i = sign⟨x_i, z⟩ of unit vectors x_i.

    Parameters
    ----------
    xs : GramFactor
        on the unit sphere
    rng : RngStream, optional

    Returns
    -------
    delta : numpy array
        in {-1, 1}ⁿ (real) or on the torus (complex)
    """
    if xs.constraint is not Constraint.UNIT_SPHERE:
        raise DomainError("Sign rounding takes unit vectors.")
    return gaussian_sign_round_batch(xs, 1, rng)[:, 0]


@dataclass(frozen=True)
class RoundingAverage:
    """Sample mean of Σ a_ij δ_i conj(δ_j) over roundings against Σ a_ij φ(⟨x_i, x_j⟩)."""
    mean: float
    stderr: float
    expected: float
    samples: int

    def within(self, sigmas: float = 4.0) -> bool:
        return abs(self.mean - self.expected) <= sigmas * self.stderr + 1e-12


def averaged_rounding(A: SymMatrix, xs: GramFactor, N: int = 100_000, rng: RngStream = None) -> RoundingAverage:
    D = gaussian_sign_round_batch(xs, N, rng)
    values = np.real(np.einsum('in,ij,jn->n', D, A.entries, D.conj()))
    expected = float(np.real(np.sum(A.entries * phi(xs.gram(), 1, xs.field))))
    return RoundingAverage(float(values.mean()), float(values.std() / np.sqrt(N)), expected, N)


def _inner_products(n, field, N, rng):
    U = sample_sphere_batch(N, n + 1, field, rng)
    V = sample_sphere_batch(N, n + 1, field, rng)
    return np.sum(U.conj() * V, axis=1)


def mc_moments(n: int, alpha: float, field=FieldTag.REAL, N: int = 100_000, rng: RngStream = None):
    """Monte-Carlo E |⟨U, V⟩|^α for uniform unit vectors of 𝕜^{n+1}.

    Returns
    -------
    mean, stderr : float
    """
    rng = rng or RngStream()
    samples = np.abs(_inner_products(n, FieldTag.parse(field), N, rng)) ** alpha
    return float(samples.mean()), float(samples.std() / np.sqrt(N))


def density_histogram_test(n: int, field=FieldTag.REAL, N: int = 1_000_000, bins: int = 50,
                           rng: RngStream = None):
    """χ² goodness of fit of sampled ⟨U, V⟩ against its density.

    Over the complex numbers the modulus is binned, whose distribution
    function is 1 - (1 - r²)ⁿ.

    Returns
    -------
    statistic, pvalue : float
    """
    field = FieldTag.parse(field)
    rng = rng or RngStream()
    T = _inner_products(n, field, N, rng)
    if field.is_real:
        edges = np.linspace(-1, 1, bins + 1)
        observed, _ = np.histogram(T.real, edges)
        probabilities = np.array([integrate.quad(density_f, a, b, args=(n, field))[0]
                                  for a, b in zip(edges[:-1], edges[1:])])
    else:
        edges = np.linspace(0, 1, bins + 1)
        observed, _ = np.histogram(np.abs(T), edges)
        probabilities = -np.diff((1 - edges ** 2) ** n)
    expected = probabilities / probabilities.sum() * observed.sum()
    result = stats.chisquare(observed, expected)
    return float(result.statistic), float(result.pvalue)
