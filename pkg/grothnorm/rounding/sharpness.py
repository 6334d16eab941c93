"""Random instances showing that the PSD bound of γ against θ is sharp.

For m uniform unit vectors x_i of 𝕜ⁿ and A = G/m² with G their Gram matrix,
tr(AG) = (1/m²) Σ |⟨x_i, x_j⟩|² is a lower bound on ‖A‖_γ and tends to 1/n,
while ‖A‖_θ = max over t in the torus of ‖(1/m) Σ t̄_i x_i‖². The ratio
approaches the finite-dimension bound as m grows.
"""
import logging
from dataclasses import dataclass
from itertools import starmap
from multiprocessing.pool import ThreadPool
from typing import Iterable

import numpy as np
import pandas as pd

from grothnorm.classes import SymMatrix
from grothnorm.gramopt import OptConfig
from grothnorm.oracle import theta_real_exact
from grothnorm.readwrite import to_pandas_reports
from grothnorm.special import sharpness_bound_finite
from grothnorm.utils import FieldTag, RngStream, DomainError, NumericalError, csign
from .sampling import sample_sphere_batch

__all__ = ["SharpnessReport", "sharpness_experiment", "sharpness_sweep", "alternating_theta",
           "SHARPNESS_RESTARTS", "EXACT_THETA_LIMIT"]

logger = logging.getLogger(__name__)

SHARPNESS_RESTARTS = 32
EXACT_THETA_LIMIT = 20
MONOTONE_TOL = 1e-12
GRAM_BLOCK = 512

CAVEAT = ("theta_estimate is a lower bound on theta, so ratio_estimate over-estimates gamma/theta "
          "only as far as gamma_lower is exact")


@dataclass(frozen=True)
class SharpnessReport:
    """One sharpness instance.

    Parameters
    ----------
    n, m : int
        dimension and number of vectors
    field : FieldTag
    gamma_lower : float
        tr(AG), attained by the sampled vectors
    theta_estimate : float
        attained by a feasible sign vector
    ratio_estimate : float
    finite_n_bound : float
    mc_std : float
        standard error of gamma_lower as a mean of |⟨x_i, x_j⟩|²
    theta_exact : bool
    note : str

    """
    n: int
    m: int
    field: FieldTag
    gamma_lower: float
    theta_estimate: float
    ratio_estimate: float
    finite_n_bound: float
    mc_std: float
    theta_exact: bool = False
    note: str = CAVEAT


def _alternate(X, v, max_iters):
    """Alternating ascent of ‖Σ t̄_j x_j‖ from direction v; returns the norm and the t attaining it."""
    norm = -np.inf
    t = csign(v.conj() @ X)
    for _ in range(max_iters):
        w = X @ t.conj()
        new_norm = float(np.linalg.norm(w))
        if new_norm < norm - MONOTONE_TOL * max(1.0, norm):
            raise NumericalError(f"Alternating maximization decreased from {norm:.17g} to {new_norm:.17g}.")
        improved = new_norm > norm + 1e-15 * max(1.0, new_norm)
        norm = new_norm
        if not improved or new_norm == 0:
            break
        t = csign((w / new_norm).conj() @ X)
    return norm, t


def alternating_theta(X: np.ndarray, restarts: int = SHARPNESS_RESTARTS, rng: RngStream = None,
                      cfg: OptConfig = None):
    """Lower bound on max over t of ‖Σ t̄_j x_j‖² for the columns x_j of X.

    Each restart draws a direction v, then alternates t_j = sign⟨v, x_j⟩ and
    v = w/‖w‖ for w = Σ t̄_j x_j; every step is nondecreasing.

    Returns
    -------
    value : float
    t : numpy array
        attaining ``value``
    """
    cfg = cfg or OptConfig()
    rng = rng or RngStream()
    d = X.shape[0]
    field = FieldTag.REAL if np.isrealobj(X) else FieldTag.COMPLEX

    def run(restart):
        v = rng.spawn(restart).normal(d, field)
        return _alternate(X, v / np.linalg.norm(v), cfg.max_iters)

    if cfg.workers > 1:
        with ThreadPool(cfg.workers) as pool:
            results = pool.map(run, range(restarts))
    else:
        results = list(map(run, range(restarts)))
    norm, t = max(results, key=lambda r: r[0])
    return norm ** 2, t


def _gram_moments(X, block=GRAM_BLOCK):
    """Σ |⟨x_i, x_j⟩|² over all pairs and the standard deviation of the off-diagonal terms, by row blocks."""
    m = X.shape[1]
    total = off = off_squared = 0.0
    for start in range(0, m, block):
        squares = np.abs(X[:, start:start + block].conj().T @ X) ** 2
        rows = np.arange(squares.shape[0])
        diagonal = squares[rows, start + rows]
        total += float(squares.sum())
        off += float(squares.sum() - diagonal.sum())
        off_squared += float((squares ** 2).sum() - (diagonal ** 2).sum())
    count = m * (m - 1)
    mean = off / count
    return total, float(np.sqrt(max(0.0, off_squared / count - mean ** 2)))


def sharpness_experiment(n: int, m: int, field=FieldTag.REAL, rng: RngStream = None, cfg: OptConfig = None,
                         restarts: int = SHARPNESS_RESTARTS) -> SharpnessReport:
    """Sample one instance and estimate the ratio ‖A‖_γ / ‖A‖_θ.

    Parameters
    ----------
    n : int
        dimension, at least 2
    m : int
        number of vectors, at least n
    field : FieldTag
    rng : RngStream, optional
    cfg : OptConfig, optional
        ``max_iters`` and ``workers`` of the alternating maximization
    restarts : int

    Returns
    -------
    report : SharpnessReport
    """
    field = FieldTag.parse(field)
    if n < 2 or m < n:
        raise DomainError(f"Need m >= n >= 2, got n={n}, m={m}.")
    rng = rng or RngStream()
    X = sample_sphere_batch(m, n, field, rng).T
    total, spread = _gram_moments(X)
    gamma_lower = total / m ** 2
    mc_std = spread / m

    exact = field.is_real and m <= EXACT_THETA_LIMIT
    if exact:
        theta = theta_real_exact(SymMatrix(X.T @ X / m ** 2, field))[0]
    else:
        theta = alternating_theta(X, restarts, rng.spawn(1), cfg)[0] / m ** 2
    bound = sharpness_bound_finite(n, field)
    logger.info("sharpness n=%d m=%d %s: gamma %.6f theta %.6f bound %.6f", n, m, field.value, gamma_lower, theta,
                bound)
    return SharpnessReport(n, m, field, gamma_lower, theta, gamma_lower / theta, bound, mc_std, exact)


def sharpness_sweep(n: int, ms: Iterable[int], field=FieldTag.REAL, rng: RngStream = None,
                    cfg: OptConfig = None, restarts: int = SHARPNESS_RESTARTS) -> pd.DataFrame:
    """One sharpness instance per m, as a dataframe of reports."""
    rng = rng or RngStream()
    args = ((n, m, field, rng.spawn(i), cfg, restarts) for i, m in enumerate(ms))
    return to_pandas_reports(starmap(sharpness_experiment, args))
