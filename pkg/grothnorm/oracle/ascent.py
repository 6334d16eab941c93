"""Lower bounds on the θ-seminorm and Θ-norm by coordinate ascent.

The form f(δ) = Σ a_ij conj(δ_j) δ_i depends on one coordinate δ_k through
a_kk |δ_k|² + 2 Re(conj(δ_k) c_k) with c_k = Σ_{i≠k} a_ik δ_i, so the best
δ_k for the others fixed is known in closed form: the phase of c_k on the
unit circle, and for the disk a radius in [0, 1] as well. Every update is
monotone and the returned value is attained by a feasible point.
"""
import logging
from typing import Tuple

import numpy as np

from grothnorm.classes import SymMatrix, quadratic_value
from grothnorm.utils import FieldTag, FieldMismatchError, RngStream, csign

__all__ = ["theta_complex_lower", "Theta_complex_lower", "coordinate_ascent"]

logger = logging.getLogger(__name__)

MAX_SWEEPS = 500
SWEEP_TOL = 1e-14


def _sweep(M, delta, sign, radial):
    n = delta.shape[0]
    for k in range(n):
        c = delta @ M[:, k] - M[k, k] * delta[k]
        c = sign * c
        modulus = abs(c)
        if radial:
            curvature = sign * M[k, k].real
            radius = 1.0 if curvature >= 0 else min(1.0, modulus / -curvature)
        else:
            radius = 1.0
        if modulus > 0:
            delta[k] = radius * c / modulus
        elif not radial:
            delta[k] = delta[k] / abs(delta[k]) if abs(delta[k]) > 0 else 1.0
        else:
            delta[k] = 1.0 if sign * M[k, k].real >= 0 else 0.0
    return delta


def coordinate_ascent(A: SymMatrix, radial: bool = False, angles_K: int = 8, restarts: int = 8,
                      seed: int = 0, field=None) -> Tuple[float, np.ndarray]:
    """Multi-start coordinate ascent of |f(δ)| over the torus (or the disk when radial).

    ``field`` is the field of the iterates and defaults to the field of A. Real
    iterates stay on {-1, 1}ⁿ or [-1, 1]ⁿ; a complex field on a real matrix
    searches the complex torus or disk.

    Returns
    -------
    value : float
    delta : numpy array
        feasible point attaining ``value``
    """
    M = A.entries
    n = A.n
    field = FieldTag.parse(field) if field is not None else A.field
    if field.is_real and not A.field.is_real:
        raise FieldMismatchError("A complex matrix needs complex iterates.")
    M = M.astype(field.dtype)
    complex_field = not field.is_real
    dtype = field.dtype
    best_value, best_delta = -np.inf, None
    rng = RngStream(seed, 0)

    starts = [np.ones(n, dtype=dtype)]
    for r in range(1, restarts):
        if complex_field and r % 2:
            phases = 2 * np.pi * rng.integers(0, max(1, angles_K), n) / max(1, angles_K)
            starts.append(np.exp(1j * phases))
        elif complex_field:
            starts.append(np.exp(2j * np.pi * rng.uniform(size=n)))
        else:
            starts.append(csign(rng.normal(n)).astype(dtype))

    for sign in (1.0, -1.0):
        for start in starts:
            delta = start.copy()
            value = sign * quadratic_value(M, delta)
            for _ in range(MAX_SWEEPS):
                delta = _sweep(M, delta, sign, radial)
                new_value = sign * quadratic_value(M, delta)
                if new_value < value - 1e-9 * max(1.0, abs(value)):
                    logger.warning("coordinate ascent decreased from %.17g to %.17g", value, new_value)
                improved = new_value - value
                value = new_value
                if improved <= SWEEP_TOL * max(1.0, abs(value)):
                    break
            if value > best_value:
                best_value, best_delta = value, delta.copy()
    return float(best_value), best_delta


def theta_complex_lower(A: SymMatrix, angles_K: int = 8, restarts: int = 8, seed: int = 0) -> float:
    """Certified lower bound on the θ-seminorm max |Σ a_ij conj(δ_j) δ_i| over |δ_i| = 1.

    Parameters
    ----------
    A : SymMatrix
    angles_K : int
        starting phases are drawn from the K-point grid on half of the restarts
    restarts : int
    seed : int

    Returns
    -------
    value : float
    """
    return coordinate_ascent(A, False, angles_K, restarts, seed, FieldTag.COMPLEX)[0]


def Theta_complex_lower(A: SymMatrix, angles_K: int = 8, restarts: int = 8, seed: int = 0) -> float:
    """Certified lower bound on the Θ-norm, optimizing over |δ_i| ≤ 1."""
    return coordinate_ascent(A, True, angles_K, restarts, seed, FieldTag.COMPLEX)[0]
