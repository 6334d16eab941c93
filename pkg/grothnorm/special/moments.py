"""Distribution of the inner product T = ⟨U, V⟩ of independent uniform unit
vectors of 𝕜^{n+1}, so that n = 1 is the circle over the reals.
"""
import numpy as np
from scipy import integrate, special

from grothnorm.utils import FieldTag, DomainError

__all__ = ["moments_closed_form", "density_f", "density_total_mass"]


def _check(n, field):
    if n < 1:
        raise DomainError(f"n must be positive, got {n}.")
    return FieldTag.parse(field)


def moments_closed_form(n: int, alpha: float, field=FieldTag.REAL) -> float:
    """E |T|^α.

    Parameters
    ----------
    n : int
    alpha : float
        positive exponent
    field : FieldTag

    Returns
    -------
    moment : float
    """
    field = _check(n, field)
    if alpha <= 0:
        raise DomainError(f"The exponent must be positive, got {alpha}.")
    gl = special.gammaln
    if field.is_real:
        log_m = gl((n + 1) / 2) + gl((alpha + 1) / 2) - 0.5 * np.log(np.pi) - gl((n + alpha + 1) / 2)
    else:
        log_m = gl(alpha / 2 + 1) + gl(n + 1) - gl(n + alpha / 2 + 1)
    return float(np.exp(log_m))


def density_f(t, n: int, field=FieldTag.REAL):
    """Density of T on [-1, 1] (real) or on the unit disk (complex)."""
    field = _check(n, field)
    t = np.asarray(t)
    modulus = np.abs(t)
    if np.any(modulus > 1):
        raise DomainError("The density is supported on the closed unit disk.")
    if field.is_real:
        constant = np.exp(special.gammaln((n + 1) / 2) - special.gammaln(n / 2)) / np.sqrt(np.pi)
        value = constant * (1 - modulus ** 2) ** ((n - 2) / 2)
    else:
        value = n / np.pi * (1 - modulus ** 2) ** (n - 1)
    return value.item() if value.ndim == 0 else value


def density_total_mass(n: int, field=FieldTag.REAL) -> float:
    """Quadrature of the density over its support; 1 up to quadrature error."""
    field = _check(n, field)
    if field.is_real:
        # (1-t)^a (1+t)^a weight absorbs the endpoint singularity
        a = (n - 2) / 2
        constant = np.exp(special.gammaln((n + 1) / 2) - special.gammaln(n / 2)) / np.sqrt(np.pi)
        mass, _ = integrate.quad(lambda t: constant, -1, 1, weight='alg', wvar=(a, a), epsabs=1e-12)
        return float(mass)
    mass, _ = integrate.dblquad(lambda r, theta: density_f(r, n, field) * r, 0, 2 * np.pi, 0, 1,
                                epsabs=1e-12, epsrel=1e-12)
    return float(mass)
