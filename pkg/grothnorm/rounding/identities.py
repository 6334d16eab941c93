"""Monte-Carlo checks of the Gaussian integral identities behind sign rounding.

For a standard Gaussian z (unit variance per complex coordinate) and unit
vectors u, v:

* E ⟨u, z⟩⟨z, v⟩ = ⟨u, v⟩
* E sign⟨u, z⟩ ⟨z, v⟩ = c ⟨u, v⟩ with c = √(2/π) over the reals and √(π/4)
  over the complex numbers
* E sign⟨u, z⟩ sign⟨z, v⟩ = φ(⟨u, v⟩)
"""
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from grothnorm.special import phi
from grothnorm.utils import FieldTag, RngStream, DomainError, csign, field_of

__all__ = ["IdentityCheck", "IdentityReport", "mc_identities", "GAUSSIAN_FACTOR"]

GAUSSIAN_FACTOR = {FieldTag.REAL: np.sqrt(2 / np.pi), FieldTag.COMPLEX: np.sqrt(np.pi / 4)}
UNIT_TOL = 1e-9


@dataclass(frozen=True)
class IdentityCheck:
    estimate: complex
    stderr: float
    expected: complex

    def within(self, sigmas: float = 4.0) -> bool:
        return abs(self.estimate - self.expected) <= sigmas * self.stderr + 1e-12

    def to_dict(self):
        return {"estimate": self.estimate, "stderr": self.stderr, "expected": self.expected,
                "within_4_sigma": self.within()}


@dataclass(frozen=True)
class IdentityReport:
    field: FieldTag
    inner_product: complex
    samples: int
    checks: Dict[str, IdentityCheck] = field(default_factory=dict)

    @property
    def passed(self):
        return all(check.within() for check in self.checks.values())


def _check(samples, expected, real):
    if real:
        samples = samples.real
        expected = float(np.real(expected))
    return IdentityCheck(samples.mean().item(), float(samples.std() / np.sqrt(len(samples))), expected)


def mc_identities(u, v, N: int = 100_000, rng: RngStream = None) -> IdentityReport:
    """Estimate the three identities for the unit vectors u and v.

    Parameters
    ----------
    u, v : array_like
        unit vectors of the same dimension; complex if either is complex
    N : int
        Gaussian draws
    rng : RngStream, optional

    Returns
    -------
    report : IdentityReport
        checks ``linear``, ``sign_linear`` and ``sign_sign``
    """
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape or u.ndim != 1:
        raise DomainError("u and v must be vectors of the same dimension.")
    if abs(np.linalg.norm(u) - 1) > UNIT_TOL or abs(np.linalg.norm(v) - 1) > UNIT_TOL:
        raise DomainError("u and v must be unit vectors.")
    fld = FieldTag.COMPLEX if FieldTag.COMPLEX in (field_of(u), field_of(v)) else FieldTag.REAL
    rng = rng or RngStream()
    Z = rng.normal((N, len(u)), fld)
    uz = Z @ u.conj()
    zv = Z.conj() @ v
    inner = complex(np.vdot(u, v)) if not fld.is_real else float(np.dot(u, v))
    real = fld.is_real
    checks = {
        "linear": _check(uz * zv, inner, real),
        "sign_linear": _check(csign(uz) * zv, GAUSSIAN_FACTOR[fld] * inner, real),
        "sign_sign": _check(csign(uz) * csign(zv), phi(inner, 1, fld), real),
    }
    return IdentityReport(fld, inner, N, checks)
