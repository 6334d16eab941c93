"""Exact norm values of structured matrices.

For diagonal, tridiagonal (γ only), entrywise nonnegative and bipartite
sign-patterned matrices the Grothendieck d-norms do not depend on d, and
(for nonnegative matrices) not on the field either.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from grothnorm.classes import SymMatrix, offdiag
from grothnorm.utils import FieldTag, TOL_ZERO, ConePreconditionError, FieldMismatchError

__all__ = ["ClosedFormResult", "diag_norms", "tridiag_gamma", "nonneg_norms", "bipartite_block_norms",
           "bipartite_block_matrix", "bipartite_certificate", "closed_form_norms"]

ALL_D = "all d >= 1"


@dataclass(frozen=True)
class ClosedFormResult:
    """γ, Γ and (when known) G values of a structured matrix."""
    gamma: float
    Gamma: float
    G: Optional[float] = None
    applicable_d: str = ALL_D

    def __post_init__(self):
        if self.gamma > self.Gamma + TOL_ZERO * max(1.0, abs(self.Gamma)):
            raise ValueError(f"gamma={self.gamma} exceeds Gamma={self.Gamma}")
        if self.G is not None and self.Gamma > self.G + TOL_ZERO * max(1.0, abs(self.G)):
            raise ValueError(f"Gamma={self.Gamma} exceeds G={self.G}")


def diag_norms(a) -> ClosedFormResult:
    """Norms of diag(a).

    Parameters
    ----------
    a : sequence of float
        the real diagonal entries

    Returns
    -------
    result : ClosedFormResult
        γ = |Σ a_i|, Γ = max(Σ a_i⁺, Σ a_i⁻), G = Σ |a_i|
    """
    a = np.asarray(a, dtype=float)
    positive, negative = float(np.sum(np.clip(a, 0, None))), float(-np.sum(np.clip(a, None, 0)))
    return ClosedFormResult(gamma=abs(float(np.sum(a))),
                            Gamma=max(positive, negative),
                            G=float(np.sum(np.abs(a))))


def tridiag_gamma(A: SymMatrix, tol: float = TOL_ZERO) -> float:
    """γ-norm of a symmetric tridiagonal matrix: |tr A| + 2 Σ |a_{i,i+1}|."""
    i, j = np.indices(A.entries.shape)
    if np.any(np.abs(A.entries[np.abs(i - j) > 1]) > tol):
        raise ConePreconditionError("Matrix is not tridiagonal.")
    return abs(A.trace) + 2 * float(np.sum(np.abs(np.diag(A.entries, 1))))


def _require_nonnegative(M, what, tol=TOL_ZERO):
    if np.iscomplexobj(M) and np.any(np.abs(np.imag(M)) > tol):
        raise FieldMismatchError(f"{what} must be real.")
    if np.any(np.real(M) < -tol):
        raise ConePreconditionError(f"{what} has a negative entry.")


def nonneg_norms(A: SymMatrix) -> ClosedFormResult:
    """For an entrywise nonnegative A every norm equals the entry sum, whatever d and the field."""
    _require_nonnegative(A.entries, "Matrix")
    total = float(np.sum(A.entries.real))
    return ClosedFormResult(gamma=total, Gamma=total, G=total)


def bipartite_block_matrix(A1, A2, B) -> SymMatrix:
    """Assemble [[A1, -B], [-B^T, A2]]."""
    A1, A2, B = (np.atleast_2d(np.asarray(M, dtype=float)) for M in (A1, A2, B))
    m, n = B.shape
    if A1.shape != (m, m) or A2.shape != (n, n):
        raise ValueError(f"Block shapes {A1.shape}, {A2.shape} do not match B of shape {B.shape}.")
    return SymMatrix(np.block([[A1, -B], [-B.T, A2]]), FieldTag.REAL)


def bipartite_certificate(m: int, n: int) -> np.ndarray:
    """The sign vector (1_m, -1_n) attaining the bipartite closed form."""
    return np.concatenate([np.ones(m), -np.ones(n)])


def bipartite_block_norms(A1, A2, B) -> float:
    """Σ |a_ij| of [[A1, -B], [-B^T, A2]] for nonnegative blocks.

    This is the common value of γ, Γ and G for every d, attained at
    :func:`bipartite_certificate`.
    """
    for M, what in ((A1, "A1"), (A2, "A2"), (B, "B")):
        _require_nonnegative(np.asarray(M), what)
    A = bipartite_block_matrix(A1, A2, B)
    return float(np.sum(np.abs(A.entries)))


def closed_form_norms(A: SymMatrix, tol: float = TOL_ZERO) -> Optional[ClosedFormResult]:
    """Dispatch A to a covered class.

    Returns
    -------
    result : ClosedFormResult | None
        None when A is in none of the classes with a full closed form.
        Tridiagonal matrices only have a γ formula and are not covered here.
    """
    entries = A.entries
    if not np.any(np.abs(offdiag(A)) > tol):
        if A.field.is_real or not np.any(np.abs(entries.imag) > tol):
            return diag_norms(A.diagonal)
        return None
    if A.field.is_real or not np.any(np.abs(entries.imag) > tol):
        real = entries.real
        if np.all(real >= -tol):
            return nonneg_norms(SymMatrix(real, FieldTag.REAL))
        # D A D is nonnegative for a diagonal sign matrix D, and D A D has the same norms as A
        s = _balancing_signs(real, tol)
        if s is not None and np.all(s[:, None] * real * s[None, :] >= -tol):
            total = float(np.sum(np.abs(real)))
            return ClosedFormResult(gamma=total, Gamma=total, G=total)
    return None


def _balancing_signs(real, tol):
    """Signs s with s_i s_j a_ij >= 0 on every edge of the support graph, or None."""
    n = real.shape[0]
    s = np.zeros(n)
    for start in range(n):
        if s[start]:
            continue
        s[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            for j in np.flatnonzero(np.abs(real[i]) > tol):
                if j == i:
                    continue
                want = s[i] * (1.0 if real[i, j] > 0 else -1.0)
                if not s[j]:
                    s[j] = want
                    stack.append(j)
                elif s[j] != want:
                    return None
    return s
