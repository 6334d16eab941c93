"""Exact small-instance quantities by exhaustive sign enumeration."""
import logging
from dataclasses import dataclass

import numpy as np

from grothnorm.classes import SymMatrix, RectMatrix
from grothnorm.utils import FieldMismatchError, SizeLimitError

__all__ = ["MAX_SIGN_ENUM", "SignExtremes", "sign_extremes", "theta_real_exact", "q_eq", "stretch_exact",
           "cut_norm_exact", "sign_vectors"]

logger = logging.getLogger(__name__)

MAX_SIGN_ENUM = 24
BLOCK = 1 << 14


def sign_vectors(n: int, start: int, stop: int) -> np.ndarray:
    """Rows are the sign vectors numbered start..stop-1; bit k of the number sets coordinate k to -1."""
    idx = np.arange(start, stop, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n, dtype=np.int64)) & 1
    return 1.0 - 2.0 * bits


def _check_real(A, what):
    if not A.field.is_real:
        raise FieldMismatchError(f"{what} enumerates real sign vectors; got a complex matrix.")


@dataclass(frozen=True, eq=False)
class SignExtremes:
    """Largest and smallest value of δᵀAδ over δ ∈ {-1, 1}ⁿ."""
    max_value: float
    argmax: np.ndarray
    min_value: float
    argmin: np.ndarray


def sign_extremes(A: SymMatrix, limit: int = MAX_SIGN_ENUM) -> SignExtremes:
    """Enumerate the 2^(n-1) sign vectors with last coordinate 1 (δ and -δ give the same value)."""
    _check_real(A, "Sign enumeration")
    n = A.n
    if n > limit:
        raise SizeLimitError(f"Sign enumeration limited to n <= {limit}, got n = {n}.")

    M = A.entries
    total = 1 << (n - 1)
    logger.debug("enumerating %d sign vectors", total)
    best = (-np.inf, None)
    worst = (np.inf, None)
    for start in range(0, total, BLOCK):
        S = sign_vectors(n, start, min(start + BLOCK, total))
        values = np.einsum('ij,ij->i', S @ M, S)
        i, j = int(np.argmax(values)), int(np.argmin(values))
        if values[i] > best[0]:
            best = (float(values[i]), S[i])
        if values[j] < worst[0]:
            worst = (float(values[j]), S[j])
    return SignExtremes(best[0], best[1], worst[0], worst[1])


def theta_real_exact(A: SymMatrix, limit: int = MAX_SIGN_ENUM):
    """The θ-seminorm max |δᵀAδ| over δ ∈ {-1, 1}ⁿ.

    Returns
    -------
    value : float
    argmax : numpy array of ±1
    """
    ext = sign_extremes(A, limit)
    if ext.max_value >= -ext.min_value:
        return ext.max_value, ext.argmax
    return -ext.min_value, ext.argmin


def q_eq(A: SymMatrix, limit: int = MAX_SIGN_ENUM) -> float:
    """max δᵀAδ over sign vectors, without absolute value."""
    return sign_extremes(A, limit).max_value


def stretch_exact(A: SymMatrix, limit: int = MAX_SIGN_ENUM) -> float:
    """q_=(A) + q_=(-A), the spread of the quadratic form over sign vectors."""
    ext = sign_extremes(A, limit)
    return ext.max_value - ext.min_value


def cut_norm_exact(B: RectMatrix, limit: int = MAX_SIGN_ENUM) -> float:
    """max over row and column subsets of |Σ_{i∈I, j∈J} b_ij|.

    The smaller side is enumerated; for a fixed row subset the best column
    subset takes every column whose partial sum has the wanted sign.
    """
    if not B.field.is_real:
        raise FieldMismatchError("The cut norm is computed for real matrices.")
    m, n = B.shape
    if m + n > limit:
        raise SizeLimitError(f"Cut norm enumeration limited to m + n <= {limit}, got {m + n}.")
    M = B.entries if m <= n else B.entries.T
    rows = M.shape[0]
    best = 0.0
    total = 1 << rows
    for start in range(0, total, BLOCK):
        subsets = (1.0 - sign_vectors(rows, start, min(start + BLOCK, total))) / 2
        partial = subsets @ M
        best = max(best,
                   float(np.max(np.clip(partial, 0, None).sum(axis=1))),
                   float(np.max(-np.clip(partial, None, 0).sum(axis=1))))
    return best
