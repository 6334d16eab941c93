"""Matrix domain types and structural constructions.

Symmetric matrices carry a :class:`FieldTag` and are exactly Hermitian: the
constructor checks the input against its conjugate transpose and then mirrors
the upper triangle onto the lower one. Arrays stored in the types are read
only.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet

import networkx as nx
import numpy as np

from grothnorm.utils import FieldTag, TOL_ZERO, TOL_PSD, field_of, FieldMismatchError, \
    ConePreconditionError, SymmetryError

__all__ = ["SymMatrix", "RectMatrix", "ConeLabel", "SYMMETRY_TOL",
           "xi_projection", "delta_projection", "offdiag", "classify_cones",
           "laplacian_of", "sdd_decompose", "embed_rect", "hermitian_to_real",
           "realify_vector", "adjacency_from_graph"]

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12


def _as_field_array(entries, field):
    array = np.array(entries, copy=True)
    if field is None:
        field = field_of(array)
    field = FieldTag.parse(field)
    if not np.issubdtype(array.dtype, np.number):
        raise TypeError("Matrix entries must be numeric.")
    if field is FieldTag.REAL and np.iscomplexobj(array):
        if np.any(array.imag != 0):
            raise FieldMismatchError("Complex entries in a matrix tagged real.")
        array = array.real
    array = array.astype(field.dtype)
    if not np.all(np.isfinite(array)):
        raise ValueError("Matrix entries must be finite.")
    return array, field


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """A real symmetric or complex Hermitian n x n matrix.

    Parameters
    ----------
    entries : array_like
        square array; violations of Hermitian symmetry above
        ``SYMMETRY_TOL`` (relative to the largest entry) raise ``SymmetryError``
    field : FieldTag | str, optional
        inferred from the dtype of ``entries`` when omitted

    """
    entries: np.ndarray
    field: FieldTag = None

    def __post_init__(self):
        array, field = _as_field_array(self.entries, self.field)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
            raise ValueError(f"A symmetric matrix must be square and non-empty, got shape {array.shape}.")

        scale = max(1.0, float(np.max(np.abs(array))))
        if np.max(np.abs(array - array.conj().T)) > SYMMETRY_TOL * scale:
            raise SymmetryError("Matrix is not Hermitian symmetric.")

        upper = np.triu(array, 1)
        array = upper + upper.conj().T + np.diag(np.diag(array).real).astype(field.dtype)
        array.setflags(write=False)
        object.__setattr__(self, 'entries', array)
        object.__setattr__(self, 'field', field)

    def __repr__(self):
        return f"SymMatrix(n={self.n}, field={self.field.value})"

    def __neg__(self):
        return SymMatrix(-self.entries, self.field)

    def __add__(self, other: "SymMatrix"):
        self.field.check(other.field)
        return SymMatrix(self.entries + other.entries, self.field)

    def __sub__(self, other: "SymMatrix"):
        return self + (-other)

    def __mul__(self, scalar):
        return SymMatrix(self.entries * float(scalar), self.field)

    __rmul__ = __mul__

    @property
    def n(self):
        return self.entries.shape[0]

    @property
    def diagonal(self):
        return np.diag(self.entries).real

    @property
    def trace(self):
        return float(np.sum(self.diagonal))

    @property
    def frobenius(self):
        return float(np.linalg.norm(self.entries))

    def smallest_eigenvalue(self):
        return float(np.linalg.eigvalsh(self.entries)[0])

    def quadratic_form(self, x):
        """Real value of x* A x."""
        x = np.asarray(x)
        return float(np.real(np.vdot(x, self.entries @ x)))

    def shift(self, alpha: float) -> "SymMatrix":
        """A + alpha I."""
        return SymMatrix(self.entries + alpha * np.eye(self.n), self.field)

    def conjugate_by(self, d) -> "SymMatrix":
        """D* A D for the diagonal matrix D = diag(d)."""
        d = np.asarray(d)
        return SymMatrix(np.conj(d)[:, None] * self.entries * d[None, :],
                         FieldTag.COMPLEX if np.iscomplexobj(d) else self.field)

    def as_array(self):
        return np.array(self.entries)


@dataclass(frozen=True, eq=False)
class RectMatrix:
    """An m x n matrix over the tagged field."""
    entries: np.ndarray
    field: FieldTag = None

    def __post_init__(self):
        array, field = _as_field_array(self.entries, self.field)
        if array.ndim != 2 or 0 in array.shape:
            raise ValueError(f"A rectangular matrix must be two-dimensional and non-empty, got shape {array.shape}.")
        array.setflags(write=False)
        object.__setattr__(self, 'entries', array)
        object.__setattr__(self, 'field', field)

    def __repr__(self):
        return f"RectMatrix(m={self.m}, n={self.n}, field={self.field.value})"

    @property
    def m(self):
        return self.entries.shape[0]

    @property
    def n(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def transpose(self) -> "RectMatrix":
        """The conjugate transpose."""
        return RectMatrix(self.entries.conj().T, self.field)

    def as_array(self):
        return np.array(self.entries)


class ConeLabel(Enum):
    ZERO_DIAGONAL = "ZeroDiagonal"
    EQUAL_DIAGONAL = "EqualDiagonal"
    PSD = "PSD"
    NONNEGATIVE = "Nonnegative"
    WEIGHTED_LAPLACIAN = "WeightedLaplacian"
    DIAGONALLY_DOMINANT = "DiagonallyDominant"


def offdiag(A: SymMatrix) -> np.ndarray:
    """The entries of A with the diagonal set to zero."""
    out = A.as_array()
    np.fill_diagonal(out, 0)
    return out


def xi_projection(A: SymMatrix) -> SymMatrix:
    """Replace every diagonal entry by tr(A)/n, keep the off-diagonal part."""
    out = offdiag(A)
    np.fill_diagonal(out, A.trace / A.n)
    return SymMatrix(out, A.field)


def delta_projection(A: SymMatrix) -> SymMatrix:
    """Keep the diagonal only."""
    return SymMatrix(np.diag(A.diagonal).astype(A.field.dtype), A.field)


def _is_nonnegative(A: SymMatrix, tol):
    return bool(np.all(np.abs(A.entries.imag) <= tol) and np.all(A.entries.real >= -tol))


def _is_diagonally_dominant(A: SymMatrix, tol):
    off = np.sum(np.abs(offdiag(A)), axis=1)
    return bool(np.all(A.diagonal >= off - tol))


_PREDICATES = {
    ConeLabel.ZERO_DIAGONAL: lambda A, tol, tol_psd: bool(np.all(np.abs(A.diagonal) <= tol)),
    ConeLabel.EQUAL_DIAGONAL: lambda A, tol, tol_psd: bool(np.ptp(A.diagonal) <= tol),
    ConeLabel.PSD: lambda A, tol, tol_psd: A.smallest_eigenvalue() >= -tol_psd * A.frobenius,
    ConeLabel.NONNEGATIVE: lambda A, tol, tol_psd: _is_nonnegative(A, tol),
    ConeLabel.WEIGHTED_LAPLACIAN: lambda A, tol, tol_psd: (A.field.is_real
                                                           and bool(np.all(np.abs(A.entries.sum(axis=1)) <= tol))
                                                           and bool(np.all(offdiag(A) <= tol))),
    ConeLabel.DIAGONALLY_DOMINANT: lambda A, tol, tol_psd: _is_diagonally_dominant(A, tol),
}


def classify_cones(A: SymMatrix, tol: float = TOL_ZERO, tol_psd: float = TOL_PSD) -> FrozenSet[ConeLabel]:
    """Every cone label whose membership predicate holds for A.

    Parameters
    ----------
    A : SymMatrix
    tol : float
        absolute tolerance of the entrywise predicates
    tol_psd : float
        the PSD test accepts a smallest eigenvalue down to ``-tol_psd * ||A||_F``

    Returns
    -------
    labels : frozenset of ConeLabel

    """
    return frozenset(label for label, predicate in _PREDICATES.items() if predicate(A, tol, tol_psd))


def laplacian_of(A: SymMatrix, tol: float = TOL_ZERO) -> SymMatrix:
    """L_A = diag(A 1) - A for a real zero-diagonal A."""
    if not A.field.is_real:
        raise FieldMismatchError("Laplacians are defined for real matrices only.")
    if np.any(np.abs(A.diagonal) > tol):
        raise ConePreconditionError("laplacian_of needs a zero-diagonal matrix.")
    weights = offdiag(A)
    return SymMatrix(np.diag(weights.sum(axis=1)) - weights, FieldTag.REAL)


def sdd_decompose(A: SymMatrix, tol: float = TOL_ZERO):
    """Split a real diagonally dominant matrix as A = H + L.

    H is nonnegative and diagonally dominant, L is a weighted Laplacian and
    the two have disjoint off-diagonal supports. The split is done by sign so
    no off-diagonal entry is the result of a cancellation.

    Returns
    -------
    H, L : SymMatrix, SymMatrix
    """
    if not A.field.is_real:
        raise FieldMismatchError("The diagonally dominant split is defined over the reals.")
    if not _is_diagonally_dominant(A, tol):
        raise ConePreconditionError("Matrix is not diagonally dominant.")

    off = offdiag(A)
    weights = np.where(off < 0, -off, 0.0)
    L = np.diag(weights.sum(axis=1)) - weights
    H = np.where(off > 0, off, 0.0)
    np.fill_diagonal(H, A.diagonal - weights.sum(axis=1))
    return SymMatrix(H, FieldTag.REAL), SymMatrix(L, FieldTag.REAL)


def embed_rect(B: RectMatrix) -> SymMatrix:
    """The (m+n) x (m+n) matrix [[0, B], [B*, 0]]."""
    m, n = B.shape
    out = np.zeros((m + n, m + n), dtype=B.field.dtype)
    out[:m, m:] = B.entries
    out[m:, :m] = B.entries.conj().T
    return SymMatrix(out, B.field)


def hermitian_to_real(A: SymMatrix) -> SymMatrix:
    """The real 2n x 2n representation replacing a + ib by [[a, b], [-b, a]]."""
    if A.field.is_real:
        raise FieldMismatchError("hermitian_to_real expects a complex Hermitian matrix.")
    re, im = A.entries.real, A.entries.imag
    out = np.empty((2 * A.n, 2 * A.n))
    out[0::2, 0::2] = re
    out[0::2, 1::2] = im
    out[1::2, 0::2] = -im
    out[1::2, 1::2] = re
    return SymMatrix(out, FieldTag.REAL)


def realify_vector(delta) -> np.ndarray:
    """Real vector matching :func:`hermitian_to_real`.

    For complex delta the returned vector ``h`` satisfies
    ``delta* A delta == h.T @ hermitian_to_real(A) @ h``.
    """
    delta = np.asarray(delta, dtype=np.complex128)
    out = np.empty(2 * delta.shape[0])
    out[0::2] = delta.real
    out[1::2] = -delta.imag
    return out


def adjacency_from_graph(graph, weight: str = "weight") -> SymMatrix:
    """Weighted adjacency matrix of an undirected networkx graph.

    Nodes are taken in ``graph.nodes`` order; self loops are dropped.
    """
    if graph.is_directed():
        raise TypeError("Only undirected graphs have a symmetric adjacency matrix.")
    adjacency = nx.to_numpy_array(graph, nodelist=list(graph.nodes), weight=weight, dtype=float)
    np.fill_diagonal(adjacency, 0.0)
    return SymMatrix(adjacency, FieldTag.REAL)
