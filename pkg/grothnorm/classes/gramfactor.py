from dataclasses import dataclass
from enum import Enum

import numpy as np

from grothnorm.utils import FieldTag, RngStream, field_of
from .matrices import SymMatrix

__all__ = ["Constraint", "GramFactor", "NORM_TOL", "quadratic_value", "gram_matrix"]

NORM_TOL = 1e-12


class Constraint(Enum):
    UNIT_SPHERE = "sphere"
    UNIT_BALL = "ball"


def quadratic_value(A, X) -> float:
    """sum_ij a_ij <x_j, x_i> = Re tr(A X* X) for the columns x_i of X.

    ``A`` is a square array, ``X`` a d x n array (or a length-n vector for d=1).
    """
    X = np.atleast_2d(X)
    return float(np.real(np.vdot(X, X @ A)))


@dataclass(frozen=True, eq=False)
class GramFactor:
    """n vectors of dimension d stored as the columns of a d x n array.

    Parameters
    ----------
    vectors : array_like
        d x n array
    constraint : Constraint
        unit sphere (every column of norm 1) or unit ball (norm at most 1)
    field : FieldTag, optional

    """
    vectors: np.ndarray
    constraint: Constraint = Constraint.UNIT_SPHERE
    field: FieldTag = None

    def __post_init__(self):
        vectors = np.array(self.vectors, copy=True)
        field = FieldTag.parse(self.field) if self.field is not None else field_of(vectors)
        vectors = np.atleast_2d(vectors).astype(field.dtype)
        norms = np.linalg.norm(vectors, axis=0)
        if self.constraint is Constraint.UNIT_SPHERE and np.any(np.abs(norms - 1) > NORM_TOL):
            raise ValueError(f"Unit sphere factor with column norms off by {np.max(np.abs(norms - 1)):.3e}.")
        if self.constraint is Constraint.UNIT_BALL and np.any(norms > 1 + NORM_TOL):
            raise ValueError(f"Unit ball factor with a column of norm {np.max(norms):.17g}.")
        vectors.setflags(write=False)
        object.__setattr__(self, 'vectors', vectors)
        object.__setattr__(self, 'field', field)

    @property
    def d(self):
        return self.vectors.shape[0]

    @property
    def n(self):
        return self.vectors.shape[1]

    def gram(self) -> np.ndarray:
        """G = X* X, so that g_ij = <x_i, x_j> with the conjugate on the first slot."""
        return self.vectors.conj().T @ self.vectors

    def objective(self, A: SymMatrix) -> float:
        return quadratic_value(A.entries, self.vectors)

    @classmethod
    def normalized(cls, X, constraint=Constraint.UNIT_SPHERE, field=None):
        """Project the columns of X onto the feasible set and wrap them."""
        X = np.atleast_2d(np.array(X, dtype=complex if np.iscomplexobj(X) else float))
        norms = np.linalg.norm(X, axis=0)
        if constraint is Constraint.UNIT_SPHERE:
            safe = np.where(norms > 0, norms, 1.0)
            X = X / safe
            X[:, norms == 0] = 0
            X[0, norms == 0] = 1
        else:
            X = X / np.maximum(norms, 1.0)
        return cls(X, constraint, field)

    @classmethod
    def random(cls, n: int, d: int, field=FieldTag.REAL, rng: RngStream = None,
               constraint=Constraint.UNIT_SPHERE):
        """Normalized Gaussian columns; uniform on the sphere."""
        rng = rng or RngStream()
        field = FieldTag.parse(field)
        return cls.normalized(rng.normal((d, n), field), constraint, field)


def gram_matrix(factor: GramFactor) -> np.ndarray:
    return factor.gram()
