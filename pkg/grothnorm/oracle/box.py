"""Exact maximization of a quadratic form over the cube [-1, 1]ⁿ.

Every maximizer is a stationary point of the form restricted to the relative
interior of some face. A face fixes a subset of coordinates at ±1 and leaves
the rest free, so the maximum is found by solving, for every free subset F,
the linear system A_FF x_F = -A_FX s for all sign patterns s of the fixed
coordinates at once, keeping the solutions that stay inside the cube.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

import numpy as np
from more_itertools import powerset

from grothnorm.classes import SymMatrix
from grothnorm.utils import FieldMismatchError, SizeLimitError
from .enumeration import sign_vectors

__all__ = ["MAX_BOX_ENUM", "FaceState", "BoxMaxResult", "box_quad_max", "q_le", "Theta_real_exact"]

logger = logging.getLogger(__name__)

MAX_BOX_ENUM = 12
CONDITION_LIMIT = 1e12
FEASIBILITY_TOL = 1e-12
GRID_POINTS = 41
GRID_MAX_POINTS = 20_000


class FaceState(Enum):
    LO = "lo"
    HI = "hi"
    FREE = "free"


@dataclass(frozen=True, eq=False)
class BoxMaxResult:
    """Maximum of xᵀAx over the cube.

    Parameters
    ----------
    value : float
    argmax : numpy array
        entries at LO/HI are exactly -1/1
    face_pattern : tuple of FaceState
    diagnostics : dict
        ``degenerate_faces`` counts free blocks solved on a grid instead
        (condition number above 1e12); ``grid_argmax`` tells whether the
        returned point came from such a grid

    """
    value: float
    argmax: np.ndarray
    face_pattern: Tuple[FaceState, ...]
    diagnostics: dict = field(default_factory=dict)


def _values(M, X):
    """Quadratic form of every column of X."""
    return np.einsum('ij,ij->j', X, M @ X)


def _singular_face(block, rhs):
    """Minimum-norm stationary points of a singular free block.

    The form is constant on the affine set of stationary points, so a
    minimum-norm solution inside the cube represents the whole face. Columns
    with no solution have no stationary point; columns whose minimum-norm
    solution leaves the cube are returned as unresolved.
    """
    solution = np.linalg.pinv(block) @ rhs
    scale = max(1.0, float(np.max(np.abs(block))))
    consistent = np.linalg.norm(block @ solution - rhs, axis=0) <= 1e-9 * scale
    inside = np.all(np.abs(solution) <= 1 + FEASIBILITY_TOL, axis=0)
    solution[:, ~consistent] = np.inf
    return solution, consistent & ~inside


def _grid_face(M, free, fixed, S):
    k = len(free)
    per_axis = GRID_POINTS if GRID_POINTS ** k <= GRID_MAX_POINTS else max(3, int(GRID_MAX_POINTS ** (1 / k)))
    axes = np.meshgrid(*([np.linspace(-1, 1, per_axis)] * k), indexing='ij')
    grid = np.stack([a.ravel() for a in axes])
    best_value, best_x = -np.inf, None
    for s in S.T:
        X = np.empty((M.shape[0], grid.shape[1]))
        X[free] = grid
        X[fixed] = s[:, None]
        values = _values(M, X)
        i = int(np.argmax(values))
        if values[i] > best_value:
            best_value, best_x = float(values[i]), X[:, i].copy()
    return best_value, best_x


def box_quad_max(A: SymMatrix, limit: int = MAX_BOX_ENUM) -> BoxMaxResult:
    """q_≤(A) = max over x ∈ [-1, 1]ⁿ of xᵀAx, by face enumeration.

    Parameters
    ----------
    A : SymMatrix
        real
    limit : int
        largest n accepted (3ⁿ faces)

    Returns
    -------
    result : BoxMaxResult
    """
    if not A.field.is_real:
        raise FieldMismatchError("box_quad_max works over the reals.")
    n = A.n
    if n > limit:
        raise SizeLimitError(f"Face enumeration limited to n <= {limit}, got n = {n}.")

    M = A.entries
    best_value, best_x, from_grid = -np.inf, None, False
    degenerate = 0

    for free in map(list, powerset(range(n))):
        fixed = [i for i in range(n) if i not in free]
        S = sign_vectors(len(fixed), 0, 1 << len(fixed)).T if fixed else np.zeros((0, 1))
        if not free:
            X = S
        else:
            block = M[np.ix_(free, free)]
            rhs = -M[np.ix_(free, fixed)] @ S if fixed else np.zeros((len(free), 1))
            if np.linalg.cond(block) <= CONDITION_LIMIT:
                solution = np.linalg.solve(block, rhs)
            else:
                solution, unresolved = _singular_face(block, rhs)
                if np.any(unresolved):
                    degenerate += 1
                    value, x = _grid_face(M, free, fixed, S[:, unresolved])
                    if value > best_value:
                        best_value, best_x, from_grid = value, x, True
            inside = np.all(np.abs(solution) <= 1 + FEASIBILITY_TOL, axis=0)
            if not np.any(inside):
                continue
            X = np.empty((n, int(np.sum(inside))))
            X[free] = np.clip(solution[:, inside], -1, 1)
            X[fixed] = S[:, inside]
        values = _values(M, X)
        i = int(np.argmax(values))
        if values[i] > best_value:
            best_value, best_x, from_grid = float(values[i]), X[:, i].copy(), False

    if degenerate:
        logger.info("box_quad_max: %d degenerate faces searched on a grid", degenerate)
    pattern = tuple(FaceState.HI if v == 1 else FaceState.LO if v == -1 else FaceState.FREE for v in best_x)
    return BoxMaxResult(best_value, best_x, pattern, {"degenerate_faces": degenerate, "grid_argmax": from_grid})


def q_le(A: SymMatrix, limit: int = MAX_BOX_ENUM) -> float:
    return box_quad_max(A, limit).value


def Theta_real_exact(A: SymMatrix, limit: int = MAX_BOX_ENUM) -> float:
    """The Θ-norm max(q_≤(A), q_≤(-A))."""
    return max(q_le(A, limit), q_le(-A, limit))
