"""Grothendieck d-norms and signed semidefinite values."""
import logging
from dataclasses import replace
from enum import Enum

import numpy as np

from grothnorm.classes import SymMatrix, RectMatrix, Constraint, embed_rect
from grothnorm.utils import FieldTag, FieldMismatchError
from .optimizer import OptConfig, NormEstimate, gram_ascent, stabilizing_rank

__all__ = ["Variant", "gamma_d", "Gamma_d", "G_d_rect", "r_signed", "spread", "complex_norm_via_real",
           "infty_one_complex_via_real", "UNIT_COLUMN_TOL"]

logger = logging.getLogger(__name__)

UNIT_COLUMN_TOL = 1e-6


class Variant(Enum):
    EQ = "eq"
    LE = "le"


def gamma_d(A: SymMatrix, d: int, cfg: OptConfig = None, field=None) -> NormEstimate:
    """‖A‖_{γ,d}: max |Σ a_ij ⟨x_i, x_j⟩| over unit vectors of dimension d.

    Parameters
    ----------
    A : SymMatrix
    d : int
    cfg : OptConfig, optional
    field : FieldTag, optional
        field of the vectors, defaults to the field of A

    Returns
    -------
    estimate : NormEstimate
    """
    return gram_ascent(A, d, Constraint.UNIT_SPHERE, cfg, field)


def Gamma_d(A: SymMatrix, d: int, cfg: OptConfig = None, field=None) -> NormEstimate:
    """‖A‖_{Γ,d}: as :func:`gamma_d` with vectors in the unit ball.

    For a zero-diagonal A the maximum sits on the spheres; the column norms
    of the certificate are checked and reported in the diagnostics.
    """
    estimate = gram_ascent(A, d, Constraint.UNIT_BALL, cfg, field)
    if np.all(A.diagonal == 0) and estimate.value > 0:
        norms = np.linalg.norm(estimate.certificate.vectors, axis=0)
        unit = bool(np.all(np.abs(norms - 1) <= UNIT_COLUMN_TOL))
        estimate.diagnostics["unit_columns"] = unit
        if not unit:
            logger.info("Gamma_d: zero-diagonal maximizer with column norm %.3e", float(np.min(norms)))
    return estimate


def G_d_rect(B: RectMatrix, d: int, cfg: OptConfig = None, field=None) -> NormEstimate:
    """‖B‖_{G,d} = ½ ‖[0 B; B* 0]‖_{Γ,d}."""
    estimate = Gamma_d(embed_rect(B), d, cfg, field)
    return replace(estimate, value=estimate.value / 2, scale=0.5)


def r_signed(A: SymMatrix, variant=Variant.EQ, cfg: OptConfig = None, field=None) -> float:
    """r_=(A) or r_≤(A): max tr(AG) over correlation matrices G, or over
    PSD G with diagonal at most 1, without absolute value.

    Computed at the stabilizing rank, where the value is the semidefinite one.
    """
    variant = Variant(variant)
    field = FieldTag.parse(field) if field is not None else A.field
    constraint = Constraint.UNIT_SPHERE if variant is Variant.EQ else Constraint.UNIT_BALL
    d = stabilizing_rank(A.n, field)
    return gram_ascent(A, d, constraint, cfg, field, signs=(1,)).value


def spread(A: SymMatrix, cfg: OptConfig = None) -> float:
    """spr(A) = r_=(A) + r_=(-A); invariant under A -> A + αI."""
    return r_signed(A, Variant.EQ, cfg) + r_signed(-A, Variant.EQ, cfg)


def complex_norm_via_real(A: SymMatrix, d: int, which: str = "gamma", cfg: OptConfig = None) -> NormEstimate:
    """Complex d-norm of a real symmetric A through the real 2d-norm.

    The certificate is the real factor of dimension 2d.
    """
    if not A.field.is_real:
        raise FieldMismatchError("complex_norm_via_real takes a real matrix.")
    if which not in ("gamma", "Gamma"):
        raise ValueError(f"which must be 'gamma' or 'Gamma', got {which!r}.")
    norm = gamma_d if which == "gamma" else Gamma_d
    estimate = norm(A, 2 * d, cfg, FieldTag.REAL)
    return replace(estimate, diagnostics={**estimate.diagnostics, "complex_d": d, "real_d": 2 * d})


def infty_one_complex_via_real(B: RectMatrix, cfg: OptConfig = None) -> NormEstimate:
    """‖B‖_{∞,1} over the complex field for real B, as ‖B‖_{G,2} over the reals."""
    if not B.field.is_real:
        raise FieldMismatchError("infty_one_complex_via_real takes a real matrix.")
    return G_d_rect(B, 2, cfg, FieldTag.REAL)
