"""Cut-norm bracketing through the Laplacian of the bipartite embedding.

For real B, with A = [[0, B], [Bᵀ, 0]] and L_A its Laplacian,
θ(L_A)/8 <= ‖B‖_cut <= 3θ(L_A)/8, and θ(L_A) >= γ(L_A)/K with K the
symmetric Grothendieck bound, which turns the semidefinite value into a
bracket computable in polynomial time.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from grothnorm.classes import RectMatrix, embed_rect, laplacian_of
from grothnorm.gramopt import OptConfig, CertificateKind, gamma_d, Gamma_d, stabilizing_rank
from grothnorm.oracle import MAX_SIGN_ENUM, theta_real_exact, cut_norm_exact
from grothnorm.special import constants_table
from grothnorm.utils import FieldMismatchError

__all__ = ["CutNormBracket", "cutnorm_bracket"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CutNormBracket:
    """Bounds on ‖B‖_cut.

    Parameters
    ----------
    lower, upper : float
        γ(L_A)/(8K) and 3γ(L_A)/8
    gamma : float
    gamma_kind : CertificateKind
    upper_Gamma : float
        3Γ(L_A)/8, for information
    K : float
        the bound used for the symmetric Grothendieck constant
    exact : float, optional
        by enumeration when m + n <= MAX_SIGN_ENUM
    theta_bracket : (float, float), optional
        θ(L_A)/8 and 3θ(L_A)/8 when θ is computed exactly

    """
    lower: float
    upper: float
    gamma: float
    gamma_kind: CertificateKind
    upper_Gamma: float
    K: float
    exact: Optional[float] = None
    theta_bracket: Optional[Tuple[float, float]] = None

    def contains(self, value: float, tol: float = 1e-9) -> bool:
        return self.lower - tol <= value <= self.upper + tol


def cutnorm_bracket(B: RectMatrix, cfg: OptConfig = None) -> CutNormBracket:
    """Bracket the cut norm of a real matrix.

    Parameters
    ----------
    B : RectMatrix
        real
    cfg : OptConfig, optional

    Returns
    -------
    bracket : CutNormBracket
    """
    if not B.field.is_real:
        raise FieldMismatchError("The cut norm bracket is computed for real matrices.")
    L = laplacian_of(embed_rect(B))
    d = stabilizing_rank(L.n, L.field)
    gamma = gamma_d(L, d, cfg)
    Gamma = Gamma_d(L, d, cfg)
    K = constants_table().K_gamma_bound_R

    exact, theta_bracket = None, None
    if L.n <= MAX_SIGN_ENUM:
        exact = cut_norm_exact(B)
        theta = theta_real_exact(L)[0]
        theta_bracket = (theta / 8, 3 * theta / 8)
    bracket = CutNormBracket(gamma.value / (8 * K), 3 * gamma.value / 8, gamma.value, gamma.kind,
                             3 * Gamma.value / 8, K, exact, theta_bracket)
    if exact is not None and not bracket.contains(exact):
        logger.warning("cut norm %.10g outside the bracket [%.10g, %.10g]", exact, bracket.lower, bracket.upper)
    return bracket
