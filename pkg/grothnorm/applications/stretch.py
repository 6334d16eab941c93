"""Stretch and spread of a real quadratic form.

str(A) = max - min of δᵀAδ over sign vectors, spr(A) = max - min of tr(AG)
over correlation matrices; str <= spr <= K_γ str, both unchanged by
A -> A + αI.
"""
import logging
from dataclasses import dataclass

from grothnorm.classes import SymMatrix
from grothnorm.gramopt import OptConfig, spread
from grothnorm.oracle import stretch_exact
from grothnorm.special import constants_table
from grothnorm.utils import FieldMismatchError, TOL_REPORT

__all__ = ["StretchSpread", "stretch_spread"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StretchSpread:
    stretch: float
    spread: float
    bound: float
    lower_ok: bool
    upper_ok: bool

    @property
    def ratio(self):
        """spr/str, 1 when both vanish."""
        if self.stretch > 0:
            return self.spread / self.stretch
        return 1.0 if self.spread <= TOL_REPORT else float("inf")

    @property
    def passed(self):
        return self.lower_ok and self.upper_ok

    def to_dict(self):
        return {"stretch": self.stretch, "spread": self.spread, "ratio": self.ratio, "bound": self.bound,
                "lower_ok": self.lower_ok, "upper_ok": self.upper_ok}


def stretch_spread(A: SymMatrix, cfg: OptConfig = None, tol: float = TOL_REPORT) -> StretchSpread:
    """Exact stretch, spread at the stabilizing rank, and the two inequalities between them."""
    if not A.field.is_real:
        raise FieldMismatchError("stretch and spread are computed for real matrices.")
    stretch = stretch_exact(A)
    spr = spread(A, cfg)
    K = constants_table().K_gamma_bound_R
    slack = tol * max(1.0, stretch)
    result = StretchSpread(stretch, spr, K, bool(stretch <= spr + slack), bool(spr <= K * stretch + slack))
    if not result.passed:
        logger.warning("stretch %.10g and spread %.10g violate str <= spr <= K str", stretch, spr)
    return result
