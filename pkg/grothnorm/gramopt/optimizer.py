"""Multi-start Gram-factor ascent.

A Grothendieck d-norm is the maximum of f(X) = Re tr(A X* X) over d x n
factors X whose columns lie on the unit sphere (γ) or in the unit ball (Γ).
The ascent runs on the factor directly: a Riemannian gradient step followed
by column normalization on the sphere, a projected gradient step on the
ball, both with an Armijo backtracking line search. Both signs ±A are
maximized so that the absolute value in the norm never has to be smoothed.

Once d(d+1)/2 > n (real) or d² > n (complex) every extreme point of the
rank-constrained Gram set is an extreme point of the full one, so the
low-rank problem has the same value as the semidefinite one and local
maxima are global for generic A.
"""
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import product, starmap
from multiprocessing.pool import ThreadPool
from typing import Sequence

import numpy as np

from grothnorm.classes import SymMatrix, GramFactor, Constraint, quadratic_value
from grothnorm.utils import FieldTag, FieldMismatchError, RngStream

__all__ = ["StepRule", "CertificateKind", "OptConfig", "NormEstimate", "convex_regime", "stabilizing_rank",
           "gram_ascent", "CROSS_CHECK_TOL"]

logger = logging.getLogger(__name__)

CROSS_CHECK_TOL = 1e-5
MAX_BACKTRACKS = 60
START_NOISE = 1e-3
ROUNDING_SLACK = 64


class StepRule(Enum):
    FIXED = "fixed"
    BACKTRACKING = "backtracking"


class CertificateKind(Enum):
    EXACT_CLOSED_FORM = "exact_closed_form"
    EXACT_ENUMERATION = "exact_enumeration"
    EXACT_CONVEX_REGIME = "exact_convex_regime"
    HEURISTIC_LOWER_BOUND = "heuristic_lower_bound"


@dataclass(frozen=True)
class OptConfig:
    """Optimizer settings.

    Parameters
    ----------
    restarts : int
        number of starting points per sign; the first one is spectral
    max_iters : int
    step_rule : StepRule
        ``fixed`` takes the initial step every time, ``backtracking`` runs
        an Armijo search
    tol_grad : float
        stationarity tolerance, relative to the Frobenius norm of A
    seed : int
        master seed of the restart streams
    armijo, shrink, initial_step : float
        line search constants; the step is measured in units of 1/(2‖A‖₂)
    workers : int
        threads used for the restarts
    cross_check : bool
        rerun with doubled restarts in the convex regime and compare

    """
    restarts: int = 16
    max_iters: int = 2000
    step_rule: StepRule = StepRule.BACKTRACKING
    tol_grad: float = 1e-9
    seed: int = 0
    armijo: float = 1e-4
    shrink: float = 0.5
    initial_step: float = 1.0
    workers: int = 1
    cross_check: bool = True

    def __post_init__(self):
        object.__setattr__(self, 'step_rule', StepRule(self.step_rule))
        if self.restarts < 1:
            raise ValueError("At least one restart is needed.")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive.")
        if self.tol_grad <= 0:
            raise ValueError("tol_grad must be positive.")
        if not 0 < self.shrink < 1 or self.armijo <= 0 or self.initial_step <= 0:
            raise ValueError("Line search constants out of range.")
        if self.workers < 1:
            raise ValueError("workers must be positive.")

    def replace(self, **changes) -> "OptConfig":
        return replace(self, **changes)


@dataclass(frozen=True, eq=False)
class NormEstimate:
    """The outcome of a Gram-factor maximization.

    ``value`` equals ``scale * sign * Re tr(A X* X)`` at the certificate.

    Parameters
    ----------
    value : float
    certificate : GramFactor
    kind : CertificateKind
    sign : int
        +1 or -1, which of ±A attained the value
    iterations : int
        iterations of the winning restart
    restarts_used : int
    scale : float
        1, or 1/2 for the rectangular norm computed through the embedding
    diagnostics : dict

    """
    value: float
    certificate: GramFactor
    kind: CertificateKind
    sign: int
    iterations: int
    restarts_used: int
    scale: float = 1.0
    diagnostics: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "value": self.value,
            "kind": self.kind.value,
            "sign": self.sign,
            "d": self.certificate.d,
            "field": self.certificate.field.value,
            "iterations": self.iterations,
            "restarts_used": self.restarts_used,
            "scale": self.scale,
            "diagnostics": self.diagnostics,
        }


def convex_regime(n: int, d: int, field=FieldTag.REAL) -> bool:
    """Whether rank d is large enough for the rank constraint to be inactive."""
    if FieldTag.parse(field).is_real:
        return d * (d + 1) // 2 > n
    return d * d > n


def stabilizing_rank(n: int, field=FieldTag.REAL) -> int:
    """Smallest d in the convex regime for n vectors."""
    d = 1
    while not convex_regime(n, d, field):
        d += 1
    return d


def _project(X, constraint):
    norms = np.linalg.norm(X, axis=0)
    if constraint is Constraint.UNIT_SPHERE:
        safe = np.where(norms > 0, norms, 1.0)
        X = X / safe
        if np.any(norms == 0):
            X[:, norms == 0] = 0
            X[0, norms == 0] = 1
        return X
    return X / np.maximum(norms, 1.0)


def _starting_point(M, d, sign, restart, cfg, dtype, field):
    n = M.shape[0]
    rng = RngStream(cfg.seed, restart)
    if restart == 0:
        _, V = np.linalg.eigh(sign * M)
        X = V[:, ::-1][:, :d].conj().T.astype(dtype)
        X = X + START_NOISE * rng.normal((d, n), field)
    else:
        X = rng.normal((d, n), field)
    return _project(X, Constraint.UNIT_SPHERE)


def _rounding_floor(value, max_step):
    """Stationarity below which one step cannot raise the value past float rounding."""
    return float(np.sqrt(ROUNDING_SLACK * np.finfo(float).eps * max(1.0, abs(value)) / max_step))


def _ascend(M, X, sign, constraint, cfg, threshold, max_step):
    """Gradient ascent of sign·f from X.

    The step never exceeds ``max_step``, the inverse Lipschitz constant of
    the gradient.
    Returns value, X, iterations, stationarity and whether the run converged.
    """
    value = sign * quadratic_value(M, X)
    measure = np.inf
    step = max_step
    iteration = 0
    for iteration in range(1, cfg.max_iters + 1):
        G = 2 * sign * (X @ M)
        if constraint is Constraint.UNIT_SPHERE:
            direction = G - X * np.real(np.sum(np.conj(X) * G, axis=0))
            measure = np.linalg.norm(direction)
        else:
            direction = G
            measure = np.linalg.norm(_project(X + max_step * G, constraint) - X) / max_step
        if measure <= threshold:
            return value, X, iteration, measure, True

        accepted = False
        for _ in range(MAX_BACKTRACKS):
            Y = _project(X + step * direction, constraint)
            new_value = sign * quadratic_value(M, Y)
            if cfg.step_rule is StepRule.FIXED:
                accepted = True
                break
            if constraint is Constraint.UNIT_SPHERE:
                increase = step * measure ** 2
            else:
                increase = float(np.real(np.vdot(G, Y - X)))
            if new_value >= value + cfg.armijo * increase:
                accepted = True
                break
            step *= cfg.shrink
        if not accepted:
            converged = measure <= _rounding_floor(value, max_step)
            if not converged:
                logger.debug("line search failed at stationarity %.3e", measure)
            return value, X, iteration, measure, converged
        X, value = Y, new_value
        if cfg.step_rule is StepRule.BACKTRACKING:
            step = min(step / cfg.shrink, max_step)
    return value, X, iteration, measure, False


def gram_ascent(A: SymMatrix, d: int, constraint: Constraint = Constraint.UNIT_SPHERE, cfg: OptConfig = None,
                field=None, signs: Sequence[int] = (1, -1)) -> NormEstimate:
    """Maximize sign·Re tr(A X* X) over rank-d factors, for each of the given signs.

    Parameters
    ----------
    A : SymMatrix
    d : int
        rank; values above n are clamped to n
    constraint : Constraint
    cfg : OptConfig, optional
    field : FieldTag, optional
        field of the factor, defaults to the field of A; a real field for a
        complex A is rejected
    signs : sequence of int
        (1, -1) gives the absolute-value maximum, (1,) the signed one

    Returns
    -------
    estimate : NormEstimate
    """
    cfg = cfg or OptConfig()
    if d < 1:
        raise ValueError(f"The rank d must be at least 1, got {d}.")
    field = FieldTag.parse(field) if field is not None else A.field
    if field.is_real and not A.field.is_real:
        raise FieldMismatchError("A complex matrix needs complex factors.")

    n = A.n
    d_eff = min(d, n)
    M = A.entries.astype(field.dtype)
    frobenius = float(np.linalg.norm(M))
    threshold = cfg.tol_grad * frobenius
    step = cfg.initial_step / (2 * max(float(np.linalg.norm(M, 2)), np.finfo(float).tiny))

    def run(sign, restart):
        X = _starting_point(M, d_eff, sign, restart, cfg, field.dtype, field)
        value, X, iterations, measure, converged = _ascend(M, X, sign, constraint, cfg, threshold, step)
        logger.debug("restart %d sign %+d: value %.17g after %d iterations, stationarity %.3e", restart, sign, value,
                     iterations, measure)
        return value, X, iterations, converged, sign

    tasks = list(product(signs, range(cfg.restarts)))
    if cfg.workers > 1:
        with ThreadPool(cfg.workers) as pool:
            results = pool.starmap(run, tasks)
    else:
        results = list(starmap(run, tasks))

    stalled = sum(1 for r in results if not r[3])
    if stalled:
        logger.warning("gram ascent: %d of %d runs stopped (max_iters=%d) short of stationarity %.3e",
                       stalled, len(results), cfg.max_iters, threshold)

    value, X, iterations, _, sign = max(results, key=lambda r: r[0])
    certificate = GramFactor(X, constraint, field)
    in_regime = d_eff >= n or convex_regime(n, d_eff, field)
    diagnostics = {"effective_d": d_eff, "non_stationary_runs": stalled}

    if in_regime and cfg.cross_check:
        other = gram_ascent(A, d, constraint, cfg.replace(restarts=2 * cfg.restarts, seed=cfg.seed + 1,
                                                          cross_check=False), field, signs)
        diagnostics["cross_check"] = other.value
        if abs(other.value - value) > CROSS_CHECK_TOL * max(1.0, abs(value)):
            logger.warning("convex-regime cross-check disagrees: %.17g against %.17g", value, other.value)
        if other.value > value:
            return replace(other, diagnostics={**diagnostics, "cross_check": value})

    kind = CertificateKind.EXACT_CONVEX_REGIME if in_regime else CertificateKind.HEURISTIC_LOWER_BOUND
    return NormEstimate(float(value), certificate, kind, int(sign), iterations, len(results), 1.0, diagnostics)
