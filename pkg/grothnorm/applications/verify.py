"""Verification of the symmetric Grothendieck inequalities on one matrix.

All five norms are computed, exactly when the enumeration limits allow it
and by multi-start ascent otherwise, and the chain

    θ <= γ,  Θ <= Γ,  γ <= K θ,  Γ <= K Θ

is checked with K the bound sinh(π/2) (real) or 8/π - 1 (complex), together
with the sharper constant of every cone the matrix belongs to. Failed checks
are reported, never raised.
"""
import logging
from dataclasses import dataclass, field
from timeit import default_timer
from typing import Dict, FrozenSet, Tuple

import numpy as np

from grothnorm.classes import SymMatrix, RectMatrix, ConeLabel, classify_cones
from grothnorm.gramopt import OptConfig, CertificateKind, CROSS_CHECK_TOL, gamma_d, Gamma_d, G_d_rect, \
    stabilizing_rank
from grothnorm.oracle import MAX_SIGN_ENUM, MAX_BOX_ENUM, theta_real_exact, Theta_real_exact, coordinate_ascent
from grothnorm.special import conic_constant, constants_table
from grothnorm.utils import FieldTag, TOL_REPORT

__all__ = ["Relation", "Check", "NormValue", "VerifyReport", "verify_sgi", "EQUALITY_TOL"]

logger = logging.getLogger(__name__)

EQUALITY_TOL = CROSS_CHECK_TOL


class Relation:
    LE = "<="
    EQ = "=="


@dataclass(frozen=True)
class Check:
    """One inequality ``lhs <= constant * rhs`` or equality ``lhs == rhs``.

    ``constant_name`` is the entry of the constants table the check uses;
    bounds carry the ``bound`` kind since the sharp constants are unknown.
    """
    name: str
    lhs: float
    rhs: float
    constant: float
    constant_name: str
    relation: str
    passed: bool

    @classmethod
    def inequality(cls, name, lhs, rhs, constant, constant_name, tol):
        slack = tol * max(1.0, abs(rhs))
        return cls(name, lhs, rhs, constant, constant_name, Relation.LE, bool(lhs <= constant * rhs + slack))

    @classmethod
    def equality(cls, name, lhs, rhs, tol=EQUALITY_TOL):
        return cls(name, lhs, rhs, 1.0, "one", Relation.EQ, bool(abs(lhs - rhs) <= tol * max(1.0, abs(rhs))))


@dataclass(frozen=True)
class NormValue:
    value: float
    kind: CertificateKind


@dataclass(frozen=True)
class VerifyReport:
    """Norm values and checked inequalities of one matrix.

    Parameters
    ----------
    matrix_id : str
    field : FieldTag
    cone_labels : frozenset of ConeLabel
    norms : dict
        ``theta``, ``Theta``, ``gamma``, ``Gamma`` and ``G`` as :class:`NormValue`
    checks : tuple of Check
    runtime : dict
        seconds spent per norm and in total
    tol_report : float
        relative slack of the inequality checks

    """
    matrix_id: str
    field: FieldTag
    cone_labels: FrozenSet[ConeLabel]
    norms: Dict[str, NormValue]
    checks: Tuple[Check, ...]
    runtime: Dict[str, float] = field(default_factory=dict)
    tol_report: float = TOL_REPORT

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    @property
    def heuristic(self):
        """Names of the norms reported as lower bounds only."""
        return sorted(name for name, norm in self.norms.items() if norm.kind is CertificateKind.HEURISTIC_LOWER_BOUND)

    def to_dict(self):
        return {
            "matrix_id": self.matrix_id,
            "field": self.field.value,
            "cone_labels": sorted(label.value for label in self.cone_labels),
            "norms": {name: {"value": norm.value, "kind": norm.kind.value} for name, norm in self.norms.items()},
            "checks": [dict(vars(check)) for check in self.checks],
            "runtime": self.runtime,
            "tol_report": self.tol_report,
            "heuristic": self.heuristic,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerifyReport":
        """Rebuild a report from :meth:`to_dict` output (derived keys are ignored)."""
        return cls(data["matrix_id"],
                   FieldTag.parse(data["field"]),
                   frozenset(ConeLabel(label) for label in data["cone_labels"]),
                   {name: NormValue(norm["value"], CertificateKind(norm["kind"]))
                    for name, norm in data["norms"].items()},
                   tuple(Check(**check) for check in data["checks"]),
                   dict(data["runtime"]),
                   data["tol_report"])


def _theta_norms(A: SymMatrix, cfg: OptConfig):
    if A.field.is_real and A.n <= MAX_SIGN_ENUM:
        theta = NormValue(theta_real_exact(A)[0], CertificateKind.EXACT_ENUMERATION)
    else:
        theta = NormValue(coordinate_ascent(A, False, restarts=cfg.restarts, seed=cfg.seed)[0],
                          CertificateKind.HEURISTIC_LOWER_BOUND)
    if A.field.is_real and A.n <= MAX_BOX_ENUM:
        Theta = NormValue(Theta_real_exact(A), CertificateKind.EXACT_ENUMERATION)
    else:
        Theta = NormValue(coordinate_ascent(A, True, restarts=cfg.restarts, seed=cfg.seed)[0],
                          CertificateKind.HEURISTIC_LOWER_BOUND)
    return theta, Theta


def _timed(runtime, name, f, *args):
    start = default_timer()
    out = f(*args)
    runtime[name] = default_timer() - start
    return out


def _cone_checks(A, labels, norms, tol):
    theta, gamma = norms["theta"].value, norms["gamma"].value
    checks = []
    for label in sorted(labels, key=lambda x: x.value):
        constant = conic_constant(label, A.field)
        if constant is not None:
            checks.append(Check.inequality(f"gamma <= c theta [{label.value}]", gamma, theta, constant,
                                           f"conic_{label.value}", tol))
    if ConeLabel.PSD in labels:
        checks.append(Check.equality("gamma == Gamma [PSD]", gamma, norms["Gamma"].value))
        checks.append(Check.equality("Gamma == G [PSD]", norms["Gamma"].value, norms["G"].value))
    if ConeLabel.NONNEGATIVE in labels:
        total = float(np.real(np.sum(A.entries)))
        checks.extend(Check.equality(f"{name} == sum [Nonnegative]", norms[name].value, total)
                      for name in ("theta", "Theta", "gamma", "Gamma", "G"))
    if ConeLabel.ZERO_DIAGONAL in labels:
        checks.append(Check.equality("gamma == Gamma [ZeroDiagonal]", gamma, norms["Gamma"].value))
    return checks


def verify_sgi(A: SymMatrix, cfg: OptConfig = None, tol: float = TOL_REPORT, matrix_id: str = "") -> VerifyReport:
    """Compute the five norms of A and check the Grothendieck chain.

    Parameters
    ----------
    A : SymMatrix
    cfg : OptConfig, optional
        settings of the Gram-factor ascent and of the heuristic θ/Θ search
    tol : float
        a check passes when lhs <= constant * rhs + tol * max(1, |rhs|)
    matrix_id : str

    Returns
    -------
    report : VerifyReport
    """
    cfg = cfg or OptConfig()
    table = constants_table()
    runtime = {}
    start = default_timer()

    labels = classify_cones(A)
    theta, Theta = _timed(runtime, "theta", _theta_norms, A, cfg)
    d = stabilizing_rank(A.n, A.field)
    gamma = _timed(runtime, "gamma", gamma_d, A, d, cfg)
    Gamma = _timed(runtime, "Gamma", Gamma_d, A, d, cfg)
    G = _timed(runtime, "G", G_d_rect, RectMatrix(A.entries, A.field), stabilizing_rank(2 * A.n, A.field), cfg)
    norms = {"theta": theta, "Theta": Theta,
             "gamma": NormValue(gamma.value, gamma.kind),
             "Gamma": NormValue(Gamma.value, Gamma.kind),
             "G": NormValue(G.value, G.kind)}

    if theta.kind is CertificateKind.HEURISTIC_LOWER_BOUND:
        logger.warning("verify %s: theta is a heuristic lower bound (n=%d, field=%s)", matrix_id or "matrix", A.n,
                       A.field.value)

    K = table.K_gamma_bound(A.field)
    K_name = "K_gamma_bound_R" if A.field.is_real else "K_gamma_bound_C"
    checks = [
        Check.inequality("theta <= gamma", theta.value, gamma.value, 1.0, "one", tol),
        Check.inequality("Theta <= Gamma", Theta.value, Gamma.value, 1.0, "one", tol),
        Check.inequality("gamma <= K theta", gamma.value, theta.value, K, K_name, tol),
        Check.inequality("Gamma <= K Theta", Gamma.value, Theta.value, K, K_name, tol),
    ]
    checks.extend(_cone_checks(A, labels, norms, tol))
    runtime["total"] = default_timer() - start

    report = VerifyReport(matrix_id, A.field, labels, norms, tuple(checks), runtime, tol)
    for check in report.failures:
        logger.warning("verify %s: %s failed (%.10g vs %.10g)", matrix_id or "matrix", check.name, check.lhs,
                       check.constant * check.rhs)
    return report
