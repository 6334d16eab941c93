"""Maximum cut of a weighted graph.

For a nonnegative zero-diagonal weight matrix A the cut of a sign vector δ is
¼ δᵀ L_A δ, so the maximum cut is ¼‖L_A‖_θ and its semidefinite relaxation
is ¼‖L_A‖_γ. Gaussian sign rounding of the relaxation's Gram vectors gives
cuts whose mean is at least α_GW times the relaxation.
"""
import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from grothnorm.classes import SymMatrix, ConeLabel, classify_cones, laplacian_of, adjacency_from_graph
from grothnorm.gramopt import OptConfig, CertificateKind, gamma_d, stabilizing_rank
from grothnorm.oracle import MAX_SIGN_ENUM, theta_real_exact
from grothnorm.rounding import gaussian_sign_round_batch
from grothnorm.special import alpha_gw
from grothnorm.utils import RngStream, FieldMismatchError, ConePreconditionError

__all__ = ["MaxcutResult", "maxcut", "maxcut_graph", "cut_value", "ROUNDINGS"]

logger = logging.getLogger(__name__)

ROUNDINGS = 256


@dataclass(frozen=True, eq=False)
class MaxcutResult:
    """Exact and relaxed maximum cut.

    Parameters
    ----------
    exact : float or None
        by sign enumeration, when n <= MAX_SIGN_ENUM
    partition : numpy array or None
        ±1 sides of an exact maximum cut
    relaxation : float
        ¼‖L_A‖_γ
    relaxation_kind : CertificateKind
    rounded : float
        best cut over the rounding draws
    rounded_partition : numpy array
    rounded_mean : float
        mean cut over the draws
    roundings : int
    nodes : tuple, optional
        node labels in partition order

    """
    exact: Optional[float]
    partition: Optional[np.ndarray]
    relaxation: float
    relaxation_kind: CertificateKind
    rounded: float
    rounded_partition: np.ndarray
    rounded_mean: float
    roundings: int
    nodes: Optional[Tuple] = None

    @property
    def gw_ratio(self):
        """Mean rounded cut over the relaxation; α_GW or more in expectation."""
        return self.rounded_mean / self.relaxation if self.relaxation > 0 else 1.0

    def to_dict(self):
        return {
            "exact": self.exact,
            "partition": self.partition,
            "relaxation": self.relaxation,
            "relaxation_kind": self.relaxation_kind,
            "rounded": self.rounded,
            "rounded_partition": self.rounded_partition,
            "rounded_mean": self.rounded_mean,
            "roundings": self.roundings,
            "gw_ratio": self.gw_ratio,
            "alpha_gw": alpha_gw(),
            "nodes": None if self.nodes is None else [str(node) for node in self.nodes],
        }


def cut_value(A: SymMatrix, delta) -> float:
    """Weight of the edges between {δ_i = 1} and {δ_i = -1}."""
    delta = np.asarray(delta, dtype=float)
    return float(np.sum(A.entries * (1 - np.outer(delta, delta)))) / 4


def _check_weights(A: SymMatrix):
    if not A.field.is_real:
        raise FieldMismatchError("maxcut takes real weights.")
    labels = classify_cones(A)
    if ConeLabel.NONNEGATIVE not in labels or ConeLabel.ZERO_DIAGONAL not in labels:
        raise ConePreconditionError("maxcut needs nonnegative weights and a zero diagonal.")


def maxcut(A: SymMatrix, cfg: OptConfig = None, roundings: int = ROUNDINGS, rng: RngStream = None) -> MaxcutResult:
    """Maximum cut of the graph weighted by A.

    Parameters
    ----------
    A : SymMatrix
        real, nonnegative, zero diagonal
    cfg : OptConfig, optional
    roundings : int
        Gaussian sign roundings of the relaxation
    rng : RngStream, optional

    Returns
    -------
    result : MaxcutResult
    """
    _check_weights(A)
    cfg = cfg or OptConfig()
    rng = rng or RngStream(cfg.seed)
    L = laplacian_of(A)

    exact, partition = None, None
    if A.n <= MAX_SIGN_ENUM:
        value, partition = theta_real_exact(L)
        exact = value / 4

    relaxed = gamma_d(L, stabilizing_rank(L.n, L.field), cfg)
    deltas = gaussian_sign_round_batch(relaxed.certificate, roundings, rng).real
    cuts = np.einsum('in,ij,jn->n', deltas, L.entries, deltas) / 4
    best = int(np.argmax(cuts))
    logger.debug("maxcut n=%d: relaxation %.10g, best rounded %.10g, mean %.10g", A.n, relaxed.value / 4,
                 cuts[best], cuts.mean())
    return MaxcutResult(exact, partition, relaxed.value / 4, relaxed.kind, float(cuts[best]),
                        deltas[:, best].copy(), float(cuts.mean()), roundings)


def maxcut_graph(graph, weight: str = "weight", cfg: OptConfig = None, roundings: int = ROUNDINGS,
                 rng: RngStream = None) -> MaxcutResult:
    """:func:`maxcut` of an undirected networkx graph; missing weights count as 1."""
    result = maxcut(adjacency_from_graph(graph, weight), cfg, roundings, rng)
    return replace(result, nodes=tuple(graph.nodes))
