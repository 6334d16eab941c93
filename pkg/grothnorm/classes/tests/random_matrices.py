import networkx as nx
import numpy as np

from grothnorm.classes import SymMatrix, RectMatrix, adjacency_from_graph, laplacian_of
from grothnorm.utils import FieldTag


def _entries(rng, shape, field, scale=1.0):
    if field is FieldTag.REAL:
        return scale * rng.standard_normal(shape)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def generate_symmetric(n, s, field=FieldTag.REAL, zero_diagonal=False):
    rng = np.random.default_rng(s)
    M = _entries(rng, (n, n), field)
    M = (M + M.conj().T) / 2
    if zero_diagonal:
        np.fill_diagonal(M, 0)
    return SymMatrix(M, field)


def generate_psd(n, s, field=FieldTag.REAL, rank=None):
    rng = np.random.default_rng(s)
    R = _entries(rng, (n, rank or n), field)
    return SymMatrix(R @ R.conj().T, field)


def generate_diagonal(n, s, low=-5.0, high=5.0):
    rng = np.random.default_rng(s)
    return SymMatrix(np.diag(rng.uniform(low, high, n)), FieldTag.REAL)


def generate_tridiagonal(n, s, low=-5.0, high=5.0):
    rng = np.random.default_rng(s)
    M = np.diag(rng.uniform(low, high, n))
    off = rng.uniform(low, high, n - 1)
    M += np.diag(off, 1) + np.diag(off, -1)
    return SymMatrix(M, FieldTag.REAL)


def generate_graph(n, s, p=0.5):
    rng = np.random.default_rng(s)
    graph = nx.gnp_random_graph(n, p, seed=int(rng.integers(2 ** 31)))
    for u, v in graph.edges:
        graph.edges[u, v]["weight"] = float(rng.uniform(0.1, 2.0))
    return graph


def generate_laplacian(n, s, p=0.5):
    return laplacian_of(adjacency_from_graph(generate_graph(n, s, p)))


def generate_sdd(n, s):
    rng = np.random.default_rng(s)
    M = rng.uniform(-1, 1, (n, n))
    M = (M + M.T) / 2
    np.fill_diagonal(M, 0)
    np.fill_diagonal(M, np.abs(M).sum(axis=1) + rng.uniform(0, 1, n))
    return SymMatrix(M, FieldTag.REAL)


def generate_rect(m, n, s, field=FieldTag.REAL):
    rng = np.random.default_rng(s)
    return RectMatrix(_entries(rng, (m, n), field), field)
