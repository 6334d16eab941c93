import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grothnorm.classes import SymMatrix
from grothnorm.closedform import *
from grothnorm.utils import ConePreconditionError


class TestDiagNorms:

    @pytest.mark.parametrize('a,expected', [
        ((1, -1), (0, 1, 2)),
        ((1, 1, 1, 1), (4, 4, 4)),
        ((3, -1), (2, 3, 4)),
    ])
    def test_values(self, a, expected):
        result = diag_norms(a)
        assert (result.gamma, result.Gamma, result.G) == expected

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.floats(min_value=-1e3, max_value=1e3, allow_nan=False), min_size=1, max_size=10))
    def test_ordering(self, a):
        result = diag_norms(a)
        assert result.gamma <= result.Gamma + 1e-9 <= result.G + 2e-9


class TestTridiagGamma:

    @pytest.mark.parametrize('entries,expected', [
        ([[0, 1], [1, 0]], 2),
        (np.diag([1.0, -1.0]), 0),
        ([[1, -2, 0], [-2, 1, 3], [0, 3, 1]], 13),
    ])
    def test_values(self, entries, expected):
        assert tridiag_gamma(SymMatrix(np.array(entries, dtype=float))) == expected

    def test_not_tridiagonal(self):
        with pytest.raises(ConePreconditionError):
            tridiag_gamma(SymMatrix(np.ones((3, 3))))

    def test_agrees_with_nonneg(self):
        A = SymMatrix(np.diag([1.0, 2.0, 0.5], 1) + np.diag([1.0, 2.0, 0.5], -1))
        assert tridiag_gamma(A) == nonneg_norms(A).gamma


class TestNonnegNorms:

    @pytest.mark.parametrize('entries,expected', [
        (np.ones((2, 2)), 4),
        ([[1, 2], [2, 0]], 5),
        ([[0, 1], [1, 0]], 2),
    ])
    def test_values(self, entries, expected):
        result = nonneg_norms(SymMatrix(np.array(entries, dtype=float)))
        assert result.gamma == result.Gamma == result.G == expected

    def test_negative_entry(self):
        with pytest.raises(ConePreconditionError):
            nonneg_norms(SymMatrix([[1.0, -1.0], [-1.0, 1.0]]))


class TestBipartiteBlockNorms:

    @pytest.mark.parametrize('A1,A2,B,expected', [
        ([[0]], [[0]], [[1]], 2),
        ([[1]], [[1]], [[1]], 4),
        (np.zeros((2, 2)), np.zeros((2, 2)), np.ones((2, 2)), 8),
    ])
    def test_values(self, A1, A2, B, expected):
        assert bipartite_block_norms(A1, A2, B) == expected

    def test_certificate_attains(self):
        A1, A2, B = [[1.0, 2.0], [2.0, 0.0]], [[3.0]], [[1.0], [4.0]]
        A = bipartite_block_matrix(A1, A2, B)
        x = bipartite_certificate(2, 1)
        assert A.quadratic_form(x) == bipartite_block_norms(A1, A2, B)

    def test_negative_block(self):
        with pytest.raises(ConePreconditionError):
            bipartite_block_norms([[0]], [[0]], [[-1]])


class TestClosedFormDispatch:

    def test_diagonal(self):
        assert closed_form_norms(SymMatrix(np.diag([3.0, -1.0]))) == diag_norms([3, -1])

    def test_bipartite(self):
        A = bipartite_block_matrix([[1.0]], [[2.0]], [[3.0]])
        assert closed_form_norms(A).gamma == 9

    def test_uncovered(self):
        assert closed_form_norms(SymMatrix([[0.0, 1.0, 1.0], [1.0, 0.0, -1.0], [1.0, -1.0, 0.0]])) is None
