import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from grothnorm.classes import *
from grothnorm.utils import FieldTag, FieldMismatchError, ConePreconditionError, SymmetryError
from grothnorm.classes.tests.random_matrices import generate_symmetric, generate_sdd, generate_laplacian, \
    generate_rect

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


@st.composite
def symmetric_arrays(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    M = draw(arrays(np.float64, (n, n), elements=finite))
    return (M + M.T) / 2


class TestSymMatrix:

    def test_exact_hermitian(self):
        A = SymMatrix([[1, 1 + 2j], [1 - 2j, -1]])
        assert A.field is FieldTag.COMPLEX
        assert np.array_equal(A.entries, A.entries.conj().T)
        assert np.all(A.entries.imag.diagonal() == 0)

    def test_symmetry_violation(self):
        with pytest.raises(SymmetryError):
            SymMatrix([[1, 1], [0, 1]])

    def test_complex_entries_tagged_real(self):
        with pytest.raises(FieldMismatchError):
            SymMatrix([[1, 1j], [-1j, 1]], FieldTag.REAL)

    def test_real_entries_tagged_complex(self):
        A = SymMatrix([[2.0]], "complex")
        assert A.field is FieldTag.COMPLEX and A.entries.dtype == np.complex128

    def test_read_only(self):
        A = SymMatrix(np.eye(2))
        with pytest.raises(ValueError):
            A.entries[0, 0] = 3

    def test_shift_and_negate(self):
        A = generate_symmetric(4, 0)
        assert np.allclose((-A).entries, -A.entries)
        assert np.isclose(A.shift(2.0).trace, A.trace + 8)


class TestProjections:

    @pytest.mark.parametrize('entries,expected', [
        (np.diag([1.0, -1.0]), np.zeros((2, 2))),
        ([[2.0, 3.0], [3.0, 4.0]], np.full((2, 2), 3.0)),
        ([[1.0, 5.0], [5.0, 1.0]], [[1.0, 5.0], [5.0, 1.0]]),
    ])
    def test_xi(self, entries, expected):
        assert np.allclose(xi_projection(SymMatrix(entries)).entries, expected)

    @settings(max_examples=50, deadline=None)
    @given(symmetric_arrays())
    def test_idempotent_and_orthogonal(self, M):
        A = SymMatrix(M)
        xi = xi_projection(A)
        assert np.allclose(xi_projection(xi).entries, xi.entries)
        assert np.isclose(xi.trace, A.trace)
        delta = delta_projection(A)
        assert np.allclose(delta_projection(delta).entries, delta.entries)
        residual = A.entries - xi.entries
        assert abs(np.sum(residual * xi.entries)) <= 1e-12 * max(1.0, A.frobenius ** 2)


class TestClassifyCones:

    @pytest.mark.parametrize('entries,labels', [
        ([[1, -1], [-1, 1]], {ConeLabel.PSD, ConeLabel.EQUAL_DIAGONAL, ConeLabel.WEIGHTED_LAPLACIAN,
                              ConeLabel.DIAGONALLY_DOMINANT}),
        ([[0, 1], [1, 0]], {ConeLabel.ZERO_DIAGONAL, ConeLabel.EQUAL_DIAGONAL, ConeLabel.NONNEGATIVE}),
        (np.diag([1.0, -1.0]), set()),
    ])
    def test_labels(self, entries, labels):
        assert classify_cones(SymMatrix(np.array(entries, dtype=float))) == labels

    @pytest.mark.parametrize('s', range(10))
    def test_embedding_is_zero_and_equal_diagonal(self, s):
        labels = classify_cones(embed_rect(generate_rect(2 + s % 3, 3, s)))
        assert {ConeLabel.ZERO_DIAGONAL, ConeLabel.EQUAL_DIAGONAL} <= labels

    @pytest.mark.parametrize('s', range(5))
    def test_random_laplacian(self, s):
        assert ConeLabel.WEIGHTED_LAPLACIAN in classify_cones(generate_laplacian(6, s))


class TestLaplacian:

    def test_edge(self):
        assert np.array_equal(laplacian_of(SymMatrix([[0.0, 2.0], [2.0, 0.0]])).entries, [[2, -2], [-2, 2]])

    def test_triangle(self):
        A = SymMatrix(np.ones((3, 3)) - np.eye(3))
        assert np.allclose(laplacian_of(A).entries, 2 * np.eye(3) - A.entries)

    def test_zero_row_sums(self):
        L = laplacian_of(generate_symmetric(7, 3, zero_diagonal=True))
        assert np.all(np.abs(L.entries.sum(axis=1)) <= 1e-10)

    def test_nonzero_diagonal(self):
        with pytest.raises(ConePreconditionError):
            laplacian_of(SymMatrix(np.eye(2)))


class TestSddDecompose:

    def test_worked_example(self):
        H, L = sdd_decompose(SymMatrix([[2.0, -1.0], [-1.0, 3.0]]))
        assert np.array_equal(H.entries, [[1, 0], [0, 2]])
        assert np.array_equal(L.entries, [[1, -1], [-1, 1]])

    def test_nonnegative(self):
        A = SymMatrix([[3.0, 1.0], [1.0, 2.0]])
        H, L = sdd_decompose(A)
        assert np.array_equal(H.entries, A.entries) and not np.any(L.entries)

    def test_laplacian_is_its_own_part(self):
        A = generate_laplacian(5, 1)
        H, L = sdd_decompose(A)
        assert np.allclose(H.entries, 0, atol=1e-12)
        assert np.allclose(L.entries, A.entries)

    @pytest.mark.parametrize('s', range(20))
    def test_reassembly(self, s):
        A = generate_sdd(6, s)
        H, L = sdd_decompose(A)
        assert np.max(np.abs(A.entries - H.entries - L.entries)) <= 1e-12
        assert not np.any(offdiag(H) * offdiag(L))
        labels_h, labels_l = classify_cones(H), classify_cones(L)
        assert {ConeLabel.NONNEGATIVE, ConeLabel.DIAGONALLY_DOMINANT} <= labels_h
        assert ConeLabel.WEIGHTED_LAPLACIAN in labels_l

    def test_not_dominant(self):
        with pytest.raises(ConePreconditionError):
            sdd_decompose(SymMatrix([[1.0, 2.0], [2.0, 1.0]]))


class TestEmbeddings:

    def test_embed(self):
        A = embed_rect(RectMatrix([[1.0]]))
        assert np.array_equal(A.entries, [[0, 1], [1, 0]])

    def test_embed_blocks(self):
        B = RectMatrix([[1.0, -1.0], [1.0, 1.0]])
        A = embed_rect(B).entries
        assert not np.any(A[:2, :2]) and not np.any(A[2:, 2:])
        assert np.array_equal(A[:2, 2:], B.entries)

    def test_hermitian_to_real(self):
        A_hat = hermitian_to_real(SymMatrix([[0, 1j], [-1j, 0]]))
        assert np.array_equal(A_hat.entries, [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])
        assert np.array_equal(hermitian_to_real(SymMatrix([[2.0]], "complex")).entries, 2 * np.eye(2))

    def test_hermitian_to_real_rejects_real(self):
        with pytest.raises(FieldMismatchError):
            hermitian_to_real(SymMatrix(np.eye(2)))

    @pytest.mark.parametrize('s', range(20))
    def test_quadratic_form_identity(self, s):
        A = generate_symmetric(5, s, FieldTag.COMPLEX)
        rng = np.random.default_rng(100 + s)
        delta = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        A_hat = hermitian_to_real(A)
        assert np.isclose(A_hat.trace, 2 * A.trace)
        assert abs(A.quadratic_form(delta) - A_hat.quadratic_form(realify_vector(delta))) <= 1e-10


class TestGramFactor:

    @pytest.mark.parametrize('field', ["real", "complex"])
    def test_random_on_sphere(self, field):
        from grothnorm.utils import RngStream
        xs = GramFactor.random(7, 3, field, RngStream(1))
        assert (xs.d, xs.n) == (3, 7)
        assert xs.field is FieldTag.parse(field)
        assert np.allclose(np.diag(gram_matrix(xs)), 1)

    def test_gram_hermitian(self):
        from grothnorm.utils import RngStream
        G = gram_matrix(GramFactor.random(5, 4, "complex", RngStream(2)))
        assert np.allclose(G, G.conj().T)
        assert np.min(np.linalg.eigvalsh(G)) >= -1e-12

    def test_normalized_zero_column(self):
        xs = GramFactor.normalized(np.array([[3.0, 0.0], [4.0, 0.0]]))
        assert np.allclose(xs.vectors, [[0.6, 1.0], [0.8, 0.0]])

    def test_normalized_ball(self):
        xs = GramFactor.normalized(np.array([[0.3, 2.0], [0.4, 0.0]]), Constraint.UNIT_BALL)
        assert np.allclose(xs.vectors, [[0.3, 1.0], [0.4, 0.0]])

    def test_rejects_long_columns(self):
        with pytest.raises(ValueError):
            GramFactor(np.array([[1.5, 1.0]]), Constraint.UNIT_BALL)
        with pytest.raises(ValueError):
            GramFactor(np.array([[0.5, 1.0]]))

    def test_objective(self):
        A = SymMatrix([[0.0, 1.0], [1.0, 0.0]])
        xs = GramFactor(np.array([[1.0, -1.0]]))
        assert xs.objective(A) == -2
        assert quadratic_value(A.entries, np.array([1.0, 1.0])) == 2

    def test_read_only(self):
        xs = GramFactor(np.array([[1.0]]))
        with pytest.raises(ValueError):
            xs.vectors[0, 0] = 2
