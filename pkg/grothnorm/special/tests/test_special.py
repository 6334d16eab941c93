import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate, special

from grothnorm.classes import SymMatrix, ConeLabel
from grothnorm.classes.tests.random_matrices import generate_psd
from grothnorm.special import *
from grothnorm.utils import FieldTag, DomainError, RngStream, SizeLimitError


def random_correlation(n, s, field=FieldTag.REAL):
    G = generate_psd(n, s, field).entries
    scale = 1 / np.sqrt(np.real(np.diag(G)))
    return SymMatrix(scale[:, None] * G * scale[None, :], field)


class TestPhiReal:

    def test_arcsin(self):
        assert np.isclose(phi_real(0.5, 1), 1 / 3, atol=1e-15)

    @pytest.mark.parametrize('d', [1, 2, 3, 5, 8])
    def test_endpoints(self, d):
        assert phi_real(1.0, d) == 1 and phi_real(-1.0, d) == -1 and phi_real(0.0, d) == 0

    @given(st.floats(min_value=-1, max_value=1), st.integers(min_value=1, max_value=6))
    def test_odd(self, x, d):
        assert phi_real(-x, d) == -phi_real(x, d)

    @pytest.mark.parametrize('d', [1, 2, 4])
    def test_increasing(self, d):
        values = phi_real(np.linspace(-1, 1, 201), d)
        assert np.all(np.diff(values) > 0)

    def test_outside(self):
        with pytest.raises(DomainError):
            phi_real(1.01, 2)

    @pytest.mark.parametrize('d', [1, 2, 3])
    def test_truncated_series(self, d):
        series = phi_series(d, FieldTag.REAL, 64)
        for x in (0.3, 0.9):
            assert abs(phi_real(x, d, K=64) - phi_real(x, d)) <= series.remainder_bound(x) + 1e-14

    @pytest.mark.parametrize('d', [1, 2, 3])
    def test_monte_carlo(self, d):
        rng = RngStream(17, d)
        x = 0.3
        mean, stderr = mc_phi(x, d, FieldTag.REAL, 200_000, rng)
        assert abs(mean - phi_real(x, d)) <= 4 * stderr


class TestPhiComplex:

    def test_zero(self):
        assert phi_complex(0) == 0

    @pytest.mark.parametrize('angle', np.linspace(0, 2 * np.pi, 7))
    def test_unit_circle(self, angle):
        z = np.exp(1j * angle)
        assert np.isclose(phi_complex(z), z, atol=1e-15)

    def test_hypergeometric_value(self):
        expected = np.pi / 8 * special.hyp2f1(0.5, 0.5, 2, 0.25)
        assert np.isclose(phi_complex(0.5).real, expected, atol=1e-14)
        assert abs(haagerup_integral(0.5) - phi_complex(0.5)) <= 1e-10

    @pytest.mark.parametrize('z', [0.3 + 0.4j, -0.7j, 0.99, -0.2 + 0.1j])
    def test_integral_form(self, z):
        assert abs(haagerup_integral(z) - phi_complex(z)) <= 1e-10

    def test_real_of_twice_dimension(self):
        assert np.isclose(phi_complex(0.6, 2).real, phi_real(0.6, 4))

    @pytest.mark.parametrize('d', [1, 2])
    def test_monte_carlo(self, d):
        z = 0.3 + 0.4j
        mean, stderr = mc_phi(z, d, FieldTag.COMPLEX, 200_000, RngStream(23, d))
        assert abs(mean - phi_complex(z, d)) <= 4 * np.sqrt(2) * stderr


class TestPhiSeries:

    @pytest.mark.parametrize('d,field', [(1, "real"), (2, "real"), (3, "real"), (1, "complex"), (2, "complex")])
    def test_invariants(self, d, field):
        series = phi_series(d, field, 64)
        assert np.all(series.coeffs >= 0)
        assert np.sum(series.coeffs) <= 1 + 1e-12
        assert np.isclose(series.truncation_error_bound, 1 - np.sum(series.coeffs))
        assert abs(series.coeffs[0] - b1_coefficient(d, field)) <= 1e-9

    def test_complex_is_real_of_twice_dimension(self):
        assert np.allclose(phi_series(2, "complex").coeffs, phi_series(4, "real").coeffs)

    def test_arcsin_coefficients(self):
        coeffs = phi_series(1, "real", 4).coeffs
        assert np.allclose(coeffs, 2 / np.pi * np.array([1, 1 / 6, 3 / 40, 5 / 112]))


class TestInverse:

    def test_real_values(self):
        assert np.isclose(phi_inverse(1 / 3), 0.5) and phi_inverse(1.0) == 1

    def test_real_composition(self):
        x = np.linspace(-1, 1, 1001)
        assert np.max(np.abs(phi_inverse(phi_real(x, 1)) - x)) <= 1e-12

    def test_complex_forward_check(self):
        z = phi_inverse(0.4, FieldTag.COMPLEX)
        assert abs(phi_complex(z) - 0.4) <= 1e-10

    def test_complex_radial_line(self):
        direction = np.exp(0.7j)
        for r in np.linspace(0, 1, 21):
            z = r * direction
            assert abs(phi_inverse(phi_complex(z), FieldTag.COMPLEX) - z) <= 1e-10

    def test_outside(self):
        with pytest.raises(DomainError):
            phi_inverse(1.5)


class TestInverseCoefficients:

    def test_leading_and_signs(self):
        series = phi_complex_inverse_coeffs(40)
        assert abs(series.coeffs[0] - 4 / np.pi) <= 1e-10
        assert np.all(series.coeffs[1:] <= 1e-10)

    def test_absolute_sum(self):
        series = phi_complex_inverse_coeffs(60)
        assert 8 / np.pi - 1 - 1e-3 <= series.partial_abs_sum <= 8 / np.pi - 1 + 1e-12

    def test_partial_sum_at_forty(self):
        assert abs(phi_complex_inverse_coeffs(40).partial_abs_sum - 1.546027) <= 2e-5

    @pytest.mark.parametrize('K', [41, 45, 50, 55, 60])
    def test_signs_up_to_limit(self, K):
        series = phi_complex_inverse_coeffs(K)
        assert np.all(series.coeffs[1:] <= 0)
        assert np.array_equal(series.coeffs[:40], phi_complex_inverse_coeffs(40).coeffs)

    def test_partial_sums_increase(self):
        sums = [phi_complex_inverse_coeffs(K).partial_abs_sum for K in (10, 20, 40, 60)]
        assert sums[0] < sums[1] < sums[2] < sums[3]

    def test_tail_decreasing(self):
        tails = [phi_complex_inverse_coeffs(K).tail for K in (10, 20, 40)]
        assert tails[0] > tails[1] > tails[2] >= 0

    def test_inverts_inside_disk(self):
        series = phi_complex_inverse_coeffs(60)
        for w in (0.4, 0.7):
            value = sum(c * w ** (2 * k + 1) for k, c in enumerate(series.coeffs))
            assert abs(value - phi_inverse(w, FieldTag.COMPLEX)) <= 1e-9

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            phi_complex_inverse_coeffs(61)

    def test_real_coefficients(self):
        series = phi_real_inverse_coeffs(20)
        assert np.isclose(series.partial_abs_sum, np.sinh(np.pi / 2), atol=1e-12)
        value = sum(c * 0.3 ** (2 * k + 1) for k, c in enumerate(series.coeffs))
        assert np.isclose(value, np.sin(0.15 * np.pi))


class TestApplyPhi:

    def test_identity(self):
        assert np.allclose(apply_phi_entrywise(SymMatrix(np.eye(3))).entries, np.eye(3))

    def test_fixed_points(self):
        G = SymMatrix([[1.0, -1.0, 0.0], [-1.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
        assert np.allclose(apply_phi_entrywise(G, 3).entries, G.entries)

    @pytest.mark.parametrize('s', range(5))
    def test_psd_gap(self, s):
        G = random_correlation(6, s)
        image = apply_phi_entrywise(G)
        assert (image - G * (2 / np.pi)).smallest_eigenvalue() >= -1e-8

    @pytest.mark.parametrize('s', range(3))
    def test_complex_psd_gap(self, s):
        G = random_correlation(5, s, FieldTag.COMPLEX)
        gap = np.linalg.eigvalsh(apply_phi_entrywise(G).entries - np.pi / 4 * G.entries)[0]
        assert gap >= -1e-8

    def test_unequal_diagonal(self):
        with pytest.raises(DomainError):
            apply_phi_entrywise(SymMatrix(np.diag([1.0, 0.5])))

    def test_outside_disk(self):
        with pytest.raises(DomainError):
            apply_phi_entrywise(SymMatrix([[1.0, 2.0], [2.0, 1.0]]))


class TestIteration:

    @pytest.mark.parametrize('z,field', [(0.9, "real"), (-0.9, "real"), (0.6 + 0.6j, "complex")])
    def test_decay(self, z, field):
        assert abs(phi_iterate(z, 200, field)) < 0.05

    def test_fixed_points(self):
        assert phi_iterate(1.0, 50) == 1 and phi_iterate(0.0, 50) == 0


class TestConstants:

    def test_alpha_gw(self):
        assert abs(alpha_gw("real") - 0.878567) <= 1e-5
        assert abs(alpha_gw("complex") - 0.93494) <= 1e-4

    def test_alpha_dimension_doubling(self):
        assert alpha_d(2, FieldTag.REAL) == alpha_d(1, FieldTag.COMPLEX)

    @pytest.mark.parametrize('d,field,expected', [
        (1, "real", np.pi / 2),
        (1, "complex", 4 / np.pi),
        (2, "real", 4 / np.pi),
    ])
    def test_conic_limit(self, d, field, expected):
        assert abs(conic_lower_bound(d, np.inf, field) - expected) <= 1e-12
        assert np.isclose(conic_lower_bound(d, np.inf, field), 1 / b1_coefficient(d, field))

    @pytest.mark.parametrize('field', ["real", "complex"])
    def test_conic_finite(self, field):
        values = [conic_lower_bound(2, p, field) for p in (2, 3, 5, 10, 100, 10_000)]
        assert np.isclose(values[0], 1)
        assert np.all(np.diff(values) > 0)
        assert np.isclose(values[-1], conic_lower_bound(2, np.inf, field), rtol=1e-3)

    def test_conic_domain(self):
        with pytest.raises(DomainError):
            conic_lower_bound(3, 2)

    @pytest.mark.parametrize('d,field,expected', [(1, "real", 2 / np.pi), (1, "complex", np.pi / 4),
                                                  (2, "real", np.pi / 4)])
    def test_b1(self, d, field, expected):
        assert abs(b1_coefficient(d, field) - expected) <= 1e-12

    @pytest.mark.parametrize('field,limit', [("real", np.pi / 2), ("complex", 4 / np.pi)])
    def test_sharpness_bound(self, field, limit):
        values = [sharpness_bound_finite(n, field) for n in (1, 2, 5, 50, 1000)]
        assert np.isclose(values[0], 1)
        assert np.all(np.diff(values) > 0) and values[-1] < limit
        assert abs(values[-1] - limit) <= 1e-3

    def test_table(self):
        table = constants_table()
        assert round(table.K_gamma_bound_R, 5) == 2.30130
        assert round(table.K_gamma_bound_C, 5) == 1.54648
        assert round(table.K_gamma_bound_R_improved, 5) == 2.18705
        assert table.kh_bounds_R[0] < table.kh_bounds_R[1] < table.nesterov_R + 0.3
        assert np.isclose(table.sdd_constant("real"), 1 + (1 - 2 / np.pi) / table.alpha_gw_R)

    def test_as_dict(self):
        data = constants_table().as_dict()
        assert data["krivine_G12"] == float(f"{np.sqrt(2):.15g}")
        assert data["kh_bounds_C"] == [1.33807, 1.40491]

    @pytest.mark.parametrize('label,expected', [
        (ConeLabel.PSD, np.pi / 2),
        (ConeLabel.NONNEGATIVE, 1.0),
        (ConeLabel.ZERO_DIAGONAL, None),
    ])
    def test_conic_constant(self, label, expected):
        value = conic_constant(label, "real")
        assert value == expected if expected is None else np.isclose(value, expected)

    def test_laplacian_constant(self):
        assert np.isclose(conic_constant(ConeLabel.WEIGHTED_LAPLACIAN), 1 / alpha_gw())


class TestMoments:

    @pytest.mark.parametrize('n', range(1, 6))
    @pytest.mark.parametrize('field', ["real", "complex"])
    def test_second_moment(self, n, field):
        assert np.isclose(moments_closed_form(n, 2, field), 1 / (n + 1))

    def test_circle(self):
        assert np.isclose(moments_closed_form(1, 1, "real"), 2 / np.pi)

    @pytest.mark.parametrize('n', [1, 3, 6])
    def test_complex_first_moment(self, n):
        expected = special.gamma(1.5) * special.gamma(n + 1) / special.gamma(n + 1.5)
        assert np.isclose(moments_closed_form(n, 1, "complex"), expected)

    @pytest.mark.parametrize('n', range(1, 6))
    @pytest.mark.parametrize('field', ["real", "complex"])
    def test_total_mass(self, n, field):
        assert abs(density_total_mass(n, field) - 1) <= 1e-8

    def test_moment_from_density(self):
        value, _ = integrate.quad(lambda t: abs(t) ** 1.5 * density_f(t, 3), -1, 1)
        assert np.isclose(value, moments_closed_form(3, 1.5))

    def test_domain(self):
        with pytest.raises(DomainError):
            moments_closed_form(2, -1.0)
        with pytest.raises(DomainError):
            density_f(1.5, 2)
