import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wbroadcast import tensor
from wbroadcast.tensor import (
    SIGMA_X,
    SIGMA_Y,
    det_small,
    hermitian_eig,
    kron,
    partial_trace,
    partial_transpose,
    sqrt_psd,
)

BELL = np.zeros((4, 4), dtype=complex)
BELL[np.ix_([0, 3], [0, 3])] = 0.5


def random_density(rng, n_qubits=2):
    d = 2**n_qubits
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


def random_hermitian(rng, d):
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return a + a.conj().T


seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestKron:
    def test_identity(self):
        assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_sigma_y_pair(self):
        expected = np.zeros((4, 4))
        expected[0, 3], expected[1, 2], expected[2, 1], expected[3, 0] = -1, 1, 1, -1
        assert np.array_equal(kron(SIGMA_Y, SIGMA_Y), expected)

    def test_projectors(self):
        assert np.array_equal(kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))

    def test_index_rule(self):
        a = np.arange(4).reshape(2, 2)
        b = np.arange(9).reshape(3, 3) + 10
        k = kron(a, b)
        for i, j, p, q in np.ndindex(2, 2, 3, 3):
            assert k[i * 3 + p, j * 3 + q] == a[i, j] * b[p, q]

    @given(seeds)
    def test_associative_on_integers(self, seed):
        rng = np.random.default_rng(seed)
        a, b, c = (rng.integers(-5, 6, size=(2, 2)) for _ in range(3))
        assert np.array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))


class TestPartialTrace:
    def test_bell_marginals(self):
        for keep in ("A", "B"):
            assert np.allclose(partial_trace(BELL, "AB", [keep]), np.eye(2) / 2, atol=1e-15)

    def test_product_marginal(self):
        rng = np.random.default_rng(0)
        ra, rb = random_density(rng, 1), random_density(rng, 2)
        rho = kron(ra, rb)
        assert np.allclose(partial_trace(rho, ["A", "B1", "B2"], ["A"]), ra, atol=1e-14)
        assert np.allclose(partial_trace(rho, ["A", "B1", "B2"], ["B1", "B2"]), rb, atol=1e-14)

    def test_keeps_register_order(self):
        rng = np.random.default_rng(1)
        ra, rb = random_density(rng, 1), random_density(rng, 1)
        rho = kron(kron(ra, np.eye(2) / 2), rb)
        out = partial_trace(rho, ["x", "y", "z"], ["z", "x"])
        assert np.allclose(out, kron(ra, rb), atol=1e-14)

    @given(seeds)
    @settings(max_examples=30)
    def test_composes(self, seed):
        rng = np.random.default_rng(seed)
        labels = ["1", "4", "2", "5"]
        rho = random_density(rng, 4)
        step = partial_trace(rho, labels, ["1", "2", "5"])
        twice = partial_trace(step, ["1", "2", "5"], ["1", "5"])
        once = partial_trace(rho, labels, ["1", "5"])
        assert np.max(np.abs(twice - once)) < 1e-12

    @given(seeds)
    @settings(max_examples=30)
    def test_preserves_trace(self, seed):
        rng = np.random.default_rng(seed)
        rho = random_density(rng, 3)
        assert abs(np.trace(partial_trace(rho, "abc", "b")) - 1) < 1e-12

    def test_errors(self):
        with pytest.raises(tensor.DimensionError):
            partial_trace(np.eye(4) / 4, "abc", "a")
        with pytest.raises(KeyError):
            partial_trace(np.eye(4) / 4, "ab", "z")
        with pytest.raises(ValueError):
            partial_trace(np.eye(4) / 4, "ab", [])


class TestPartialTranspose:
    def test_product(self):
        rng = np.random.default_rng(2)
        ra, rb = random_density(rng, 1), random_density(rng, 1)
        assert np.allclose(partial_transpose(kron(ra, rb), "AB", "B"), kron(ra, rb.T), atol=1e-15)

    def test_bell_spectrum(self):
        w = np.linalg.eigvalsh(partial_transpose(BELL, "AB", "B"))
        assert np.allclose(w, [-0.5, 0.5, 0.5, 0.5], atol=1e-15)

    @given(seeds)
    @settings(max_examples=30)
    def test_involution_trace_hermiticity(self, seed):
        rng = np.random.default_rng(seed)
        rho = random_density(rng, 3)
        pt = partial_transpose(rho, "abc", "b")
        assert np.array_equal(partial_transpose(pt, "abc", "b"), rho)
        assert np.trace(pt) == np.trace(rho)
        assert tensor.hermiticity_error(pt) == tensor.hermiticity_error(rho)

    def test_unknown_label(self):
        with pytest.raises(KeyError):
            partial_transpose(BELL, "AB", "C")


class TestHermitianEig:
    def test_diagonal(self):
        w, _ = hermitian_eig(np.diag([3.0, 1.0, 2.0]))
        assert np.allclose(w, [1, 2, 3], atol=1e-15)

    def test_pauli_x(self):
        w, _ = hermitian_eig(SIGMA_X)
        assert np.allclose(w, [-1, 1], atol=1e-15)

    @pytest.mark.parametrize("d", [2, 3, 4, 8, 16])
    def test_decomposition(self, d):
        rng = np.random.default_rng(d)
        for _ in range(10):
            h = random_hermitian(rng, d) / d
            w, v = hermitian_eig(h)
            assert np.all(np.diff(w) >= 0)
            assert np.max(np.abs(h @ v - v * w)) < 1e-10
            assert np.max(np.abs(v.conj().T @ v - np.eye(d))) < 1e-10
            assert np.max(np.abs((v * w) @ v.conj().T - h)) < 1e-10
            # independent LAPACK route
            assert np.max(np.abs(w - np.linalg.eigvalsh(h))) < 1e-10

    @given(seeds, st.sampled_from([3, 4]))
    @settings(max_examples=40)
    def test_sum_and_product(self, seed, d):
        rng = np.random.default_rng(seed)
        h = random_hermitian(rng, d) / d
        w, _ = hermitian_eig(h)
        assert abs(w.sum() - np.trace(h).real) < 1e-10
        assert abs(np.prod(w) - det_small(h).real) < 1e-8

    def test_rejects_non_hermitian(self):
        with pytest.raises(tensor.NotHermitianError):
            hermitian_eig(np.array([[1.0, 1.0], [0.0, 1.0]]))

    def test_degenerate(self):
        w, v = hermitian_eig(np.eye(4) / 4)
        assert np.allclose(w, 0.25, atol=1e-15)
        assert np.allclose(v.conj().T @ v, np.eye(4), atol=1e-15)


class TestSqrtPSD:
    def test_identity(self):
        assert np.allclose(sqrt_psd(np.eye(3)), np.eye(3), atol=1e-15)

    def test_projector(self):
        v = np.array([1, 1j, 0]) / np.sqrt(2)
        p = np.outer(v, v.conj())
        assert np.allclose(sqrt_psd(p), p, atol=1e-12)

    def test_diagonal(self):
        assert np.allclose(sqrt_psd(np.diag([4.0, 1.0])), np.diag([2.0, 1.0]), atol=1e-15)

    @given(seeds)
    @settings(max_examples=30)
    def test_squares_back(self, seed):
        rng = np.random.default_rng(seed)
        rho = random_density(rng, 2)
        s = sqrt_psd(rho)
        assert tensor.hermiticity_error(s) < 1e-12
        assert np.linalg.eigvalsh(s).min() > -1e-12
        assert np.max(np.abs(s @ s - rho)) < 1e-10

    def test_clamps_dust_rejects_negative(self):
        assert np.allclose(sqrt_psd(np.diag([1.0, -5e-13])), np.diag([1.0, 0.0]))
        with pytest.raises(tensor.NotPSDError):
            sqrt_psd(np.diag([1.0, -1e-6]))


class TestDetSmall:
    def test_identity(self):
        assert det_small(np.eye(3)) == 1

    def test_diagonal(self):
        assert det_small(np.diag([2.0, 3.0, 5.0, 7.0])) == 210

    def test_repeated_row(self):
        m = np.array([[2, 7, 1, 8], [2, 8, 1, 8], [2, 7, 1, 8], [4, 5, 9, 0]])
        assert det_small(m) == 0
        assert det_small(np.array([[1, 2, 3], [1, 2, 3], [4, 5, 6]])) == 0

    @given(seeds, st.sampled_from([3, 4]))
    def test_matches_lu(self, seed, d):
        rng = np.random.default_rng(seed)
        m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        assert abs(det_small(m) - np.linalg.det(m)) < 1e-10

    @pytest.mark.parametrize("d", [1, 2, 5])
    def test_unsupported(self, d):
        with pytest.raises(tensor.DimensionError):
            det_small(np.eye(d))
