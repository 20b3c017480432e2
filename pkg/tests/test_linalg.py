import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from bathdd.linalg import (
    cluster_indices,
    dagger,
    eig,
    expm,
    frobenius,
    is_hermitian,
    kron,
    norms,
    operator_norm,
    partial_trace,
    trace_norm,
    unvec,
    vec,
)

Z = np.diag([1.0, -1.0]).astype(complex)


def complex_matrices(n, elements=None):
    el = st.floats(-5, 5, allow_nan=False) if elements is None else elements
    re = arrays(np.float64, (n, n), elements=el)
    im = arrays(np.float64, (n, n), elements=el)
    return st.builds(lambda a, b: a + 1j * b, re, im)


def test_vec_convention():
    # vec(|i><j|) must be the (d*i+j)-th basis vector
    d = 3
    for i in range(d):
        for j in range(d):
            m = np.zeros((d, d), dtype=complex)
            m[i, j] = 1.0
            v = vec(m)
            expected = np.zeros(d * d)
            expected[d * i + j] = 1.0
            assert np.allclose(v, expected)


@given(complex_matrices(3))
def test_vec_unvec_roundtrip(m):
    assert np.array_equal(unvec(vec(m), 3), m)


def test_hermitian_check():
    assert is_hermitian(Z)
    assert not is_hermitian(np.array([[0, 1], [0, 0]], dtype=complex))


def test_norms_pauli_z():
    assert frobenius(Z) == pytest.approx(np.sqrt(2))
    assert trace_norm(Z) == pytest.approx(2.0)
    assert operator_norm(Z) == pytest.approx(1.0)


def test_norms_zero():
    z = np.zeros((3, 3))
    assert frobenius(z) == 0.0
    assert trace_norm(z) == 0.0
    assert operator_norm(z) == 0.0


def test_trace_norm_independent_svd():
    rng = np.random.default_rng(5)
    m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    # oracle: singular values via eigenvalues of M^dag M
    sv = np.sqrt(np.maximum(np.linalg.eigvalsh(dagger(m) @ m), 0))
    assert trace_norm(m) == pytest.approx(float(np.sum(sv)), abs=1e-10)
    got = norms(m)
    assert got["trace_norm"] == pytest.approx(float(np.sum(sv)), abs=1e-10)
    assert got["operator_norm"] == pytest.approx(float(np.max(sv)), abs=1e-10)
    assert got["frobenius"] == pytest.approx(float(np.linalg.norm(m)), abs=1e-10)


@settings(max_examples=30)
@given(complex_matrices(3))
def test_schatten_ordering(m):
    n = norms(m)
    assert n["operator_norm"] <= n["frobenius"] + 1e-9
    assert n["frobenius"] <= n["trace_norm"] + 1e-9


def test_kron_trivial():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    assert np.allclose(kron(Z, Z), np.diag([1, -1, -1, 1]))


def test_kron_product_action():
    rng = np.random.default_rng(0)
    a, b = rng.standard_normal((2, 2, 2))
    x, y = rng.standard_normal((2, 2))
    assert np.allclose(kron(a, b) @ np.kron(x, y), np.kron(a @ x, b @ y))


def test_expm_trivial():
    assert np.allclose(expm(np.zeros((3, 3))), np.eye(3))
    assert np.allclose(expm(np.diag([1j * np.pi, 0])), np.diag([-1, 1]), atol=1e-14)


def test_expm_conjugation_oracle():
    # exponential of the commutator superoperator = conjugation by the
    # exponentiated 2x2 unitary
    from bathdd.hamiltonian import adjoint_rep

    m = -1j * (np.pi / 2) * adjoint_rep(Z).matrix
    u = scipy.linalg.expm(-1j * (np.pi / 2) * Z)
    oracle = np.kron(u, u.conj())
    assert np.linalg.norm(expm(m) - oracle) <= 1e-12 * max(1, np.linalg.norm(oracle))


def test_expm_accuracy_large_norm():
    # relative accuracy 1e-12 up to operator norm 10, vs eigendecomposition
    rng = np.random.default_rng(3)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    h = (g + dagger(g)) / 2
    h = 10 * h / operator_norm(h)
    w, v = np.linalg.eigh(h)
    oracle = (v * np.exp(-1j * w)) @ dagger(v)
    got = expm(-1j * h)
    assert np.linalg.norm(got - oracle) <= 1e-12 * np.linalg.norm(oracle)


def test_partial_trace_product_state():
    rng = np.random.default_rng(1)
    r1 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    r2 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    assert np.allclose(partial_trace(np.kron(r1, r2), 2, 2, keep=1), r1 * np.trace(r2))
    assert np.allclose(partial_trace(np.kron(r1, r2), 2, 2, keep=2), r2 * np.trace(r1))


def test_partial_trace_maximally_entangled():
    omega = np.zeros((4, 1), dtype=complex)
    omega[0] = omega[3] = 1 / np.sqrt(2)
    rho = omega @ dagger(omega)
    assert np.allclose(partial_trace(rho, 2, 2, keep=1), np.eye(2) / 2)


def test_partial_trace_index_oracle():
    rng = np.random.default_rng(2)
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    oracle = np.zeros((2, 2), dtype=complex)
    for a in range(2):
        for b in range(2):
            for j in range(2):
                oracle[a, b] += m[2 * a + j, 2 * b + j]
    assert np.allclose(partial_trace(m, 2, 2, keep=1), oracle)


@settings(max_examples=20)
@given(complex_matrices(4), complex_matrices(4))
def test_partial_trace_linear(m1, m2):
    got = partial_trace(m1 + 2 * m2, 2, 2)
    assert np.allclose(got, partial_trace(m1, 2, 2) + 2 * partial_trace(m2, 2, 2))


def test_cluster_indices():
    vals = np.array([1.0, 1.0 + 1e-10, -1.0, 0.5])
    clusters = cluster_indices(vals, tol=1e-8)
    merged = sorted(tuple(c) for c in clusters)
    assert merged == [(0, 1), (2,), (3,)]


# --- eig ---------------------------------------------------------------------


def test_eig_diagonal():
    m = np.diag([1.0, -1.0, 0.0, 0.0]).astype(complex)
    es = eig(m)
    assert sorted(np.round(es.values.real, 10)) == [-1.0, 0.0, 0.0, 1.0]
    assert not es.defective


def test_eig_updown_superoperator():
    # superoperator of the spin-flip channel built via an independent
    # matrix-unit construction
    k1 = np.array([[0, 1], [0, 0]], dtype=complex)
    k2 = k1.T.copy()
    s = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            unit = np.zeros((2, 2), dtype=complex)
            unit[i, j] = 1.0
            out = k1 @ unit @ dagger(k1) + k2 @ unit @ dagger(k2)
            s[:, 2 * i + j] = out.reshape(-1)
    es = eig(s)
    assert np.allclose(sorted(np.round(es.values.real, 9)), [-1, 0, 0, 1])
    assert np.max(np.abs(es.values.imag)) < 1e-9


def test_eig_jordan_block_defective():
    es = eig(np.array([[0.0, 1.0], [0.0, 0.0]]))
    assert np.allclose(es.values, 0)
    assert es.defective


def test_eig_residuals_and_biorthogonality():
    rng = np.random.default_rng(7)
    m = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    es = eig(m)
    scale = np.linalg.norm(m)
    for i in range(6):
        r = es.right_vectors[:, i]
        l = es.left_vectors[:, i]
        assert np.linalg.norm(m @ r - es.values[i] * r) <= 1e-9 * scale
        assert np.linalg.norm(dagger(m) @ l - np.conj(es.values[i]) * l) <= 1e-9 * scale
    overlap = dagger(es.left_vectors) @ es.right_vectors
    assert np.linalg.norm(overlap - np.eye(6)) < 1e-8


@settings(max_examples=25)
@given(complex_matrices(3, st.floats(-3, 3, allow_nan=False)))
def test_eig_trace_and_det(m):
    es = eig(m)
    assert np.sum(es.values) == pytest.approx(np.trace(m), abs=1e-7 * max(1, np.linalg.norm(m)))
