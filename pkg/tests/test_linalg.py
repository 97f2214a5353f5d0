import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from vbslab.linalg import (
    DensityMatrix,
    hermitian_spectrum,
    kron,
    partial_trace,
    partial_transpose,
    purity,
    von_neumann_entropy,
)
from vbslab.reduced import rho_end_pair, rho_two_bulk
from vbslab.state import pauli, phi_plus, singlet

from conftest import random_density, random_unitary

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def proj(v):
    return DensityMatrix.from_pure(v, (2, 2))


def test_kron_identity():
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_real_unitary_keeps_phi_plus():
    x = pauli(1)
    np.testing.assert_allclose(kron(x, x) @ phi_plus(), phi_plus(), atol=1e-15)


def test_kron_sigma_z_on_singlet():
    expected = np.array([0, 1, 1, 0]) / np.sqrt(2)
    np.testing.assert_allclose(kron(pauli(3), np.eye(2)) @ singlet(), expected, atol=1e-15)


def test_kron_mixed_product(rng):
    a, b, c, d = (rng.normal(size=(2, 3)), rng.normal(size=(3, 3)),
                  rng.normal(size=(3, 2)), rng.normal(size=(3, 4)))
    np.testing.assert_allclose(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-12)


def test_partial_trace_singlet():
    red = partial_trace(proj(singlet()), [0])
    np.testing.assert_allclose(red.matrix, np.eye(2) / 2, atol=1e-15)


def test_partial_trace_product(rng):
    r = random_density(rng, 3)
    s = random_density(rng, 2)
    red = partial_trace(DensityMatrix(np.kron(r, s), (3, 2)), [0])
    np.testing.assert_allclose(red.matrix, r, atol=1e-14)
    red = partial_trace(DensityMatrix(np.kron(r, s), (3, 2)), [1])
    np.testing.assert_allclose(red.matrix, s, atol=1e-14)


def test_partial_trace_bad_index():
    with pytest.raises(IndexError):
        partial_trace(proj(singlet()), [2])


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_partial_trace_composes(seed):
    rng = np.random.default_rng(seed)
    rho = DensityMatrix(random_density(rng, 12), (2, 3, 2))
    one_step = partial_trace(rho, [1])
    two_step = partial_trace(partial_trace(rho, [0, 1]), [1])
    np.testing.assert_allclose(one_step.matrix, two_step.matrix, atol=1e-13)
    # other order
    two_step = partial_trace(partial_trace(rho, [1, 2]), [0])
    np.testing.assert_allclose(one_step.matrix, two_step.matrix, atol=1e-13)
    assert abs(np.trace(one_step.matrix) - 1) < 1e-12
    assert one_step.is_psd()


def test_partial_trace_matches_loop(rng):
    # explicit index summation as an independent check
    rho = random_density(rng, 12)
    dims = (2, 3, 2)
    t = rho.reshape(dims + dims)
    expected = np.zeros((4, 4), dtype=complex)
    for a in range(2):
        for c in range(2):
            for a2 in range(2):
                for c2 in range(2):
                    expected[2 * a + c, 2 * a2 + c2] = sum(t[a, b, c, a2, b, c2] for b in range(3))
    got = partial_trace(DensityMatrix(rho, dims), [2, 0])
    np.testing.assert_allclose(got.matrix, expected, atol=1e-14)


def test_partial_transpose_identity():
    rho = DensityMatrix(np.eye(4) / 4, (2, 2))
    for k in (0, 1):
        np.testing.assert_array_equal(partial_transpose(rho, k), np.eye(4) / 4)


def test_partial_transpose_singlet_min_eigenvalue():
    pt = partial_transpose(proj(singlet()), 1)
    # characteristic polynomial roots as the independent eigen-route
    roots = np.sort(np.roots(np.poly(pt)).real)
    assert roots[0] == pytest.approx(-0.5, abs=1e-12)
    assert hermitian_spectrum(pt)[-1] == pytest.approx(-0.5, abs=1e-12)


def test_partial_transpose_out_of_range():
    with pytest.raises(IndexError):
        partial_transpose(proj(singlet()), 2)


def test_partial_transpose_hermitian_unit_trace(rng):
    rho = DensityMatrix(random_density(rng, 6), (2, 3))
    for k in (0, 1):
        pt = partial_transpose(rho, k)
        np.testing.assert_allclose(pt, pt.conj().T, atol=1e-15)
        assert np.trace(pt) == pytest.approx(1)


def test_spectrum_maximally_mixed():
    np.testing.assert_allclose(hermitian_spectrum(np.eye(3) / 3), [1 / 3] * 3, atol=1e-15)


def test_spectrum_end_pair_one():
    np.testing.assert_allclose(hermitian_spectrum(rho_end_pair(1).matrix), [1 / 3, 1 / 3, 1 / 3, 0], atol=1e-15)


def test_spectrum_two_bulk_gap_one():
    expected = [4 / 27] * 5 + [2 / 27] * 3 + [1 / 27]
    np.testing.assert_allclose(hermitian_spectrum(rho_two_bulk(1).matrix), expected, atol=1e-14)


def test_spectrum_descending_and_charpoly(rng):
    for d in (2, 3, 4):
        m = random_density(rng, d)
        spec = hermitian_spectrum(m)
        assert np.all(np.diff(spec) <= 0)
        roots = np.sort(np.roots(np.poly(m)).real)[::-1]
        np.testing.assert_allclose(spec, roots, atol=1e-10)


def test_spectrum_reconstruction(rng):
    m = random_density(rng, 27)
    w, v = np.linalg.eigh(m)
    spec = hermitian_spectrum(m)
    np.testing.assert_allclose(np.sort(spec), w, atol=1e-12)
    np.testing.assert_allclose((v * w) @ v.conj().T, m, atol=1e-12)


def test_spectrum_rejects_non_hermitian():
    with pytest.raises(ValueError):
        hermitian_spectrum(np.array([[0, 1], [0, 0]]))


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([2, 3, 6, 9]))
def test_spectrum_unitary_invariance(seed, d):
    rng = np.random.default_rng(seed)
    m = random_density(rng, d)
    u = random_unitary(rng, d)
    np.testing.assert_allclose(hermitian_spectrum(u @ m @ u.conj().T), hermitian_spectrum(m), atol=1e-9)


def test_entropy_values():
    assert von_neumann_entropy([1 / 3] * 3) == pytest.approx(1.58496, abs=1e-5)
    assert von_neumann_entropy([1.0]) == 0
    assert von_neumann_entropy([2 / 9] * 3 + [1 / 3]) == pytest.approx(1.97494, abs=1e-5)


def test_entropy_clamps_roundoff():
    assert von_neumann_entropy([0.5, 0.5, -1e-12]) == pytest.approx(1.0)


def test_entropy_rejects_bad_spectra():
    with pytest.raises(ValueError):
        von_neumann_entropy([0.5, 0.4])
    with pytest.raises(ValueError):
        von_neumann_entropy([0.6, 0.5, -0.1])


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([(2, 3), (3, 3), (2, 9), (4, 3)]))
def test_entropy_pure_state_symmetric(seed, dims):
    rng = np.random.default_rng(seed)
    d = dims[0] * dims[1]
    psi = rng.normal(size=d) + 1j * rng.normal(size=d)
    rho = DensityMatrix.from_pure(psi / np.linalg.norm(psi), dims)
    sa = von_neumann_entropy(hermitian_spectrum(partial_trace(rho, [0]).matrix))
    sb = von_neumann_entropy(hermitian_spectrum(partial_trace(rho, [1]).matrix))
    assert sa == pytest.approx(sb, abs=1e-9)


def test_purity():
    assert purity(DensityMatrix(np.eye(4) / 4, (2, 2))) == pytest.approx(0.25)
    for L in range(1, 6):
        assert purity(rho_end_pair(L)) == pytest.approx((1 + 3 * 9.0 ** -L) / 4, abs=1e-14)
    for m in range(0, 6):
        assert purity(rho_two_bulk(m)) == pytest.approx((3 + 4 * 9.0 ** -m) / 27, abs=1e-14)


def test_density_matrix_validation():
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(2), (2,))
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(4) / 4, (2, 3))
    with pytest.raises(ValueError):
        DensityMatrix(np.array([[0.5, 1], [0, 0.5]]), (2,))
