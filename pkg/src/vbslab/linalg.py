"""Dense complex linear algebra for small multipartite systems.

Conventions
-----------
Tensor factors are ordered left to right, with the leftmost factor the most
significant in every Kronecker product. Subsystems are addressed by their
position in ``dims``.

Spectra are plain 1-D float arrays sorted in descending order. Entropies are
in bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-12
CLAMP_TOL = 1e-10


def _is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    scale = max(float(np.abs(m).max(initial=0.0)), 1.0)
    return bool(np.abs(m - m.conj().T).max(initial=0.0) <= tol * scale)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace matrix together with its subsystem dimensions."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        if int(np.prod(dims)) != m.shape[0]:
            raise ValueError(f"dims {dims} do not multiply to {m.shape[0]}")
        if not _is_hermitian(m):
            raise ValueError("density matrix is not Hermitian")
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL * max(1, m.shape[0]):
            raise ValueError(f"density matrix has trace {tr}, expected 1")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_pure(cls, psi: np.ndarray, dims: Sequence[int]) -> "DensityMatrix":
        psi = np.asarray(psi, dtype=complex).ravel()
        return cls(np.outer(psi, psi.conj()), tuple(dims))

    def is_psd(self, tol: float = CLAMP_TOL) -> bool:
        return bool(hermitian_spectrum(self.matrix)[-1] >= -tol)


def kron(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of any number of operators, leftmost most significant."""
    out = np.ones((1, 1), dtype=complex)
    for op in ops:
        out = np.kron(out, np.atleast_2d(op))
    return out


def _check_indices(idx: Iterable[int], n: int) -> list[int]:
    idx = [int(i) for i in idx]
    for i in idx:
        if not 0 <= i < n:
            raise IndexError(f"subsystem index {i} out of range for {n} factors")
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated subsystem index in {idx}")
    return idx


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every factor not listed in ``keep``.

    Kept factors come back in their original left-to-right order regardless
    of the order given in ``keep``.
    """
    n = len(rho.dims)
    keep = sorted(_check_indices(keep, n))
    drop = [i for i in range(n) if i not in keep]
    t = rho.matrix.reshape(rho.dims + rho.dims)
    # pair each dropped ket axis with its bra axis
    ket = list(range(n))
    bra = list(range(n, 2 * n))
    for i in drop:
        bra[i] = ket[i]
    out_axes = [ket[i] for i in keep] + [bra[i] for i in keep]
    reduced = np.einsum(t, ket + bra, out_axes)
    kd = tuple(rho.dims[i] for i in keep)
    d = int(np.prod(kd)) if kd else 1
    return DensityMatrix(reduced.reshape(d, d), kd or (1,))


def partial_transpose(rho: DensityMatrix, subsystem: int) -> np.ndarray:
    """Transpose a single tensor factor of ``rho``; returns a plain matrix."""
    n = len(rho.dims)
    (k,) = _check_indices([subsystem], n)
    t = rho.matrix.reshape(rho.dims + rho.dims)
    axes = list(range(2 * n))
    axes[k], axes[n + k] = axes[n + k], axes[k]
    return np.transpose(t, axes).reshape(rho.dim, rho.dim)


def hermitian_spectrum(m) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending."""
    if isinstance(m, DensityMatrix):
        m = m.matrix
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    if not _is_hermitian(m):
        raise ValueError("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(m)[::-1].copy()


def von_neumann_entropy(spectrum: Sequence[float]) -> float:
    """-sum(l * log2(l)) with 0 log 0 = 0.

    Eigenvalues in [-1e-10, 0) are round-off and treated as zero; anything
    more negative means the input was not a density matrix.
    """
    lam = np.asarray(spectrum, dtype=float)
    if abs(lam.sum() - 1.0) > CLAMP_TOL:
        raise ValueError(f"spectrum sums to {lam.sum()}, expected 1")
    if lam.size and lam.min() < -CLAMP_TOL:
        raise ValueError(f"spectrum has negative eigenvalue {lam.min()}")
    lam = lam[lam > 0]
    return float(-np.sum(lam * np.log2(lam)))


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2)."""
    m = rho.matrix
    # Tr(rho rho) = sum |rho_ij|^2 for Hermitian rho
    return float(np.sum(np.abs(m) ** 2))


def entropy(rho: DensityMatrix) -> float:
    return von_neumann_entropy(hermitian_spectrum(rho.matrix))
