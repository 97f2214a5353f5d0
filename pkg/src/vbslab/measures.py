"""Entanglement measures: closed-form entropies, concurrence, PPT, correlators."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .linalg import CLAMP_TOL, DensityMatrix, hermitian_spectrum, partial_transpose, purity, von_neumann_entropy
from .reduced import decay
from .state import StateVector, spin_one_operators


def _entropy_of_levels(levels: list[tuple[float, int]]) -> float:
    spectrum = [value for value, mult in levels for _ in range(mult)]
    return von_neumann_entropy(spectrum)


def end_pair_spectrum(length: int) -> list[tuple[float, int]]:
    p = decay(length)
    return [((1 - p) / 4, 3), ((1 + 3 * p) / 4, 1)]


def two_bulk_spectrum(gap: int) -> list[tuple[float, int]]:
    p = decay(gap)
    return [((1 - p) / 9, 5), ((1 + p) / 9, 3), ((1 + 2 * p) / 9, 1)]


def boundary_bulk_spectrum(gap: int) -> list[tuple[float, int]]:
    p = decay(gap)
    return [((1 - p) / 6, 4), ((1 + 2 * p) / 6, 2)]


def entropy_block(length: int) -> float:
    """Entropy in bits of a block of ``length`` bulk spins.

    Equal to the entropy of the two end spins of a chain of that length, so
    it is evaluated from their four-level spectrum.
    """
    if length < 1:
        raise ValueError(f"need length >= 1, got {length}")
    return _entropy_of_levels(end_pair_spectrum(length))


def _xlog2x(x: float) -> float:
    return 0.0 if x == 0 else x * np.log2(x)


def entropy_block_printed(length: int) -> float:
    """The block-entropy expression with a ``+`` on the (1-p) term.

    Kept only to document the sign misprint: it gives 2 + log2(4/3) at
    length 1 instead of log2(3). Do not use for physics.
    """
    p = decay(length)
    return 2 + 3 / 4 * _xlog2x(1 - p) - 1 / 4 * _xlog2x(1 + 3 * p)


def entropy_block_expanded(length: int) -> float:
    """Block entropy with the sign of the (1-p) term corrected."""
    p = decay(length)
    return 2 - 3 / 4 * _xlog2x(1 - p) - 1 / 4 * _xlog2x(1 + 3 * p)


def entropy_two_bulk(gap: int) -> float:
    return _entropy_of_levels(two_bulk_spectrum(gap))


def entropy_two_bulk_printed(gap: int) -> float:
    p = decay(gap)
    return (
        2 * np.log2(3)
        - 5 / 9 * _xlog2x(1 - p)
        - 3 / 9 * _xlog2x(1 + p)
        - 1 / 9 * _xlog2x(1 + 2 * p)
    )


def entropy_boundary_bulk(gap: int) -> float:
    return _entropy_of_levels(boundary_bulk_spectrum(gap))


def entropy_boundary_bulk_printed(gap: int) -> float:
    p = decay(gap)
    return np.log2(6) - 2 / 3 * _xlog2x(1 - p) - 1 / 3 * _xlog2x(1 + 2 * p)


def concurrence(rho: DensityMatrix) -> float:
    """Generalized concurrence of a pure state from one of its reductions.

    Uses the linear-entropy normalization d/(d-1) * (1 - Tr rho^2), which is
    0 for a pure reduction and 1 for a maximally mixed one.
    """
    d = rho.dim
    if d == 1:
        return 0.0
    return d / (d - 1) * (1 - purity(rho))


class Verdict(str, enum.Enum):
    NPT_ENTANGLED = "NPT-entangled"
    PPT = "PPT"


@dataclass(frozen=True)
class SeparabilityVerdict:
    verdict: Verdict
    min_pt_eigenvalue: float
    conclusive: bool

    @property
    def entangled(self) -> bool:
        return self.verdict is Verdict.NPT_ENTANGLED

    def __str__(self) -> str:
        if self.verdict is Verdict.PPT and not self.conclusive:
            return "PPT (inconclusive at this dimension)"
        return self.verdict.value


def ppt_test(rho: DensityMatrix, subsystem: int = 1, tol: float = CLAMP_TOL) -> SeparabilityVerdict:
    """Peres-Horodecki test on a bipartite density matrix.

    A PPT result implies separability only for 2x2 and 2x3 systems;
    ``conclusive`` records whether that applies.
    """
    if len(rho.dims) != 2:
        raise ValueError(f"PPT test needs a bipartite state, got dims {rho.dims}")
    lam_min = float(hermitian_spectrum(partial_transpose(rho, subsystem))[-1])
    verdict = Verdict.NPT_ENTANGLED if lam_min < -tol else Verdict.PPT
    conclusive = verdict is Verdict.NPT_ENTANGLED or sorted(rho.dims) in ([2, 2], [2, 3])
    return SeparabilityVerdict(verdict, lam_min, conclusive)


def _apply_site(t: np.ndarray, op: np.ndarray, axis: int) -> np.ndarray:
    return np.moveaxis(np.tensordot(op, t, axes=([1], [axis])), 0, axis)


def spin_correlator(state: StateVector, i: int, j: int) -> float:
    """<S_i . S_j> for two distinct bulk sites (1..N) of ``state``."""
    n = state.n_bulk
    for site in (i, j):
        if not 1 <= site <= n:
            raise IndexError(f"site {site} is not a bulk site of a chain with N={n}")
    if i == j:
        raise ValueError("sites must differ")
    t = state.tensor()
    total = 0.0
    for s in spin_one_operators():
        total += np.vdot(t, _apply_site(_apply_site(t, s, j), s, i)).real
    return float(total)


def spin_dot_spin() -> np.ndarray:
    return sum(np.kron(s, s) for s in spin_one_operators())


def correlator_from_pair(rho: DensityMatrix) -> float:
    """Tr(rho S.S) for a two-spin-1 density matrix."""
    return float(np.trace(rho.matrix @ spin_dot_spin()).real)


def correlator_from_sectors(gap: int) -> float:
    """<S.S> from the total-spin sector weights of the two-spin density.

    S.S = J(J+1)/2 - 2 takes the values -2, -1, 1 on J = 0, 1, 2. The weights
    of the three sectors are (1+2p)/9, 3(1+p)/9 and 5(1-p)/9.
    """
    p = decay(gap)
    return -2 * (1 + 2 * p) / 9 - 1 * 3 * (1 + p) / 9 + 1 * 5 * (1 - p) / 9


def correlator_closed(distance: int) -> float:
    """4 (-1/3)^distance for bulk spins ``distance`` sites apart."""
    if distance < 1:
        raise ValueError(f"distance must be >= 1, got {distance}")
    return 4 * decay(distance)
