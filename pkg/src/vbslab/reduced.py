"""Reduced density matrices of the VBS ground state.

Closed forms come first; ``brute_force_reduce`` is the independent oracle
that traces the full ground state down by index summation.

Pair reductions order their factors (left site, right site); the
boundary-bulk pair is (spin-1/2, spin-1).
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .linalg import DensityMatrix
from .state import StateVector, singlet, spin_half_operators, spin_one_operators, string_operators

DEFAULT_L_MAX = 6
DEFAULT_KEEP_CAP = 3 ** 6


def decay(n: int) -> float:
    """(-1/3)^n, the factor that sets every correlation length in the chain."""
    if n < 0:
        raise ValueError(f"decay exponent must be non-negative, got {n}")
    return (-1.0 / 3.0) ** n


def rho_one_site() -> DensityMatrix:
    return DensityMatrix(np.eye(3) / 3, (3,))


def rho_single_boundary() -> DensityMatrix:
    return DensityMatrix(np.eye(2) / 2, (2,))


def rho_end_pair(length: int) -> DensityMatrix:
    """The two end spin-1/2's of a chain with ``length`` bulk sites.

    (1 - p)/4 * I + p |Psi-><Psi-| with p = (-1/3)^length.
    """
    if length < 1:
        raise ValueError(f"need length >= 1, got {length}")
    p = decay(length)
    s = singlet()
    return DensityMatrix((1 - p) / 4 * np.eye(4) + p * np.outer(s, s.conj()), (2, 2))


def rho_block_closed(length: int, cap: int = DEFAULT_L_MAX) -> DensityMatrix:
    """Contiguous block of ``length`` bulk spins, from the Pauli-string dyad sum.

    Entry (a, a') is Tr(V_{a'}^dag V_a) / (2 * 3^L), where V_a is the string
    product for the block configuration a. The boundary pair contributes
    <Phi+|(I x V_{a'}^dag V_a)|Phi+> = Tr(V_{a'}^dag V_a) / 2.
    """
    if not 1 <= length <= cap:
        raise ValueError(f"block length {length} outside 1..{cap}")
    v = string_operators(length).reshape(3 ** length, 4)
    # sum_ij V_a[ij] conj(V_a'[ij]) = Tr(V_a'^dag V_a)
    m = v @ v.conj().T / (2 * 3 ** length)
    return DensityMatrix(m, (3,) * length)


def nearest_neighbor_pair() -> np.ndarray:
    """The 9x9 two-site density of adjacent bulk spins, dyad by dyad."""
    e = np.eye(3)
    m = np.zeros((9, 9), dtype=complex)
    for a in range(3):
        for b in range(3):
            m += np.kron(np.outer(e[a], e[b]), np.outer(e[a], e[b]))
            if a != b:
                m += np.kron(np.outer(e[a], e[a]), np.outer(e[b], e[b]))
                m -= np.kron(np.outer(e[a], e[b]), np.outer(e[b], e[a]))
    return m / 9


def rho_two_bulk(gap: int) -> DensityMatrix:
    """Two bulk spins with ``gap`` sites between them (gap=0: neighbours)."""
    p = decay(gap)
    return DensityMatrix((1 - p) / 9 * np.eye(9) + p * nearest_neighbor_pair(), (3, 3))


def _boundary_bracket() -> np.ndarray:
    # dyads written as (spin-1) x (qubit), qubit basis |0> = up, |1> = down
    e3 = np.eye(3)
    e2 = np.eye(2)

    def d3(a, b):
        return np.outer(e3[a - 1], e3[b - 1])

    def d2(a, b):
        return np.outer(e2[a], e2[b])

    return (
        np.kron(d3(1, 2), 1j * (d2(0, 0) - d2(1, 1)))
        + np.kron(d3(2, 1), 1j * (d2(1, 1) - d2(0, 0)))
        + np.kron(d3(1, 3), d2(1, 0) - d2(0, 1))
        + np.kron(d3(3, 1), d2(0, 1) - d2(1, 0))
        + np.kron(d3(2, 3), 1j * (d2(0, 1) + d2(1, 0)))
        + np.kron(d3(3, 2), -1j * (d2(0, 1) + d2(1, 0)))
    )


def rho_boundary_bulk(gap: int) -> DensityMatrix:
    """End spin 0bar together with bulk site gap+1, ordered (qubit, spin-1)."""
    p = decay(gap)
    m = np.eye(6) / 6 + p / 6 * _boundary_bracket()
    # (spin-1, qubit) -> (qubit, spin-1)
    m = m.reshape(3, 2, 3, 2).transpose(1, 0, 3, 2).reshape(6, 6)
    return DensityMatrix(m, (2, 3))


def rho_boundary_bulk_spin_form(gap: int) -> DensityMatrix:
    """Same state as ``rho_boundary_bulk`` written as I/6 - (p/3) s.S."""
    p = decay(gap)
    dot = sum(np.kron(a, b) for a, b in zip(spin_half_operators(), spin_one_operators()))
    return DensityMatrix(np.eye(6) / 6 - p / 3 * dot, (2, 3))


def brute_force_reduce(
    state: StateVector, keep: Iterable[int], cap: int = DEFAULT_KEEP_CAP
) -> DensityMatrix:
    """Trace |state><state| down to the sites in ``keep``.

    Sites are factor positions: 0 is the left end spin, 1..N the bulk, N+1 the
    right end. Works on the amplitude tensor, so the full density matrix is
    never formed.
    """
    dims = state.dims
    keep = sorted(int(k) for k in keep)
    if len(set(keep)) != len(keep):
        raise ValueError(f"repeated site in {keep}")
    for k in keep:
        if not 0 <= k < len(dims):
            raise IndexError(f"site {k} out of range for {len(dims)} sites")
    kd = tuple(dims[k] for k in keep)
    d_keep = int(np.prod(kd))
    if d_keep > cap:
        raise ValueError(f"kept dimension {d_keep} exceeds cap {cap}")
    rest = [i for i in range(len(dims)) if i not in keep]
    t = np.transpose(state.tensor(), keep + rest).reshape(d_keep, -1)
    return DensityMatrix(t @ t.conj().T, kd)
