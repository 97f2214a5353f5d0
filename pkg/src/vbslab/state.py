"""AKLT chain: Hamiltonian and the valence-bond-solid ground state.

The chain has a spin-1/2 at each end (sites ``0bar`` and ``N+1``) and N
spin-1's in the bulk, so the full Hilbert space is 2 x 3^N x 2.

Every bulk spin-1 is written in the "alpha basis" ``{|1>, |2>, |3>}``: the
images of the triplet states

    |a> = (-1)^(1+a) (I x conj(sigma_a)) |Psi->

under the symmetric projector. In this basis the spin-1 operators are
``(S^a)_{bc} = -i eps_{abc}``. The ground state can be built two ways:

* ``ground_state_projection``: lay N+1 singlets on 2N+2 qubits and project
  every bulk qubit pair onto its symmetric subspace.
* ``ground_state_pauli``: sum the 3^N Pauli strings
  ``|a_1>...|a_N> (I x sigma_{a_N}...sigma_{a_1}) |Psi->`` directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .linalg import kron

DEFAULT_N_MAX = 8
HARD_N_MAX = 10

_SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_EPS = np.zeros((3, 3, 3))
for _a, _b, _c in itertools.permutations(range(3)):
    _EPS[_a, _b, _c] = np.linalg.det(np.eye(3)[[_a, _b, _c]])


def site_dims(n: int) -> tuple[int, ...]:
    """Factor dimensions ``(2, 3, ..., 3, 2)`` for a chain with n bulk sites."""
    if n < 1:
        raise ValueError(f"need at least one bulk site, got {n}")
    return (2,) + (3,) * n + (2,)


@dataclass(frozen=True)
class StateVector:
    """Normalized pure state with its factor dimensions."""

    amplitudes: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).ravel()
        dims = tuple(int(d) for d in self.dims)
        if amp.size != int(np.prod(dims)):
            raise ValueError(f"{amp.size} amplitudes do not fit dims {dims}")
        if abs(np.linalg.norm(amp) - 1.0) > 1e-12:
            raise ValueError(f"state has norm {np.linalg.norm(amp)}")
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)
        object.__setattr__(self, "dims", dims)

    @property
    def n_bulk(self) -> int:
        return len(self.dims) - 2

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape(self.dims)


def _check_n(n: int, cap: int) -> None:
    if cap > HARD_N_MAX:
        raise ValueError(f"cap {cap} exceeds the hard limit {HARD_N_MAX}")
    if not 1 <= n <= cap:
        raise ValueError(f"n={n} outside 1..{cap}")


def pauli(alpha: int) -> np.ndarray:
    """sigma_0 = I, then sigma_x, sigma_y, sigma_z in the (up, down) basis."""
    if alpha not in (0, 1, 2, 3):
        raise IndexError(f"Pauli index must be 0..3, got {alpha}")
    return _SIGMA[alpha].copy()


def singlet() -> np.ndarray:
    return np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


def phi_plus() -> np.ndarray:
    return np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


def alpha_state(alpha: int) -> np.ndarray:
    """Two-qubit state ``(-1)^(1+alpha) (I x conj(sigma_alpha)) |Psi->``."""
    return (-1) ** (1 + alpha) * kron(np.eye(2), pauli(alpha).conj()) @ singlet()


def symmetric_projector() -> np.ndarray:
    """3x4 isometry from two qubits onto the alpha basis of spin 1."""
    return np.array([alpha_state(a).conj() for a in (1, 2, 3)])


def spin_one_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(S^x, S^y, S^z) for spin 1 in the alpha basis."""
    return tuple(-1j * _EPS[a] for a in range(3))


def spin_half_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return tuple(_SIGMA[a] / 2 for a in (1, 2, 3))


def sz_basis_change() -> np.ndarray:
    """Unitary whose columns are the S^z eigenstates (m = +1, 0, -1) in the alpha basis."""
    _, _, sz = spin_one_operators()
    vals, vecs = np.linalg.eigh(sz)
    order = np.argsort(vals)[::-1]
    return vecs[:, order]


def pauli_string(alphas) -> np.ndarray:
    """``sigma_{a_L} ... sigma_{a_1}`` for ``alphas = (a_1, ..., a_L)``."""
    v = np.eye(2, dtype=complex)
    for a in alphas:
        v = pauli(a) @ v
    return v


def string_operators(length: int) -> np.ndarray:
    """All products ``sigma_{a_L}...sigma_{a_1}`` with a_i in {1,2,3}.

    Returned as shape ``(3**length, 2, 2)``, indexed by the base-3 number
    ``(a_1 - 1)(a_2 - 1)...(a_L - 1)`` with a_1 most significant.
    """
    v = np.eye(2, dtype=complex)[None]
    s = np.stack([pauli(a) for a in (1, 2, 3)])
    for _ in range(length):
        # new index = old * 3 + a, product sigma_a @ old
        v = np.einsum("aij,bjk->baik", s, v).reshape(-1, 2, 2)
    return v


def ground_state_projection(n: int, cap: int = DEFAULT_N_MAX) -> StateVector:
    """Project a chain of singlets onto spin 1 at every bulk site."""
    _check_n(n, cap)
    proj = symmetric_projector()
    pair = singlet().reshape(2, 2)
    # qubits 0bar | 1 1bar | 2 2bar | ... | N Nbar | N+1; start with the first
    # singlet (0bar, 1) and absorb one bulk site at a time
    t = pair  # axes: 0bar, open qubit
    for _ in range(n):
        t = np.tensordot(t, pair, axes=0)   # ..., k, kbar, k+1
        t = t.reshape(t.shape[:-3] + (4, 2))
        t = np.einsum("ab,...bc->...ac", proj, t)
    amp = t.ravel()
    return StateVector(amp / np.linalg.norm(amp), site_dims(n))


def ground_state_pauli(n: int, cap: int = DEFAULT_N_MAX) -> StateVector:
    """Sum of Pauli strings acting on the end singlet."""
    _check_n(n, cap)
    ends = np.einsum("ik,bjk->bij", singlet().reshape(2, 2), string_operators(n))
    # ends[b, i, j]: amplitude of (0bar=i, N+1=j) for bulk string b
    t = ends.reshape((3,) * n + (2, 2))
    t = np.moveaxis(t, -2, 0)
    amp = t.ravel() / 3 ** (n / 2)
    return StateVector(amp / np.linalg.norm(amp), site_dims(n))


def boundary_projector(spin_half_first: bool = True) -> np.ndarray:
    """``(2/3)(1 + s.S)`` on spin-1/2 x spin-1 (or spin-1 x spin-1/2)."""
    s = spin_half_operators()
    S = spin_one_operators()
    if spin_half_first:
        dot = sum(np.kron(a, b) for a, b in zip(s, S))
    else:
        dot = sum(np.kron(b, a) for a, b in zip(s, S))
    return (2 / 3) * (np.eye(6) + dot)


def bond_term() -> np.ndarray:
    """``S.S + (1/3)(S.S)^2`` on two neighbouring spin-1's."""
    S = spin_one_operators()
    dot = sum(np.kron(a, a) for a in S)
    return dot + dot @ dot / 3


def hamiltonian(n: int, cap: int = DEFAULT_N_MAX) -> np.ndarray:
    """Dense AKLT Hamiltonian with spin-3/2 projectors on both boundary bonds."""
    _check_n(n, cap)
    dims = site_dims(n)
    total = int(np.prod(dims))
    h = np.zeros((total, total), dtype=complex)

    def place(op, first, width):
        left = int(np.prod(dims[:first]))
        right = int(np.prod(dims[first + width:]))
        return np.kron(np.kron(np.eye(left), op), np.eye(right))

    bond = bond_term()
    for k in range(1, n):
        h += place(bond, k, 2)
    h += place(boundary_projector(True), 0, 2)
    h += place(boundary_projector(False), n, 2)
    return h
