"""Exact entanglement toolkit for the AKLT valence-bond-solid chain."""

from .linalg import (
    DensityMatrix,
    entropy,
    hermitian_spectrum,
    kron,
    partial_trace,
    partial_transpose,
    purity,
    von_neumann_entropy,
)
from .measures import (
    SeparabilityVerdict,
    Verdict,
    concurrence,
    entropy_block,
    entropy_boundary_bulk,
    entropy_two_bulk,
    ppt_test,
    spin_correlator,
)
from .reduced import (
    brute_force_reduce,
    decay,
    rho_block_closed,
    rho_boundary_bulk,
    rho_end_pair,
    rho_one_site,
    rho_single_boundary,
    rho_two_bulk,
)
from .state import (
    StateVector,
    alpha_state,
    ground_state_pauli,
    ground_state_projection,
    hamiltonian,
    pauli,
    phi_plus,
    singlet,
    site_dims,
    symmetric_projector,
)

__version__ = "0.1.0"
