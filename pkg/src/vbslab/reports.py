"""Tabular payloads behind the CLI commands."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import measures, reduced, state
from .linalg import DensityMatrix, entropy, hermitian_spectrum

TABLE_KINDS = ("block-entropy", "two-bulk-entropy", "boundary-bulk-entropy", "concurrence", "correlator")
RHO_KINDS = ("one-site", "end-pair", "block", "two-bulk", "boundary-bulk", "single-boundary")
CONCURRENCE_OF = ("block", "two-bulk", "boundary-bulk")

# closed-form parameters beyond this are numerically indistinguishable from the limit
PARAM_MAX = 60


class CapError(ValueError):
    """A requested parameter exceeds a configured cap."""


@dataclass
class Table:
    columns: list[str]
    rows: list[list] = field(default_factory=list)


def _check_range(lo: int, hi: int, lowest: int, highest: int, what: str) -> None:
    if lo > hi:
        raise CapError(f"empty range {lo}..{hi}")
    if lo < lowest or hi > highest:
        raise CapError(f"{what} range {lo}..{hi} outside {lowest}..{highest}")


def table(kind: str, lo: int, hi: int, n_max: int = 8, of: str = "block") -> Table:
    if kind == "block-entropy":
        _check_range(lo, hi, 1, PARAM_MAX, "L")
        t = Table(["L", "p", "entropy_bits", "source"])
        for L in range(lo, hi + 1):
            t.rows.append([L, reduced.decay(L), measures.entropy_block(L), "end-pair spectrum"])
    elif kind == "two-bulk-entropy":
        _check_range(lo, hi, 0, PARAM_MAX, "M")
        t = Table(["M", "p", "entropy_bits", "source"])
        for m in range(lo, hi + 1):
            t.rows.append([m, reduced.decay(m), measures.entropy_two_bulk(m), "two-bulk spectrum"])
    elif kind == "boundary-bulk-entropy":
        _check_range(lo, hi, 0, PARAM_MAX, "M")
        t = Table(["M", "p", "entropy_bits", "source"])
        for m in range(lo, hi + 1):
            t.rows.append([m, reduced.decay(m), measures.entropy_boundary_bulk(m), "boundary-bulk spectrum"])
    elif kind == "concurrence":
        if of not in CONCURRENCE_OF:
            raise CapError(f"unknown concurrence target {of!r}")
        build = {
            "block": reduced.rho_end_pair,
            "two-bulk": reduced.rho_two_bulk,
            "boundary-bulk": reduced.rho_boundary_bulk,
        }[of]
        _check_range(lo, hi, 1 if of == "block" else 0, PARAM_MAX, "L" if of == "block" else "M")
        t = Table(["L" if of == "block" else "M", "p", "concurrence", "source"])
        for x in range(lo, hi + 1):
            t.rows.append([x, reduced.decay(x), measures.concurrence(build(x)), f"{of} purity"])
    elif kind == "correlator":
        _check_range(lo, hi, 1, n_max - 1, "distance")
        n = min(7, n_max) if hi < min(7, n_max) else hi + 1
        g = state.ground_state_projection(n, cap=n_max)
        t = Table(["d", "p", "closed_form", "brute_force", "abs_diff", "source"])
        for d in range(lo, hi + 1):
            i = 1 + (n - d - 1) // 2
            closed = measures.correlator_closed(d)
            brute = measures.spin_correlator(g, i, i + d)
            t.rows.append([d, reduced.decay(d), closed, brute, abs(closed - brute), f"4p(d) vs oracle N={n}"])
    else:
        raise CapError(f"unknown table kind {kind!r}; choose from {', '.join(TABLE_KINDS)}")
    return t


def density(which: str, param: int, l_max: int = 6) -> DensityMatrix:
    if which == "one-site":
        return reduced.rho_one_site()
    if which == "single-boundary":
        return reduced.rho_single_boundary()
    if which == "end-pair":
        _check_range(param, param, 1, PARAM_MAX, "L")
        return reduced.rho_end_pair(param)
    if which == "block":
        _check_range(param, param, 1, l_max, "L")
        return reduced.rho_block_closed(param, cap=l_max)
    if which == "two-bulk":
        _check_range(param, param, 0, PARAM_MAX, "M")
        return reduced.rho_two_bulk(param)
    if which == "boundary-bulk":
        _check_range(param, param, 0, PARAM_MAX, "M")
        return reduced.rho_boundary_bulk(param)
    raise CapError(f"unknown density {which!r}; choose from {', '.join(RHO_KINDS)}")


def spectrum_of(rho: DensityMatrix) -> tuple[np.ndarray, float]:
    spec = hermitian_spectrum(rho.matrix)
    return spec, entropy(rho)


def bench(lo: int, hi: int, n_max: int = 8, repeats: int = 3) -> Table:
    """Time closed-form end-pair entropy against full construction + reduction."""
    _check_range(lo, hi, 1, n_max, "N")
    t = Table(["N", "closed_entropy", "oracle_entropy", "closed_seconds", "oracle_seconds"])
    for n in range(lo, hi + 1):
        best_closed = best_oracle = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            s_closed = entropy(reduced.rho_end_pair(n))
            t1 = time.perf_counter()
            g = state.ground_state_projection(n, cap=n_max)
            s_oracle = entropy(reduced.brute_force_reduce(g, [0, n + 1]))
            t2 = time.perf_counter()
            best_closed = min(best_closed, t1 - t0)
            best_oracle = min(best_oracle, t2 - t1)
        t.rows.append([n, s_closed, s_oracle, best_closed, best_oracle])
    return t
