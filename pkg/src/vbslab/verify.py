"""Self-check suite: closed forms against the brute-force oracle.

Each check records the largest deviation it measured and whether that stayed
within tolerance. ``run_checks`` drops checks whose chain lengths exceed the
configured caps instead of failing them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from . import measures, reduced, state
from .linalg import entropy

# printed table; S_4 is excluded, see TABLE_MISPRINTS
PUBLISHED_BLOCK_ENTROPY = {1: 1.58496, 2: 1.97494, 3: 1.99695, 5: 1.99996}
TABLE_MISPRINTS = {4: (1.99969, 1.99967282299)}
TABLE_TOL = 1e-5


@dataclass(frozen=True)
class Check:
    name: str
    deviation: float
    tolerance: float
    passed: bool
    detail: str = ""


def _max_abs(a, b) -> float:
    return float(np.abs(np.asarray(a) - np.asarray(b)).max())


def _phase_aligned_deviation(a: np.ndarray, b: np.ndarray) -> float:
    overlap = np.vdot(b, a)
    if abs(overlap) < 1e-14:
        return float("inf")
    return _max_abs(a, overlap / abs(overlap) * b)


@lru_cache(maxsize=16)
def _ground(n: int, cap: int) -> state.StateVector:
    return state.ground_state_projection(n, cap=cap)


def _check(name: str, deviation: float, tol: float, detail: str = "") -> Check:
    return Check(name, deviation, tol, bool(deviation <= tol), detail)


def route_equivalence(n_max: int, tol: float) -> Iterator[Check]:
    for n in range(1, min(6, n_max) + 1):
        a = state.ground_state_projection(n, cap=n_max).amplitudes
        b = state.ground_state_pauli(n, cap=n_max).amplitudes
        yield _check(f"route-equivalence n={n}", _phase_aligned_deviation(a, b), 1e-12)


def theorem_invariance(n_max: int, l_max: int, tol: float) -> Iterator[Check]:
    top = min(7, n_max)
    for length in range(1, min(5, l_max, top) + 1):
        closed = reduced.rho_block_closed(length, cap=l_max).matrix
        dev = 0.0
        count = 0
        for n in range(max(2, length), top + 1):
            g = _ground(n, n_max)
            for k in range(1, n - length + 2):
                rho = reduced.brute_force_reduce(g, range(k, k + length)).matrix
                dev = max(dev, _max_abs(rho, closed))
                count += 1
        if count:
            yield _check(f"block-theorem L={length}", dev, 1e-12, f"{count} placements")


def single_site(n_max: int, tol: float) -> Iterator[Check]:
    one = reduced.rho_one_site().matrix
    half = reduced.rho_single_boundary().matrix
    dev_bulk = dev_end = 0.0
    for n in range(1, min(6, n_max) + 1):
        g = _ground(n, n_max)
        for k in range(1, n + 1):
            dev_bulk = max(dev_bulk, _max_abs(reduced.brute_force_reduce(g, [k]).matrix, one))
        for k in (0, n + 1):
            dev_end = max(dev_end, _max_abs(reduced.brute_force_reduce(g, [k]).matrix, half))
    yield _check("one-site bulk = I/3", dev_bulk, 1e-12)
    yield _check("one-site boundary = I/2", dev_end, 1e-12)


def end_pairs(n_max: int, tol: float) -> Iterator[Check]:
    for n in range(1, min(6, n_max) + 1):
        g = _ground(n, n_max)
        rho = reduced.brute_force_reduce(g, [0, n + 1])
        yield _check(f"end-pair N={n}", _max_abs(rho.matrix, reduced.rho_end_pair(n).matrix), 1e-12)
        v = measures.ppt_test(rho)
        yield Check(f"end-pair N={n} PPT", v.min_pt_eigenvalue, 0.0, not v.entangled, str(v))


def pair_reductions(n_max: int, tol: float) -> Iterator[Check]:
    n = min(7, n_max)
    if n < 2:
        return
    g = _ground(n, n_max)
    for gap in range(0, n - 1):
        left = 1 + (n - gap - 2) // 2
        rho = reduced.brute_force_reduce(g, [left, left + gap + 1])
        yield _check(f"two-bulk M={gap} (N={n})", _max_abs(rho.matrix, reduced.rho_two_bulk(gap).matrix), 1e-12)
        s_oracle = entropy(rho)
        yield _check(
            f"two-bulk entropy M={gap}",
            max(abs(s_oracle - measures.entropy_two_bulk(gap)),
                abs(s_oracle - measures.entropy_two_bulk_printed(gap))),
            tol,
        )
    for gap in range(0, n):
        rho = reduced.brute_force_reduce(g, [0, gap + 1])
        yield _check(
            f"boundary-bulk M={gap} (N={n})",
            _max_abs(rho.matrix, reduced.rho_boundary_bulk(gap).matrix),
            1e-12,
        )
        s_oracle = entropy(rho)
        yield _check(
            f"boundary-bulk entropy M={gap}",
            max(abs(s_oracle - measures.entropy_boundary_bulk(gap)),
                abs(s_oracle - measures.entropy_boundary_bulk_printed(gap))),
            tol,
        )


def separability(tol: float) -> Iterator[Check]:
    v = measures.ppt_test(reduced.rho_boundary_bulk(0))
    yield Check("boundary-bulk M=0 is NPT", v.min_pt_eigenvalue, 0.0, v.entangled, str(v))
    for gap in range(1, 6):
        v = measures.ppt_test(reduced.rho_boundary_bulk(gap))
        yield Check(f"boundary-bulk M={gap} is PPT", v.min_pt_eigenvalue, 0.0, not v.entangled, str(v))


def entropy_regressions(n_max: int, l_max: int, tol: float) -> Iterator[Check]:
    for length, value in PUBLISHED_BLOCK_ENTROPY.items():
        yield _check(f"S_{length} table", abs(measures.entropy_block(length) - value), TABLE_TOL)
    printed, exact = TABLE_MISPRINTS[4]
    yield _check(
        "S_4 exact", abs(measures.entropy_block(4) - exact), 1e-10,
        f"table prints {printed}",
    )
    yield _check("S_6 ~ 2", max(0.0, 2 - 1e-4 - measures.entropy_block(6)), 0.0)
    s1 = measures.entropy_block(1)
    yield _check("S_1 = log2 3", abs(s1 - math.log2(3)), 1e-12)
    for length in range(1, min(5, l_max, n_max) + 1):
        rho = reduced.brute_force_reduce(_ground(length, n_max), range(1, length + 1))
        yield _check(f"S_{length} oracle", abs(entropy(rho) - measures.entropy_block(length)), tol)


def concurrences(tol: float) -> Iterator[Check]:
    dev = 0.0
    for m in range(0, 9):
        if m >= 1:
            dev = max(dev, abs(measures.concurrence(reduced.rho_end_pair(m)) - (1 - 9.0 ** -m)))
        dev = max(dev, abs(measures.concurrence(reduced.rho_two_bulk(m)) - (1 - 1 / (6 * 9.0 ** m))))
        dev = max(dev, abs(measures.concurrence(reduced.rho_boundary_bulk(m)) - (1 - 0.4 * 9.0 ** -m)))
    yield _check("concurrence formulas", dev, 1e-12)


def hamiltonian_checks(n_max: int, tol: float) -> Iterator[Check]:
    for n in range(2, min(5, n_max) + 1):
        h = state.hamiltonian(n, cap=n_max)
        g = _ground(n, n_max).amplitudes
        resid = float(np.linalg.norm(h @ g + 2 * (n - 1) / 3 * g))
        yield _check(f"H|G> eigen n={n}", resid, tol)
        w = np.linalg.eigvalsh(h)
        gap = float(w[1] - w[0])
        yield Check(f"unique ground + gap n={n}", gap, 0.1, gap > 0.1, f"E0={w[0]:.12g}")


def correlators(n_max: int, tol: float) -> Iterator[Check]:
    n = min(7, n_max)
    g = _ground(n, n_max)
    for d in range(1, n - 2):
        i = 1 + (n - d - 1) // 2
        c = measures.spin_correlator(g, i, i + d)
        dev = max(abs(c - measures.correlator_closed(d)),
                  abs(c - measures.correlator_from_sectors(d - 1)))
        yield _check(f"<S_i.S_i+{d}> (N={n})", dev, tol)


def run_checks(n_max: int = 8, l_max: int = 6, tol: float = 1e-10) -> list[Check]:
    groups: list[Callable[[], Iterator[Check]]] = [
        lambda: route_equivalence(n_max, tol),
        lambda: single_site(n_max, tol),
        lambda: end_pairs(n_max, tol),
        lambda: theorem_invariance(n_max, l_max, tol),
        lambda: pair_reductions(n_max, tol),
        lambda: separability(tol),
        lambda: entropy_regressions(n_max, l_max, tol),
        lambda: concurrences(tol),
        lambda: hamiltonian_checks(n_max, tol),
        lambda: correlators(n_max, tol),
    ]
    _ground.cache_clear()
    out = [c for group in groups for c in group()]
    _ground.cache_clear()
    return out
