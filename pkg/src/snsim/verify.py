"""Named invariant suites behind the `verify` CLI subcommand.

Each suite returns one CheckResult per property with a deterministic
detail string (no wall times), so identical invocations print byte
identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import lcu
from .group_algebra import random_hermitian_k_local
from .pauli_expand import matrix_element_pauli, permutation_to_pauli, sum_dense
from .permutation import transposition
from .quditsim import exact_matrix_element, permutation_matrix, young_basis
from .young import (
    Partition,
    enumerate_standard_tableaux,
    hook_length_dimension,
    schur_weyl_dimension_check,
)

__all__ = ["CheckResult", "run_suite", "SUITE_NAMES"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _suite_schur_weyl() -> list[CheckResult]:
    out = []
    for n, d in [(2, 2), (4, 2), (6, 2), (8, 2), (10, 2), (4, 3), (6, 3), (8, 3)]:
        ok, rows = schur_weyl_dimension_check(n, d)
        total = sum(w * s for _, w, s in rows)
        out.append(CheckResult(
            f"dimension-sum n={n} d={d}", ok,
            f"sum dimW*dimS = {total}, d^n = {d**n}, {len(rows)} shapes",
        ))

    expected = [
        (Partition((6,)), 7, 1),
        (Partition((5, 1)), 5, 5),
        (Partition((4, 2)), 3, 9),
        (Partition((3, 3)), 1, 5),
    ]
    _, rows = schur_weyl_dimension_check(6, 2)
    out.append(CheckResult(
        "pairing-table n=6 d=2", rows == expected,
        "multiplicity(W) x dimension(S) = 1x7, 5x5, 9x3, 5x1" if rows == expected
        else f"got {[(str(s), w, h) for s, w, h in rows]}",
    ))

    mismatch = [
        str(lam)
        for lam in (Partition((3, 2, 1)), Partition((4, 2)), Partition((2, 2, 2)))
        if hook_length_dimension(lam) != len(enumerate_standard_tableaux(lam))
    ]
    out.append(CheckResult(
        "hook-vs-enumeration", not mismatch,
        "hook dimension matches tableau count on spot checks" if not mismatch
        else f"mismatch at {mismatch}",
    ))

    swap = permutation_matrix(transposition(2, 1, 2), 2)
    exch = sum_dense(permutation_to_pauli(transposition(2, 1, 2)))
    err = float(np.max(np.abs(exch - swap)))
    out.append(CheckResult(
        "exchange-identity", err <= 1e-15, f"max |(I+XX+YY+ZZ)/2 - SWAP| = {err:.3e}",
    ))
    return out


def _suite_lcu_e2e() -> list[CheckResult]:
    out = []
    n, d = 4, 2
    f = random_hermitian_k_local(n, 3, 3, seed=11)
    basis = young_basis(n, d)
    by_shape: dict = {}
    for vec in basis:
        by_shape.setdefault(vec.shape, []).append(vec)
    shapes = sorted(by_shape, key=lambda s: -len(by_shape[s]))
    block = {(vec.tableau_index, vec.weight_index): vec for vec in by_shape[shapes[0]]}
    # same weight, different tableaux: the only off-diagonal pairs the
    # evolution can connect
    u, v = block[(0, 0)], block[(1, 0)]
    w = by_shape[shapes[1]][0]

    t, eps = 0.8, 1e-3
    oracle = exact_matrix_element(u, v, f, t)
    value, report = lcu.matrix_element(u, v, f, t, eps)
    err = abs(value - oracle)
    out.append(CheckResult(
        "lcu-vs-oracle", err <= eps,
        f"|lcu - exact| = {err:.3e} at eps = {eps:.0e}, M={report.M} K={report.K}",
    ))

    explicit, _ = lcu.matrix_element(u, v, f, t, eps, explicit=True)
    dev = abs(explicit - value)
    out.append(CheckResult(
        "ancilla-vs-block", dev <= 1e-8,
        f"|explicit ancilla run - block formula| = {dev:.3e}",
    ))

    pauli, _ = matrix_element_pauli(u, v, f, t, eps)
    perr = abs(pauli - value)
    out.append(CheckResult(
        "pauli-vs-swap", perr <= 2 * eps,
        f"|pauli route - swap route| = {perr:.3e} at 2*eps = {2 * eps:.0e}",
    ))

    cross = exact_matrix_element(u, w, f, t)
    cval, _ = lcu.matrix_element(u, w, f, t, eps)
    out.append(CheckResult(
        "cross-block", abs(cross) <= 1e-12 and abs(cval) <= eps,
        f"exact cross-block = {abs(cross):.3e}, lcu cross-block = {abs(cval):.3e}",
    ))

    bound = report.actual <= report.bound_k2mk
    out.append(CheckResult(
        "gate-bound", bound,
        f"3MK*Wmax = {report.actual} <= span^2 MK = {report.bound_k2mk}",
    ))
    return out


_SUITES = {
    "schur-weyl": _suite_schur_weyl,
    "lcu-e2e": _suite_lcu_e2e,
}

SUITE_NAMES = tuple(sorted(_SUITES))


def run_suite(name: str) -> list[CheckResult]:
    """Run one named suite; unknown names are a usage error."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return _SUITES[name]()
