"""Acceptance gate. Eight criteria, one printed verdict line each.

Each test prints `[criterion N] PASS/FAIL - detail` on the real stdout
(bypassing capture) and then asserts, so a red run still shows every
verdict. Shared end-to-end runs live in a module fixture.
"""

import itertools
import math
import time

import numpy as np
import pytest

from snsim.cli import main as cli_main
from snsim.group_algebra import (
    algebra_element,
    convolution_theorem_check,
    dense_table,
    fourier_fft,
    fourier_naive,
    random_hermitian_k_local,
    scale,
)
from snsim.lcu import gate_count_report, matrix_element, plan
from snsim.pauli_expand import (
    binomial_identity_check,
    matrix_element_pauli,
    permutation_to_pauli,
    sum_dense,
)
from snsim.permutation import (
    derangement_count,
    enumerate_sn,
    locality,
    transposition,
)
from snsim.quditsim import (
    exact_matrix_element,
    permutation_matrix,
    young_basis,
)
from snsim.yor import dimension as yor_dimension
from snsim.young import Partition, schur_weyl_dimension_check


def verdict(capsys, num, ok, detail):
    line = f"[criterion {num}] {'PASS' if ok else 'FAIL'} - {detail}"
    with capsys.disabled():
        print(line, flush=True)
    assert ok, line


# ---------------------------------------------------------------------------
# 1. exchange identity


def test_criterion_1_exchange_identity(capsys):
    start = time.perf_counter()
    half = 0.5
    sx = np.array([[0, half], [half, 0]], dtype=complex)
    sy = np.array([[0, -0.5j], [0.5j, 0]], dtype=complex)
    sz = np.array([[half, 0], [0, -half]], dtype=complex)

    def embed(op, site, n):
        out = np.eye(1, dtype=complex)
        for q in range(1, n + 1):
            out = np.kron(out, op if q == site else np.eye(2, dtype=complex))
        return out

    worst = 0.0
    for n in (2, 3, 4):
        eye = np.eye(2**n, dtype=complex)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                dot = sum(embed(s, i, n) @ embed(s, j, n) for s in (sx, sy, sz))
                lhs = 2.0 * dot + 0.5 * eye
                rhs = permutation_matrix(transposition(n, i, j), 2)
                worst = max(worst, float(np.abs(lhs - rhs).max()))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-15 and elapsed < 1.0
    verdict(capsys, 1, ok,
            f"2 S_i.S_j + I/2 == SWAP, max abs error {worst:.1e} (<= 1e-15), {elapsed:.2f} s")


# ---------------------------------------------------------------------------
# 2. dimension bookkeeping


def test_criterion_2_schur_weyl_sums(capsys):
    start = time.perf_counter()
    ok = True
    for d, n_max in ((2, 10), (3, 8)):
        for n in range(1, n_max + 1):
            consistent, _ = schur_weyl_dimension_check(n, d)
            ok = ok and consistent
    _, rows = schur_weyl_dimension_check(6, 2)
    table = {shape.parts: (w, s) for shape, w, s in rows}
    pairing = (
        table.get((6,)) == (7, 1)
        and table.get((5, 1)) == (5, 5)
        and table.get((4, 2)) == (3, 9)
        and table.get((3, 3)) == (1, 5)
    )
    elapsed = time.perf_counter() - start
    ok = ok and pairing and elapsed < 1.0
    verdict(capsys, 2, ok,
            f"sum dim_W * dim_S == d^n for n<=10 (d=2) and n<=8 (d=3); "
            f"n=6 d=2 pairing (7,5,3,1)x(1,5,9,5) {'holds' if pairing else 'BROKEN'}, {elapsed:.2f} s")


# ---------------------------------------------------------------------------
# 3. Fourier transform


def test_criterion_3_fourier_correctness(capsys):
    start = time.perf_counter()
    rng = np.random.default_rng(31)
    worst_fft = 0.0
    worst_parseval = 0.0
    for n in range(3, 8):
        size = math.factorial(n)
        values = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        f = algebra_element(n, dict(zip(enumerate_sn(n), values)))
        fast = fourier_fft(values, n)
        naive = fourier_naive(f)
        worst_fft = max(worst_fft, fast.max_abs_diff(naive))
        power = float(np.sum(np.abs(values) ** 2))
        spectral = sum(
            yor_dimension(shape) * float(np.linalg.norm(mat, "fro") ** 2)
            for shape, mat in fast.blocks.items()
        ) / size
        worst_parseval = max(worst_parseval, abs(power - spectral) / power)

    worst_conv = 0.0
    for n in (4, 5):
        size = math.factorial(n)
        f = algebra_element(n, dict(zip(enumerate_sn(n), rng.standard_normal(size))))
        g = algebra_element(n, dict(zip(enumerate_sn(n), rng.standard_normal(size))))
        worst_conv = max(worst_conv, convolution_theorem_check(f, g))

    elapsed = time.perf_counter() - start
    ok = worst_fft <= 1e-9 and worst_conv <= 1e-9 and worst_parseval <= 1e-8 and elapsed < 60.0
    verdict(capsys, 3, ok,
            f"fft==naive n=3..7 max {worst_fft:.1e} (<=1e-9), convolution {worst_conv:.1e} "
            f"(<=1e-9), Parseval rel {worst_parseval:.1e} (<=1e-8), {elapsed:.1f} s")


# ---------------------------------------------------------------------------
# shared end-to-end suite for criteria 4, 5, 6


def block_pairs(n):
    """One same-block pair and one cross-block pair from the (n, 2) basis."""
    basis = young_basis(n, 2)
    by_key = {(v.shape, v.tableau_index, v.weight_index): v for v in basis}
    same = None
    for (shape, ti, wi), v in by_key.items():
        partner = by_key.get((shape, ti + 1, wi))
        if partner is not None:
            same = (v, partner)
            break
    shapes = sorted({v.shape for v in basis}, key=lambda s: s.parts)
    cross = (
        next(v for v in basis if v.shape == shapes[0]),
        next(v for v in basis if v.shape == shapes[-1]),
    )
    return same, cross


@pytest.fixture(scope="module")
def e2e_suite():
    cases = list(itertools.product((4, 5, 6), (2, 3), (0.5, 1.0)))
    instances = [cases[i % len(cases)] + (7000 + i,) for i in range(20)]
    epsilons = (1e-2, 1e-3, 1e-6)

    runs = []
    cross_runs = []
    start = time.perf_counter()
    for n, k, t, seed in instances:
        f = random_hermitian_k_local(n, k, 3, seed=seed)
        (u, v), (cu, cv) = block_pairs(n)
        oracle = exact_matrix_element(u, v, f, t)
        for eps in epsilons:
            value, report = matrix_element(u, v, f, t, eps)
            runs.append({
                "n": n, "k": k, "t": t, "eps": eps,
                "diff": abs(value - oracle), "report": report, "f": f,
            })
            cross_value, _ = matrix_element(cu, cv, f, t, eps)
            cross_runs.append({"eps": eps, "abs": abs(cross_value)})
    swap_elapsed = time.perf_counter() - start

    pauli_runs = []
    start = time.perf_counter()
    for n, k, t, seed in instances:
        f = random_hermitian_k_local(n, k, 3, seed=seed)
        (u, v), _ = block_pairs(n)
        for eps in epsilons:
            swap_value, _ = matrix_element(u, v, f, t, eps)
            pauli_value, _ = matrix_element_pauli(u, v, f, t, eps)
            pauli_runs.append({"eps": eps, "gap": abs(pauli_value - swap_value)})
    pauli_elapsed = time.perf_counter() - start

    return {
        "instances": instances,
        "runs": runs,
        "cross": cross_runs,
        "pauli": pauli_runs,
        "swap_elapsed": swap_elapsed,
        "pauli_elapsed": pauli_elapsed,
    }


# ---------------------------------------------------------------------------
# 4. end-to-end accuracy


def test_criterion_4_end_to_end(capsys, e2e_suite):
    runs, cross = e2e_suite["runs"], e2e_suite["cross"]
    assert len(e2e_suite["instances"]) == 20
    worst = max(r["diff"] / r["eps"] for r in runs)
    worst_abs = max(r["diff"] for r in runs)
    worst_cross = max(c["abs"] / c["eps"] for c in cross)
    elapsed = e2e_suite["swap_elapsed"]
    ok = worst <= 1.0 and worst_cross <= 1.0 and elapsed < 600.0
    verdict(capsys, 4, ok,
            f"20 instances x eps in {{1e-2,1e-3,1e-6}}: worst |lcu-oracle|/eps "
            f"{worst:.1e} (abs {worst_abs:.1e}), worst cross-block |value|/eps "
            f"{worst_cross:.1e}, {elapsed:.1f} s")


# ---------------------------------------------------------------------------
# 5. qubit route


def test_criterion_5_pauli_route(capsys, e2e_suite):
    start = time.perf_counter()
    worst_s5 = 0.0
    for p in enumerate_sn(5):
        dense = sum_dense(permutation_to_pauli(p))
        worst_s5 = max(worst_s5, float(np.abs(dense - permutation_matrix(p, 2)).max()))

    norms_ok = True
    for p in enumerate_sn(6):
        g = permutation_to_pauli(p)
        bound = 1.0 if p.is_identity() else 2.0 ** (locality(p) - 1)
        norms_ok = norms_ok and g.one_norm <= bound + 1e-9

    binom_ok = all(binomial_identity_check(k) for k in range(2, 17))
    worst_gap = max(r["gap"] / (2 * r["eps"]) for r in e2e_suite["pauli"])
    elapsed = time.perf_counter() - start + e2e_suite["pauli_elapsed"]
    ok = worst_s5 <= 1e-15 and norms_ok and binom_ok and worst_gap <= 1.0
    verdict(capsys, 5, ok,
            f"S5 reconstruction max error {worst_s5:.1e}, S6 1-norm <= 2^(loc-1) "
            f"{'holds' if norms_ok else 'BROKEN'}, binomial identity exact k<=16 "
            f"{'holds' if binom_ok else 'BROKEN'}, pauli-vs-swap worst gap/(2 eps) "
            f"{worst_gap:.1e}, {elapsed:.1f} s")


# ---------------------------------------------------------------------------
# 6. gate accounting


def test_criterion_6_gate_accounting(capsys, e2e_suite):
    bound_ok = all(
        r["report"].actual <= r["report"].k_span ** 2 * r["report"].M * r["report"].K
        for r in e2e_suite["runs"]
    )
    closed_forms = {r["report"].closed_form for r in e2e_suite["runs"]}
    closed_ok = all(math.isfinite(c) and c > 0 for c in closed_forms)

    base = algebra_element(4, {
        transposition(4, 1, 2): 1.0,
        transposition(4, 2, 3): 1.0,
        transposition(4, 3, 4): 1.0,
    })
    f = scale(base, 3.6 / base.one_norm)
    r1 = gate_count_report(plan(f, 1.0, 1e-6), f)
    r2 = gate_count_report(plan(f, 2.0, 1e-6), f)
    ratio = r2.actual / r1.actual
    ratio_ok = 1.8 <= ratio <= 2.2

    ok = bound_ok and closed_ok and ratio_ok
    verdict(capsys, 6, ok,
            f"measured swaps <= span^2*M*K on all {len(e2e_suite['runs'])} runs "
            f"{'holds' if bound_ok else 'BROKEN'}; closed-form estimate reported "
            f"(example {min(closed_forms):.3g}); t doubling 1.0->2.0 gives gate ratio "
            f"{ratio:.3f} in [1.8, 2.2]")


# ---------------------------------------------------------------------------
# 7. scaling gap


def test_criterion_7_super_exponential_gap(capsys, tmp_path):
    start = time.perf_counter()
    out = tmp_path / "bench.csv"
    code = cli_main(["bench", "--n-range", "4:7", "--out", str(out)])
    assert code == 0
    rows = []
    for line in out.read_text().strip().splitlines()[1:]:
        n, ops, _, gates, closed = line.split(",")
        rows.append((int(n), int(ops), int(gates), float(closed)))

    ratios = [ops / gates for _, ops, gates, _ in rows]
    increasing = all(a < b for a, b in zip(ratios, ratios[1:]))
    fitted_c = max(math.factorial(n) * n**2 / ops for n, ops, _, _ in rows)
    lower_ok = all(ops >= math.factorial(n) * n**2 / fitted_c for n, ops, _, _ in rows)
    poly_ok = all(gates <= closed for _, _, gates, closed in rows)
    elapsed = time.perf_counter() - start
    ok = increasing and lower_ok and poly_ok and elapsed < 300.0
    verdict(capsys, 7, ok,
            f"classical/quantum ratio over n=4..7 {[f'{r:.3g}' for r in ratios]} strictly "
            f"increasing {'holds' if increasing else 'BROKEN'}; classical >= n! n^2 / c with "
            f"c={fitted_c:.3g}; gates within closed form {'holds' if poly_ok else 'BROKEN'}, "
            f"{elapsed:.1f} s")


# ---------------------------------------------------------------------------
# 8. basis quality and census


def test_criterion_8_young_basis_quality(capsys):
    start = time.perf_counter()
    worst_gram = 0.0
    for n, d in ((4, 2), (5, 2), (6, 2), (4, 3)):
        mat = np.array([v.vector.amplitudes for v in young_basis(n, d)])
        gram = mat.conj() @ mat.T
        worst_gram = max(worst_gram, float(np.abs(gram - np.eye(d**n)).max()))

    from snsim.group_algebra import pi_tilde_dense

    worst_jm = 0.0
    for n, d in ((4, 2), (5, 2), (6, 2), (3, 3)):
        for k in range(2, n + 1):
            x_k = algebra_element(n, {transposition(n, i, k): 1.0 for i in range(1, k)})
            op = pi_tilde_dense(x_k, d)
            for v in young_basis(n, d):
                resid = op @ v.vector.amplitudes - v.tableau.content(k) * v.vector.amplitudes
                worst_jm = max(worst_jm, float(np.abs(resid).max()))

    census_ok = True
    for n in range(1, 9):
        brute = [0] * (n + 1)
        for p in enumerate_sn(n):
            brute[sum(1 for i in range(1, n + 1) if p(i) != i)] += 1
        census_ok = census_ok and all(
            brute[l] == derangement_count(n, l) for l in range(n + 1)
        )

    elapsed = time.perf_counter() - start
    ok = worst_gram <= 1e-9 and worst_jm <= 1e-9 and census_ok and elapsed < 120.0
    verdict(capsys, 8, ok,
            f"Gram max dev {worst_gram:.1e} (<=1e-9), JM residual max {worst_jm:.1e} "
            f"(<=1e-9), derangement census exact n<=8 {'holds' if census_ok else 'BROKEN'}, "
            f"{elapsed:.1f} s")
