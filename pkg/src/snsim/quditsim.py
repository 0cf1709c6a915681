"""Dense statevector simulation of n qudits and the Young basis.

Index convention: amplitudes[i] is the coefficient of the computational
basis state whose base-d digits are read off i with qudit 1 as the most
significant digit. A permutation acts by moving the content of site q
to site p(q):

    (P(p) psi)[j_1 .. j_n] = psi[j_{p(1)} .. j_{p(n)}]

so P(p)P(q) = P(pq) under the composition convention of `permutation`.

The Young basis is built classically, one irreducible block at a time:
the top-weight copy of each block is pinned down by refining the
top-weight subspace into joint eigenspaces of the star transposition
sums X_k = sum_{i<k} (i k) (integer eigenvalues = tableau contents),
the remaining SU(d) copies are generated by lowering operators, and the
companion tableau vectors are produced by the orthogonal-representation
recurrence, so the S_n action on the result has exactly the matrix
elements of `yor`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import DEFAULT_DENSE_CAP, ResourceLimitError, SizeMismatchError
from .permutation import Permutation, adjacent_word, transposition
from .young import Partition, StandardTableau, enumerate_partitions, weyl_dimension
from .yor import tableaux as _tableaux

if TYPE_CHECKING:
    from .group_algebra import AlgebraElement

__all__ = [
    "Statevector",
    "YoungBasisVector",
    "basis_state",
    "permutation_index_map",
    "apply_permutation",
    "permutation_matrix",
    "swap_network",
    "replay_swap_network",
    "apply_local_unitary_everywhere",
    "young_basis",
    "exact_matrix_element",
]


def _check_dense(d: int, n: int, cap: int) -> int:
    dim = d**n
    if dim > cap:
        raise ResourceLimitError(
            f"dense statevector of dimension {d}^{n} = {dim} exceeds cap {cap}; "
            "raise the cap explicitly if this size is intended"
        )
    return dim


@dataclass(frozen=True)
class Statevector:
    """Complex amplitudes over (C^d)^(x n). Treated as immutable."""

    d: int
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.d < 2 or self.n < 1:
            raise ValueError(f"need d >= 2, n >= 1: got d={self.d}, n={self.n}")
        if self.amplitudes.shape != (self.d**self.n,):
            raise SizeMismatchError(
                f"amplitude array of shape {self.amplitudes.shape} does not match d^n = {self.d**self.n}"
            )

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "Statevector") -> complex:
        """<self|other>, conjugate-linear in self."""
        if (self.d, self.n) != (other.d, other.n):
            raise SizeMismatchError("statevectors on different spaces")
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def basis_state(d: int, n: int, digits) -> Statevector:
    """Computational basis state; `digits` is an index or a digit list."""
    dim = d**n
    if isinstance(digits, int):
        index = digits
    else:
        if len(digits) != n or any(not 0 <= j < d for j in digits):
            raise ValueError(f"digits {digits} invalid for d={d}, n={n}")
        index = 0
        for j in digits:
            index = index * d + j
    amps = np.zeros(dim, dtype=complex)
    amps[index] = 1.0
    return Statevector(d, n, amps)


def _digit_table(d: int, n: int) -> np.ndarray:
    """digits[i, q-1] = q-th digit (qudit q) of basis index i."""
    idx = np.arange(d**n)
    return np.stack([(idx // d ** (n - q)) % d for q in range(1, n + 1)], axis=1)


@functools.lru_cache(maxsize=None)
def _digit_table_cached(d: int, n: int) -> np.ndarray:
    return _digit_table(d, n)


def permutation_index_map(p: Permutation, d: int) -> np.ndarray:
    """g with (P(p) psi) = psi[g]: g[i] has digit j_{p(q)} of i at slot q."""
    n = p.n
    digits = _digit_table_cached(d, n)
    g = np.zeros(d**n, dtype=np.intp)
    for q in range(1, n + 1):
        g += digits[:, p(q) - 1] * d ** (n - q)
    return g


def apply_permutation(s: Statevector, p: Permutation) -> Statevector:
    if p.n != s.n:
        raise SizeMismatchError(f"permutation on {p.n} points vs {s.n} qudits")
    return Statevector(s.d, s.n, s.amplitudes[permutation_index_map(p, s.d)])


def permutation_matrix(p: Permutation, d: int, cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
    """Dense d^n x d^n matrix of P(p)."""
    dim = _check_dense(d, p.n, cap)
    g = permutation_index_map(p, d)
    mat = np.zeros((dim, dim))
    mat[np.arange(dim), g] = 1.0
    return mat


def swap_network(p: Permutation) -> list[int]:
    """Adjacent SWAP schedule realizing P(p) on a 1-D line of qudits.

    Entry i means "swap sites (i, i+1)"; gates are listed in execution
    order. All indices stay inside the interval spanned by the support,
    so the count is at most span*(span-1)/2.
    """
    return list(reversed(adjacent_word(p)))


def replay_swap_network(s: Statevector, gates: list[int]) -> Statevector:
    for i in gates:
        s = apply_permutation(s, transposition(s.n, i, i + 1))
    return s


def apply_local_unitary_everywhere(s: Statevector, u: np.ndarray) -> Statevector:
    """u tensored over every site; u must be d x d unitary (tol 1e-12)."""
    d, n = s.d, s.n
    if u.shape != (d, d):
        raise SizeMismatchError(f"local operator shape {u.shape} != ({d}, {d})")
    if np.abs(u @ u.conj().T - np.eye(d)).max() > 1e-12:
        raise ValueError("local operator is not unitary to 1e-12")
    amps = s.amplitudes.reshape((d,) * n)
    for q in range(n):
        amps = np.moveaxis(np.tensordot(u, amps, axes=([1], [q])), 0, q)
    return Statevector(d, n, np.ascontiguousarray(amps).reshape(-1))


# ---------------------------------------------------------------------------
# Young basis construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class YoungBasisVector:
    """One member of the orthonormal basis adapted to the block structure.

    `tableau` indexes the S_n side of the block, `weight_index` the
    SU(d) side (0 = top weight, then lexicographically decreasing
    weight strings, ties in construction order).
    """

    shape: Partition
    tableau: StandardTableau
    tableau_index: int
    weight_index: int
    weight: tuple[int, ...]
    vector: Statevector

    def label(self) -> str:
        return f"{self.shape}:{self.tableau_index}:{self.weight_index}"


def _lower(vec: np.ndarray, d: int, n: int, a: int) -> np.ndarray:
    """Lowering operator F_a = sum_sites |a><a-1|: digit a-1 -> a once."""
    t = vec.reshape((d,) * n)
    out = np.zeros_like(t)
    src = [slice(None)] * n
    dst = [slice(None)] * n
    for q in range(n):
        src[q] = a - 1
        dst[q] = a
        out[tuple(dst)] += t[tuple(src)]
        src[q] = slice(None)
        dst[q] = slice(None)
    return out.reshape(-1)


def _canonical_sign(vec: np.ndarray) -> np.ndarray:
    for x in vec:
        if abs(x) > 1e-8:
            return vec if x > 0 else -vec
    raise RuntimeError("zero vector has no canonical sign")


def _compositions(n: int, d: int):
    """All weight strings (m_0..m_{d-1}) summing to n, lex-descending."""
    if d == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, d - 1):
            yield (first,) + rest


def _top_weight_vector(lam: Partition, t0: StandardTableau, d: int, n: int,
                       trans_maps: dict) -> np.ndarray:
    """The unique top-weight state with the X_k eigenvalue profile of t0."""
    dim = d**n
    counts_target = lam.padded(d)
    digits = _digit_table_cached(d, n)
    counts = np.stack([(digits == a).sum(axis=1) for a in range(d)], axis=1)
    sel = np.flatnonzero((counts == np.array(counts_target)).all(axis=1))
    basis = np.zeros((dim, len(sel)))
    basis[sel, np.arange(len(sel))] = 1.0
    for k in range(2, n + 1):
        image = np.zeros_like(basis)
        for i in range(1, k):
            image += basis[trans_maps[(i, k)]]
        restricted = basis.T @ image
        evals, evecs = np.linalg.eigh(restricted)
        keep = np.abs(evals - t0.content(k)) < 0.25
        if not keep.any():
            raise RuntimeError(f"no X_{k} eigenvalue {t0.content(k)} in block {lam}")
        basis = basis @ evecs[:, keep]
    if basis.shape[1] != 1:
        raise RuntimeError(f"top-weight space of {lam} not one-dimensional")
    v = basis[:, 0]
    return _canonical_sign(v / np.linalg.norm(v))


def _su_d_copies(lam: Partition, v_top: np.ndarray, d: int, n: int) -> list[np.ndarray]:
    """All weight copies of the block, top weight first, lex-descending.

    Every lower weight space is spanned by single lowering steps from
    already-built weights; double Gram-Schmidt in a fixed candidate
    order makes the outcome deterministic.
    """
    top = tuple(lam.padded(d))
    copies: dict[tuple[int, ...], list[np.ndarray]] = {top: [v_top]}
    for mu in _compositions(n, d):
        if mu >= top:
            continue
        kept: list[np.ndarray] = []
        for a in range(1, d):
            if mu[a] == 0:
                continue
            nu = list(mu)
            nu[a - 1] += 1
            nu[a] -= 1
            for source in copies.get(tuple(nu), ()):
                cand = _lower(source, d, n, a)
                for _ in range(2):
                    for u in kept:
                        cand = cand - (u @ cand) * u
                nrm = np.linalg.norm(cand)
                if nrm > 1e-8:
                    kept.append(_canonical_sign(cand / nrm))
        if kept:
            copies[mu] = kept
    ordered = [v for mu in sorted(copies, reverse=True) for v in copies[mu]]
    if len(ordered) != weyl_dimension(lam, d):
        raise RuntimeError(
            f"block {lam}: built {len(ordered)} copies, expected {weyl_dimension(lam, d)}"
        )
    return ordered


def _transport(lam: Partition, seed_vec: np.ndarray, d: int, trans_maps: dict) -> list[np.ndarray]:
    """Companion vectors for every tableau from the first-tableau seed.

    Inverts the generator action: with r = axial_distance(t, k) and t'
    = t with k, k+1 swapped, P(s_k)|t> = (1/r)|t> + sqrt(1-1/r^2)|t'>.
    """
    ts = _tableaux(lam)
    index = {t: i for i, t in enumerate(ts)}
    vecs: dict[int, np.ndarray] = {0: seed_vec}
    queue = [0]
    while queue:
        ti = queue.pop(0)
        t = ts[ti]
        for k in range(1, lam.n):
            mate = t.swap(k)
            if mate is None:
                continue
            mi = index[mate]
            if mi in vecs:
                continue
            r = t.axial_distance(k)
            swapped = vecs[ti][trans_maps[(k, k + 1)]]
            vecs[mi] = (swapped - vecs[ti] / r) / np.sqrt(1.0 - 1.0 / (r * r))
            queue.append(mi)
    return [vecs[i] for i in range(len(ts))]


@functools.lru_cache(maxsize=4)
def young_basis(n: int, d: int, cap: int = DEFAULT_DENSE_CAP) -> tuple[YoungBasisVector, ...]:
    """Complete orthonormal basis of (C^d)^(x n), one vector per
    (block shape, standard tableau, weight copy) triple.

    Ordered by shape (reverse-lexicographic), then tableau (last-letter
    order), then weight index.
    """
    _check_dense(d, n, cap)
    trans_maps = {
        (i, k): permutation_index_map(transposition(n, i, k), d)
        for k in range(2, n + 1)
        for i in range(1, k)
    }
    out: list[YoungBasisVector] = []
    for lam in enumerate_partitions(n, max_rows=min(n, d)):
        ts = _tableaux(lam)
        v_top = _top_weight_vector(lam, ts[0], d, n, trans_maps)
        weight_copies = _su_d_copies(lam, v_top, d, n)
        per_tableau: list[list[np.ndarray]] = [
            _transport(lam, w, d, trans_maps) for w in weight_copies
        ]
        digits = _digit_table_cached(d, n)
        for ti in range(len(ts)):
            for wi, copy_vecs in enumerate(per_tableau):
                vec = copy_vecs[ti]
                support = np.flatnonzero(np.abs(vec) > 1e-9)
                mu = tuple(int((digits[support[0]] == a).sum()) for a in range(d))
                out.append(
                    YoungBasisVector(
                        shape=lam,
                        tableau=ts[ti],
                        tableau_index=ti,
                        weight_index=wi,
                        weight=mu,
                        vector=Statevector(d, n, vec.astype(complex)),
                    )
                )
    if len(out) != d**n:
        raise RuntimeError(f"basis has {len(out)} vectors, expected {d**n}")
    return tuple(out)


def exact_matrix_element(u, v, f: "AlgebraElement", t: float,
                         cap: int = DEFAULT_DENSE_CAP) -> complex:
    """<u| exp(-it pi~(f)) |v> by dense Hermitian eigendecomposition.

    u and v may be YoungBasisVector or raw Statevector values.
    """
    from .group_algebra import pi_tilde_dense  # deferred: two-way module pair

    su = getattr(u, "vector", u)
    sv = getattr(v, "vector", v)
    if (su.d, su.n) != (sv.d, sv.n):
        raise SizeMismatchError("u and v live on different spaces")
    if f.n != su.n:
        raise SizeMismatchError(f"element on S_{f.n} vs {su.n} qudits")
    if not f.is_hermitian():
        raise ValueError("element is not Hermitian")
    ham = pi_tilde_dense(f, su.d, cap=cap)
    evals, evecs = np.linalg.eigh(ham)
    a = evecs.conj().T @ sv.amplitudes
    b = evecs.conj().T @ su.amplitudes
    return complex(np.vdot(b, np.exp(-1j * t * evals) * a))
