"""Dense symmetric eigendecomposition and spectrum-derived quantities.

The eigensolver is a cyclic-by-row Jacobi iteration: simple, provably
convergent, and with excellent eigenvector orthogonality at desk scale.
It stops once the off-diagonal Frobenius norm drops below 1e-12 times the
Frobenius norm of the input, or fails after 64 sweeps.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidParamsError, NoConvergenceError, NotSymmetricError
from .graph import SignedGraph, SymmetricMatrix, adjacency_matrix
from .invariants import _max_balanced_clique

_SWEEP_LIMIT = 64
_OFF_TOL_FACTOR = 1e-12
ZERO_TOL_FACTOR = 1e-8


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted descending with matching orthonormal eigenvectors.

    ``eigenvectors`` holds the eigenvector of ``eigenvalues[i]`` in column
    i.  ``walk_coefficients[i]`` is the squared entry sum of that column;
    within a degenerate eigenspace individual coefficients are basis
    dependent but their sum is not.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    rho: float
    inertia: tuple[int, int, int]
    walk_coefficients: np.ndarray

    @property
    def s_plus(self) -> float:
        """Sum of squared positive eigenvalues (zero-tolerance classified)."""
        n_pos = self.inertia[0]
        return float(np.sum(self.eigenvalues[:n_pos] ** 2))

    @property
    def s_minus(self) -> float:
        """Sum of squared negative eigenvalues (zero-tolerance classified)."""
        n_neg = self.inertia[1]
        return float(np.sum(self.eigenvalues[len(self.eigenvalues) - n_neg :] ** 2))


def _jacobi(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic-by-row Jacobi; returns (diagonalized matrix, rotation product)."""
    n = a.shape[0]
    work = a.copy()
    vecs = np.eye(n)
    fro = float(np.linalg.norm(work))
    if n < 2 or fro == 0.0:
        return work, vecs
    threshold = _OFF_TOL_FACTOR * fro
    skip_tol = 0.1 * threshold / n

    def off_norm() -> float:
        # computed from the entries directly: the subtraction
        # ||A||_F^2 - ||diag||^2 cancels catastrophically near convergence
        off = work - np.diag(np.diag(work))
        return float(np.linalg.norm(off))

    for sweep in range(_SWEEP_LIMIT + 1):
        if off_norm() <= threshold:
            return work, vecs
        if sweep == _SWEEP_LIMIT:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if abs(apq) <= skip_tol:
                    continue
                theta = (work[q, q] - work[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = work[:, p].copy(), work[:, q].copy()
                work[:, p] = c * col_p - s * col_q
                work[:, q] = s * col_p + c * col_q
                row_p, row_q = work[p, :].copy(), work[q, :].copy()
                work[p, :] = c * row_p - s * row_q
                work[q, :] = s * row_p + c * row_q
                work[p, q] = 0.0
                work[q, p] = 0.0
                vec_p, vec_q = vecs[:, p].copy(), vecs[:, q].copy()
                vecs[:, p] = c * vec_p - s * vec_q
                vecs[:, q] = s * vec_p + c * vec_q
    raise NoConvergenceError(
        f"Jacobi iteration did not converge within {_SWEEP_LIMIT} sweeps"
    )


def eigen_decomposition(
    a: SymmetricMatrix | np.ndarray, *, zero_tol_factor: float = ZERO_TOL_FACTOR
) -> Spectrum:
    """Full eigendecomposition of a symmetric matrix.

    The input must be symmetric within 1e-12.  Eigenvalues come back sorted
    descending (stable order on ties), with eigenvector columns permuted
    accordingly.  ``zero_tol_factor`` scales the zero-eigenvalue tolerance
    used for the inertia: tau_z = zero_tol_factor * max(1, ||A||_F).
    """
    if isinstance(a, SymmetricMatrix):
        entries = a.entries
    else:
        arr = np.asarray(a, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise NotSymmetricError(f"expected a square matrix, got shape {arr.shape}")
        if arr.size and float(np.max(np.abs(arr - arr.T))) > 1e-12:
            raise NotSymmetricError("matrix is not symmetric within 1e-12")
        entries = arr
    diag, vecs = _jacobi(entries)
    vals = np.diag(diag).copy()
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    fro = float(np.linalg.norm(entries))
    tau_z = zero_tol_factor * max(1.0, fro)
    n_pos = int(np.sum(vals > tau_z))
    n_neg = int(np.sum(vals < -tau_z))
    coeffs = vecs.sum(axis=0) ** 2
    vals.setflags(write=False)
    vecs.setflags(write=False)
    coeffs.setflags(write=False)
    return Spectrum(
        eigenvalues=vals,
        eigenvectors=vecs,
        rho=float(np.max(np.abs(vals))) if vals.size else 0.0,
        inertia=(n_pos, n_neg, len(vals) - n_pos - n_neg),
        walk_coefficients=coeffs,
    )


def spectrum_of(g: SignedGraph) -> Spectrum:
    """Eigendecomposition of the signed adjacency matrix of ``g``."""
    return eigen_decomposition(adjacency_matrix(g))


def walk_from_spectrum(s: Spectrum, k: int) -> float:
    """Signed k-vertex walk count from the spectral identity sum(c_i l_i^(k-1))."""
    if k < 1:
        raise InvalidParamsError(f"walk order k must be >= 1, got {k}")
    return float(np.sum(s.walk_coefficients * s.eigenvalues ** (k - 1)))


# ---------------------------------------------------------------------------
# MS-index
# ---------------------------------------------------------------------------

def ms_index(g: SignedGraph, *, force: bool = False) -> Fraction:
    """Closed form of the quadratic-form maximum over the unit l1 sphere.

    Exact rational (omega_b - 1) / (2 * omega_b).
    """
    omega = _max_balanced_clique(g, force=force)[0]
    return Fraction(omega - 1, 2 * omega)


def ms_witness(g: SignedGraph, *, force: bool = False) -> tuple[np.ndarray, Fraction]:
    """Witness vector attaining the MS-index closed form, with exact value.

    Places +-1/omega_b on a maximum balanced clique, signed by the clique's
    consistent labeling (the switch that makes the clique all-positive,
    pulled back to the original graph).
    """
    omega, members, labels = _max_balanced_clique(g, force=force)
    x = np.zeros(g.n)
    for v, lab in zip(members, labels):
        x[v] = lab / omega
    value = Fraction(0)
    for i, u in enumerate(members):
        for j in range(i + 1, len(members)):
            w = members[j]
            value += Fraction(g.sign(u, w) * labels[i] * labels[j], omega * omega)
    return x, value


def ms_index_search(
    g: SignedGraph, iters: int = 16, seed: int = 0, *, force: bool = False
) -> float:
    """Lower-bound search for the MS-index.

    Starts from the balanced-clique witness (which already attains the
    closed form) and adds seeded random restarts of a pairwise
    mass-reallocation coordinate descent on the unit l1 sphere.  Every
    evaluated point is feasible, so the result never exceeds the true
    maximum beyond float roundoff.
    """
    if iters < 1:
        raise InvalidParamsError(f"iters must be >= 1, got {iters}")
    _, exact = ms_witness(g, force=force)
    best = float(exact)
    if g.n < 2 or g.m == 0:
        return best
    a = adjacency_matrix(g).entries
    rng = random.Random(seed)

    def polish(x: np.ndarray) -> float:
        y = a @ x
        for _ in range(40):
            improved = False
            for i in range(g.n):
                for j in range(i + 1, g.n):
                    budget = abs(x[i]) + abs(x[j])
                    if budget == 0.0:
                        continue
                    w = a[i, j]
                    gi = y[i] - w * x[j]
                    gj = y[j] - w * x[i]
                    cur = x[i] * gi + x[j] * gj + w * x[i] * x[j]
                    cand_val, cand = cur, None
                    for su in (1.0, -1.0):
                        for sj in (1.0, -1.0):
                            # value of the pair terms at x_i = su*rr,
                            # x_j = sj*(budget - rr) is a quadratic in rr
                            a2 = -su * sj * w
                            a1 = su * gi - sj * gj + su * sj * w * budget
                            a0 = sj * gj * budget
                            rrs = [0.0, budget]
                            if a2 < 0.0:
                                peak = -a1 / (2.0 * a2)
                                if 0.0 < peak < budget:
                                    rrs.append(peak)
                            for rr in rrs:
                                val = a0 + a1 * rr + a2 * rr * rr
                                if val > cand_val + 1e-13 * (1.0 + abs(cur)):
                                    cand_val, cand = val, (su * rr, sj * (budget - rr))
                    if cand is not None:
                        old_i, old_j = x[i], x[j]
                        x[i], x[j] = cand
                        y += a[:, i] * (x[i] - old_i) + a[:, j] * (x[j] - old_j)
                        improved = True
            if not improved:
                break
            norm = float(np.sum(np.abs(x)))
            if norm > 0.0:
                x /= norm
                y = a @ x
        return float(x @ (a @ x) / 2.0)

    for _ in range(iters):
        x = np.array([rng.uniform(-1.0, 1.0) for _ in range(g.n)])
        norm = float(np.sum(np.abs(x)))
        if norm == 0.0:
            continue
        best = max(best, polish(x / norm))
    return best
