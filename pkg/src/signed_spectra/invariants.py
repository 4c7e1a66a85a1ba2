"""Exact and heuristic computation of the combinatorial invariants.

Frustration index, edge bipartiteness and the r-frustration index are
computed exactly by enumerating all 2^(n-1) switchings (vertex 0 is pinned,
eta and -eta coincide).  Enumeration is chunked and vectorized, so results
are independent of chunk size; guards cap the exponent and can be lifted
with ``force=True`` or the ``SIGNED_SPECTRA_MAX_N`` environment variable.

Walk counts are exact integer matrix powers with 64-bit overflow detection.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import InvalidParamsError, TooLargeError
from .graph import SignedGraph, all_negative
from .switching import propagation_labels

FRUSTRATION_MAX_N = 25
R_FRUSTRATION_MAX_N = 20
CLIQUE_MAX_N = 40

_INT64_MAX = 2**63 - 1
_CHUNK_BITS = 18  # switching enumeration chunk size: 2^18 masks


def _guard_limit(default: int) -> int:
    raw = os.environ.get("SIGNED_SPECTRA_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidParamsError(
            f"SIGNED_SPECTRA_MAX_N must be an integer, got {raw!r}"
        ) from None


def _check_guard(n: int, default: int, force: bool, what: str) -> None:
    if force:
        return
    limit = _guard_limit(default)
    if n > limit:
        raise TooLargeError(
            f"{what}: n={n} exceeds the exact-computation guard {limit} "
            "(pass force=True or set SIGNED_SPECTRA_MAX_N to override)",
            n=n,
            limit=limit,
        )


# ---------------------------------------------------------------------------
# Frustration index
# ---------------------------------------------------------------------------

def _switching_mask_chunks(n: int):
    """Yield uint32 arrays of switching masks, bit v set <=> eta(v) = -1.

    Vertex 0 is pinned to +1, so masks are the 2^(n-1) values shifted left
    by one (bit 0 always clear).
    """
    total = 1 << max(n - 1, 0)
    step = 1 << _CHUNK_BITS
    for start in range(0, total, step):
        stop = min(start + step, total)
        yield np.arange(start, stop, dtype=np.uint32) << np.uint32(1)


def frustration_index_exact(g: SignedGraph, *, force: bool = False) -> int:
    """Minimum number of negative edges over the whole switching class.

    This equals the minimum number of edge deletions that leave a balanced
    graph; the deletion formulation is kept as an independent test oracle.
    Exponential in n (guard: n <= 25).
    """
    _check_guard(g.n, FRUSTRATION_MAX_N, force, "frustration_index_exact")
    if g.m == 0:
        return 0
    us = np.array([u for u, _, _ in g.sorted_edges()], dtype=np.uint32)
    vs = np.array([v for _, v, _ in g.sorted_edges()], dtype=np.uint32)
    neg = np.array([1 if s < 0 else 0 for _, _, s in g.sorted_edges()], dtype=np.uint32)
    best = g.m
    for masks in _switching_mask_chunks(g.n):
        count = np.zeros(masks.shape, dtype=np.uint32)
        for u, v, isneg in zip(us, vs, neg):
            diff = ((masks >> u) ^ (masks >> v)) & np.uint32(1)
            count += diff ^ isneg
        best = min(best, int(count.min()))
        if best == 0:
            break
    return best


def frustration_index_upper(g: SignedGraph, iters: int = 100, seed: int = 0) -> int:
    """Heuristic upper bound on the frustration index for graphs of any size.

    Single-vertex-flip local search; start 0 is the spanning-forest
    propagation labeling (so balanced graphs always reach 0), followed by
    ``iters`` random restarts.  Ties are broken by lowest vertex index.
    """
    if iters < 1:
        raise InvalidParamsError(f"iters must be >= 1, got {iters}")
    if g.m == 0:
        return 0
    incident: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v, s in g.edges:
        incident[u].append((v, s))
        incident[v].append((u, s))

    def descend(eta: list[int]) -> int:
        m_minus = sum(1 for u, v, s in g.edges if eta[u] * s * eta[v] < 0)
        while True:
            best_delta, best_v = 0, -1
            for v in range(g.n):
                neg_inc = sum(1 for w, s in incident[v] if eta[v] * s * eta[w] < 0)
                delta = (len(incident[v]) - neg_inc) - neg_inc
                if delta < best_delta:
                    best_delta, best_v = delta, v
            if best_v < 0:
                return m_minus
            eta[best_v] = -eta[best_v]
            m_minus += best_delta

    labels, _, _ = propagation_labels(g)
    best = descend(list(labels))
    rng = random.Random(seed)
    for _ in range(iters):
        if best == 0:
            break
        best = min(best, descend([rng.choice((1, -1)) for _ in range(g.n)]))
    return best


def edge_bipartiteness(g: SignedGraph, *, force: bool = False) -> int:
    """Least number of edge deletions making the underlying graph bipartite.

    Equals the frustration index of (G, -1): that graph is balanced exactly
    when G is bipartite.
    """
    _check_guard(g.n, FRUSTRATION_MAX_N, force, "edge_bipartiteness")
    return frustration_index_exact(all_negative(g), force=True)


# ---------------------------------------------------------------------------
# Balanced clique number
# ---------------------------------------------------------------------------

def _max_balanced_clique(g: SignedGraph, *, force: bool = False) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Branch-and-bound maximum balanced clique.

    Returns (size, members, labels); labels are vertex signs with
    sign(u, v) = label(u) * label(v) on every clique edge, normalizing the
    lowest member to +1.  A clique admitting such labels is exactly a
    balanced complete subgraph.
    """
    _check_guard(g.n, CLIQUE_MAX_N, force, "balanced_clique_number")
    if g.n == 0:
        raise InvalidParamsError("balanced clique number needs at least one vertex")
    best_size = 1
    best_members: tuple[int, ...] = (0,)
    best_labels: tuple[int, ...] = (1,)

    def extend(members: list[int], labels: list[int], cand: list[tuple[int, int]]) -> None:
        nonlocal best_size, best_members, best_labels
        if len(members) > best_size:
            best_size = len(members)
            best_members = tuple(members)
            best_labels = tuple(labels)
        for idx, (v, lv) in enumerate(cand):
            if len(members) + len(cand) - idx <= best_size:
                return
            nxt = [
                (w, lw)
                for w, lw in cand[idx + 1 :]
                if g.has_edge(v, w) and g.sign(v, w) == lv * lw
            ]
            extend(members + [v], labels + [lv], nxt)

    for v in range(g.n):
        if 1 + (g.n - v - 1) <= best_size:
            break
        cand = [(w, g.sign(v, w)) for w in g.neighbors(v) if w > v]
        extend([v], [1], cand)
    return best_size, best_members, best_labels


def balanced_clique_number(g: SignedGraph, *, force: bool = False) -> int:
    """Largest vertex count of a balanced complete subgraph (>= 1).

    A single vertex counts as a balanced clique, so an edgeless graph has
    value 1.  Guard: n <= 40.
    """
    return _max_balanced_clique(g, force=force)[0]


def greedy_balanced_clique(g: SignedGraph) -> int:
    """Deterministic greedy lower bound for the balanced clique number."""
    if g.n == 0:
        raise InvalidParamsError("balanced clique number needs at least one vertex")
    best = 1
    for start in range(g.n):
        members = [start]
        labels = {start: 1}
        for w in range(g.n):
            if w in labels:
                continue
            if not all(g.has_edge(u, w) for u in members):
                continue
            lw = g.sign(members[0], w) * labels[members[0]]
            if all(g.sign(u, w) == labels[u] * lw for u in members):
                members.append(w)
                labels[w] = lw
        best = max(best, len(members))
    return best


# ---------------------------------------------------------------------------
# Triangle census
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangleCensus:
    """Counts of positive and negative triangles and their difference."""

    t_plus: int
    t_minus: int

    @property
    def t_s(self) -> int:
        return self.t_plus - self.t_minus

    @property
    def total(self) -> int:
        return self.t_plus + self.t_minus


def triangle_census(g: SignedGraph) -> TriangleCensus:
    """Enumerate all triangles; classify by the product of their edge signs.

    6 * t_s equals trace(A^3) exactly in integer arithmetic.
    """
    masks = [0] * g.n
    for u, v, _ in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    t_plus = t_minus = 0
    for u, v, s_uv in g.edges:
        common = masks[u] & masks[v] & ~((1 << (v + 1)) - 1)  # w > v only
        while common:
            w_bit = common & -common
            w = w_bit.bit_length() - 1
            common ^= w_bit
            if s_uv * g.sign(u, w) * g.sign(v, w) > 0:
                t_plus += 1
            else:
                t_minus += 1
    return TriangleCensus(t_plus, t_minus)


# ---------------------------------------------------------------------------
# Walk censuses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WalkCensus:
    """Counts of ordered r-vertex walks (length r-1), split by walk sign."""

    r: int
    w_total: int
    w_signed: int
    w_pos: int
    w_neg: int


def _int_matrices(g: SignedGraph) -> tuple[np.ndarray, np.ndarray]:
    unsigned = np.zeros((g.n, g.n), dtype=np.int64)
    signed = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        unsigned[u, v] = unsigned[v, u] = 1
        signed[u, v] = signed[v, u] = s
    return unsigned, signed


def _walk_power_matrices(g: SignedGraph, r: int) -> tuple[np.ndarray, np.ndarray]:
    """(|A|^(r-1), A^(r-1)) as exact integer matrices.

    Raises OverflowError once entries leave the 64-bit range.  Entrywise
    |A^k| <= |A|^k, so checking the unsigned power covers both.  When a
    step might overflow int64 it is redone exactly (object dtype) for
    n <= 64; beyond that the predictive bound itself raises.
    """
    if r < 1:
        raise InvalidParamsError(f"walk order r must be >= 1, got {r}")
    au, asn = _int_matrices(g)
    pu = np.eye(g.n, dtype=np.int64)
    ps = np.eye(g.n, dtype=np.int64)
    max_degree = int(au.sum(axis=0).max()) if g.n else 0
    for _ in range(r - 1):
        cur_max = int(pu.max()) if g.n else 0
        if max_degree and cur_max > _INT64_MAX // max_degree:
            if g.n > 64:
                raise OverflowError(
                    "walk counts exceed the 64-bit integer range"
                )
            exact = pu.astype(object) @ au.astype(object)
            if int(max(map(max, exact.tolist()), default=0)) > _INT64_MAX:
                raise OverflowError("walk counts exceed the 64-bit integer range")
            pu = exact.astype(np.int64)
            ps = (ps.astype(object) @ asn.astype(object)).astype(np.int64)
        else:
            pu = pu @ au
            ps = ps @ asn
    return pu, ps


def walk_census(g: SignedGraph, r: int) -> WalkCensus:
    """Exact walk counts: w_total from |A|^(r-1), w_signed = e^T A^(r-1) e."""
    pu, ps = _walk_power_matrices(g, r)
    w_total = int(pu.sum(dtype=object)) if g.n else 0
    w_signed = int(ps.sum(dtype=object)) if g.n else 0
    if w_total > _INT64_MAX:
        raise OverflowError("walk counts exceed the 64-bit integer range")
    return WalkCensus(
        r=r,
        w_total=w_total,
        w_signed=w_signed,
        w_pos=(w_total + w_signed) // 2,
        w_neg=(w_total - w_signed) // 2,
    )


def r_frustration_index(g: SignedGraph, r: int, *, force: bool = False) -> int:
    """Minimum count of negative r-walks over the switching class.

    Uses A(switched)^(r-1) = D A^(r-1) D, so one integer matrix power plus a
    quadratic form per switching suffices.  Guard: n <= 20.  Note the
    ordered-walk convention: every negative edge yields two negative
    2-walks, hence eps_2 = 2 * eps.
    """
    if r < 1:
        raise InvalidParamsError(f"walk order r must be >= 1, got {r}")
    _check_guard(g.n, R_FRUSTRATION_MAX_N, force, "r_frustration_index")
    if g.n == 0 or g.m == 0 or r == 1:
        return 0
    pu, ps = _walk_power_matrices(g, r)
    w_total = int(pu.sum(dtype=object))
    if w_total > _INT64_MAX:
        raise OverflowError("walk counts exceed the 64-bit integer range")
    best_signed = -w_total
    for masks in _switching_mask_chunks(g.n):
        signs = np.ones((masks.shape[0], g.n), dtype=np.int64)
        for v in range(1, g.n):
            signs[:, v] -= 2 * (((masks >> np.uint32(v)) & np.uint32(1)).astype(np.int64))
        vals = np.einsum("ij,ij->i", signs @ ps, signs)
        best_signed = max(best_signed, int(vals.max()))
    return (w_total - best_signed) // 2


# ---------------------------------------------------------------------------
# Aggregate report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    """Bundle of the combinatorial invariants with per-field exactness flags.

    Fields beyond their guard fall back to bounds: local-search upper
    bounds for frustration and edge bipartiteness, a greedy lower bound for
    the balanced clique number.  ``exact_flags`` records which path ran.
    """

    frustration: int
    edge_bipartiteness: int
    balanced_clique: int
    triangle_census: TriangleCensus
    exact_flags: Mapping[str, bool]


def compute_invariant_report(
    g: SignedGraph,
    *,
    force: bool = False,
    heuristic_iters: int = 200,
    seed: int = 0,
) -> InvariantReport:
    """Compute all report invariants, falling back to heuristics over guard."""
    flags: dict[str, bool] = {}
    try:
        frustration = frustration_index_exact(g, force=force)
        flags["frustration"] = True
    except TooLargeError:
        frustration = frustration_index_upper(g, iters=heuristic_iters, seed=seed)
        flags["frustration"] = False
    try:
        eps_b = edge_bipartiteness(g, force=force)
        flags["edge_bipartiteness"] = True
    except TooLargeError:
        eps_b = frustration_index_upper(all_negative(g), iters=heuristic_iters, seed=seed)
        flags["edge_bipartiteness"] = False
    try:
        omega_b = balanced_clique_number(g, force=force)
        flags["balanced_clique"] = True
    except TooLargeError:
        omega_b = greedy_balanced_clique(g)
        flags["balanced_clique"] = False
    flags["triangle_census"] = True  # polynomial, always exact
    return InvariantReport(
        frustration=frustration,
        edge_bipartiteness=eps_b,
        balanced_clique=omega_b,
        triangle_census=triangle_census(g),
        exact_flags=flags,
    )
