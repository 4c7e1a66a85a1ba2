"""Registry of eigenvalue inequalities as executable checkers.

Every registered inequality is evaluated as ``lhs <= rhs + tolerance`` with
exact integer/rational combinatorics on the right-hand data and floating
eigenvalues, tolerance 1e-8 relative to the right-hand side.  Identifiers
B1..B14 carry an enforced hypothesis and are expected to hold on every
input; B8u is the deliberately unconditional triangle-free inequality,
kept around because small unbalanced cycles violate it.

Registry:
  B1   lambda_1 <= n (1 - 1/omega_b)
  B2   lambda_1^2 <= 2 (m - eps) (1 - 1/omega_b)
  B3   lambda_n(G)^2 <= m - eps_b(G)              (underlying unsigned graph)
  B4   |lambda_n(G)| <= k if n = 2k, sqrt(k(k+1)) if n = 2k+1   (unsigned)
  B5   m <= eps + (n^2/2) (1 - 1/omega_b)         (Turan-type)
  B6   lambda_1 <= sqrt(2 (m-eps) (1 - 1/floor(1/2 + sqrt(2(m-eps) + 1/4))))
  B7   lambda_1 <= sqrt(2 (m-eps) + 1/4) - 1/2    (Stanley-type)
  B8   lambda_1^2 + lambda_2^2 <= m   [no positive triangles, m >= 1,
                                       n >= 3, lambda_1 >= |lambda_n|]
  B8u  lambda_1^2 + lambda_2^2 <= m   [unconditional probe]
  B9   lambda_1^2 <= m + (6 t_s)^(2/3)            [t_s >= 0]
  B10  lambda_1^r <= (w_r(G) - eps_r) (1 - 1/omega_b)   (parameter r)
  B11  w_{q+r} / w_q <= rho^r                     [q odd; skipped if w_q <= 0]
  B12  min(lambda_1^2, lambda_n^2) <= m           (dichotomy)
  B13  ms_index_search <= (omega_b - 1)/(2 omega_b), witness attains it
  B14  0 <= lambda_2   [no positive triangles, n >= 3, and a triangle or a
                        2-path in a triangle-free underlying graph]
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .errors import MissingParamError, TooLargeError, UnknownBoundError
from .graph import SignedGraph, adjacency_matrix
from .invariants import (
    CLIQUE_MAX_N,
    FRUSTRATION_MAX_N,
    R_FRUSTRATION_MAX_N,
    TriangleCensus,
    WalkCensus,
    _check_guard,
    _max_balanced_clique,
    frustration_index_exact,
    r_frustration_index,
    triangle_census,
    walk_census,
)
from .spectral import Spectrum, eigen_decomposition, ms_index, ms_index_search, ms_witness

HOLDS = "holds"
VIOLATED = "violated"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"
SKIPPED = "skipped"

_REL_TOL = 1e-8


@dataclass(frozen=True)
class BoundEvaluation:
    """One inequality instance: hypothesis status, sides, slack, verdict."""

    bound_id: str
    hypothesis_met: bool
    lhs: float
    rhs: float
    slack: float
    verdict: str
    tolerance: float
    params: Mapping[str, int] = field(default_factory=dict)
    note: str = ""


# Cross-graph caches: quantities of the underlying unsigned graph are shared
# by all 2^m signings, which matters for exhaustive sweeps.  Guards run at
# access time (in _Ctx), never inside a cached call, so the environment
# override keeps working regardless of cache state.

@lru_cache(maxsize=8192)
def _cached_spectrum(g: SignedGraph) -> Spectrum:
    return eigen_decomposition(adjacency_matrix(g))


@lru_cache(maxsize=8192)
def _cached_frustration(g: SignedGraph) -> int:
    return frustration_index_exact(g, force=True)


@lru_cache(maxsize=8192)
def _cached_omega(g: SignedGraph) -> int:
    return _max_balanced_clique(g, force=True)[0]


@lru_cache(maxsize=8192)
def _cached_walks(g: SignedGraph, r: int) -> WalkCensus:
    return walk_census(g, r)


@lru_cache(maxsize=8192)
def _cached_eps_r(g: SignedGraph, r: int) -> int:
    return r_frustration_index(g, r, force=True)


class _Ctx:
    """Lazily computed shared quantities for one evaluation target."""

    def __init__(self, g: SignedGraph, force: bool):
        self.g = g
        self.force = force
        self._census: TriangleCensus | None = None

    @property
    def spectrum(self) -> Spectrum:
        return _cached_spectrum(self.g)

    @property
    def unsigned(self) -> SignedGraph:
        return self.g.with_all_signs(1) if self.g.m else self.g

    @property
    def unsigned_spectrum(self) -> Spectrum:
        return _cached_spectrum(self.unsigned)

    @property
    def eps(self) -> int:
        _check_guard(self.g.n, FRUSTRATION_MAX_N, self.force, "frustration_index_exact")
        return _cached_frustration(self.g)

    @property
    def eps_b(self) -> int:
        _check_guard(self.g.n, FRUSTRATION_MAX_N, self.force, "edge_bipartiteness")
        return _cached_frustration(self.g.with_all_signs(-1) if self.g.m else self.g)

    @property
    def omega_b(self) -> int:
        _check_guard(self.g.n, CLIQUE_MAX_N, self.force, "balanced_clique_number")
        return _cached_omega(self.g)

    @property
    def census(self) -> TriangleCensus:
        if self._census is None:
            self._census = triangle_census(self.g)
        return self._census

    def walks(self, r: int) -> WalkCensus:
        return _cached_walks(self.g, r)

    def unsigned_walks(self, r: int) -> int:
        return _cached_walks(self.unsigned, r).w_total

    def eps_r(self, r: int) -> int:
        _check_guard(self.g.n, R_FRUSTRATION_MAX_N, self.force, "r_frustration_index")
        return _cached_eps_r(self.g, r)

    @property
    def lambda1(self) -> float:
        return float(self.spectrum.eigenvalues[0])

    @property
    def lambda2(self) -> float:
        vals = self.spectrum.eigenvalues
        return float(vals[1]) if len(vals) > 1 else 0.0

    @property
    def lambda_n(self) -> float:
        return float(self.spectrum.eigenvalues[-1])


_Outcome = tuple[bool, float, float, str]  # hypothesis_met, lhs, rhs, note


def _eval_b1(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    return True, ctx.lambda1, ctx.g.n * (1.0 - 1.0 / ctx.omega_b), ""


def _eval_b2(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    rhs = 2.0 * (ctx.g.m - ctx.eps) * (1.0 - 1.0 / ctx.omega_b)
    return True, ctx.lambda1 ** 2, rhs, ""


def _eval_b3(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    lam_n = float(ctx.unsigned_spectrum.eigenvalues[-1])
    return True, lam_n ** 2, float(ctx.g.m - ctx.eps_b), ""


def _eval_b4(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    lam_n = float(ctx.unsigned_spectrum.eigenvalues[-1])
    if ctx.g.n % 2 == 0:
        rhs = ctx.g.n / 2.0
    else:
        k = (ctx.g.n - 1) // 2
        rhs = math.sqrt(k * (k + 1))
    return True, abs(lam_n), rhs, ""


def _eval_b5(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    rhs = ctx.eps + (ctx.g.n ** 2 / 2.0) * (1.0 - 1.0 / ctx.omega_b)
    return True, float(ctx.g.m), rhs, ""


def _eval_b6(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    m_eff = ctx.g.m - ctx.eps
    k = (1 + math.isqrt(8 * m_eff + 1)) // 2
    rhs = math.sqrt(2.0 * m_eff * (1.0 - 1.0 / k))
    return True, ctx.lambda1, rhs, ""


def _eval_b7(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    m_eff = ctx.g.m - ctx.eps
    return True, ctx.lambda1, math.sqrt(2.0 * m_eff + 0.25) - 0.5, ""


def _b8_sides(ctx: _Ctx) -> tuple[float, float]:
    return ctx.lambda1 ** 2 + ctx.lambda2 ** 2, float(ctx.g.m)


def _eval_b8(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    lhs, rhs = _b8_sides(ctx)
    spectral_ok = ctx.lambda1 >= abs(ctx.lambda_n) - _REL_TOL * max(1.0, abs(ctx.lambda_n))
    hyp = ctx.census.t_plus == 0 and ctx.g.m >= 1 and ctx.g.n >= 3 and spectral_ok
    note = (
        "triangle-free underlying graph (t_s = 0 reading)"
        if ctx.census.total == 0
        else "negative triangles present (t_s < 0 reading)"
    )
    return hyp, lhs, rhs, note


def _eval_b8u(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    lhs, rhs = _b8_sides(ctx)
    return True, lhs, rhs, "unconditional probe; violations are expected"


def _eval_b9(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    t_s = ctx.census.t_s
    hyp = t_s >= 0
    rhs = ctx.g.m + (6.0 * max(t_s, 0)) ** (2.0 / 3.0)
    return hyp, ctx.lambda1 ** 2, rhs, ""


def _eval_b10(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    r = p["r"]
    rhs = (ctx.unsigned_walks(r) - ctx.eps_r(r)) * (1.0 - 1.0 / ctx.omega_b)
    return True, ctx.lambda1 ** r, rhs, ""


def _eval_b11(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    q, r = p["q"], p["r"]
    hyp = q % 2 == 1
    w_q = ctx.walks(q).w_signed
    if hyp and w_q <= 0:
        return hyp, 0.0, ctx.spectrum.rho ** r, f"skipped: w_{q} = {w_q} <= 0"
    lhs = ctx.walks(q + r).w_signed / w_q if w_q > 0 else 0.0
    return hyp, lhs, ctx.spectrum.rho ** r, ""


def _eval_b12(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    lhs = min(ctx.lambda1 ** 2, ctx.lambda_n ** 2)
    return True, lhs, float(ctx.g.m), ""


def _eval_b13(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    exact = ms_index(ctx.g, force=ctx.force)
    _, witness_value = ms_witness(ctx.g, force=ctx.force)
    lhs = ms_index_search(
        ctx.g, iters=p.get("iters", 2), seed=p.get("seed", 0), force=ctx.force
    )
    note = ""
    if witness_value != exact:
        note = f"witness value {witness_value} does not attain the closed form {exact}"
    return True, lhs, float(exact), note


def _eval_b14(ctx: _Ctx, p: Mapping[str, int]) -> _Outcome:
    has_triangle = ctx.census.total > 0
    has_two_path = any(ctx.g.degree(v) >= 2 for v in range(ctx.g.n))
    hyp = ctx.census.t_plus == 0 and ctx.g.n >= 3 and (has_triangle or has_two_path)
    return hyp, 0.0, ctx.lambda2, ""


@dataclass(frozen=True)
class BoundInfo:
    bound_id: str
    summary: str
    enforced: bool
    required_params: tuple[str, ...]
    evaluator: Callable[[_Ctx, Mapping[str, int]], _Outcome]


REGISTRY: dict[str, BoundInfo] = {
    info.bound_id: info
    for info in (
        BoundInfo("B1", "lambda_1 <= n (1 - 1/omega_b)", True, (), _eval_b1),
        BoundInfo("B2", "lambda_1^2 <= 2 (m - eps) (1 - 1/omega_b)", True, (), _eval_b2),
        BoundInfo("B3", "lambda_n(G)^2 <= m - eps_b(G) on the unsigned graph", True, (), _eval_b3),
        BoundInfo("B4", "|lambda_n(G)| <= k or sqrt(k(k+1)) on the unsigned graph", True, (), _eval_b4),
        BoundInfo("B5", "m <= eps + (n^2/2)(1 - 1/omega_b)", True, (), _eval_b5),
        BoundInfo("B6", "lambda_1 <= sqrt(2 (m-eps) (1 - 1/floor(1/2 + sqrt(2(m-eps)+1/4))))", True, (), _eval_b6),
        BoundInfo("B7", "lambda_1 <= sqrt(2 (m-eps) + 1/4) - 1/2", True, (), _eval_b7),
        BoundInfo("B8", "lambda_1^2 + lambda_2^2 <= m under the no-positive-triangle hypothesis", True, (), _eval_b8),
        BoundInfo("B8u", "lambda_1^2 + lambda_2^2 <= m, unconditional probe", False, (), _eval_b8u),
        BoundInfo("B9", "lambda_1^2 <= m + (6 t_s)^(2/3) when t_s >= 0", True, (), _eval_b9),
        BoundInfo("B10", "lambda_1^r <= (w_r(G) - eps_r)(1 - 1/omega_b)", True, ("r",), _eval_b10),
        BoundInfo("B11", "w_(q+r)/w_q <= rho^r for odd q", True, ("q", "r"), _eval_b11),
        BoundInfo("B12", "min(lambda_1^2, lambda_n^2) <= m", True, (), _eval_b12),
        BoundInfo("B13", "search lower bound <= (omega_b - 1)/(2 omega_b), witness attains it", True, (), _eval_b13),
        BoundInfo("B14", "0 <= lambda_2 under the no-positive-triangle hypothesis", True, (), _eval_b14),
    )
}

#: Evaluation order for evaluate_all: registry order with parameter fan-out.
BOUND_ORDER: tuple[str, ...] = tuple(REGISTRY)

DEFAULT_B10_RS: tuple[int, ...] = (1, 2, 3)
DEFAULT_B11_QRS: tuple[tuple[int, int], ...] = ((1, 1), (1, 2), (3, 1))


def enforced_bound_ids() -> frozenset[str]:
    """Identifiers whose hypothesis is enforced; they must never be violated."""
    return frozenset(i for i, info in REGISTRY.items() if info.enforced)


def evaluate_bound(
    g: SignedGraph,
    bound_id: str,
    params: Mapping[str, int] | None = None,
    *,
    force: bool = False,
) -> BoundEvaluation:
    """Evaluate one registry entry on ``g``.

    Raises UnknownBoundError for unregistered ids, MissingParamError when a
    parametrized entry (B10, B11) lacks its parameters, and propagates
    TooLargeError from guarded invariants.
    """
    info = REGISTRY.get(bound_id)
    if info is None:
        raise UnknownBoundError(f"unknown bound id {bound_id!r}; known: {list(REGISTRY)}")
    params = dict(params or {})
    for name in info.required_params:
        if name not in params:
            raise MissingParamError(f"{bound_id} requires parameter {name!r}")
    ctx = _Ctx(g, force)
    hyp, lhs, rhs, note = info.evaluator(ctx, params)
    tolerance = _REL_TOL * max(1.0, abs(rhs))
    if note.startswith("skipped"):
        verdict = SKIPPED
    elif not hyp:
        verdict = HYPOTHESIS_NOT_MET
    elif note.startswith("witness value"):
        verdict = VIOLATED
    elif lhs <= rhs + tolerance:
        verdict = HOLDS
    else:
        verdict = VIOLATED
    return BoundEvaluation(
        bound_id=bound_id,
        hypothesis_met=hyp,
        lhs=float(lhs),
        rhs=float(rhs),
        slack=float(rhs) - float(lhs),
        verdict=verdict,
        tolerance=tolerance,
        params=params,
        note=note,
    )


def evaluate_all(
    g: SignedGraph,
    *,
    rs: Sequence[int] = DEFAULT_B10_RS,
    qr_pairs: Sequence[tuple[int, int]] = DEFAULT_B11_QRS,
    force: bool = False,
    ms_iters: int = 2,
    ms_seed: int = 0,
) -> list[BoundEvaluation]:
    """Evaluate every registry entry in deterministic id order.

    B10 fans out over ``rs`` and B11 over ``qr_pairs``.  Entries whose
    guarded invariants overflow their guard come back with verdict
    ``skipped`` instead of aborting the sequence.
    """
    plan: list[tuple[str, dict[str, int]]] = []
    for bound_id in BOUND_ORDER:
        if bound_id == "B10":
            plan.extend((bound_id, {"r": int(r)}) for r in rs)
        elif bound_id == "B11":
            plan.extend((bound_id, {"q": int(q), "r": int(r)}) for q, r in qr_pairs)
        elif bound_id == "B13":
            plan.append((bound_id, {"iters": ms_iters, "seed": ms_seed}))
        else:
            plan.append((bound_id, {}))
    out: list[BoundEvaluation] = []
    for bound_id, params in plan:
        try:
            out.append(evaluate_bound(g, bound_id, params, force=force))
        except TooLargeError as exc:
            out.append(
                BoundEvaluation(
                    bound_id=bound_id,
                    hypothesis_met=False,
                    lhs=0.0,
                    rhs=0.0,
                    slack=0.0,
                    verdict=SKIPPED,
                    tolerance=_REL_TOL,
                    params=params,
                    note=f"skipped: {exc}",
                )
            )
    return out


# ---------------------------------------------------------------------------
# JSON report (bit-exact: floats at 12 significant digits)
# ---------------------------------------------------------------------------

def _fmt_float(x: float) -> str:
    return format(float(x), ".12g")


def evaluation_to_json(ev: BoundEvaluation) -> str:
    params = ", ".join(f'"{k}": {int(v)}' for k, v in sorted(ev.params.items()))
    return (
        "{"
        f'"bound_id": "{ev.bound_id}", '
        f'"hypothesis_met": {"true" if ev.hypothesis_met else "false"}, '
        f'"lhs": {_fmt_float(ev.lhs)}, '
        f'"rhs": {_fmt_float(ev.rhs)}, '
        f'"slack": {_fmt_float(ev.slack)}, '
        f'"verdict": "{ev.verdict}", '
        f'"tolerance": {_fmt_float(ev.tolerance)}, '
        '"params": {' + params + "}"
        "}"
    )


def evaluations_to_json(evals: Sequence[BoundEvaluation]) -> str:
    if not evals:
        return "[]"
    return "[\n  " + ",\n  ".join(evaluation_to_json(ev) for ev in evals) + "\n]"
