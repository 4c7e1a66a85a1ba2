"""Seeded random search for inequality violations.

Samples signed Erdos-Renyi graphs, evaluates one registry entry per sample
and records every evaluation whose verdict is ``violated``.  Findings are
reproducible: the sampled graph depends only on (seed, sample_index), and
two runs with the same configuration produce identical output regardless
of how samples are scheduled.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .bounds import REGISTRY, VIOLATED, _fmt_float, evaluate_bound
from .errors import InvalidConfigError
from .graph import SignedGraph, parse_signed_graph
from .switching import is_switching_equivalent


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one counterexample search."""

    target: str
    n_min: int
    n_max: int
    edge_probability: float
    negative_probability: float
    samples: int
    seed: int
    triangle_free_filter: bool = False
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.target not in REGISTRY:
            raise InvalidConfigError(
                f"unknown target bound {self.target!r}; known: {list(REGISTRY)}"
            )
        if self.samples < 1:
            raise InvalidConfigError(f"samples must be >= 1, got {self.samples}")
        if not 1 <= self.n_min <= self.n_max:
            raise InvalidConfigError(
                f"need 1 <= n_min <= n_max, got [{self.n_min}, {self.n_max}]"
            )
        for name, value in (
            ("edge_probability", self.edge_probability),
            ("negative_probability", self.negative_probability),
        ):
            if not 0.0 <= value <= 1.0:
                raise InvalidConfigError(f"{name} must lie in [0, 1], got {value}")
        missing = [p for p in REGISTRY[self.target].required_params if p not in self.params]
        if missing:
            raise InvalidConfigError(
                f"target {self.target} requires params {missing}; pass them in params"
            )


@dataclass(frozen=True)
class SearchFinding:
    """One recorded violation; (seed, sample_index) replays the graph."""

    graph: str  # serialized .sg text
    bound_id: str
    lhs: float
    rhs: float
    slack: float
    seed: int
    sample_index: int


def sample_signed_graph(cfg: SearchConfig, sample_index: int) -> SignedGraph:
    """The graph drawn for one sample slot; pure function of (cfg, index)."""
    rng = random.Random(f"signed-spectra:{cfg.seed}:{sample_index}")
    n = rng.randint(cfg.n_min, cfg.n_max)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < cfg.edge_probability:
                sign = -1 if rng.random() < cfg.negative_probability else 1
                edges.append((u, v, sign))
    return SignedGraph.from_edges(n, edges)


def _has_triangle(g: SignedGraph) -> bool:
    masks = [0] * g.n
    for u, v, _ in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return any(masks[u] & masks[v] for u, v, _ in g.edges)


def search_counterexamples(cfg: SearchConfig) -> list[SearchFinding]:
    """Run the configured sweep, deduplicated up to switching equivalence.

    Ordered by sample_index; a later finding is dropped when an earlier one
    has the same underlying graph and is switching equivalent to it.
    """
    kept: list[tuple[SignedGraph, SearchFinding]] = []
    for index in range(cfg.samples):
        g = sample_signed_graph(cfg, index)
        if cfg.triangle_free_filter and _has_triangle(g):
            continue
        ev = evaluate_bound(g, cfg.target, dict(cfg.params))
        if ev.verdict != VIOLATED:
            continue
        duplicate = any(
            other.n == g.n
            and other.underlying_pairs == g.underlying_pairs
            and is_switching_equivalent(other, g)
            for other, _ in kept
        )
        if duplicate:
            continue
        kept.append(
            (
                g,
                SearchFinding(
                    graph=g.to_sg(),
                    bound_id=cfg.target,
                    lhs=ev.lhs,
                    rhs=ev.rhs,
                    slack=ev.slack,
                    seed=cfg.seed,
                    sample_index=index,
                ),
            )
        )
    return [finding for _, finding in kept]


def replay_finding(finding: SearchFinding) -> SignedGraph:
    """Graph recorded in a finding (for verification against re-sampling)."""
    return parse_signed_graph(finding.graph)


def findings_to_json(findings: Sequence[SearchFinding]) -> str:
    """Deterministic JSON with floats at 12 significant digits."""
    if not findings:
        return "[]"
    items = []
    for f in findings:
        items.append(
            "{"
            f'"graph": {json.dumps(f.graph)}, '
            f'"bound_id": "{f.bound_id}", '
            f'"lhs": {_fmt_float(f.lhs)}, '
            f'"rhs": {_fmt_float(f.rhs)}, '
            f'"slack": {_fmt_float(f.slack)}, '
            f'"seed": {f.seed}, '
            f'"sample_index": {f.sample_index}'
            "}"
        )
    return "[\n  " + ",\n  ".join(items) + "\n]"
