"""Search for quotient space codes as cliques in the candidate-coset graph.

Candidates are the cosets of C^⊥s inside C(d-1)^⊥s, so the measurement
condition holds for any subset that contains 0̄. Two candidates are joined
when their coset distance reaches the target, and 0̄ is pinned, so an Ω of
size L is 0̄ plus an (L-1)-clique among the neighbours of 0̄.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Literal, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .config import load_settings
from .errors import BudgetExhausted, NotFound, PreconditionError, TargetExceedsDm
from .gf2_linalg import SympVector
from .qsqc_core import QscCode, verify
from .quotient import Coset, NormMode, QuotientSpace, canonicalize, coset_reps_within, quotient_min_norm
from .stabilizer import StabilizerCode, degeneracy_profile, dm

logger = logging.getLogger(__name__)

Strategy = Literal["exhaustive", "greedy"]
MAXIMIZE = "maximize"


@dataclass(frozen=True)
class SearchProblem:
    code: StabilizerCode
    d: int
    L_target: int | Literal["maximize"] = MAXIMIZE
    strategy: Strategy = "exhaustive"
    seed: int = 0
    budget: Optional[int] = None
    norm_mode: NormMode = "quantum"

    def __post_init__(self) -> None:
        if self.d < 1:
            raise PreconditionError(f"d must be >= 1, got {self.d}")
        if self.L_target != MAXIMIZE and (not isinstance(self.L_target, int) or self.L_target < 1):
            raise PreconditionError(f"L_target must be >= 1 or 'maximize', got {self.L_target!r}")
        if self.strategy not in ("exhaustive", "greedy"):
            raise PreconditionError(f"unknown strategy {self.strategy!r}")

    @property
    def required_distance(self) -> int:
        return self.d if self.norm_mode == "quantum" else 2 * self.d - 1


@dataclass(frozen=True)
class _Candidates:
    space: QuotientSpace
    reps: Tuple[int, ...]
    norm: Dict[int, int]


def _candidates(code: StabilizerCode, d: int, norm_mode: NormMode = "quantum") -> _Candidates:
    profile = degeneracy_profile(code, d)
    space = QuotientSpace(code.dual, norm_mode)
    reps = coset_reps_within(space, profile.span_dual)
    norm = {int(r): quotient_min_norm(Coset(space, SympVector(code.n, int(r)))) for r in reps}
    ordered = tuple(sorted(norm, key=lambda r: (norm[r], r)))
    logger.debug("%d candidate cosets at d=%d (s=%d)", len(ordered), d, profile.s)
    return _Candidates(space, ordered, norm)


def candidate_cosets(code: StabilizerCode, d: int, norm_mode: NormMode = "quantum") -> List[Coset]:
    """Cosets of C^⊥s inside C(d-1)^⊥s, ordered by (quotient norm, representative)."""
    table = _candidates(code, d, norm_mode)
    return [Coset(table.space, SympVector(code.n, r)) for r in table.reps]


def _build_graph(table: _Candidates, required: int) -> nx.Graph:
    nodes = [r for r in table.reps if r and table.norm[r] >= required]
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    for i, u in enumerate(nodes):
        for v in nodes[i + 1 :]:
            if table.norm[u ^ v] >= required:
                graph.add_edge(u, v)
    logger.debug("candidate graph: %d nodes, %d edges", graph.number_of_nodes(), graph.number_of_edges())
    return graph


def _greedy_clique(graph: nx.Graph, order: Sequence[int], target: Optional[int]) -> List[int]:
    clique: List[int] = []
    for v in order:
        if target is not None and len(clique) >= target:
            break
        if all(graph.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


class _BranchAndBound:
    """Maximum clique by branch and bound, pruned with a greedy colouring bound.

    A proper colouring of the whole graph stays proper on every induced
    subgraph, so the number of colours among the remaining candidates bounds
    how much a clique can still grow.
    """

    def __init__(self, graph: nx.Graph, order: Sequence[int], budget: int, target: Optional[int]):
        self.adj = {v: set(graph[v]) for v in graph}
        self.color = nx.greedy_color(graph, strategy="largest_first")
        self.order = list(order)
        self.budget = budget
        self.target = target
        self.best: List[int] = []
        self.nodes = 0

    def run(self, seed_clique: List[int]) -> List[int]:
        self.best = list(seed_clique)
        if not self._reached():
            self._expand([], self.order)
        return self.best

    def _reached(self) -> bool:
        return self.target is not None and len(self.best) >= self.target

    def _expand(self, clique: List[int], candidates: List[int]) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(self.budget, len(self.best) + 1)
        if len(clique) > len(self.best):
            self.best = list(clique)
            if self._reached():
                return True
        for i, v in enumerate(candidates):
            remaining = candidates[i:]
            if len(clique) + len({self.color[u] for u in remaining}) <= len(self.best):
                return False
            grown = [u for u in candidates[i + 1 :] if u in self.adj[v]]
            if self._expand(clique + [v], grown):
                return True
        return False


def _visit_order(table: _Candidates, graph: nx.Graph, problem: SearchProblem) -> List[int]:
    order = [r for r in table.reps if r in graph]
    if problem.strategy == "greedy" and problem.seed != 0:
        rng = np.random.default_rng(problem.seed)
        shuffled = [order[i] for i in rng.permutation(len(order))]
        # stable sort keeps the norm order and shuffles only within equal norms
        order = sorted(shuffled, key=lambda r: table.norm[r])
    return order


def find_qsc(problem: SearchProblem) -> QscCode:
    """Find Ω ∋ 0̄ with at least ``L_target`` cosets at pairwise distance >= d.

    ``exhaustive`` is complete over the candidate set: NotFound means no such
    Ω exists among cosets inside C(d-1)^⊥s. ``greedy`` is a single pass.
    """
    code, d = problem.code, problem.d
    d_m = dm(code)
    if d > d_m:
        raise TargetExceedsDm(d, int(d_m))

    table = _candidates(code, d, problem.norm_mode)
    graph = _build_graph(table, problem.required_distance)
    order = _visit_order(table, graph, problem)
    target = None if problem.L_target == MAXIMIZE else problem.L_target - 1

    clique = _greedy_clique(graph, order, target)
    if problem.strategy == "exhaustive" and (target is None or len(clique) < target):
        budget = problem.budget or load_settings().search_node_budget
        search = _BranchAndBound(graph, order, budget, target)
        clique = search.run(clique)
        logger.debug("branch and bound visited %d nodes", search.nodes)

    if target is not None and len(clique) < target:
        raise NotFound(
            f"no Ω with L={problem.L_target} at distance >= {d} among {len(table.reps)} candidates",
            strategy=problem.strategy,
            best=len(clique) + 1,
        )

    members = [0] + sorted(clique, key=order.index)
    qsc = QscCode(table.space, tuple(Coset(table.space, SympVector(code.n, r)) for r in members))
    cert = verify(code, qsc, d)
    if not cert.certified:
        raise NotFound(f"search produced an uncertifiable Ω ({cert.reason})")
    logger.info("found Ω with L=%d at d=%d (%s)", qsc.L, d, problem.strategy)
    return qsc


def extend(code: StabilizerCode, qsc: QscCode, d: int) -> QscCode:
    """Add the first candidate coset at distance >= d from every member of a certified Ω."""
    cert = verify(code, qsc, d)
    if not cert.certified:
        raise PreconditionError(f"Ω is not certified at d={d} ({cert.reason})")
    normalized, shift = qsc.normalized()
    table = _candidates(code, d, qsc.space.norm_mode)
    required = cert.required_distance
    members = [c.rep.bits for c in normalized.cosets]
    taken = set(members)
    for r in table.reps:
        if r in taken:
            continue
        if all(table.norm[r ^ m] >= required for m in members):
            added = canonicalize(qsc.space, SympVector(code.n, r) + shift)
            logger.debug("extended Ω to L=%d with %s", qsc.L + 1, added)
            return QscCode(qsc.space, qsc.cosets + (added,))
    raise NotFound(f"no candidate coset at distance >= {d} from all {qsc.L} members", L=qsc.L)
