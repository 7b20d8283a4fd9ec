"""End-to-end solver: reduce while a configuration exists, search the rest.

``solve`` recursively shrinks the graph through the reducible
configurations, handles the two exceptional cliques directly, and resolves
irreducible graphs by exact bounded search (their even-degree core is a
forest, so a decomposition into floor(n/2) paths exists and the search is
guaranteed a target).  Every lift is re-verified on the way back up, so a
returned result is always checked end to end.

``min_decomposition`` is the independent oracle: iterative deepening on the
exact search, starting from the combinatorial lower bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph
from .paths import Path, PathDecomposition, lower_bound, verify
from .reductions import check_structure, detect, lift, reduce
from .search import BudgetExhaustedError, cover_with_paths

__all__ = [
    "SolveError",
    "SolveResult",
    "SolveTrace",
    "BudgetExhaustedError",
    "min_decomposition",
    "solve",
    "solve_base",
]


class SolveError(RuntimeError):
    """Input rejected or an internal guarantee failed during solving."""


@dataclass(frozen=True)
class ReductionStep:
    order: int  # vertex count of the graph the reduction was applied to
    tag: str
    subcase: str


@dataclass(frozen=True)
class SolveTrace:
    steps: tuple[ReductionStep, ...]
    base_cases: tuple[str, ...]

    @property
    def base_case(self) -> str:
        return self.base_cases[0]


@dataclass(frozen=True)
class SolveResult:
    decomposition: PathDecomposition
    trace: SolveTrace
    verified: bool


_K3_PATHS = ((0, 1, 2), (0, 2))
_K5_PATHS = ((0, 1, 2, 3, 4), (0, 2, 4, 1, 3), (4, 0, 3))


def _clique_decomposition(g: Graph, template) -> PathDecomposition:
    order = tuple(range(g.n))
    return PathDecomposition(
        tuple(Path(tuple(order[i] for i in seq)) for seq in template)
    )


def solve(g: Graph, budget: int | None = None) -> SolveResult:
    """Decompose a connected graph with max degree <= 5 into at most
    ceil(n/2) paths, verified."""
    if not g.is_connected():
        raise SolveError("graph is not connected")
    if g.n and g.m and g.max_degree() > 5:
        raise SolveError("max degree exceeds 5")
    result = _solve(g, budget)
    report = verify(g, result.decomposition)
    if not (report.valid and report.good):
        raise SolveError(f"internal error: final decomposition not good:\n{report}")
    return result


def _solve(g: Graph, budget: int | None) -> SolveResult:
    if g.m == 0:
        return SolveResult(
            PathDecomposition(()), SolveTrace((), ("trivial",)), True
        )
    if g.n == 3 and g.m == 3:
        d = _clique_decomposition(g, _K3_PATHS)
        return SolveResult(d, SolveTrace((), ("K3",)), True)
    if g.n == 5 and g.m == 10:
        d = _clique_decomposition(g, _K5_PATHS)
        return SolveResult(d, SolveTrace((), ("K5",)), True)
    occ = detect(g)
    if occ is None:
        if not check_structure(g):
            raise SolveError(
                "irreducible graph has a cyclic even-degree core; "
                "this contradicts the structure guarantee"
            )
        k = (g.n + 1) // 2
        d = solve_base(g, k, budget)
        if d is None:
            raise SolveError(
                f"exact search found no decomposition into {k} paths; "
                "this contradicts the decomposition guarantee"
            )
        return SolveResult(d, SolveTrace((), (f"search(k={k})",)), True)
    instance = reduce(g, occ)
    plan = instance.plan
    child_results = [_solve(child.graph, budget) for child in plan.children]
    lifted = lift(occ, plan, [r.decomposition for r in child_results])
    step = ReductionStep(g.n, plan.tag, plan.subcase)
    steps = (step,) + tuple(
        itertools.chain.from_iterable(r.trace.steps for r in child_results)
    )
    bases = tuple(
        itertools.chain.from_iterable(r.trace.base_cases for r in child_results)
    )
    return SolveResult(lifted, SolveTrace(steps, bases), True)


def solve_base(
    g: Graph, k: int, budget: int | None = None
) -> PathDecomposition | None:
    """Exact search for a decomposition into at most k paths, or None.

    Complete and deterministic; raises BudgetExhaustedError if the node
    budget runs out before an answer is certain.
    """
    if not g.is_connected():
        raise SolveError("graph is not connected")
    if g.m == 0:
        raise SolveError("graph has no edges")
    cover = cover_with_paths(frozenset(g.edges()), k, budget)
    if cover is None:
        return None
    return PathDecomposition(tuple(Path(seq) for seq in cover))


def min_decomposition(
    g: Graph, budget: int | None = None
) -> tuple[int, PathDecomposition]:
    """Exact minimum number of paths, by iterative deepening from the
    lower bound."""
    if g.m == 0:
        raise SolveError("graph has no edges")
    if not g.is_connected():
        raise SolveError("graph is not connected")
    k = lower_bound(g)
    while True:
        d = solve_base(g, k, budget)
        if d is not None:
            return k, d
        k += 1
