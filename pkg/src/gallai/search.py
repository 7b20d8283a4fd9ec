"""Exact depth-first search for partitioning an edge set into few paths.

The engine always grows a path through the lexicographically smallest
uncovered edge, extending first at the tail and then at the head, trying
neighbours in ascending order and exploring longer extensions before
shorter ones.  Pruning uses the residual lower bound (odd-degree endpoints
and edges-per-path capacity), which keeps the search exact.
"""

from __future__ import annotations

from .graphs import Edge, edge


class BudgetExhaustedError(RuntimeError):
    """The node budget ran out before the search could decide."""


def residual_lower_bound(edges: frozenset[Edge]) -> int:
    """Minimum number of paths any partition of this edge set needs."""
    if not edges:
        return 0
    degree: dict[int, int] = {}
    for a, b in edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    odd = sum(1 for count in degree.values() if count % 2 == 1)
    per_path = len(degree) - 1
    return max((odd + 1) // 2, -(-len(edges) // per_path))


def cover_with_paths(
    edges: frozenset[Edge], k: int, budget: int | None = None
) -> list[tuple[int, ...]] | None:
    """Partition the edge set into at most k simple paths, or None.

    Deterministic and complete: if any partition into <= k paths exists,
    one is found.  ``budget`` caps the number of candidate paths tried.
    """
    adjacency: dict[int, set[int]] = {}
    for a, b in edges:
        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)
    spent = [0]

    def candidates(seed: Edge, available: frozenset[Edge]):
        """All simple paths through ``seed`` inside ``available``, longer
        extensions first; head extensions only after the tail is final."""

        def grow(sequence: tuple[int, ...], tail_open: bool):
            spent[0] += 1
            if budget is not None and spent[0] > budget:
                raise BudgetExhaustedError(f"search budget {budget} exhausted")
            if tail_open:
                tail = sequence[-1]
                for nb in sorted(adjacency.get(tail, ())):
                    if nb in sequence or edge(tail, nb) not in available:
                        continue
                    yield from grow(sequence + (nb,), True)
            head = sequence[0]
            for nb in sorted(adjacency.get(head, ())):
                if nb in sequence or edge(head, nb) not in available:
                    continue
                yield from grow((nb,) + sequence, False)
            yield sequence

        yield from grow(seed, True)

    def solve(available: frozenset[Edge], remaining: int):
        if not available:
            return []
        if remaining <= 0 or residual_lower_bound(available) > remaining:
            return None
        seed = min(available)
        for sequence in candidates(seed, available):
            used = frozenset(
                edge(a, b) for a, b in zip(sequence, sequence[1:])
            )
            rest = solve(available - used, remaining - 1)
            if rest is not None:
                return [sequence] + rest
        return None

    return solve(frozenset(edge(*e) for e in edges), k)
