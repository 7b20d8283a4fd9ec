"""Small-graph enumeration with brute-force isomorphism rejection.

The canonical form of a graph is the lexicographically smallest upper
triangle bit-string (column-major, the graph6 bit order) over all vertex
relabellings.  The minimum is found by branch and bound rather than by
trying all n! permutations outright, but the value is exactly that minimum,
so the canonical string doubles as a stable graph id.  The enumerator grows
connected graphs one vertex at a time and dedups by canonical form; it is
deliberately naive and capped at 8 vertices — larger orders are expected to
arrive as graph6 streams from an external generator.
"""

from __future__ import annotations

from .graphs import Graph
from .io import write_graph6

ENUMERATION_LIMIT = 8

_census_cache: dict[tuple[int, int], tuple[Graph, ...]] = {}


def relabeled(g: Graph, order: tuple[int, ...]) -> Graph:
    """Graph with old vertex ``order[i]`` renamed to ``i``."""
    position = {old: new for new, old in enumerate(order)}
    masks = [0] * g.n
    for old_u, new_u in position.items():
        for old_v in g.neighbors(old_u):
            masks[new_u] |= 1 << position[old_v]
    return Graph(g.n, masks)


def canonical_order(g: Graph) -> tuple[int, ...]:
    """Relabelling order achieving the minimal adjacency bit-string."""
    n = g.n
    if n <= 1:
        return tuple(range(n))
    adj = [g.neighbor_mask(v) for v in range(n)]
    best_cols: list[int] | None = None
    best_order: list[int] | None = None

    # cols[k] holds the k adjacency bits of the vertex placed at slot k
    # towards slots 0..k-1 (earlier slot = more significant bit).
    # Candidates travel as a vertex-ascending list of (vertex, col) pairs;
    # only candidates achieving the minimal column can extend a minimal
    # string, so levels with a unique minimum are walked iteratively and
    # recursion only happens on genuine ties.
    def descend(placed: list[int], cols: list[int],
                cand: list[tuple[int, int]], tied: bool) -> None:
        nonlocal best_cols, best_order
        grown = 0
        while True:
            k = len(placed)
            if k == n:
                if best_cols is None or cols < best_cols:
                    best_cols = cols.copy()
                    best_order = placed.copy()
                break
            low = cand[0][1]
            for _, c in cand:
                if c < low:
                    low = c
            # `tied` is a pruning aid: the prefix matched the best known
            # string when this branch was entered.
            if tied and best_cols is not None:
                if low > best_cols[k]:
                    break
                tied = low == best_cols[k]
            minimal = [v for v, c in cand if c == low]
            if len(minimal) == 1:
                v = minimal[0]
                mask = adj[v]
                cand = [
                    (w, (cw << 1) | (mask >> w & 1)) for w, cw in cand if w != v
                ]
                placed.append(v)
                cols.append(low)
                grown += 1
                continue
            cols.append(low)
            plain_seen: set[int] = set()
            for v in minimal:
                # skip candidates twinned with one already tried here
                mask = adj[v]
                if mask in plain_seen or mask | (1 << v) in plain_seen:
                    continue
                plain_seen.add(mask)
                plain_seen.add(mask | (1 << v))
                narrowed = [
                    (w, (cw << 1) | (mask >> w & 1)) for w, cw in cand if w != v
                ]
                placed.append(v)
                descend(placed, cols, narrowed, tied)
                placed.pop()
            cols.pop()
            break
        for _ in range(grown):
            placed.pop()
            cols.pop()

    descend([], [], [(v, 0) for v in range(n)], True)
    assert best_order is not None
    return tuple(best_order)


def canonical_graph(g: Graph) -> Graph:
    return relabeled(g, canonical_order(g))


def canonical_form(g: Graph) -> str:
    """graph6 of the canonically labelled graph (stable across labellings)."""
    return write_graph6(canonical_graph(g))


def enumerate_connected(n: int, max_deg: int) -> tuple[Graph, ...]:
    """One canonically labelled representative per isomorphism class of
    connected graphs on ``n`` vertices with maximum degree <= ``max_deg``."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > ENUMERATION_LIMIT:
        raise ValueError(
            f"internal enumerator is capped at n={ENUMERATION_LIMIT}; "
            "pipe a graph6 stream instead"
        )
    key = (n, max_deg)
    if key in _census_cache:
        return _census_cache[key]
    if n == 1:
        result = (Graph(1, [0]),)
    else:
        found: dict[str, Graph] = {}
        new = n - 1
        for parent in enumerate_connected(n - 1, max_deg):
            # vertices that can still take one more edge
            open_mask = 0
            for v in range(parent.n):
                if parent.degree(v) < max_deg:
                    open_mask |= 1 << v
            base = [parent.neighbor_mask(v) for v in range(parent.n)]
            for subset in range(1, 1 << parent.n):
                if subset & ~open_mask or subset.bit_count() > max_deg:
                    continue
                masks = base.copy()
                masks.append(subset)
                for v in range(parent.n):
                    if subset >> v & 1:
                        masks[v] |= 1 << new
                child = Graph(n, masks)
                form = canonical_form(child)
                if form not in found:
                    found[form] = canonical_graph(child)
        result = tuple(found[form] for form in sorted(found))
    _census_cache[key] = result
    return result
