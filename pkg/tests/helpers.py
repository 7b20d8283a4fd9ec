"""Shared graph builders and corpus generators for the tests."""

from __future__ import annotations

import itertools
import random

from gallai import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def two_cliques_with_bridge(k: int = 4) -> Graph:
    edges = list(itertools.combinations(range(k), 2))
    edges += [(a + k, b + k) for a, b in itertools.combinations(range(k), 2)]
    edges.append((0, k))
    return Graph.from_edges(2 * k, edges)


def delete_edges(g: Graph, edges) -> Graph:
    for a, b in edges:
        g = g.delete_edge(a, b)
    return g


def random_connected_graph(
    rng: random.Random, lo: int = 10, hi: int = 20, max_deg: int = 5
) -> Graph | None:
    """A random connected graph with bounded degrees: a random tree plus a
    random number of extra edges."""
    n = rng.randrange(lo, hi + 1)
    edges: set[tuple[int, int]] = set()
    deg = [0] * n
    for v in range(1, n):
        candidates = [u for u in range(v) if deg[u] < max_deg]
        if not candidates:
            return None
        u = rng.choice(candidates)
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    for _ in range(rng.randrange(0, 2 * n)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b:
            continue
        e = (min(a, b), max(a, b))
        if e in edges or deg[a] >= max_deg or deg[b] >= max_deg:
            continue
        edges.add(e)
        deg[a] += 1
        deg[b] += 1
    return Graph.from_edges(n, sorted(edges))


def all_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices (for oracle cross-checks)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        )


def subcase_fixtures():
    """One graph per reduction sub-case.

    Entries are (graph, occurrence, tag, subcase); occurrence None means the
    detector's own pick is the wanted one.  The last three C5 cases are
    shadowed by the detection priority (such graphs always contain a C4
    too), so they carry explicit occurrences.
    """
    from gallai import C5

    k5 = complete_graph(5)
    fixtures = [
        (cycle(4), None, "C1", "splice"),
        (two_cliques_with_bridge(), None, "C2", "join"),
        (
            Graph.from_edges(
                6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5)]
            ),
            None, "C3", "sparse_ring",
        ),
        (
            Graph.from_edges(6, [
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5),
                (2, 4), (4, 3), (3, 5), (5, 2),
            ]),
            None, "C3", "full_ring",
        ),
        (
            Graph.from_edges(6, [
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5),
                (2, 4), (4, 3),
            ]),
            None, "C3", "partial_ring",
        ),
        (
            Graph.from_edges(5, [
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4),
            ]),
            None, "C4", "triple_common",
        ),
        (
            Graph.from_edges(12, [
                (0, 1), (0, 2), (0, 3), (0, 4),
                (2, 5), (2, 6), (5, 6),
                (3, 7), (3, 8), (7, 8),
                (1, 9), (1, 10), (1, 11),
                (4, 9), (4, 10), (9, 10),
            ]),
            None, "C4", "hub_split",
        ),
        (
            Graph.from_edges(12, [
                (0, 1), (0, 2), (1, 2),
                (0, 3), (3, 4), (4, 1), (3, 5), (4, 5),
                (0, 6), (6, 8), (6, 9), (8, 9),
                (1, 7), (7, 10), (7, 11), (10, 11),
            ]),
            None, "C4", "four_components",
        ),
        (
            Graph.from_edges(8, [
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7),
                (2, 5), (2, 6), (3, 5), (3, 6), (4, 7), (2, 7), (4, 5),
            ]),
            None, "C4", "paired_nonedges",
        ),
        (
            Graph.from_edges(
                5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
            ),
            C5(0, 1, 2), "C5", "two_gaps",
        ),
        (k5.delete_edge(3, 4), None, "C5", "one_gap"),
        (
            Graph.from_edges(6, list(k5.edges()) + [(3, 5)]),
            None, "C5", "common_triangle",
        ),
        (
            Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]),
            None, "C5", "degree_two",
        ),
        (
            Graph.from_edges(9, [
                (0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4),
                (1, 5), (1, 6), (2, 7), (2, 8),
            ]),
            C5(0, 1, 2), "C5", "hub_contraction",
        ),
        (
            Graph.from_edges(9, [
                (0, 1), (0, 2), (1, 2), (0, 3), (0, 4),
                (1, 5), (1, 6), (2, 7), (2, 8),
            ]),
            C5(0, 1, 2), "C5", "bridge_spread",
        ),
    ]
    return fixtures
