import random

import networkx as nx
import pytest

from gallai import Graph, canonical_form, canonical_graph, enumerate_connected
from gallai.census import relabeled
from helpers import all_labeled_graphs, complete_graph, cycle, path_graph, petersen

# Published counts of connected graphs up to isomorphism.
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def test_tiny_census_examples():
    assert len(enumerate_connected(3, 5)) == 2  # P3 and K3
    assert len(enumerate_connected(4, 5)) == 6
    assert len(enumerate_connected(4, 2)) == 2  # P4 and C4


@pytest.mark.parametrize("n", sorted(CONNECTED_COUNTS))
def test_census_counts_match_published_values(n):
    assert len(enumerate_connected(n, max(1, n - 1))) == CONNECTED_COUNTS[n]


def test_census_against_labeled_enumeration():
    # Independent oracle: canonicalize every labeled connected graph and
    # count distinct forms.
    for n in range(1, 6):
        labeled = {
            canonical_form(g)
            for g in all_labeled_graphs(n)
            if g.is_connected()
        }
        ours = {canonical_form(g) for g in enumerate_connected(n, n)}
        assert ours == labeled


def test_census_respects_degree_cap():
    for g in enumerate_connected(7, 5):
        assert g.max_degree() <= 5
        assert g.is_connected()


def test_census_is_deterministic_and_canonical():
    first = enumerate_connected(5, 5)
    again = enumerate_connected(5, 5)
    assert first == again
    forms = [canonical_form(g) for g in first]
    assert forms == sorted(forms)
    assert all(canonical_graph(g) == g for g in first)


def test_enumeration_limit():
    with pytest.raises(ValueError):
        enumerate_connected(9, 5)
    with pytest.raises(ValueError):
        enumerate_connected(0, 5)


def test_canonical_form_is_the_true_permutation_minimum():
    # Brute force over every permutation; the branch-and-bound must agree.
    import itertools

    from gallai import write_graph6

    def brute_minimum(g):
        return min(
            write_graph6(relabeled(g, perm))
            for perm in itertools.permutations(range(g.n))
        )

    for n in range(2, 6):
        for g in enumerate_connected(n, n):
            assert canonical_form(g) == brute_minimum(g)
    for g in list(enumerate_connected(6, 5))[::9]:
        assert canonical_form(g) == brute_minimum(g)


def test_canonical_form_is_labelling_invariant():
    rng = random.Random(5)
    samples = [petersen(), complete_graph(5), cycle(6), path_graph(7)]
    samples += list(enumerate_connected(6, 5))[::11]
    for g in samples:
        base = canonical_form(g)
        for _ in range(5):
            order = list(range(g.n))
            rng.shuffle(order)
            assert canonical_form(relabeled(g, tuple(order))) == base


def test_canonical_form_separates_nonisomorphic():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    p4 = path_graph(4)
    assert canonical_form(star) != canonical_form(p4)
    # cross-check with networkx on a census slice
    graphs = list(enumerate_connected(5, 5))
    for i, a in enumerate(graphs):
        for b in graphs[i + 1:]:
            ga = nx.Graph(list(a.edges()))
            gb = nx.Graph(list(b.edges()))
            ga.add_nodes_from(range(a.n))
            gb.add_nodes_from(range(b.n))
            assert not nx.is_isomorphic(ga, gb)
