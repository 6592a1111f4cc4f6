import random

import pytest

from trifree.errors import CapacityExceeded, EmptySet, InvalidEdge
from trifree.graphs import (complement, induced_subgraph, is_3k1_free,
                            is_triangle_free, make_graph, mask_of,
                            max_degree_vertex)
from helpers import (C5, E3, K3, K4, PETERSEN, all_graphs, random_graph,
                     triangle_free_by_scan, has_independent_set)


def test_make_graph_examples():
    assert C5.n == 5 and C5.m == 5
    assert E3.m == 0
    assert K4.m == 6
    dup = make_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert dup.m == 1


def test_make_graph_errors():
    with pytest.raises(CapacityExceeded):
        make_graph(65, [])
    with pytest.raises(CapacityExceeded):
        make_graph(0, [])
    with pytest.raises(InvalidEdge):
        make_graph(3, [(1, 1)])
    with pytest.raises(InvalidEdge):
        make_graph(3, [(0, 3)])


def test_complement_examples():
    assert complement(K4).m == 0
    assert complement(complement(PETERSEN)).adj == PETERSEN.adj
    # C5 is self-complementary
    co = complement(C5)
    assert co.m == 5
    assert sorted(co.degree(v) for v in range(5)) == [2] * 5


def test_complement_edge_count_identity():
    rng = random.Random(1)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 16))
        assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_induced_subgraph():
    p3 = induced_subgraph(C5, mask_of([0, 1, 2]))
    assert p3.n == 3 and p3.m == 2
    k3 = induced_subgraph(K4, mask_of([1, 2, 3]))
    assert k3.m == 3
    outer = induced_subgraph(PETERSEN, mask_of([0, 1, 2, 3, 4]))
    assert outer.m == 5 and sorted(outer.degree(v) for v in range(5)) == [2] * 5
    with pytest.raises(EmptySet):
        induced_subgraph(C5, 0)
    assert induced_subgraph(C5, C5.vertex_mask()).adj == C5.adj


def test_max_degree_vertex():
    assert max_degree_vertex(C5) == (0, 2)
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert max_degree_vertex(star) == (0, 3)
    assert max_degree_vertex(K4) == (0, 3)
    # lowest index attaining the maximum wins
    g = make_graph(4, [(1, 2), (1, 3), (2, 3)])
    assert max_degree_vertex(g) == (1, 2)


def test_triangle_free_examples():
    assert not is_triangle_free(K3)
    assert is_triangle_free(C5)
    assert is_triangle_free(PETERSEN)
    assert triangle_free_by_scan(PETERSEN)


def test_3k1_free_examples():
    assert is_3k1_free(C5)
    assert not is_3k1_free(E3)
    assert not is_3k1_free(PETERSEN)
    # exhibit an independent triple of the Petersen graph explicitly
    assert not PETERSEN.has_edge(0, 2)
    assert not PETERSEN.has_edge(0, 8)
    assert not PETERSEN.has_edge(2, 8)


def test_3k1_vs_complement_triangle_exhaustive():
    for n in range(1, 6):
        for g in all_graphs(n):
            assert is_3k1_free(g) == is_triangle_free(complement(g))
            assert is_triangle_free(g) == triangle_free_by_scan(g)
            assert is_3k1_free(g) == (not has_independent_set(g, 3))


def test_3k1_vs_complement_random():
    rng = random.Random(2)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 14), rng.random())
        assert is_3k1_free(g) == is_triangle_free(complement(g))


def test_degree_is_row_popcount():
    rng = random.Random(3)
    g = random_graph(rng, 12)
    _, delta = max_degree_vertex(g)
    assert delta == max(g.adj[v].bit_count() for v in range(g.n))
