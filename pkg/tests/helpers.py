"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the package's solver code paths:
matching by memoized vertex branching, colorability by the package's
plain backtracking oracle, independence by explicit subset scans.
"""

import functools
import itertools

from trifree.graphs import Graph, from_rows, make_graph, bits

C5 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
P5 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
K3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
K4 = make_graph(4, list(itertools.combinations(range(4), 2)))
K7 = make_graph(7, list(itertools.combinations(range(7), 2)))
E3 = make_graph(3, [])

# outer 5-cycle, spokes, inner pentagram
PETERSEN_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                  (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                  (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
PETERSEN = make_graph(10, PETERSEN_EDGES)


def all_graphs(n):
    """Every labeled graph on n vertices, one per adjacency code."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if code >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield from_rows(rows)


def random_graph(rng, n, p=0.5):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return from_rows(rows)


def matching_size_oracle(g: Graph) -> int:
    """Maximum matching size by memoized branching on the lowest vertex."""
    adj = g.adj

    @functools.lru_cache(maxsize=None)
    def rec(mask: int) -> int:
        if not mask:
            return 0
        v_bit = mask & -mask
        v = v_bit.bit_length() - 1
        best = rec(mask ^ v_bit)
        for u in bits(adj[v] & mask & ~v_bit):
            best = max(best, 1 + rec(mask ^ v_bit ^ (1 << u)))
        return best

    result = rec((1 << g.n) - 1)
    rec.cache_clear()
    return result


def has_independent_set(g: Graph, size: int) -> bool:
    """Explicit subset scan, independent of the clique solver."""
    return any(
        all(not g.has_edge(a, b) for a, b in itertools.combinations(s, 2))
        for s in itertools.combinations(range(g.n), size))


def triangle_free_by_scan(g: Graph) -> bool:
    return not any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in itertools.combinations(range(g.n), 3))
