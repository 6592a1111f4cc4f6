"""Immutable bitset graphs on at most 64 vertices.

A graph stores one integer adjacency row per vertex, so neighborhood
intersections, triangle tests and subset work are single machine-word
operations at desk scale.  Vertex sets are plain ints used as bitmasks
(bit i set means vertex i is in the set); helpers below convert between
masks and vertex lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityExceeded, EmptySet, InvalidEdge

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bit-row adjacency."""

    n: int
    adj: tuple[int, ...]
    m: int

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> int:
        """Neighborhood N(v) as a bitmask."""
        return self.adj[v]

    def vertex_mask(self) -> int:
        """Bitmask of the full vertex set."""
        return (1 << self.n) - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (i, j) with i < j in lexicographic order."""
        for i in range(self.n):
            higher = self.adj[i] >> (i + 1)
            for off in bits(higher):
                yield i, i + 1 + off


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list; duplicate edges collapse.

    Raises CapacityExceeded unless 1 <= n <= 64, and InvalidEdge for
    self-loops or out-of-range endpoints.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise CapacityExceeded(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise InvalidEdge(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidEdge(f"edge ({i}, {j}) out of range for n={n}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(n, tuple(rows), m)


def from_rows(rows: list[int]) -> Graph:
    """Wrap raw adjacency rows (assumed symmetric and loop-free)."""
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(len(rows), tuple(rows), m)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    rows = tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, rows, g.n * (g.n - 1) // 2 - g.m)


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced on the vertex mask ``s``, relabeled to 0..|s|-1.

    The vertices of ``s`` keep their ascending order.  Raises EmptySet
    for an empty mask.
    """
    if s == 0:
        raise EmptySet("induced subgraph of the empty vertex set")
    if s >> g.n:
        raise InvalidEdge(f"vertex set {s:#x} has bits beyond n={g.n}")
    verts = list(bits(s))
    pos = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v in verts:
        for w in bits(g.adj[v] & s):
            rows[pos[v]] |= 1 << pos[w]
    return from_rows(rows)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Return the graph with vertex v renamed to perm[v]."""
    rows = [0] * g.n
    for v in range(g.n):
        for w in bits(g.adj[v]):
            rows[perm[v]] |= 1 << perm[w]
    return Graph(g.n, tuple(rows), g.m)


def max_degree_vertex(g: Graph) -> tuple[int, int]:
    """Lowest-index vertex of maximum degree, with that degree."""
    best_v, best_d = 0, g.adj[0].bit_count()
    for v in range(1, g.n):
        d = g.adj[v].bit_count()
        if d > best_d:
            best_v, best_d = v, d
    return best_v, best_d


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are pairwise adjacent.

    Scans edges (i, j) with i < j and tests for a common neighbor above j,
    so each triangle is looked for exactly once.
    """
    for i in range(g.n):
        row = g.adj[i] >> (i + 1)
        for off in bits(row):
            j = i + 1 + off
            if g.adj[i] & g.adj[j] & ~((1 << (j + 1)) - 1):
                return False
    return True


def is_3k1_free(g: Graph) -> bool:
    """True iff the graph has no independent set of three vertices."""
    full = g.vertex_mask()
    for i in range(g.n):
        nonadj_i = full & ~g.adj[i] & ~(1 << i)
        for off in bits(nonadj_i >> (i + 1)):
            j = i + 1 + off
            rest = nonadj_i & ~g.adj[j] & ~(1 << j) & ~((1 << (j + 1)) - 1)
            if rest:
                return False
    return True


def triangle_count(g: Graph) -> int:
    """Number of triangles, each counted once."""
    total = 0
    for i in range(g.n):
        for off in bits(g.adj[i] >> (i + 1)):
            j = i + 1 + off
            total += (g.adj[i] & g.adj[j] & ~((1 << (j + 1)) - 1)).bit_count()
    return total
