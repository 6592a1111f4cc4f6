"""Isomorph-free exhaustive generation of triangle-free graphs, canonical
labeling, and an independent brute-force counting oracle.

Canonical labeling uses equitable partition refinement followed by a
backtracking search over refinement-consistent vertex orders, minimizing
the packed upper-triangle adjacency bit string (the same bit order
graph6 uses, so a canonical form is just the graph6 record of the
relabeled graph).  Interchangeable vertices (equal open or closed
neighborhoods) are branched once.

Generation is by canonical augmentation: a parent on n-1 vertices is
extended by one new vertex whose neighborhood is an independent set,
and the child survives only if no single-vertex deletion yields a graph
with a canonical code smaller than the parent's, i.e. the parent it was
generated from is its designated parent.  Children of one parent are
deduplicated locally and emitted in canonical-code order, so the stream
is deterministic and memory stays proportional to tree depth.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import CanonScaleExceeded, OracleScaleExceeded, ScaleExceeded
from .graphs import Graph, from_rows, bits
from .invariants import independence_number

CANON_MAX_N = 16
ENUM_MAX_N = 11
ORACLE_MAX_N = 7


class _Stop(Exception):
    """Unwinds the canonical search once an incumbent has been beaten."""


class _CanonSearch:
    """Minimizes the packed adjacency bit string over refinement-consistent
    vertex orders.  With an incumbent, can stop at the first strictly
    smaller leaf (used by the generation acceptance test)."""

    __slots__ = ("rows", "n", "total_bits", "best", "stop_on_beat", "beaten")

    def __init__(self, rows, n, incumbent=None, stop_on_beat=False):
        self.rows = rows
        self.n = n
        self.total_bits = n * (n - 1) // 2
        self.best = incumbent
        self.stop_on_beat = stop_on_beat
        self.beaten = False

    def run(self) -> int | None:
        cells = self._count_refine([list(range(self.n))])
        try:
            self._node(0, 0, cells, {v: 0 for v in range(self.n)})
        except _Stop:
            pass
        return self.best

    def _count_refine(self, cells):
        """Split cells by neighbor counts into every cell, to a fixpoint.
        Subcells are ordered by ascending count signature."""
        rows = self.rows
        while True:
            masks = []
            for cell in cells:
                m = 0
                for v in cell:
                    m |= 1 << v
                masks.append(m)
            out = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[tuple, list[int]] = {}
                for v in cell:
                    key = tuple((rows[v] & m).bit_count() for m in masks)
                    groups.setdefault(key, []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    for key in sorted(groups):
                        out.append(groups[key])
            if not changed:
                return out
            cells = out

    def _split_by_bit(self, cells, v):
        """Split every cell by adjacency to the newly fixed vertex v
        (non-neighbors first)."""
        rows = self.rows
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            zero = [w for w in cell if not rows[w] >> v & 1]
            one = [w for w in cell if rows[w] >> v & 1]
            if zero and one:
                out.append(zero)
                out.append(one)
            else:
                out.append(cell)
        return out

    def _node(self, fixed_n, code, cells, cols):
        rows = self.rows
        while True:
            advanced = False
            while cells and len(cells[0]) == 1:
                v = cells[0][0]
                cells = cells[1:]
                code = (code << fixed_n) | cols[v]
                fixed_n += 1
                if self.best is not None:
                    nbits = fixed_n * (fixed_n - 1) // 2
                    if code > self.best >> (self.total_bits - nbits):
                        return
                for cell in cells:
                    for w in cell:
                        cols[w] = cols[w] << 1 | (rows[w] >> v & 1)
                cells = self._split_by_bit(cells, v)
                advanced = True
            if not cells:
                if self.best is None or code < self.best:
                    if self.stop_on_beat and self.best is not None:
                        self.beaten = True
                        raise _Stop
                    self.best = code
                return
            if advanced:
                refined = self._count_refine(cells)
                if refined != cells:
                    cells = refined
                    continue
            break

        target = cells[0]
        reps = []
        for v in target:
            v_bit = 1 << v
            for u in reps:
                u_bit = 1 << u
                if rows[v] == rows[u] or rows[v] | v_bit == rows[u] | u_bit:
                    break  # interchangeable with an explored branch
            else:
                reps.append(v)
        rest = cells[1:]
        for v in reps:
            sub = [[v], [w for w in target if w != v]] + rest
            self._node(fixed_n, code, self._count_refine(sub), dict(cols))


def _canon_code(rows, n: int) -> int:
    best = _CanonSearch(rows, n).run()
    assert best is not None
    return best


def _beats(rows, n: int, incumbent: int) -> bool:
    """True iff some refinement-consistent order gives a code < incumbent."""
    search = _CanonSearch(rows, n, incumbent=incumbent, stop_on_beat=True)
    search.run()
    return search.beaten


def _code_to_graph6(n: int, code: int) -> bytes:
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    padded = code << (6 * ngroups - nbits)
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    return bytes(head + [(padded >> 6 * (ngroups - 1 - i) & 63) + 63
                         for i in range(ngroups)])


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 record: equal bytes iff isomorphic graphs.

    Backtracking canonizer, supported for n <= 16.
    """
    if g.n > CANON_MAX_N:
        raise CanonScaleExceeded(f"canonical labeling limited to n <= {CANON_MAX_N}")
    return _code_to_graph6(g.n, _canon_code(g.adj, g.n))


@dataclass
class EnumStats:
    """Bookkeeping for one enumeration run."""

    n: int
    predicate: str
    count: int = 0
    seconds: float = 0.0
    nodes: int = 0  # accepted generation-tree nodes over all levels


def _independent_sets(rows, n: int) -> Iterator[int]:
    """All vertex masks spanning no edge, the empty mask included."""

    def rec(i: int, cur: int) -> Iterator[int]:
        if i == n:
            yield cur
            return
        yield from rec(i + 1, cur)
        if not rows[i] & cur:
            yield from rec(i + 1, cur | 1 << i)

    yield from rec(0, 0)


def _delete_vertex(rows, u: int) -> list[int]:
    low_mask = (1 << u) - 1
    return [(r & low_mask) | (r >> (u + 1)) << u
            for v, r in enumerate(rows) if v != u]


def _generate(max_n: int, stats: EnumStats | None = None) -> Iterator[tuple[int, tuple[int, ...], int]]:
    """DFS over the canonical-augmentation tree; yields every node as
    (vertex count, adjacency rows, canonical code)."""

    def extend(rows, n, code):
        seen = set()
        accepted = []
        for s in _independent_sets(rows, n):
            child = [rows[v] | (s >> v & 1) << n for v in range(n)]
            child.append(s)
            if any(_beats(_delete_vertex(child, u), n, code) for u in range(n)):
                continue
            child_code = _canon_code(child, n + 1)
            if child_code in seen:
                continue
            seen.add(child_code)
            accepted.append((child_code, tuple(child)))
        accepted.sort()
        for child_code, child in accepted:
            yield n + 1, child, child_code
            if n + 1 < max_n:
                yield from extend(child, n + 1, child_code)

    root = (0,)
    yield 1, root, 0
    if stats is not None:
        stats.nodes += 1
    if max_n > 1:
        for item in extend(root, 1, 0):
            if stats is not None:
                stats.nodes += 1
            yield item


def enumerate_triangle_free(n: int, stats: EnumStats | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class of triangle-free graphs
    on n vertices, in canonical-code order along each tree branch."""
    if not 1 <= n <= ENUM_MAX_N:
        raise ScaleExceeded(f"enumeration budget is 1..{ENUM_MAX_N}, got n={n}")
    t0 = time.perf_counter()
    for level, rows, _code in _generate(n, stats):
        if level == n:
            if stats is not None:
                stats.count += 1
            yield from_rows(list(rows))
    if stats is not None:
        stats.seconds = time.perf_counter() - t0


def enumerate_triangle_free_upto(max_n: int) -> Iterator[tuple[int, Graph]]:
    """All triangle-free classes for every 1 <= n <= max_n in one tree walk."""
    if not 1 <= max_n <= ENUM_MAX_N:
        raise ScaleExceeded(f"enumeration budget is 1..{ENUM_MAX_N}, got n={max_n}")
    for level, rows, _code in _generate(max_n):
        yield level, from_rows(list(rows))


def enumerate_ramsey(n: int, k: int, stats: EnumStats | None = None) -> Iterator["RamseyWitness"]:
    """Triangle-free graphs on n vertices with independence number < k,
    one per isomorphism class; an empty stream at n certifies R(3,k) <= n."""
    from .search import RamseyWitness  # deferred: search imports this module

    if stats is not None:
        stats.predicate = f"triangle-free, alpha<{k}"
    for g in enumerate_triangle_free(n, stats):
        if independence_number(g) < k:
            yield RamseyWitness(graph=g, k=k, canonical=canonical_form(g),
                                provenance="enumerated")


def bruteforce_count_oracle(n: int, predicate: Callable[[Graph], bool]) -> int:
    """Count isomorphism classes among all 2^C(n,2) labeled graphs that
    satisfy ``predicate``, deduplicating by canonical code.

    Deliberately shares no generation logic with the augmentation tree;
    this is the ground truth for small n (capped at 7).
    """
    if not 1 <= n <= ORACLE_MAX_N:
        raise OracleScaleExceeded(f"counting oracle limited to 1..{ORACLE_MAX_N}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen: set[int] = set()
    for word in range(1 << len(pairs)):
        rows = [0] * n
        w = word
        while w:
            low = w & -w
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            w ^= low
        if predicate(from_rows(rows)):
            seen.add(_canon_code(rows, n))
    return len(seen)
