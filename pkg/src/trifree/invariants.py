"""Exact graph invariants: clique number, independence number, chromatic
number, and maximum matching.

All solvers are deterministic and return witnesses (a clique mask, a
coloring, a set of matched pairs) so downstream reports can be audited.
The chromatic solver is a DSATUR-ordered branch and bound; graphs with
independence number at most 2 take a fast path through maximum matching
of the complement, where color classes are single vertices or matched
non-adjacent pairs, giving chi = n - matching size exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidColoring, OracleScaleExceeded, PreconditionViolated
from .graphs import Graph, bits, complement

ORACLE_MAX_N = 12


@dataclass(frozen=True)
class Coloring:
    """Proper vertex coloring: colors[v] in 1..c, every color used."""

    colors: tuple[int, ...]
    c: int

    def class_mask(self, color: int) -> int:
        m = 0
        for v, cv in enumerate(self.colors):
            if cv == color:
                m |= 1 << v
        return m

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.c
        for cv in self.colors:
            sizes[cv - 1] += 1
        return sizes

    def singleton_count(self) -> int:
        return sum(1 for s in self.class_sizes() if s == 1)


@dataclass(frozen=True)
class Matching:
    """Set of pairwise vertex-disjoint edges, stored as (i, j) with i < j."""

    pairs: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def partner(self) -> dict[int, int]:
        out = {}
        for i, j in self.pairs:
            out[i] = j
            out[j] = i
        return out


def validate_coloring(g: Graph, coloring: Coloring) -> None:
    """Raise InvalidColoring unless the coloring is proper and uses 1..c."""
    if len(coloring.colors) != g.n:
        raise InvalidColoring("coloring length differs from vertex count")
    used = set(coloring.colors)
    if used != set(range(1, coloring.c + 1)):
        raise InvalidColoring(f"colors used {sorted(used)} != 1..{coloring.c}")
    for i, j in g.edges():
        if coloring.colors[i] == coloring.colors[j]:
            raise InvalidColoring(f"edge ({i}, {j}) is monochromatic")


def validate_matching(g: Graph, matching: Matching) -> None:
    seen = 0
    for i, j in matching.pairs:
        if not g.has_edge(i, j):
            raise InvalidColoring(f"matched pair ({i}, {j}) is not an edge")
        pair_mask = 1 << i | 1 << j
        if seen & pair_mask:
            raise InvalidColoring(f"pair ({i}, {j}) reuses a matched vertex")
        seen |= pair_mask


def max_clique(g: Graph) -> int:
    """Bitmask of a maximum clique (branch and bound, coloring bound)."""
    rows = g.adj
    best_size = 0
    best_mask = 0

    def expand(cur_mask: int, cur_size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if cand == 0:
            if cur_size > best_size:
                best_size, best_mask = cur_size, cur_mask
            return
        # greedy coloring of the candidate set: vertices in color class c
        # can contribute at most c more vertices, pruning the branch order
        colored = []
        rem = cand
        color = 0
        while rem:
            color += 1
            avail = rem
            while avail:
                v_bit = avail & -avail
                v = v_bit.bit_length() - 1
                colored.append((color, v))
                avail &= ~(rows[v] | v_bit)
                rem ^= v_bit
        pool = cand
        for color, v in reversed(colored):
            if cur_size + color <= best_size:
                return
            v_bit = 1 << v
            expand(cur_mask | v_bit, cur_size + 1, pool & rows[v])
            pool ^= v_bit

    expand(0, 0, g.vertex_mask())
    return best_mask


def clique_number(g: Graph) -> int:
    return max_clique(g).bit_count()


def max_independent_set(g: Graph) -> int:
    """Bitmask of a maximum independent set."""
    return max_clique(complement(g))


def independence_number(g: Graph) -> int:
    return max_independent_set(g).bit_count()


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching via augmenting paths with blossom
    (odd cycle) contraction; exact on general graphs."""
    n = g.n
    adj = [list(bits(g.adj[v])) for v in range(n)]
    match = [-1] * n
    for v in range(n):  # greedy seed, deterministic
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for v in range(n):
        if match[v] == -1:
            _augment_from(n, adj, match, v)
    pairs = frozenset((min(v, match[v]), max(v, match[v]))
                      for v in range(n) if match[v] != -1)
    return Matching(pairs)


def _augment_from(n: int, adj: list[list[int]], match: list[int], root: int) -> bool:
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    q = deque([root])

    def lca(a: int, b: int) -> int:
        hit = [False] * n
        while True:
            a = base[a]
            hit[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if hit[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                curbase = lca(v, to)
                blossom = [False] * n
                mark_path(v, curbase, to, blossom)
                mark_path(to, curbase, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = curbase
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = p[to]
                        ppv = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = ppv
                    return True
                used[match[to]] = True
                q.append(match[to])
    return False


def chromatic_alpha2(g: Graph) -> int:
    """Chromatic number of a graph with independence number at most 2.

    Color classes have size at most 2 and size-2 classes are non-edges,
    i.e. edges of the complement, so an optimal coloring is a maximum
    matching of the complement plus singletons: chi = n - matching size.
    """
    if independence_number(g) > 2:
        raise PreconditionViolated("graph has an independent set of size 3")
    return g.n - max_matching(complement(g)).size


def _coloring_from_complement_matching(g: Graph) -> Coloring:
    matching = max_matching(complement(g))
    partner = matching.partner()
    colors = [0] * g.n
    c = 0
    for v in range(g.n):
        if colors[v]:
            continue
        c += 1
        colors[v] = c
        w = partner.get(v)
        if w is not None and not colors[w]:
            colors[w] = c
    return Coloring(tuple(colors), c)


def _dsatur_greedy(g: Graph) -> list[int]:
    """Greedy DSATUR coloring; returns colors[v] in 1..k (upper bound)."""
    n = g.n
    colors = [0] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degrees = [g.degree(v) for v in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] == 0),
                key=lambda u: (len(neighbor_colors[u]), degrees[u], -u))
        color = 1
        while color in neighbor_colors[v]:
            color += 1
        colors[v] = color
        for w in bits(g.adj[v]):
            neighbor_colors[w].add(color)
    return colors


def chromatic_number(g: Graph, use_alpha2_fast_path: bool = True) -> tuple[int, Coloring]:
    """Exact chromatic number plus a witness coloring.

    Branch and bound on the most saturated uncolored vertex (ties by
    degree, then index), seeded with a greedy upper bound and a maximum
    clique pre-coloring as the lower bound.
    """
    n = g.n
    if use_alpha2_fast_path and independence_number(g) <= 2:
        coloring = _coloring_from_complement_matching(g)
        return coloring.c, coloring

    greedy = _dsatur_greedy(g)
    best = max(greedy)
    best_colors = greedy[:]
    clique = max_clique(g)
    lb = clique.bit_count()
    if lb == best:
        return best, Coloring(tuple(best_colors), best)

    rows = g.adj
    degrees = [g.degree(v) for v in range(n)]
    colors = [0] * n
    precolored = 0
    for c, v in enumerate(bits(clique), start=1):
        colors[v] = c  # a maximum clique can be pre-colored 1..lb
        precolored += 1

    def solve(colored_count: int, used: int) -> None:
        nonlocal best, best_colors
        if best == lb:
            return
        if used >= best:
            return
        if colored_count == n:
            best = used
            best_colors = colors[:]
            return
        v = -1
        v_key = None
        for u in range(n):
            if colors[u]:
                continue
            sat = len({colors[w] for w in bits(rows[u]) if colors[w]})
            key = (sat, degrees[u], -u)
            if v_key is None or key > v_key:
                v, v_key = u, key
        forbidden = {colors[w] for w in bits(rows[v])}
        limit = min(used + 1, best - 1)
        for c in range(1, limit + 1):
            if c in forbidden:
                continue
            colors[v] = c
            solve(colored_count + 1, max(used, c))
            colors[v] = 0
            if best == lb:
                return

    solve(precolored, lb)
    return best, Coloring(tuple(best_colors), best)


def is_k_colorable_oracle(g: Graph, k: int) -> bool:
    """Plain exhaustive backtracking over color assignments; test oracle.

    No pruning beyond properness, so it is independent of the solver
    above.  Refuses graphs with more than 12 vertices.
    """
    if g.n > ORACLE_MAX_N:
        raise OracleScaleExceeded(f"oracle limited to n <= {ORACLE_MAX_N}")
    if k < 1:
        return False
    rows = g.adj
    colors = [0] * g.n

    def assign(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(1, k + 1):
            if all(colors[w] != c for w in bits(rows[v])):
                colors[v] = c
                if assign(v + 1):
                    return True
                colors[v] = 0
        return False

    return assign(0)
