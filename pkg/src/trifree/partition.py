"""Replays the vertex-partition accounting behind the chromatic bounds on
a concrete 3K1-free graph.

Around a maximum-degree vertex u that is alone in its color class of an
optimal coloring, the vertex set splits into six masks: the singleton
color classes (a clique containing u), pairs split by membership in
N(u), pairs inside N(u) whose members miss some singleton vertex, and
the untouched remainder.  Three counting identities are definitional
and must hold for any valid input; the clique inequalities and the four
adjacency claims only hold in a minimal-counterexample context, so they
are measured and reported with witnesses rather than asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidColoring, NotMaxDegree, PreconditionViolated
from .graphs import Graph, bits, induced_subgraph, is_3k1_free, max_degree_vertex
from .invariants import Coloring, chromatic_number, clique_number, validate_coloring


@dataclass(frozen=True)
class LemmaPartition:
    """The six-way split with its counters; masks are vertex bitmasks."""

    u: int
    coloring: Coloring
    v_r: int
    v_s: int
    v_sp: int
    v_t: int
    v_tp: int
    v_k: int
    r: int
    s: int
    t: int
    k: int
    p: int       # graph order
    delta: int
    rerouted: int  # vertices meeting the raw v_tp predicate placed elsewhere


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    lhs: int
    rhs: int
    definitional: bool  # must hold for any valid partition; failure is a bug


@dataclass(frozen=True)
class ClaimStatus:
    name: str
    status: str  # "holds" | "fails" | "vacuous"
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ClaimReport:
    claims: tuple[ClaimStatus, ...]

    def get(self, name: str) -> ClaimStatus:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class PartitionReport:
    partition: LemmaPartition
    identities: tuple[IdentityCheck, ...]
    claims: ClaimReport


def singleton_coloring(g: Graph, u: int) -> Coloring | None:
    """An optimal coloring in which u's color class is exactly {u}.

    Exists iff deleting u lowers the chromatic number; in that case any
    optimal coloring of g - u plus a fresh color on u works.  Returns
    None when no optimal coloring isolates u.
    """
    if not is_3k1_free(g):
        raise PreconditionViolated("graph has an independent 3-set")
    chi, _ = chromatic_number(g)
    if g.n == 1:
        return Coloring((1,), 1)
    rest = g.vertex_mask() & ~(1 << u)
    sub = induced_subgraph(g, rest)
    chi_sub, col_sub = chromatic_number(sub)
    if chi_sub != chi - 1:
        return None
    colors = [0] * g.n
    for idx, v in enumerate(bits(rest)):
        colors[v] = col_sub.colors[idx]
    colors[u] = chi
    return Coloring(tuple(colors), chi)


def compute_partition(g: Graph, coloring: Coloring, u: int) -> LemmaPartition:
    """Split V(G) into the six sets around u under ``coloring``.

    The raw definitions overlap on arbitrary graphs, so assignment is by
    precedence: singletons, then the N(u)-straddling pairs, then pairs
    missing a singleton vertex, then the remainder.  Within a pair where
    both members miss a singleton vertex the lower index is taken; every
    vertex matching the third predicate but placed elsewhere is counted
    in ``rerouted``.
    """
    if not is_3k1_free(g):
        raise PreconditionViolated("graph has an independent 3-set")
    validate_coloring(g, coloring)
    chi, _ = chromatic_number(g)
    if coloring.c != chi:
        raise InvalidColoring(f"coloring uses {coloring.c} colors, optimum is {chi}")
    delta_v, delta = max_degree_vertex(g)
    if g.degree(u) != delta:
        raise NotMaxDegree(f"vertex {u} has degree {g.degree(u)}, max is {delta}")

    classes: list[list[int]] = [[] for _ in range(coloring.c)]
    for v, cv in enumerate(coloring.colors):
        classes[cv - 1].append(v)
    if any(len(cls) > 2 for cls in classes):
        raise InvalidColoring("a color class has more than two vertices")
    if len(classes[coloring.colors[u] - 1]) != 1:
        raise InvalidColoring(f"vertex {u} does not form a singleton class")

    nu = g.adj[u]
    v_r = v_s = v_sp = v_t = v_tp = v_k = 0
    pairs_in_nu = []
    for cls in classes:
        if len(cls) == 1:
            v_r |= 1 << cls[0]
            continue
        a, b = cls
        a_in, b_in = bool(nu >> a & 1), bool(nu >> b & 1)
        if a_in and not b_in:
            v_s |= 1 << a
            v_sp |= 1 << b
        elif b_in and not a_in:
            v_s |= 1 << b
            v_sp |= 1 << a
        elif a_in and b_in:
            pairs_in_nu.append((a, b))
        else:
            # both outside N[u] would give an independent triple with u
            raise InvalidColoring(f"pair ({a}, {b}) entirely outside N[{u}]")

    singles_not_u = v_r & ~(1 << u)

    def misses_singleton(v: int) -> bool:
        return bool(singles_not_u & ~g.adj[v])

    rerouted = 0
    for a, b in pairs_in_nu:
        qa, qb = misses_singleton(a), misses_singleton(b)
        if qa and not qb:
            v_tp |= 1 << a
            v_t |= 1 << b
        elif qb and not qa:
            v_tp |= 1 << b
            v_t |= 1 << a
        elif qa and qb:
            v_tp |= 1 << min(a, b)
            v_t |= 1 << max(a, b)
        else:
            v_k |= 1 << a | 1 << b
    for v in range(g.n):
        if misses_singleton(v) and not v_tp >> v & 1:
            rerouted += 1

    assert v_r | v_s | v_sp | v_t | v_tp | v_k == g.vertex_mask()
    assert v_s.bit_count() == v_sp.bit_count()
    assert v_t.bit_count() == v_tp.bit_count()
    assert v_k.bit_count() % 2 == 0

    return LemmaPartition(
        u=u, coloring=coloring,
        v_r=v_r, v_s=v_s, v_sp=v_sp, v_t=v_t, v_tp=v_tp, v_k=v_k,
        r=v_r.bit_count(), s=v_s.bit_count(), t=v_t.bit_count(),
        k=v_k.bit_count() // 2, p=g.n, delta=delta, rerouted=rerouted)


def _sub_clique(g: Graph, mask: int) -> int:
    """Clique number of the induced subgraph; 0 for the empty mask."""
    if mask == 0:
        return 0
    return clique_number(induced_subgraph(g, mask))


def verify_identities(g: Graph, lp: LemmaPartition) -> list[IdentityCheck]:
    """Evaluate the counting identities and clique inequalities.

    The first three are definitional for any valid partition; the rest
    are minimal-counterexample facts and may legitimately fail.
    """
    chi = lp.coloring.c
    omega = clique_number(g)
    min_nonadj = min(g.n - 1 - g.degree(v) for v in range(g.n))
    w_s = _sub_clique(g, lp.v_s)
    w_t = _sub_clique(g, lp.v_t)
    w_stk = _sub_clique(g, lp.v_s | lp.v_t | lp.v_k)
    non_neighbors = g.vertex_mask() & ~g.adj[lp.u] & ~(1 << lp.u)
    checks = [
        IdentityCheck("color-count", lp.r + lp.s + lp.t + lp.k == chi,
                      lp.r + lp.s + lp.t + lp.k, chi, True),
        IdentityCheck("degree-count",
                      lp.delta == lp.r - 1 + lp.s + 2 * lp.t + 2 * lp.k,
                      lp.delta, lp.r - 1 + lp.s + 2 * lp.t + 2 * lp.k, True),
        IdentityCheck("order-count", lp.p == 2 * chi - lp.r,
                      lp.p, 2 * chi - lp.r, True),
        IdentityCheck("nonadjacency", min_nonadj >= lp.s, min_nonadj, lp.s, False),
        IdentityCheck("clique-split", lp.r + w_s + w_t <= omega,
                      lp.r + w_s + w_t, omega, False),
        IdentityCheck("clique-union", lp.r + w_stk <= omega,
                      lp.r + w_stk, omega, False),
        IdentityCheck("sprime-nonneighbors", lp.v_sp == non_neighbors,
                      lp.v_sp, non_neighbors, False),
    ]
    return checks


def _pair_partner(lp: LemmaPartition, v: int) -> int:
    """The other member of v's color class (v must be in a pair class)."""
    cv = lp.coloring.colors[v]
    for w, cw in enumerate(lp.coloring.colors):
        if cw == cv and w != v:
            return w
    raise ValueError(f"vertex {v} is in a singleton class")


def check_claims(g: Graph, lp: LemmaPartition) -> ClaimReport:
    """Test the four adjacency claims plus the clique inequalities.

    Each failure carries a concrete witness that is re-verified against
    the adjacency matrix before being reported.
    """
    out: list[ClaimStatus] = []

    def adjacency_claim(name, left_mask, right_mask):
        if left_mask == 0 or right_mask == 0:
            out.append(ClaimStatus(name, "vacuous"))
            return
        for v in bits(left_mask):
            missing = right_mask & ~g.adj[v] & ~(1 << v)
            if missing:
                w = next(bits(missing))
                assert not g.has_edge(v, w)
                out.append(ClaimStatus(name, "fails", (v, w)))
                return
        out.append(ClaimStatus(name, "holds"))

    adjacency_claim("claim1", lp.v_r, lp.v_s | lp.v_t)
    adjacency_claim("claim2", lp.v_s, lp.v_t)

    # claim 3, partial form: a pair-class vertex in N(u) that misses some
    # other such vertex must be adjacent to every singleton vertex
    unsociable = 0
    for x in bits(lp.v_s):
        if lp.v_s & ~g.adj[x] & ~(1 << x):
            unsociable |= 1 << x
    adjacency_claim("claim3", unsociable, lp.v_r)

    # claim 4: if two v_tp vertices miss distinct singleton vertices, their
    # color partners must be adjacent
    singles_not_u = lp.v_r & ~(1 << lp.u)
    status = ClaimStatus("claim4", "vacuous")
    tp = list(bits(lp.v_tp))
    for ai in range(len(tp)):
        for bi in range(ai + 1, len(tp)):
            ap, bp = tp[ai], tp[bi]
            miss_a = singles_not_u & ~g.adj[ap]
            miss_b = singles_not_u & ~g.adj[bp]
            if not miss_a or not miss_b or (miss_a | miss_b).bit_count() < 2:
                continue
            a, b = _pair_partner(lp, ap), _pair_partner(lp, bp)
            if g.has_edge(a, b):
                if status.status == "vacuous":
                    status = ClaimStatus("claim4", "holds")
            else:
                assert not g.has_edge(a, b)
                status = ClaimStatus("claim4", "fails", (a, b))
                break
        if status.status == "fails":
            break
    out.append(status)

    omega = clique_number(g)
    w_s = _sub_clique(g, lp.v_s)
    w_t = _sub_clique(g, lp.v_t)
    if lp.r + w_s + w_t <= omega:
        out.append(ClaimStatus("clique-split", "holds"))
    else:
        out.append(ClaimStatus("clique-split", "fails",
                               tuple(bits(lp.v_s | lp.v_t))))
    w_stk = _sub_clique(g, lp.v_s | lp.v_t | lp.v_k)
    if lp.r + w_stk <= omega:
        out.append(ClaimStatus("clique-union", "holds"))
    else:
        out.append(ClaimStatus("clique-union", "fails",
                               tuple(bits(lp.v_s | lp.v_t | lp.v_k))))
    return ClaimReport(tuple(out))


def analyze_graph(g: Graph) -> PartitionReport | None:
    """Full pipeline: pick a max-degree vertex that some optimal coloring
    isolates (lowest index first), build the partition, run all checks.

    Returns None when no max-degree vertex can be isolated.
    """
    if not is_3k1_free(g):
        raise PreconditionViolated("graph has an independent 3-set")
    _, delta = max_degree_vertex(g)
    for u in range(g.n):
        if g.degree(u) != delta:
            continue
        coloring = singleton_coloring(g, u)
        if coloring is None:
            continue
        lp = compute_partition(g, coloring, u)
        return PartitionReport(lp, tuple(verify_identities(g, lp)),
                               check_claims(g, lp))
    return None
