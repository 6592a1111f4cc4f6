"""Ramsey(3,k) lower-bound witnesses: constructions, exact verification,
and a simulated-annealing search over labeled graphs.

The objective for a candidate on n vertices is the number of triangles
plus the number of independent k-sets, so cost zero is equivalent to
being a witness that R(3,k) > n.  Cost deltas for a single edge toggle
are computed incrementally by counting independent (k-2)-sets among
common non-neighbors, and the running cost is periodically audited
against a from-scratch recount.  The random source is Python's Mersenne
Twister seeded with "<seed>:<restart>", giving every restart its own
reproducible stream.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import InvalidDifference, PreconditionViolated
from .graphs import Graph, from_rows, is_triangle_free, make_graph, triangle_count
from .invariants import independence_number

AUDIT_EVERY = 4096  # accepted moves between incremental-cost audits


@dataclass(frozen=True)
class RamseyWitness:
    """A verified triangle-free graph with independence number below k."""

    graph: Graph
    k: int
    canonical: bytes
    provenance: str  # "enumerated" | "searched" | "constructed:<name>"
    seed: int | None = None
    iterations: int | None = None

    def __post_init__(self):
        if not verify_witness(self.graph, self.k):
            raise PreconditionViolated(
                f"graph is not a valid R(3,{self.k}) witness")


@dataclass(frozen=True)
class SearchParams:
    """Knobs for the annealing search; defaults handle k <= 6 desk scale."""

    n: int
    k: int
    seed: int = 0
    max_iterations: int = 60_000
    initial_temperature: float = 1.2
    cooling: float = 0.95  # applied per batch of n(n-1)/2 accepted moves
    restarts: int = 8

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        if self.max_iterations < 1 or self.restarts < 1:
            raise ValueError("iteration and restart counts must be positive")
        if not 0 < self.cooling < 1:
            raise ValueError("cooling factor must lie in (0, 1)")
        if self.initial_temperature <= 0:
            raise ValueError("initial temperature must be positive")


def verify_witness(g: Graph, k: int) -> bool:
    """Exact check: triangle-free and independence number below k."""
    return is_triangle_free(g) and independence_number(g) < k


def _count_indep(rows, allowed: int, size: int) -> int:
    """Number of independent subsets of exactly ``size`` inside ``allowed``."""
    if size == 0:
        return 1
    if allowed.bit_count() < size:
        return 0
    count = 0
    while allowed:
        v_bit = allowed & -allowed
        v = v_bit.bit_length() - 1
        allowed ^= v_bit
        if size == 1:
            count += 1
        else:
            count += _count_indep(rows, allowed & ~rows[v], size - 1)
    return count


def count_independent_ksets(g: Graph, k: int) -> int:
    """Number of independent sets of size exactly k."""
    return _count_indep(g.adj, g.vertex_mask(), k)


def witness_cost(g: Graph, k: int) -> int:
    """Triangles plus independent k-sets; zero iff verify_witness holds."""
    return triangle_count(g) + count_independent_ksets(g, k)


def circulant(n: int, diffs) -> Graph:
    """Circulant graph: i ~ j iff (i - j) mod n is in the connection set."""
    dset = set(diffs)
    for d in dset:
        if not 1 <= d <= n // 2:
            raise InvalidDifference(f"difference {d} outside 1..{n // 2}")
    edges = [(i, (i + d) % n) for i in range(n) for d in dset]
    return make_graph(n, edges)


def _pair_kset_delta(rows, n: int, i: int, j: int, k: int) -> int:
    """Independent k-sets containing both i and j, given ij is a non-edge."""
    if k < 2:
        return 0
    full = (1 << n) - 1
    allowed = full & ~rows[i] & ~rows[j] & ~(1 << i) & ~(1 << j)
    return _count_indep(rows, allowed, k - 2)


def _anneal_restart(params: SearchParams, restart: int) -> tuple[list[int] | None, int]:
    """One annealing run; returns (rows of a zero-cost graph or None,
    iterations consumed)."""
    n, k = params.n, params.k
    rng = random.Random(f"{params.seed}:{restart}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows = [0] * n
    for i, j in pairs:  # sparse random start; triangles are the scarcer fault
        if rng.random() < 0.25:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    g0 = from_rows(rows[:])
    tri = triangle_count(g0)
    indep = count_independent_ksets(g0, k)
    temperature = params.initial_temperature
    batch = max(len(pairs), 1)
    accepted = 0

    for it in range(params.max_iterations):
        if tri + indep == 0:
            return rows, it
        i, j = pairs[rng.randrange(len(pairs))]
        has = bool(rows[i] >> j & 1)
        common = (rows[i] & rows[j]).bit_count()
        if has:
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)
            d_tri = -common
            d_indep = _pair_kset_delta(rows, n, i, j, k)
        else:
            d_tri = common
            d_indep = -_pair_kset_delta(rows, n, i, j, k)
        delta = d_tri + d_indep
        if delta <= 0 or rng.random() < math.exp(-delta / temperature):
            if not has:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            tri += d_tri
            indep += d_indep
            accepted += 1
            if accepted % batch == 0:
                temperature *= params.cooling
            if accepted % AUDIT_EVERY == 0:
                g = from_rows(rows[:])
                assert tri == triangle_count(g)
                assert indep == count_independent_ksets(g, k)
        elif has:  # rejected removal: put the edge back
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    if tri + indep == 0:
        return rows, params.max_iterations
    return None, params.max_iterations


def anneal_search(params: SearchParams) -> RamseyWitness | None:
    """Simulated annealing over edge toggles; deterministic per seed.

    Restarts run in index order with independent RNG streams and the
    first verified zero-cost graph wins, so a parallel driver that keeps
    the lowest successful restart index reproduces this result.  Returns
    None when every restart exhausts its iteration budget.
    """
    from .enumeration import canonical_form  # deferred: avoids import cycle

    total_iterations = 0
    for restart in range(params.restarts):
        rows, used = _anneal_restart(params, restart)
        total_iterations += used
        if rows is None:
            continue
        g = from_rows(rows)
        if not verify_witness(g, params.k):  # re-verify, never trust the cost
            raise AssertionError("zero-cost graph failed exact verification")
        return RamseyWitness(graph=g, k=params.k,
                             canonical=canonical_form(g) if g.n <= 16 else b"",
                             provenance="searched", seed=params.seed,
                             iterations=total_iterations)
    return None
