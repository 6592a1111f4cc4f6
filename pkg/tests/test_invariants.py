import random

import pytest

from trifree.errors import OracleScaleExceeded, PreconditionViolated
from trifree.graphs import bits, complement, make_graph
from trifree.invariants import (chromatic_alpha2, chromatic_number,
                                clique_number, independence_number,
                                is_k_colorable_oracle, max_clique,
                                max_independent_set, max_matching,
                                validate_coloring, validate_matching)
from helpers import (C5, K4, PETERSEN, all_graphs, matching_size_oracle,
                     random_graph)


def least_colorable_k(g):
    return next(k for k in range(1, g.n + 1) if is_k_colorable_oracle(g, k))


def test_clique_number_examples():
    assert clique_number(K4) == 4
    assert clique_number(C5) == 2
    assert clique_number(complement(PETERSEN)) == 4


def test_clique_witness_is_complete():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 14), rng.random())
        mask = max_clique(g)
        members = list(bits(mask))
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                assert g.has_edge(a, b)


def test_independence_number_examples():
    assert independence_number(C5) == 2
    assert independence_number(K4) == 1
    assert independence_number(PETERSEN) == 4
    mask = max_independent_set(PETERSEN)
    members = list(bits(mask))
    assert len(members) == 4
    assert all(not PETERSEN.has_edge(a, b)
               for i, a in enumerate(members) for b in members[i + 1:])


def test_alpha_equals_complement_clique():
    rng = random.Random(12)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 13), rng.random())
        assert independence_number(g) == clique_number(complement(g))


def test_chromatic_examples():
    assert chromatic_number(C5)[0] == 3
    assert chromatic_number(K4)[0] == 4
    assert chromatic_number(PETERSEN)[0] == 3
    chi, coloring = chromatic_number(complement(PETERSEN))
    assert chi == 5
    validate_coloring(complement(PETERSEN), coloring)


def test_chromatic_exhaustive_small():
    for n in range(1, 6):
        for g in all_graphs(n):
            chi, coloring = chromatic_number(g)
            validate_coloring(g, coloring)
            assert coloring.c == chi
            assert chi == least_colorable_k(g)
            assert chi == chromatic_number(g, use_alpha2_fast_path=False)[0]


def test_chromatic_random_medium():
    rng = random.Random(13)
    for _ in range(40):
        g = random_graph(rng, rng.randint(6, 9), rng.random())
        chi, coloring = chromatic_number(g)
        validate_coloring(g, coloring)
        assert chi == least_colorable_k(g)


def test_omega_chi_delta_sandwich():
    rng = random.Random(14)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        chi, _ = chromatic_number(g)
        delta = max(g.adj[v].bit_count() for v in range(g.n))
        assert clique_number(g) <= chi <= delta + 1


def test_chromatic_deterministic():
    rng = random.Random(15)
    for _ in range(20):
        g = random_graph(rng, 9, 0.5)
        assert chromatic_number(g) == chromatic_number(g)


def test_matching_examples():
    assert max_matching(C5).size == 2
    assert max_matching(K4).size == 2
    pet = max_matching(PETERSEN)
    assert pet.size == 5
    validate_matching(PETERSEN, pet)


def test_matching_exhaustive_small():
    for n in range(1, 7):
        for g in all_graphs(n):
            m = max_matching(g)
            validate_matching(g, m)
            assert m.size == matching_size_oracle(g)


def test_matching_random_vs_oracle():
    rng = random.Random(16)
    for _ in range(80):
        g = random_graph(rng, rng.randint(7, 12), rng.random())
        assert max_matching(g).size == matching_size_oracle(g)


def test_chromatic_alpha2_examples():
    assert chromatic_alpha2(C5) == 3
    assert chromatic_alpha2(K4) == 4
    assert chromatic_alpha2(complement(PETERSEN)) == 5
    with pytest.raises(PreconditionViolated):
        chromatic_alpha2(PETERSEN)


def test_alpha2_matches_solver_on_3k1_free_sweep():
    from trifree.enumeration import enumerate_triangle_free
    for n in range(1, 7):
        for tf in enumerate_triangle_free(n):
            g = complement(tf)
            assert independence_number(g) <= 2
            fast = chromatic_alpha2(g)
            chi, coloring = chromatic_number(g, use_alpha2_fast_path=False)
            assert fast == chi
            # 3K1-free: classes of at most 2, and n = 2*chi - singletons
            sizes = coloring.class_sizes()
            assert max(sizes) <= 2
            assert g.n == 2 * chi - coloring.singleton_count()


def test_colorability_oracle():
    assert not is_k_colorable_oracle(C5, 2)
    assert is_k_colorable_oracle(C5, 3)
    assert not is_k_colorable_oracle(K4, 3)
    with pytest.raises(OracleScaleExceeded):
        is_k_colorable_oracle(make_graph(13, []), 2)
