"""trifree: exact chromatic bounds for 3K1-free graphs and R(3,k)
Ramsey witnesses, checkable at desk scale.

The package enumerates triangle-free graphs isomorph-free (their
complements are exactly the 3K1-free graphs), computes exact invariants
with witnesses, evaluates every implemented chromatic bound, replays
the vertex-partition accounting that proves them, and searches for
Ramsey lower-bound witnesses beyond enumeration range.
"""

from .graphs import (Graph, make_graph, from_rows, complement, induced_subgraph,
                     max_degree_vertex, is_triangle_free, is_3k1_free,
                     triangle_count, relabel, bits, mask_of)
from .formats import GraphRecord, parse_graph6, emit_graph6, read_graph_stream, parse_edge_list
from .invariants import (Coloring, Matching, clique_number, max_clique,
                         independence_number, max_independent_set,
                         chromatic_number, chromatic_alpha2, max_matching,
                         is_k_colorable_oracle, validate_coloring, validate_matching)
from .bounds import (BoundEntry, BoundReport, RamseyCandidate, RamseyKnowledge,
                     lemma1_bound, lemma2_bound, table1_bound, reed_bound,
                     conjecture2_bound, conjecture1_candidates, conjecture1_check,
                     known_ramsey, evaluate_graph)
from .enumeration import (EnumStats, canonical_form, enumerate_triangle_free,
                          enumerate_triangle_free_upto, enumerate_ramsey,
                          bruteforce_count_oracle)
from .partition import (LemmaPartition, IdentityCheck, ClaimStatus, ClaimReport,
                        PartitionReport, singleton_coloring, compute_partition,
                        verify_identities, check_claims, analyze_graph)
from .search import (RamseyWitness, SearchParams, witness_cost, verify_witness,
                     count_independent_ksets, circulant, anneal_search)

__version__ = "0.1.0"
