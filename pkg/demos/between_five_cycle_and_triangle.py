"""
Life between the five-cycle and the triangle
============================================

C5 < K3, and the space between them is crowded: sparse graphs
incomparable to both sides, whole incomparable pairs, and a witness
strictly between any comparable pair. Expect a few minutes of exact
search.
"""

import time

from homlab import SolverBudget, compare, hom_exists
from homlab.gadgets import (
    density_witness,
    find_sparse_incomparable,
    incomparable_pair,
)
from homlab.graphs import Graph, analyze, complete_graph, make_cycle

budget = SolverBudget(timeout_secs=900.0)
c5 = make_cycle(5)
k3 = complete_graph(3)

# A high-girth graph incomparable with C5 yet below K3. Odd cycles all
# fail (they map onto C5), so the search walks its stream until a cage
# passes all four checks.
start = time.monotonic()
found = find_sparse_incomparable(c5, k3, 7, budget=budget)
sparse = found.graph
print(f"sparse companion: {sparse.vertex_count} vertices, "
      f"girth {analyze(sparse).girth} "
      f"({time.monotonic() - start:.1f}s)")
for check in found.checks:
    print(f"  {check.name}: {'pass' if check.passed else 'FAIL'}")

# Two graphs in the open interval (C5, K3) with no map either way.
start = time.monotonic()
pair = incomparable_pair(c5, k3, budget=budget)
first, second = pair.payload
print(f"incomparable pair: {first.vertex_count} and "
      f"{second.vertex_count} vertices "
      f"({time.monotonic() - start:.1f}s)")
print("  first vs second:", compare(first, second, budget).relation)
print("  C5 -> first:", hom_exists(c5, first, budget) is not None,
      "| first -> C5:", hom_exists(first, c5, budget) is not None)

# Density: strictly between any non-gap comparable pair sits another
# graph. Between C5 and K3:
start = time.monotonic()
witness = density_witness(c5, k3, budget)
print(f"density witness: {witness.vertex_count} vertices "
      f"({time.monotonic() - start:.1f}s)")
print("  C5 vs witness:", compare(c5, witness, budget).relation)
print("  witness vs K3:", compare(witness, k3, budget).relation)

# The one true gap of the undirected order: nothing fits between the
# single vertex and the single edge.
try:
    density_witness(Graph(1, ()), Graph(2, ((0, 1),)))
except Exception as exc:
    print("K1..K2:", exc)
