"""
The interval is a fractal
=========================

Every non-gap interval of the homomorphism order contains a copy of the
whole order. The machinery: a rigid two-block gadget spanning the
interval, substituted into the arcs of directed graphs. Poset in,
verified embedding out. Expect several minutes of exact search.
"""

import time

from homlab import FinitePoset, SolverBudget, count_homs
from homlab.graphs import Digraph, complete_graph, make_cycle
from homlab.intervals import (
    embed_poset_into_interval,
    gadget_for_interval,
    hom_count_correspondence,
    phi,
)

budget = SolverBudget(timeout_secs=1800.0)
c5 = make_cycle(5)
k3 = complete_graph(3)

# The gadget: two rigid incomparable blocks joined by two long paths,
# with distinguished vertices a and b at the path midpoints. Rigidity
# of the blocks is what makes substitution counts exact later.
start = time.monotonic()
gadget = gadget_for_interval(c5, k3, budget)
print(f"gadget: {gadget.graph.vertex_count} vertices, "
      f"a={gadget.a}, b={gadget.b} ({time.monotonic() - start:.1f}s)")
print("  endomorphisms:", count_homs(gadget.graph, gadget.graph, budget))

# Embed the "V" poset into (C5, K3): one bottom, two incomparable tops.
# Each element becomes the substituted image of a directed cycle family;
# every interval membership and order claim is settled by the solver.
vee = FinitePoset(["low", "left", "right"],
                  [("low", "left"), ("low", "right")])
start = time.monotonic()
embedding = embed_poset_into_interval(vee, c5, k3, strategy="phi",
                                      budget=budget, gadget=gadget)
print(f"embedded the V poset ({time.monotonic() - start:.1f}s)")
for element in vee.elements:
    print(f"  {element}: {embedding.graph(element).vertex_count} vertices")
print("verification:")
for claim in embedding.report.claims:
    print(f"  {claim.claim}[{claim.instance}]: {claim.verdict}")
print("overall:", "pass" if embedding.report.overall_pass else "fail")

# The same substitution preserves exact homomorphism counts for
# oriented inputs without arc-free vertices.
arc = Digraph(2, ((0, 1),))
triangle = make_cycle(3, directed=True)
for name, g, h in (("arc, arc", arc, arc),
                   ("arc, triangle", arc, triangle),
                   ("triangle, triangle", triangle, triangle)):
    direct, substituted = hom_count_correspondence(g, h, gadget, budget)
    print(f"counts for ({name}): direct {direct}, "
          f"substituted {substituted}")

# Both hypotheses earn their keep. An arc-free vertex ranges over the
# whole blown-up target, and a digon's two parallel copies admit braided
# self-maps; existence still transfers, counts do not.
point = Digraph(1, ())
digon = Digraph(2, ((0, 1), (1, 0)))
direct, substituted = hom_count_correspondence(point, arc, gadget, budget)
print(f"isolated vertex: direct {direct}, substituted {substituted}")
direct, substituted = hom_count_correspondence(digon, digon, gadget, budget)
print(f"digon: direct {direct}, substituted {substituted}")
assert count_homs(phi(digon, gadget), phi(digon, gadget), budget) == substituted
