"""
A first walk through the homomorphism order
===========================================

Small graphs, exact answers: where maps go, where they provably cannot,
and what the order sees that chromatic numbers alone do not.
"""

from homlab import (
    analyze,
    compare,
    core_of,
    count_homs,
    hom_exists,
    is_rigid,
    path_threshold,
)
from homlab.graphs import (
    complete_graph,
    disjoint_union,
    grotzsch_graph,
    make_cycle,
    petersen_graph,
)

c5 = make_cycle(5)
k3 = complete_graph(3)

# The five-cycle wraps around the triangle: 5 is odd, so the walk has to
# double back once.
found = hom_exists(c5, k3)
print("C5 -> K3:", found.assignment)

# Nothing maps the triangle into the five-cycle; the solver exhausts the
# whole search space to say so.
print("K3 -> C5:", hom_exists(k3, c5))

# compare wraps both directions into one verdict.
print("compare(C5, K3):", compare(c5, k3).relation)
print("compare(C5, C5 + C5):",
      compare(c5, disjoint_union([c5, c5])).relation)

# Cores strip everything homomorphically redundant. Two disjoint
# triangles fold onto one; the Petersen graph is already minimal.
doubled = disjoint_union([k3, k3])
print("core of K3 + K3 has", core_of(doubled).vertex_count, "vertices")
print("core of Petersen has", core_of(petersen_graph()).vertex_count,
      "vertices")

# Rigidity is stronger than being a core: no endomorphism but the
# identity. Odd cycles are cores yet full of rotations.
print("C5 rigid:", is_rigid(c5), "| endomorphisms:", count_homs(c5, c5))

# The Grotzsch graph is triangle-free but not 3-colorable, so it sits
# strictly between C5's neighborhood and K4.
g = grotzsch_graph()
profile = analyze(g)
print("Grotzsch:", profile.vertex_count, "vertices, odd girth",
      profile.odd_girth)
print("Grotzsch -> K3:", hom_exists(g, k3))
print("K3 -> Grotzsch:", hom_exists(k3, g) is not None)

# How long must walks get before every pair of vertices is joined by
# walks of two consecutive lengths? K3 needs 2, C5 needs 4.
print("path threshold of K3:", path_threshold(k3))
print("path threshold of C5:", path_threshold(c5))
