"""
Any finite poset, drawn in directed cycles
==========================================

Three steps take an abstract order into graphs: encode elements as
products of odd primes, collect the encodings into sets ordered by
divisibility, then realize each set as a disjoint union of directed
cycles. The solver re-derives the original order from the graphs alone.
"""

from homlab import FinitePoset, hom_exists
from homlab.posets import (
    embed_divisibility,
    embed_poset_to_odd_sets,
    odd_set_leq,
    odd_sets_to_cycle_family,
)

# The "N" poset: a < b, c < b, c < d. Not a lattice, not a chain.
q = FinitePoset(["a", "b", "c", "d"],
                [("a", "b"), ("c", "b"), ("c", "d")])
print(q)

# Step 1: each element becomes a product of odd primes over part of its
# up-set.
encoded = embed_divisibility(q)
for x in q.elements:
    print(f"  {x} -> {encoded[x]}")

# Step 2: elements become finite sets of odd numbers; the order is
# "every member of the smaller set has a divisor in the larger".
family = embed_poset_to_odd_sets(q)
for x in q.elements:
    print(f"  U({x}) = {sorted(family[x])}")

for x in q.elements:
    for y in q.elements:
        assert q.leq(x, y) == odd_set_leq(family[x], family[y])
print("odd-set order matches the poset on all",
      len(q.elements) ** 2, "pairs")

# Step 3: each set becomes a family of directed cycles, one cycle per
# member. A homomorphism between families exists exactly when every
# cycle on the left finds a cycle on the right whose length divides its
# own: winding around.
graphs = {x: odd_sets_to_cycle_family(family[x]) for x in q.elements}
for x in q.elements:
    g = graphs[x]
    print(f"  {x}: {g.vertex_count} vertices in"
          f" {len(sorted(family[x]))} cycles")

print("solver agreement on all ordered pairs:")
for x in q.elements:
    row = []
    for y in q.elements:
        verdict = hom_exists(graphs[x], graphs[y]) is not None
        assert verdict == q.leq(x, y)
        row.append("<=" if verdict else " .")
    print(f"  {x}: {' '.join(row)}")
