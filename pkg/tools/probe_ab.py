"""A/B probe: MRV existence vs hub-first (count limit 1) on large instances."""

import time

from homlab.gadgets import build_indicator, indicate
from homlab.graphs import Digraph, make_cycle
from homlab.intervals import gadget_for_interval, phi
from homlab.graphs import complete_graph
from homlab.solver import SolverBudget, count_homs, hom_exists

B = SolverBudget(timeout_secs=120.0)


def say(text):
    print(text, flush=True)


def timed(label, fn, *a, **kw):
    t0 = time.monotonic()
    try:
        out = fn(*a, **kw)
    except Exception as exc:
        say(f"{label}: {type(exc).__name__} ({time.monotonic()-t0:.1f}s)")
        return None
    shown = "witness" if hasattr(out, "assignment") else out
    say(f"{label}: {shown} ({time.monotonic()-t0:.1f}s)")
    return out


gadget = gadget_for_interval(make_cycle(5), complete_graph(3), B)
c3 = make_cycle(3, directed=True)
c6 = make_cycle(6, directed=True)
p3 = phi(c3, gadget)
p6 = phi(c6, gadget)

timed("hub p6->p3 (want >=1)", count_homs, p6, p3, B, limit=1)
timed("hub p3->p6 (want 0)", count_homs, p3, p6, B, limit=1)

ind = build_indicator(5, B).payload
i15 = indicate(make_cycle(15, directed=True), ind)
i25 = indicate(make_cycle(25, directed=True), ind)
say(f"indicate sizes: {i15.vertex_count} {i25.vertex_count}")
timed("mrv ind15->ind25 (want None)", hom_exists, i15, i25, B)
timed("hub ind15->ind25 (want 0)", count_homs, i15, i25, B, limit=1)
timed("mrv ind25->ind15 (want witness)", hom_exists, i25, i15, B)
timed("hub ind25->ind15 (want >=1)", count_homs, i25, i15, B, limit=1)
say("done")
