"""A/B probe 2: divisibility-positive indicate pairs and the 477v case."""

import time

from homlab.gadgets import build_indicator, indicate
from homlab.graphs import Digraph, complete_graph, make_cycle
from homlab.intervals import gadget_for_interval, phi
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


ind = build_indicator(5, B).payload
i15 = indicate(make_cycle(15, directed=True), ind)
i45 = indicate(make_cycle(45, directed=True), ind)
say(f"sizes: {i15.vertex_count} {i45.vertex_count}")
timed("mrv ind45->ind15 (want witness)", hom_exists, i45, i15, B)
timed("hub ind45->ind15 (want >=1)", count_homs, i45, i15, B, limit=1)
timed("mrv ind15->ind45 (want None)", hom_exists, i15, i45, B)
timed("hub ind15->ind45 (want 0)", count_homs, i15, i45, B, limit=1)
timed("mrv ind45 self (want witness)", hom_exists, i45, i45, B)
timed("hub ind45 self (want >=1)", count_homs, i45, i45, B, limit=1)

gadget = gadget_for_interval(make_cycle(5), complete_graph(3), B)
k3d = Digraph(3, ((0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)))
pk = phi(k3d, gadget)
p3 = phi(make_cycle(3, directed=True), gadget)
say(f"phi(k3d) {pk.vertex_count}v")
timed("hub p3->pk (want >=1)", count_homs, p3, pk, B, limit=1)
timed("hub pk->p3 (want 0)", count_homs, pk, p3, B, limit=1)
timed("count pk self (want 6)", count_homs, pk, pk, B)
timed("count p3 self (want 3)", count_homs, p3, p3, B)
say("done")
