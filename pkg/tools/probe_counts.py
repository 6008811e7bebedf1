"""Timing probe: exact hom counts on arc-substituted graphs."""

import time

from homlab.graphs import Digraph, complete_graph, make_cycle
from homlab.intervals import gadget_for_interval, phi
from homlab.solver import SolverBudget, count_homs, hom_exists

B = SolverBudget(timeout_secs=600.0)


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


gadget = timed("gadget_for_interval", gadget_for_interval,
               make_cycle(5), complete_graph(3))
g = gadget.graph
say(f"gadget {g.vertex_count}v")

timed("count(gadget self) exact (want 1)", count_homs, g, g, B)

arc = Digraph(2, ((0, 1),))
digon = Digraph(2, ((0, 1), (1, 0)))
c3 = make_cycle(3, directed=True)
c6 = make_cycle(6, directed=True)
tourn = Digraph(3, ((0, 1), (0, 2), (1, 2)))

pa = phi(arc, gadget)
pd = phi(digon, gadget)
p3 = phi(c3, gadget)
p6 = phi(c6, gadget)
pt = phi(tourn, gadget)
say(f"phi sizes: arc={pa.vertex_count} digon={pd.vertex_count} "
    f"c3={p3.vertex_count} c6={p6.vertex_count} tourn={pt.vertex_count}")

timed("exists p6->p3 (want witness)", hom_exists, p6, p3, B)
timed("exists p3->p6 (want None)", hom_exists, p3, p6, B)
timed("count phi(arc) self (want 1)", count_homs, pa, pa, B)
timed("count phi(arc)->phi(c3) (want 3)", count_homs, pa, p3, B)
timed("count phi(c6)->phi(c3) (want 3)", count_homs, p6, p3, B)
timed("count phi(c3)->phi(tourn) (want 0)", count_homs, p3, pt, B)
timed("count phi(arc)->phi(tourn) (want 3)", count_homs, pa, pt, B)
timed("count phi(digon) self (direct 2; inflated?)", count_homs, pd, pd, B)
say("done")
