"""Node-throughput probe for the gadget self-count."""

import time

from homlab.graphs import complete_graph, make_cycle
from homlab.intervals import gadget_for_interval
from homlab.solver import BudgetExceededError, SolverBudget, count_homs

gadget = gadget_for_interval(make_cycle(5), complete_graph(3))
g = gadget.graph
print(f"gadget {g.vertex_count}v", flush=True)

try:
    t0 = time.monotonic()
    c = count_homs(g, g, SolverBudget(timeout_secs=40.0))
    print(f"unpinned count={c} in {time.monotonic()-t0:.1f}s", flush=True)
except BudgetExceededError as exc:
    print(f"unpinned: budget out, nodes={exc.nodes} elapsed={exc.elapsed_secs:.1f}s "
          f"({exc.nodes/exc.elapsed_secs:.0f} nodes/s)", flush=True)

try:
    t0 = time.monotonic()
    c = count_homs(g, g, SolverBudget(timeout_secs=40.0), pinned={0: 0, 13: 13})
    print(f"pinned-attachments count={c} in {time.monotonic()-t0:.1f}s", flush=True)
except BudgetExceededError as exc:
    print(f"pinned: budget out, nodes={exc.nodes} "
          f"({exc.nodes/exc.elapsed_secs:.0f} nodes/s)", flush=True)
