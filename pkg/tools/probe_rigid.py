"""Third probe: three-apex rigid blocks, their incomparable pairs, and
gadget-scale counting timings."""

from __future__ import annotations

import time
from itertools import combinations

from homlab.graphs import (
    Digraph,
    Graph,
    analyze,
    complete_graph,
    make_cycle,
    petersen_graph,
)
from homlab.solver import (
    SolverBudget,
    core_of,
    count_homs,
    hom_exists,
    is_isomorphic,
    is_rigid,
)
from homlab.errors import BudgetExceededError

K3 = complete_graph(3)
C5 = make_cycle(5)
BUDGET = SolverBudget(timeout_secs=600.0)
LONG = SolverBudget(timeout_secs=1800.0)


def say(msg: str) -> None:
    print(msg, flush=True)


def timed(fn, *args, **kwargs):
    t = time.time()
    try:
        return fn(*args, **kwargs), time.time() - t, None
    except BudgetExceededError as exc:
        return None, time.time() - t, exc


pet = petersen_graph()
masks = pet.adjacency_masks
indep = [s for s in combinations(range(10), 3)
         if not any(masks[a] >> b & 1 for a, b in combinations(s, 2))
         and not (masks[s[0]] & masks[s[1]] & masks[s[2]])]
say(f"viable 3-sets: {len(indep)}")


def with_apexes(sets):
    edges = list(pet.edges)
    for i, s in enumerate(sets):
        for v in s:
            edges.append((10 + i, v))
    return Graph(10 + len(sets), tuple(edges))


rigid_blocks = []
t0 = time.time()
for trio in combinations(indep, 3):
    if len({frozenset(s) for s in trio}) < 3:
        continue
    g = with_apexes(trio)
    if analyze(g).odd_girth != 5:
        continue
    if hom_exists(g, K3) is None or hom_exists(g, C5) is not None:
        continue
    if core_of(g).vertex_count != 13 or not is_rigid(g):
        continue
    if any(is_isomorphic(g, h) for _, h in rigid_blocks):
        continue
    rigid_blocks.append((trio, g))
    say(f"rigid block {len(rigid_blocks)}: {trio}")
    if len(rigid_blocks) >= 8:
        break
say(f"collected {len(rigid_blocks)} rigid blocks ({time.time()-t0:.1f}s)")

pair = None
for (sa, ga), (sb, gb) in combinations(rigid_blocks, 2):
    fwd, ft, _ = timed(hom_exists, ga, gb, BUDGET)
    bwd, bt, _ = timed(hom_exists, gb, ga, BUDGET)
    say(f"  {sa} vs {sb}: fwd={fwd is not None} bwd={bwd is not None}"
        f" ({ft:.1f}s/{bt:.1f}s)")
    if fwd is None and bwd is None:
        pair = (sa, ga, sb, gb)
        say("  INCOMPARABLE RIGID PAIR ^")
        break
if pair is None:
    say("no incomparable pair among the first eight rigid blocks")
    raise SystemExit

sa, h1, sb, h2 = pair
l = 14
n1 = h1.vertex_count
edges = list(h1.edges) + [(u + n1, v + n1) for u, v in h2.edges]
state = {"nxt": n1 + h2.vertex_count}


def stitch(length: int) -> int:
    first = state["nxt"]
    prev = 0
    for _ in range(length - 1):
        edges.append((prev, state["nxt"]))
        prev = state["nxt"]
        state["nxt"] += 1
    edges.append((prev, n1))
    return first


a = stitch(2 * l) + l - 1
b = stitch(2 * l + 1) + l - 1
gadget = Graph(state["nxt"], tuple(edges))
prof = analyze(gadget)
say(f"gadget: {gadget.vertex_count}v girth={prof.girth} og={prof.odd_girth}"
    f" conn={prof.connected}")
glue, secs, exc = timed(
    lambda: [c for c in range(3)
             if hom_exists(gadget, K3, BUDGET, pinned={a: c, b: c})])
say(f"glue colours: {glue} ({secs:.1f}s)")
res, secs, exc = timed(hom_exists, gadget, C5, BUDGET)
say(f"gadget -> C5: {'TIMEOUT' if exc else res is not None} expect False ({secs:.1f}s)")
cnt, secs, exc = timed(count_homs, gadget, gadget, LONG, limit=2)
say(f"count(gadget self, limit 2): {'TIMEOUT' if exc else cnt} expect 1 ({secs:.1f}s)")


def indicate(d: Digraph, body: Graph, aa: int, bb: int) -> Graph:
    inner = [w for w in range(body.vertex_count) if w not in (aa, bb)]
    slot = {w: i for i, w in enumerate(inner)}
    es = []
    base = d.vertex_count
    for u, v in d.arcs:
        placed = {aa: u, bb: v}
        for x, y in body.edges:
            px = placed[x] if x in placed else base + slot[x]
            py = placed[y] if y in placed else base + slot[y]
            es.append((px, py))
        base += len(inner)
    return Graph(base, tuple(es))


arc = Digraph(2, ((0, 1),))
c3 = Digraph(3, ((0, 1), (1, 2), (2, 0)))
c6 = Digraph(6, tuple((i, (i + 1) % 6) for i in range(6)))
k3d = Digraph(3, tuple((i, j) for i in range(3) for j in range(3) if i != j))
phi = {nm: indicate(d, gadget, a, b) for nm, d in
       (("arc", arc), ("c3", c3), ("c6", c6), ("k3d", k3d))}
for nm, g in phi.items():
    say(f"phi({nm}): {g.vertex_count}v {g.edge_count}e")

res, secs, exc = timed(hom_exists, phi["c3"], K3, BUDGET)
say(f"phi(c3) -> K3: {'TIMEOUT' if exc else res is not None} expect True ({secs:.1f}s)")
res, secs, exc = timed(hom_exists, phi["c3"], C5, BUDGET)
say(f"phi(c3) -> C5: {'TIMEOUT' if exc else res is not None} expect False ({secs:.1f}s)")
res, secs, exc = timed(hom_exists, phi["c3"], phi["c6"], LONG)
say(f"phi(c3) -> phi(c6): {'TIMEOUT' if exc else res is not None} expect False ({secs:.1f}s)")
res, secs, exc = timed(hom_exists, phi["c6"], phi["c3"], LONG)
say(f"phi(c6) -> phi(c3): {'TIMEOUT' if exc else res is not None} expect True ({secs:.1f}s)")
for src, dst, expect in (("arc", "arc", 1), ("c3", "c3", 3), ("k3d", "k3d", 6)):
    cnt, secs, exc = timed(count_homs, phi[src], phi[dst], LONG)
    say(f"count(phi({src})->phi({dst})): {'TIMEOUT' if exc else cnt}"
        f" expect {expect} ({secs:.1f}s)")

say("probe3 done")
