"""Second probe: rigid block candidates and full-scale timing.

Section D': Petersen-plus-apex family. An apex vertex joined to an
independent 3-set of the Petersen graph keeps the graph triangle-free
with odd girth 5 and (for suitable sets) 3-colorable, while breaking
all symmetry. We hunt for sets giving rigid cores and then for an
incomparable pair among the survivors.

Section F: indicator profile (1,2,3)/(4,3,2) at l=5 re-verified, then
the directed-cycle substitution graphs at acceptance scale, timing the
existence checks including the expensive refutations.

Section H: interval gadget assembled from the first incomparable rigid
pair, its own rigidity count, and the arc-substitution counting runs at
the sizes the count-correspondence corpus needs.
"""

from __future__ import annotations

import sys
import time
from itertools import combinations

sys.setrecursionlimit(10000)

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

BUDGET = SolverBudget(timeout_secs=900.0)
LONG = SolverBudget(timeout_secs=1800.0)
C5 = make_cycle(5)
K3 = complete_graph(3)


def say(msg: str) -> None:
    print(msg, flush=True)


def timed(fn, *args, **kwargs):
    t = time.time()
    try:
        return fn(*args, **kwargs), time.time() - t, None
    except BudgetExceededError as exc:
        return None, time.time() - t, exc


say("=== D'. Petersen apex family ===")
pet = petersen_graph()
pmask = pet.adjacency_masks
candidates = []
for s in combinations(range(10), 3):
    x, y, z = s
    if pmask[x] >> y & 1 or pmask[x] >> z & 1 or pmask[y] >> z & 1:
        continue
    if pmask[x] & pmask[y] & pmask[z]:
        continue  # common neighbour would let the apex fold
    candidates.append(s)
say(f"independent 3-sets without common neighbour: {len(candidates)}")

accepted = []
for s in candidates:
    g = Graph(11, pet.edges + tuple((10, v) for v in s))
    prof = analyze(g)
    if prof.girth != 4 or prof.odd_girth != 5:
        say(f"  {s}: girth {prof.girth} og {prof.odd_girth} SKIP")
        continue
    to_k3 = hom_exists(g, K3, BUDGET) is not None
    if not to_k3:
        say(f"  {s}: not 3-colourable SKIP")
        continue
    if hom_exists(g, C5, BUDGET) is not None:
        say(f"  {s}: maps to C5?! SKIP")
        continue
    core, ct, _ = timed(core_of, g, BUDGET)
    if core is None or core.vertex_count != 11:
        size = core.vertex_count if core else "?"
        say(f"  {s}: core {size}v SKIP ({ct:.1f}s)")
        continue
    rigid, rt, _ = timed(is_rigid, g, BUDGET)
    say(f"  {s}: core 11v rigid={rigid} ({ct:.1f}s+{rt:.1f}s)")
    if rigid:
        if any(is_isomorphic(g, h, BUDGET) for _, h in accepted):
            say(f"    (isomorphic to an earlier accept, dropped)")
            continue
        accepted.append((s, g))
    if len(accepted) >= 6:
        break

say(f"accepted rigid blocks: {[s for s, _ in accepted]}")
pair = None
for (sa, ga), (sb, gb) in combinations(accepted, 2):
    fwd, ft, _ = timed(hom_exists, ga, gb, BUDGET)
    bwd, bt, _ = timed(hom_exists, gb, ga, BUDGET)
    say(f"  {sa} vs {sb}: fwd={fwd is not None} bwd={bwd is not None}"
        f" ({ft:.1f}s/{bt:.1f}s)")
    if fwd is None and bwd is None and pair is None:
        pair = (sa, ga, sb, gb)
        say(f"  INCOMPARABLE PAIR: {sa}, {sb}")
        break

say("")
say("=== F. indicator scale timing (l=5) ===")


def subdivided_k4(spokes, rims):
    sa, sb, sc = spokes
    rab, rac, rbc = rims
    edges = []
    nxt = 4

    def path(u, v, length):
        nonlocal nxt
        prev = u
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))

    path(0, 3, sa)
    path(1, 3, sb)
    path(2, 3, sc)
    path(0, 1, rab)
    path(0, 2, rac)
    path(1, 2, rbc)
    return Graph(nxt, tuple(edges))


def indicate(d: Digraph, gadget: Graph, a: int, b: int) -> Graph:
    """Replace every arc (u,v) of d by a fresh copy of gadget with a->u, b->v."""
    n = d.vertex_count
    inner = [w for w in range(gadget.vertex_count) if w not in (a, b)]
    slot = {w: i for i, w in enumerate(inner)}
    edges = []
    base = n
    for u, v in d.arcs:
        def place(w):
            if w == a:
                return u
            if w == b:
                return v
            return base + slot[w]
        for x, y in gadget.edges:
            edges.append((place(x), place(y)))
        base += len(inner)
    return Graph(base, tuple(edges))


i5 = subdivided_k4((1, 2, 3), (4, 3, 2))
prof = analyze(i5)
say(f"I5 profile: {i5.vertex_count}v girth={prof.girth}")
say(f"I5 rigid: {is_rigid(i5, BUDGET)}")
say(f"I5 -> C5: {hom_exists(i5, C5, BUDGET) is not None}")
glue = [v for v in range(5)
        if hom_exists(i5, C5, BUDGET, pinned={0: v, 1: v}) is not None]
say(f"I5 glue images (a=b=v works for v in): {glue}")

dcycle = {p: Digraph(p, tuple((i, (i + 1) % p) for i in range(p)))
          for p in (15, 25, 45)}
ind = {}
for p in (15, 25, 45):
    ind[p] = indicate(dcycle[p], i5, 0, 1)
    say(f"indicate(C{p}): {ind[p].vertex_count}v {ind[p].edge_count}e")

for p, q, expect in ((15, 15, True), (25, 25, True), (45, 45, True),
                     (45, 15, True), (15, 25, False), (25, 15, False),
                     (15, 45, False), (25, 45, False), (45, 25, False)):
    res, secs, exc = timed(hom_exists, ind[p], ind[q], BUDGET)
    verdict = "TIMEOUT" if exc else (res is not None)
    mark = "ok" if verdict == expect else "MISMATCH"
    say(f"  ind(C{p}) -> ind(C{q}): {verdict} expect {expect} [{mark}] {secs:.1f}s")

say("")
say("=== H. interval gadget and counting scale ===")


def section_h(h1: Graph, h2: Graph) -> None:
    l = 12
    n1, n2 = h1.vertex_count, h2.vertex_count
    edges = list(h1.edges)
    edges += [(u + n1, v + n1) for u, v in h2.edges]
    base = n1 + n2

    def stitch(length, start, end):
        nonlocal base
        prev = start
        first = base
        for _ in range(length - 1):
            edges.append((prev, base))
            prev = base
            base += 1
        edges.append((prev, end))
        return first

    p_first = stitch(2 * l, 0, n1)       # even path, vertex 0 to vertex 0
    q_first = stitch(2 * l + 1, 0, n1)   # odd path
    a_mid = p_first + l - 1              # distance l from the h1 end
    b_mid = q_first + l - 1
    gadget = Graph(base, tuple(edges))
    prof = analyze(gadget)
    say(f"gadget: {gadget.vertex_count}v girth={prof.girth} og={prof.odd_girth}"
        f" connected={prof.connected} a={a_mid} b={b_mid}")
    fold = [c for c in range(3)
            if hom_exists(gadget, K3, BUDGET, pinned={a_mid: c, b_mid: c})]
    say(f"gadget -> K3 with f(a)=f(b): colours {fold}")
    say(f"gadget -> C5: {hom_exists(gadget, C5, BUDGET) is not None}")
    cnt, secs, exc = timed(count_homs, gadget, gadget, LONG, limit=2)
    say(f"count(gadget->gadget, limit 2): {'TIMEOUT' if exc else cnt} {secs:.1f}s")

    arc = Digraph(2, ((0, 1),))
    c3 = Digraph(3, ((0, 1), (1, 2), (2, 0)))
    c6 = Digraph(6, tuple((i, (i + 1) % 6) for i in range(6)))
    k3d = Digraph(3, tuple((i, j) for i in range(3) for j in range(3) if i != j))
    phi = {name: indicate(d, gadget, a_mid, b_mid)
           for name, d in (("arc", arc), ("c3", c3), ("c6", c6), ("k3d", k3d))}
    for name, g in phi.items():
        say(f"phi({name}): {g.vertex_count}v {g.edge_count}e")

    for src, dst, expect in (("arc", "arc", 1), ("c3", "c3", 3)):
        cnt, secs, exc = timed(count_homs, phi[src], phi[dst], LONG)
        say(f"  count(phi({src})->phi({dst})): {'TIMEOUT' if exc else cnt}"
            f" expect {expect} {secs:.1f}s")
    res, secs, exc = timed(hom_exists, phi["c3"], phi["c6"], LONG)
    say(f"  phi(c3) -> phi(c6): {'TIMEOUT' if exc else res is not None}"
        f" expect False {secs:.1f}s")
    cnt, secs, exc = timed(count_homs, phi["k3d"], phi["k3d"], LONG)
    say(f"  count(phi(k3d)->phi(k3d)): {'TIMEOUT' if exc else cnt}"
        f" expect 6 {secs:.1f}s")


if pair is None:
    say("no incomparable rigid pair; section H skipped")
else:
    section_h(pair[1], pair[3])

say("")
say("probe2 done")
