"""Empirical probe for the gadget constructions.

Runs the solver over the candidate graphs the builders will draw from and
prints the facts the package freezes into its defaults: which girth-7
graphs avoid C5, which tensor-product pairs are mutually unreachable,
which product cores are rigid, and which subdivision profiles survive the
indicator checks. Everything here is recomputed from scratch; nothing is
assumed.
"""

from __future__ import annotations

import sys
import time

sys.setrecursionlimit(10000)

from homlab.graphs import (
    Graph,
    analyze,
    circulant_graph,
    complete_graph,
    generalized_mycielski,
    grotzsch_graph,
    iterated_mycielski,
    make_cycle,
    mcgee_graph,
    coxeter_graph,
    petersen_graph,
    tensor_product,
)
from homlab.solver import (
    SolverBudget,
    core_of,
    count_homs,
    hom_exists,
    is_rigid,
)
from homlab.errors import BudgetExceededError

BUDGET = SolverBudget(timeout_secs=600.0)
C5 = make_cycle(5)
K3 = complete_graph(3)


def timed(fn, *args, **kwargs):
    t = time.time()
    try:
        result = fn(*args, **kwargs)
        return result, time.time() - t, None
    except BudgetExceededError as exc:
        return None, time.time() - t, exc


def say(msg: str) -> None:
    print(msg, flush=True)


say("=== A. girth-7 candidates vs C5 and K3 ===")
for name, g in [("mcgee", mcgee_graph()), ("coxeter", coxeter_graph())]:
    prof = analyze(g)
    to_c5, t1, e1 = timed(hom_exists, g, C5, BUDGET)
    to_k3, t2, e2 = timed(hom_exists, g, K3, BUDGET)
    from_c5, t3, e3 = timed(hom_exists, C5, g, BUDGET)
    say(f"{name}: girth={prof.girth} og={prof.odd_girth} "
        f"->C5={'YES' if to_c5 else ('BUDGET' if e1 else 'no')} ({t1:.2f}s) "
        f"->K3={'YES' if to_k3 else ('BUDGET' if e2 else 'no')} ({t2:.2f}s) "
        f"C5->={'YES' if from_c5 else 'no'} ({t3:.2f}s)")

say("")
say("=== B. candidate pool properties ===")
from homlab.graphs import chvatal_graph  # noqa: E402

pool = [
    ("grotzsch", grotzsch_graph()),
    ("myc_grotzsch", iterated_mycielski(make_cycle(5), 1, 2)),
    ("m2c5", generalized_mycielski(make_cycle(5), 2)),
    ("chvatal", chvatal_graph()),
    ("c13_15", circulant_graph(13, (1, 5))),
    ("petersen", petersen_graph()),
]
for name, g in pool:
    prof = analyze(g)
    to_c5, t1, _ = timed(hom_exists, g, C5, BUDGET)
    to_k3, t2, _ = timed(hom_exists, g, K3, BUDGET)
    say(f"{name}: n={g.vertex_count} e={g.edge_count} girth={prof.girth} "
        f"og={prof.odd_girth} ->C5={'YES' if to_c5 else 'no'} ({t1:.2f}s) "
        f"->K3={'YES' if to_k3 else 'no'} ({t2:.2f}s)")

say("")
say("=== C. plain and product grids (row -> col) ===")
names = [n for n, _ in pool]
graphs = dict(pool)
say("plain X -> Y:")
for xn in names:
    row = []
    for yn in names:
        if xn == yn:
            row.append(" = ")
            continue
        w, t, e = timed(hom_exists, graphs[xn], graphs[yn], BUDGET)
        row.append("YES" if w else ("BUD" if e else " . "))
    say(f"  {xn:>13}: " + " ".join(row))
say("product K3xX -> Y:")
products = {n: tensor_product(K3, graphs[n]) for n in names}
for xn in names:
    row = []
    for yn in names:
        if xn == yn:
            row.append(" = ")
            continue
        w, t, e = timed(hom_exists, products[xn], graphs[yn], BUDGET)
        row.append("YES" if w else ("BUD" if e else " . "))
    say(f"  {xn:>13}: " + " ".join(row))

say("")
say("=== D. cores of K3 x X and their rigidity ===")
core_info = {}
for name in names:
    prod = products[name]
    core, t, e = timed(core_of, prod, BUDGET)
    if core is None:
        say(f"{name}: core_of BUDGET after {t:.1f}s")
        continue
    rigid, t2, e2 = timed(is_rigid, core, BUDGET)
    prof = analyze(core)
    core_info[name] = (core, rigid)
    say(f"{name}: |K3xX|={prod.vertex_count} -> core {core.vertex_count}v/"
        f"{core.edge_count}e og={prof.odd_girth} ({t:.1f}s), "
        f"rigid={'BUDGET' if rigid is None else rigid} ({t2:.1f}s)")

say("")
say("=== E. indicator subdivision profiles ===")


def subdivided_k4(spokes, rims):
    """Branch vertices a,b,c,d = 0,1,2,3; spoke x-d and rim x-y paths."""
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


def profile_candidates(l):
    """(spokes, rims) triples ordered: default first, then by size then lex."""
    cands = []
    for sa in range(1, l):
        for sb in range(1, l):
            for sc in range(1, l):
                rab = l + 2 - sa - sb
                rac = l + 2 - sa - sc
                rbc = l + 2 - sb - sc
                if min(rab, rac, rbc) < 1:
                    continue
                # cheap girth prefilter: all seven cycles >= l+2
                rim_tri = rab + rac + rbc
                hams = (rab + rbc + sc + sa, rab + sb + sc + rac,
                        rac + rbc + sb + sa)
                if rim_tri < l + 2 or min(hams) < l + 2:
                    continue
                total = sa + sb + sc + rab + rac + rbc - 2
                cands.append((total, (sa, sb, sc), (rab, rac, rbc)))
    cands.sort(key=lambda c: (c[0], c[1]))
    default = ((3, 3, 3), (l - 4, l - 4, l - 4))
    ordered = [default] + [(s, r) for _, s, r in cands if (s, r) != default]
    return ordered


for l in (5, 7):
    say(f"l={l}:")
    cl = make_cycle(l)
    found = 0
    for spokes, rims in profile_candidates(l):
        if min(rims) < 1:
            ok = False
        g = subdivided_k4(spokes, rims)
        prof = analyze(g)
        checks = {"girth": prof.girth == l + 2}
        if checks["girth"]:
            rigid, tr, _ = timed(is_rigid, g, BUDGET)
            checks["rigid"] = bool(rigid)
            to_cl, _, _ = timed(hom_exists, g, cl, BUDGET)
            checks["to_cl"] = to_cl is not None
            same = any(hom_exists(g, cl, BUDGET, pinned={0: v, 1: v}) for v in range(l))
            checks["glue_ab"] = same
        verdict = all(checks.values()) and len(checks) == 4
        say(f"  spokes={spokes} rims={rims} n={g.vertex_count}: {checks}"
            f"{'  <== ACCEPT' if verdict else ''}")
        if verdict:
            found += 1
            if found >= 1:
                break
    if not found:
        say(f"  l={l}: NO PROFILE ACCEPTED")

say("")
say("probe 1 done")
