"""Exact homomorphism search and the order operations built on it.

The engine is a backtracking constraint solver over bitset domains:
AC-3 propagation on the edge constraints, smallest-domain-first variable
order with a degree tie-break, and a trail for cheap undo. On larger
undirected instances it additionally prunes with parity-aware walk
distances: a homomorphism maps a walk of length L onto a walk of the
same length, so shortest even/odd walk lengths between images can never
exceed those between preimages. Every outcome is tri-state: a verified
witness, a definitive "none" after exhausted search, or a
BudgetExceededError; the last two are never conflated.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .errors import (
    BudgetExceededError,
    IndeterminateComparisonError,
    InvalidParameterError,
    PreconditionError,
)
from .graphs import Digraph, Graph, analyze

STRICTLY_BELOW = "strictly_below"
STRICTLY_ABOVE = "strictly_above"
EQUIVALENT = "equivalent"
INCOMPARABLE = "incomparable"

# Walk-parity pruning is attempted out to the instance size, capped; beyond
# the radius the filter silently degrades to plain AC, so the bound is a
# speed knob, not a correctness one. Covering the full diameter matters:
# exhaustive counts over long path spines are propagation when every pair
# constraint is visible and exponential when the middle of a spine can
# drift out of sight of its endpoints.
_RADIUS = 16
_RADIUS_CAP = 128
_FAR = 10 ** 9


@dataclass(frozen=True)
class SolverBudget:
    """Wall-clock and node caps for one solver operation."""

    timeout_secs: float = 300.0
    node_limit: int | None = None

    def __post_init__(self) -> None:
        if self.timeout_secs <= 0:
            raise InvalidParameterError("timeout_secs must be positive")
        if self.node_limit is not None and self.node_limit <= 0:
            raise InvalidParameterError("node_limit must be positive when given")


@dataclass(frozen=True)
class HomMapping:
    """A total vertex map that has passed edge-preservation verification."""

    source: Graph | Digraph
    target: Graph | Digraph
    assignment: tuple[int, ...]

    def __repr__(self) -> str:
        return f"HomMapping({self.source!r} -> {self.target!r})"

    def __call__(self, v: int) -> int:
        return self.assignment[v]


@dataclass(frozen=True)
class ComparabilityVerdict:
    """Two-sided comparability summary with witnesses where maps exist."""

    relation: str
    forward: HomMapping | None
    backward: HomMapping | None


def verify_mapping(source: Graph | Digraph, target: Graph | Digraph,
                   assignment: Sequence[int]) -> bool:
    """Independent edge-preservation check, no solver state involved."""
    if len(assignment) != source.vertex_count:
        return False
    if any(not (0 <= b < target.vertex_count) for b in assignment):
        return False
    if isinstance(source, Graph):
        if not isinstance(target, Graph):
            return False
        return all(target.has_edge(assignment[u], assignment[v]) for u, v in source.edges)
    if not isinstance(target, Digraph):
        return False
    return all(target.has_arc(assignment[u], assignment[v]) for u, v in source.arcs)


class _Clock:
    """Deadline and node accounting shared by every engine of one operation."""

    def __init__(self, budget: SolverBudget) -> None:
        self.started = time.monotonic()
        self.deadline = self.started + budget.timeout_secs
        self.node_limit = budget.node_limit
        self.nodes = 0
        self.revisions = 0

    def _fail(self, reason: str) -> None:
        raise BudgetExceededError(
            f"search {reason} before reaching a definitive answer",
            elapsed_secs=time.monotonic() - self.started,
            nodes=self.nodes,
        )

    def node(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            self._fail(f"exceeded the node limit ({self.node_limit})")
        if self.nodes & 63 == 0 and time.monotonic() > self.deadline:
            self._fail("timed out")

    def revision(self) -> None:
        self.revisions += 1
        if self.revisions & 1023 == 0 and time.monotonic() > self.deadline:
            self._fail("timed out")


def _parity_bfs(masks: Sequence[int], root: int, radius: int):
    """Shortest even/odd walk lengths from root, truncated at radius.

    Returns (dist_even, dist_odd, cum_even, cum_odd): dicts vertex->length
    for lengths <= radius, and cumulative reachability masks per length.
    """
    seen_e = 1 << root
    seen_o = 0
    dist_e = {root: 0}
    dist_o: dict[int, int] = {}
    cum_e = [seen_e]
    cum_o = [0]
    fe, fo = seen_e, 0
    for d in range(1, radius + 1):
        grow = 0
        m = fe
        while m:
            bit = m & -m
            m ^= bit
            grow |= masks[bit.bit_length() - 1]
        new_o = grow & ~seen_o
        grow = 0
        m = fo
        while m:
            bit = m & -m
            m ^= bit
            grow |= masks[bit.bit_length() - 1]
        new_e = grow & ~seen_e
        seen_o |= new_o
        seen_e |= new_e
        m = new_o
        while m:
            bit = m & -m
            m ^= bit
            dist_o[bit.bit_length() - 1] = d
        m = new_e
        while m:
            bit = m & -m
            m ^= bit
            dist_e[bit.bit_length() - 1] = d
        cum_e.append(seen_e)
        cum_o.append(seen_o)
        fe, fo = new_e, new_o
        if not (fe | fo):
            while len(cum_e) <= radius:
                cum_e.append(seen_e)
                cum_o.append(seen_o)
            break
    return dist_e, dist_o, cum_e, cum_o


def _graph_memo(g: Graph) -> dict:
    # Rides in the instance __dict__ like a cached_property value, so it
    # lives and dies with the graph and costs no hashing.
    memo = g.__dict__.get("_solver_memo")
    if memo is None:
        memo = {}
        g.__dict__["_solver_memo"] = memo
    return memo


def _odd_diagonal(g: Graph, radius: int) -> tuple:
    """Per-vertex shortest odd closed walk length, _FAR when > radius."""
    memo = _graph_memo(g)
    key = ("diag", radius)
    if key not in memo:
        masks = g.adjacency_masks
        diag = []
        for v in range(g.vertex_count):
            _, dist_o, _, _ = _parity_bfs(masks, v, radius)
            diag.append(dist_o.get(v, _FAR))
        memo[key] = tuple(diag)
    return memo[key]


def _ball_entries(g: Graph, root: int, radius: int) -> tuple:
    """Walk-length constraints radiating from root: (vertex, even, odd)."""
    memo = _graph_memo(g)
    key = ("ball", root, radius)
    if key not in memo:
        dist_e, dist_o, _, _ = _parity_bfs(g.adjacency_masks, root, radius)
        entries = []
        for y in set(dist_e) | set(dist_o):
            if y != root:
                entries.append((y, dist_e.get(y, _FAR), dist_o.get(y, _FAR)))
        memo[key] = tuple(entries)
    return memo[key]


def _reach_masks(g: Graph, root: int, radius: int) -> tuple:
    """Cumulative even/odd reachability masks from root, per walk length."""
    memo = _graph_memo(g)
    key = ("reach", root, radius)
    if key not in memo:
        _, _, cum_e, cum_o = _parity_bfs(g.adjacency_masks, root, radius)
        memo[key] = (tuple(cum_e), tuple(cum_o))
    return memo[key]


class _DistanceFilter:
    """Parity-aware walk-distance pruning between one source and one target."""

    def __init__(self, source: Graph, target: Graph, radius: int = _RADIUS) -> None:
        self.source = source
        self.target = target
        self.radius = radius

    def initial_domains(self, m: int) -> list[int]:
        full = (1 << m) - 1
        src_diag = _odd_diagonal(self.source, self.radius)
        tgt_diag = _odd_diagonal(self.target, self.radius)
        by_length: list[int] = [0] * (self.radius + 1)
        for b, val in enumerate(tgt_diag):
            if val <= self.radius:
                by_length[val] |= 1 << b
        cum = 0
        cum_masks = []
        for d in range(self.radius + 1):
            cum |= by_length[d]
            cum_masks.append(cum)
        doms = []
        for x in range(self.source.vertex_count):
            mx = src_diag[x]
            doms.append(cum_masks[mx] if mx <= self.radius else full)
        return doms

    def entries_for(self, x: int) -> tuple:
        return _ball_entries(self.source, x, self.radius)

    def masks_for(self, alpha: int) -> tuple:
        return _reach_masks(self.target, alpha, self.radius)


class _Engine:
    """One backtracking search over prepared domains and constraints.

    watchers[y] lists (x, sup) pairs: when dom[y] shrinks, x must be
    revised, keeping only values a with sup[a] & dom[y] nonzero.
    """

    def __init__(self, var_count: int, domains: list[int], watchers, degrees,
                 clock: _Clock, distance: _DistanceFilter | None = None,
                 count_limit: int | None = None) -> None:
        self.n = var_count
        self.dom = domains
        self.watchers = watchers
        self.degrees = degrees
        self.clock = clock
        self.distance = distance
        self.count_limit = count_limit
        self.state = [0] * var_count  # 0 free, 1 assigned, 2 peeled
        self.fnc = [len(watchers[v]) for v in range(var_count)]
        self.peelable = [v for v in range(var_count) if not self.fnc[v]]
        self.trail: list[tuple[int, int, int]] = []
        self.product = 1
        # Search over block-and-path structures dies of wandering unless the
        # articulation hubs (path attachments, substitution corners) are
        # placed first: every hub pair that is down turns the spine between
        # them into forced propagation. Plain MRV marches along a path and
        # re-refutes the same dead ends exponentially often.
        self.hub_order = (
            sorted((v for v in range(var_count) if degrees[v] >= 4),
                   key=lambda v: (-degrees[v], v))
            if distance is not None else ())

    # trail kinds: 0 domain write, 1 state write, 2 peel factor

    def _set_dom(self, v: int, new: int) -> None:
        self.trail.append((0, v, self.dom[v]))
        self.dom[v] = new

    def _settle(self, v: int, s: int) -> None:
        self.trail.append((1, v, self.state[v]))
        self.state[v] = s
        fnc = self.fnc
        for z, _ in self.watchers[v]:
            fnc[z] -= 1
            if not fnc[z] and not self.state[z]:
                self.peelable.append(z)

    def _undo(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            kind, a, b = trail.pop()
            if kind == 0:
                self.dom[a] = b
            elif kind == 1:
                self.state[a] = b
                if b == 0:
                    for z, _ in self.watchers[a]:
                        self.fnc[z] += 1
            else:
                self.product //= a

    def _propagate(self, queue: deque) -> bool:
        dom = self.dom
        watchers = self.watchers
        clock = self.clock
        while queue:
            x, y, sup = queue.popleft()
            clock.revision()
            dx = dom[x]
            dy = dom[y]
            new = dx
            m = dx
            while m:
                bit = m & -m
                m ^= bit
                if not sup[bit.bit_length() - 1] & dy:
                    new ^= bit
            if new != dx:
                if not new:
                    return False
                self._set_dom(x, new)
                for z, sup_zx in watchers[x]:
                    if z != y:
                        queue.append((z, x, sup_zx))
        return True

    def _prune_distance(self, x: int, alpha: int, queue: deque) -> bool:
        dist = self.distance
        assert dist is not None
        cum_e, cum_o = dist.masks_for(alpha)
        radius = dist.radius
        dom = self.dom
        for y, de, do in dist.entries_for(x):
            mask = -1
            if de <= radius:
                mask = cum_e[de]
            if do <= radius:
                mask &= cum_o[do]
            old = dom[y]
            new = old & mask
            if new != old:
                if not new:
                    return False
                self._set_dom(y, new)
                for z, sup in self.watchers[y]:
                    if z != x:
                        queue.append((z, y, sup))
        return True

    def _assign(self, x: int, bit: int) -> bool:
        self.clock.node()
        self._settle(x, 1)
        if self.dom[x] != bit:
            self._set_dom(x, bit)
        queue = deque((z, x, sup) for z, sup in self.watchers[x])
        if self.distance is not None:
            if not self._prune_distance(x, bit.bit_length() - 1, queue):
                return False
        return self._propagate(queue)

    def _root(self, pinned: Mapping[int, int]) -> bool:
        # Initial domains can arrive empty (a pin against the parity
        # filter, say) without any revision noticing, so check directly.
        if any(not d for d in self.dom):
            return False
        queue = deque()
        for y in range(self.n):
            for x, sup in self.watchers[y]:
                queue.append((x, y, sup))
        if self.distance is not None:
            for x in pinned:
                if not self._prune_distance(x, self.dom[x].bit_length() - 1, queue):
                    return False
        return self._propagate(queue)

    def _pick(self) -> int | None:
        while self.peelable:
            v = self.peelable.pop()
            if not self.state[v] and not self.fnc[v]:
                self._settle(v, 2)
                k = self.dom[v].bit_count()
                self.trail.append((2, k, 0))
                self.product *= k
        best = -1
        best_size = 0
        for v in self.hub_order:
            if self.state[v]:
                continue
            size = self.dom[v].bit_count()
            if best < 0 or size < best_size:
                best_size = size
                best = v
        if best >= 0:
            return best
        best_key = None
        degrees = self.degrees
        for v in range(self.n):
            if self.state[v]:
                continue
            key = (self.dom[v].bit_count(), -degrees[v], v)
            if best_key is None or key < best_key:
                best_key = key
                best = v
        return None if best < 0 else best

    def _extract(self) -> tuple[int, ...]:
        return tuple((d & -d).bit_length() - 1 for d in self.dom)

    def run_exists(self, pinned: Mapping[int, int]) -> tuple[int, ...] | None:
        if not self._root(pinned):
            return None
        var = self._pick()
        if var is None:
            return self._extract()
        rest = self.dom[var]
        stack: list[tuple[int, int, int]] = []
        while True:
            moved = False
            while rest:
                bit = rest & -rest
                rest ^= bit
                mark = len(self.trail)
                if self._assign(var, bit):
                    nxt = self._pick()
                    if nxt is None:
                        return self._extract()
                    stack.append((var, rest, mark))
                    var, rest = nxt, self.dom[nxt]
                    moved = True
                    break
                self._undo(mark)
            if moved:
                continue
            if not stack:
                return None
            var, rest, mark = stack.pop()
            self._undo(mark)

    def run_count(self, pinned: Mapping[int, int]) -> int:
        if not self._root(pinned):
            return 0
        total = 0
        var = self._pick()
        if var is None:
            return self.product
        rest = self.dom[var]
        stack: list[tuple[int, int, int]] = []
        limit = self.count_limit
        while True:
            moved = False
            while rest:
                bit = rest & -rest
                rest ^= bit
                mark = len(self.trail)
                if self._assign(var, bit):
                    nxt = self._pick()
                    if nxt is None:
                        total += self.product
                        if limit is not None and total >= limit:
                            return total
                        self._undo(mark)
                        continue
                    stack.append((var, rest, mark))
                    var, rest = nxt, self.dom[nxt]
                    moved = True
                    break
                self._undo(mark)
            if moved:
                continue
            if not stack:
                return total
            var, rest, mark = stack.pop()
            self._undo(mark)


def _same_kind(source, target) -> bool:
    return (isinstance(source, Graph) and isinstance(target, Graph)) or (
        isinstance(source, Digraph) and isinstance(target, Digraph))


def _constraint_pairs(g: Graph | Digraph) -> list[tuple[int, int]]:
    if isinstance(g, Graph):
        return list(g.edges)
    seen = set()
    pairs = []
    for u, v in g.arcs:
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return pairs


def _components(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups, key=lambda r: min(groups[r]))]


def _build_watchers(source: Graph | Digraph, target: Graph | Digraph):
    n = source.vertex_count
    watchers: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(n)]
    if isinstance(source, Graph):
        adj = target.adjacency_masks  # type: ignore[union-attr]
        for u, v in source.edges:
            watchers[u].append((v, adj))
            watchers[v].append((u, adj))
    else:
        out = target.out_masks  # type: ignore[union-attr]
        inn = target.in_masks  # type: ignore[union-attr]
        both: tuple[int, ...] | None = None
        arcset = set(source.arcs)
        for u, v in source.arcs:
            if (v, u) in arcset:
                if v < u:
                    continue
                if both is None:
                    both = tuple(o & i for o, i in zip(out, inn))
                watchers[u].append((v, both))
                watchers[v].append((u, both))
            else:
                watchers[v].append((u, out))
                watchers[u].append((v, inn))
    return [tuple(w) for w in watchers]


def _wants_distance(source, target) -> bool:
    return isinstance(source, Graph) and max(source.vertex_count, target.vertex_count) > 64


def _filter_radius(source, target) -> int:
    return min(max(_RADIUS, source.vertex_count, target.vertex_count), _RADIUS_CAP)


def _prepare(source, target, pinned, clock, count_limit=None) -> _Engine:
    n = source.vertex_count
    m = target.vertex_count
    full = (1 << m) - 1
    distance = (_DistanceFilter(source, target, _filter_radius(source, target))
                if _wants_distance(source, target) else None)
    if distance is not None:
        domains = distance.initial_domains(m)
    else:
        domains = [full] * n
    for x, b in pinned.items():
        domains[x] &= 1 << b
    return _Engine(n, domains, _build_watchers(source, target),
                   source.degrees, clock, distance, count_limit)


def _check_instance(source, target, pinned) -> dict[int, int]:
    if not _same_kind(source, target):
        raise InvalidParameterError("source and target must both be graphs or both be digraphs")
    pinned = dict(pinned or {})
    for x, b in pinned.items():
        if not (isinstance(x, int) and 0 <= x < source.vertex_count):
            raise InvalidParameterError(f"pinned vertex {x!r} out of range")
        if not (isinstance(b, int) and 0 <= b < target.vertex_count):
            raise InvalidParameterError(f"pinned image {b!r} out of range")
    return pinned


def _restricted(g: Graph | Digraph, keep: list[int]) -> Graph | Digraph:
    if isinstance(g, Graph):
        return g.induced(keep)
    index = {v: i for i, v in enumerate(keep)}
    arcs = tuple((index[u], index[v]) for u, v in g.arcs if u in index and v in index)
    return Digraph(len(keep), arcs)


def _target_parts(target):
    """Component split of the target, or None when it is connected.

    The image of a connected source component lies inside one target
    component, so a disjoint-union target is searched one part at a
    time. Without the split, every wrong part is re-refuted once per
    candidate value of the first branching variable instead of once.
    """
    comps = _components(target.vertex_count, _constraint_pairs(target))
    if len(comps) == 1:
        return None
    return [(comp, _restricted(target, comp)) for comp in comps]


def _exists_into(sub, target, parts, sub_pinned, clock):
    if parts is None:
        return _prepare(sub, target, sub_pinned, clock).run_exists(sub_pinned)
    want = sub.vertex_count
    # closest size first: self-similar unions tend to match like with like
    for keep, part in sorted(parts, key=lambda p: (abs(len(p[0]) - want), p[0][0])):
        index = {b: j for j, b in enumerate(keep)}
        if any(b not in index for b in sub_pinned.values()):
            continue
        local = {i: index[b] for i, b in sub_pinned.items()}
        result = _prepare(sub, part, local, clock).run_exists(local)
        if result is not None:
            return tuple(keep[j] for j in result)
    return None


def _count_into(sub, target, parts, sub_pinned, clock, limit):
    if parts is None:
        return _prepare(sub, target, sub_pinned, clock,
                        count_limit=limit).run_count(sub_pinned)
    total = 0
    for keep, part in parts:
        index = {b: j for j, b in enumerate(keep)}
        if any(b not in index for b in sub_pinned.values()):
            continue
        local = {i: index[b] for i, b in sub_pinned.items()}
        total += _prepare(sub, part, local, clock,
                          count_limit=limit).run_count(local)
        if limit is not None and total >= limit:
            return total
    return total


def hom_exists(source: Graph | Digraph, target: Graph | Digraph,
               budget: SolverBudget | None = None, *,
               pinned: Mapping[int, int] | None = None) -> HomMapping | None:
    """First homomorphism in deterministic search order, or a definitive None.

    Raises BudgetExceededError when neither a witness nor exhaustion was
    reached in budget; that outcome is never reported as None.
    """
    pinned = _check_instance(source, target, pinned)
    n = source.vertex_count
    if n == 0:
        return HomMapping(source, target, ())
    if target.vertex_count == 0:
        return None
    clock = _Clock(budget or SolverBudget())

    parts = _target_parts(target)
    assignment = [0] * n
    for comp in _components(n, _constraint_pairs(source)):
        if len(comp) == n:
            sub, sub_pinned = source, pinned
        else:
            sub = _restricted(source, comp)
            sub_pinned = {i: pinned[v] for i, v in enumerate(comp) if v in pinned}
        result = _exists_into(sub, target, parts, sub_pinned, clock)
        if result is None:
            return None
        for i, v in enumerate(comp):
            assignment[v] = result[i]
    mapping = HomMapping(source, target, tuple(assignment))
    if not verify_mapping(source, target, mapping.assignment):
        raise RuntimeError("internal error: solver produced an invalid witness")
    return mapping


def count_homs(source: Graph | Digraph, target: Graph | Digraph,
               budget: SolverBudget | None = None, *,
               limit: int | None = None,
               pinned: Mapping[int, int] | None = None) -> int:
    """Exact number of homomorphisms source -> target by exhaustive search.

    With `limit`, the scan stops once the running total reaches it; the
    return value is exact whenever it is below the limit. Pinned vertices
    are held fixed, so pinning counts a slice such as the endomorphisms
    fixing one vertex.
    """
    pinned = _check_instance(source, target, pinned)
    if limit is not None and limit <= 0:
        raise InvalidParameterError("limit must be positive when given")
    n = source.vertex_count
    if n == 0:
        return 1
    if target.vertex_count == 0:
        return 0
    clock = _Clock(budget or SolverBudget())
    parts = _target_parts(target)
    total = 1
    for comp in _components(n, _constraint_pairs(source)):
        if len(comp) != n:
            sub = _restricted(source, comp)
            sub_pinned = {i: pinned[v] for i, v in enumerate(comp) if v in pinned}
        else:
            sub, sub_pinned = source, dict(pinned)
        count = _count_into(sub, target, parts, sub_pinned, clock, limit)
        if not count:
            return 0
        total *= count
        if limit is not None and total >= limit:
            return total
    return total


def compare(source: Graph | Digraph, target: Graph | Digraph,
            budget: SolverBudget | None = None) -> ComparabilityVerdict:
    """Comparability of source and target in the homomorphism order.

    If one direction exhausts its budget, the error names the direction
    that was resolved; a partial answer is never folded into a verdict.
    """
    budget = budget or SolverBudget()
    try:
        forward = hom_exists(source, target, budget)
    except BudgetExceededError as exc:
        raise IndeterminateComparisonError(
            "comparison unresolved: the forward direction exceeded its budget "
            "before the backward direction was attempted",
            elapsed_secs=exc.elapsed_secs, nodes=exc.nodes) from exc
    try:
        backward = hom_exists(target, source, budget)
    except BudgetExceededError as exc:
        resolved = "exists" if forward is not None else "is definitively absent"
        raise IndeterminateComparisonError(
            f"comparison unresolved: forward homomorphism {resolved}, but the "
            "backward direction exceeded its budget",
            elapsed_secs=exc.elapsed_secs, nodes=exc.nodes) from exc
    if forward is not None and backward is not None:
        relation = EQUIVALENT
    elif forward is not None:
        relation = STRICTLY_BELOW
    elif backward is not None:
        relation = STRICTLY_ABOVE
    else:
        relation = INCOMPARABLE
    return ComparabilityVerdict(relation, forward, backward)


def core_of(g: Graph, budget: SolverBudget | None = None) -> Graph:
    """A minimal retract of g, relabeled canonically when small enough.

    Repeatedly looks for a homomorphism into the graph minus one vertex
    and restricts to the image, until no vertex can be dropped. The scan
    order is deterministic, so the result is too.
    """
    if not isinstance(g, Graph):
        raise InvalidParameterError("core_of expects an undirected graph")
    budget = budget or SolverBudget()
    current = g
    shrunk = True
    while shrunk:
        shrunk = False
        for v in range(current.vertex_count):
            others = [u for u in range(current.vertex_count) if u != v]
            smaller = current.induced(others)
            witness = hom_exists(current, smaller, budget)
            if witness is not None:
                current = smaller.induced(sorted(set(witness.assignment)))
                shrunk = True
                break
    if current.vertex_count <= 8:
        return canonical_form(current)
    return current


def is_rigid(g: Graph | Digraph, budget: SolverBudget | None = None) -> bool:
    """True iff the identity is the only endomorphism."""
    return count_homs(g, g, budget, limit=2) == 1


def path_threshold(h: Graph) -> int:
    """Least l such that every ordered vertex pair is joined by walks of
    length l and of length l+1.

    Needs a connected non-bipartite graph: an odd closed walk is what
    lets a walk switch parity, and once two consecutive lengths work all
    larger ones do (step onto a neighbor and back). The stabilization
    window is still checked explicitly rather than assumed.
    """
    profile = analyze(h)
    if not profile.connected or profile.bipartite:
        raise PreconditionError(
            "path_threshold needs a connected non-bipartite graph; "
            f"got connected={profile.connected}, bipartite={profile.bipartite}")
    n = h.vertex_count
    masks = h.adjacency_masks
    full = (1 << n) - 1
    cap = 4 * n * n

    def reach_rows(start: int):
        row = 1 << start
        length = 0
        yield length, row
        while True:
            grow = 0
            m = row
            while m:
                bit = m & -m
                m ^= bit
                grow |= masks[bit.bit_length() - 1]
            row = grow
            length += 1
            yield length, row

    threshold = 0
    for v in range(n):
        prev_full = False
        for length, row in reach_rows(v):
            if length > cap:
                raise BudgetExceededError(
                    f"walk lengths did not stabilize within {cap} steps")
            if row == full:
                if prev_full:
                    threshold = max(threshold, length - 1)
                    break
                prev_full = True
            else:
                prev_full = False

    for v in range(n):  # explicit window check at the claimed threshold
        for extra in (0, 1):
            row = 1 << v
            for _ in range(threshold + extra):
                grow = 0
                m = row
                while m:
                    bit = m & -m
                    m ^= bit
                    grow |= masks[bit.bit_length() - 1]
                row = grow
            if row != full:
                raise RuntimeError("internal error: walk window failed verification")
    return threshold


def canonical_form(g: Graph | Digraph) -> Graph | Digraph:
    """Lexicographically least relabeling; brute force, so 8 vertices max."""
    n = g.vertex_count
    if n > 8:
        raise InvalidParameterError("canonical_form is exhaustive and limited to 8 vertices")
    directed = isinstance(g, Digraph)
    pairs = g.arcs if directed else g.edges
    if not pairs:
        return Digraph(n) if directed else Graph(n)
    best = None
    for perm in permutations(range(n)):
        if directed:
            relabeled = tuple(sorted((perm[u], perm[v]) for u, v in pairs))
        else:
            relabeled = tuple(sorted(
                (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                for u, v in pairs))
        if best is None or relabeled < best:
            best = relabeled
    return Digraph(n, best) if directed else Graph(n, best)


def is_isomorphic(g: Graph | Digraph, h: Graph | Digraph,
                  budget: SolverBudget | None = None) -> bool:
    """Isomorphism test: canonical forms when tiny, CSP search otherwise."""
    if not _same_kind(g, h):
        raise InvalidParameterError("isomorphism needs two graphs of the same kind")
    if g.vertex_count != h.vertex_count:
        return False
    if isinstance(g, Graph):
        if g.edge_count != h.edge_count or sorted(g.degrees) != sorted(h.degrees):
            return False
    else:
        if g.arc_count != h.arc_count or sorted(g.degrees) != sorted(h.degrees):
            return False
    n = g.vertex_count
    if n <= 8:
        return canonical_form(g) == canonical_form(h)
    if isinstance(g, Digraph):
        raise InvalidParameterError("digraph isomorphism beyond 8 vertices is not supported")

    # Adjacency must map to adjacency and non-adjacency to distinct
    # non-adjacency; with equal vertex counts that forces a bijection.
    adj = h.adjacency_masks
    full = (1 << n) - 1
    non = tuple(full & ~(mask | (1 << b)) for b, mask in enumerate(adj))
    watchers: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(n)]
    gadj = g.adjacency_masks
    for u in range(n):
        for v in range(u + 1, n):
            sup = adj if gadj[u] >> v & 1 else non
            watchers[u].append((v, sup))
            watchers[v].append((u, sup))
    clock = _Clock(budget or SolverBudget())
    engine = _Engine(n, [full] * n, [tuple(w) for w in watchers], g.degrees, clock)
    return engine.run_exists({}) is not None
