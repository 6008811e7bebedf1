"""Finite graphs and digraphs over dense integer vertices.

Both kinds are immutable values: vertices are always 0..n-1, edge sets
are normalized sorted tuples, and every operation returns a fresh graph.
Optional provenance labels (gadget attachment points, copy indices) ride
along in a side table that is excluded from equality and hashing, so two
structurally identical graphs compare equal no matter how they were built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InvalidParameterError

Edge = tuple[int, int]
LabelTable = tuple[tuple[int, str], ...]


def _normalize_labels(vertex_count: int,
                      labels: Mapping[int, str] | Iterable[tuple[int, str]]) -> LabelTable:
    table = dict(labels.items() if isinstance(labels, Mapping) else labels)
    for v in table:
        if not (isinstance(v, int) and 0 <= v < vertex_count):
            raise InvalidParameterError(f"label on invalid vertex {v!r}")
    return tuple(sorted((v, str(name)) for v, name in table.items()))


@dataclass(frozen=True, repr=False)
class Graph:
    """Simple undirected graph: no loops, no parallel edges."""

    vertex_count: int
    edges: tuple[Edge, ...] = ()
    labels: LabelTable = field(default=(), compare=False)

    def __post_init__(self) -> None:
        n = self.vertex_count
        if not isinstance(n, int) or n < 0:
            raise InvalidParameterError(f"vertex_count must be a nonnegative integer, got {n!r}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u},{v}) out of range for {n} vertices")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "labels", _normalize_labels(n, self.labels))

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count}v, {self.edge_count}e)"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in lists)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ns) for ns in self.neighbor_lists)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency_masks[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.neighbor_lists[v]

    def label_of(self, v: int) -> str | None:
        for vertex, name in self.labels:
            if vertex == v:
                return name
        return None

    def find_label(self, name: str) -> int | None:
        """Locate the vertex carrying an exact label, if any."""
        for vertex, label in self.labels:
            if label == name:
                return vertex
        return None

    def labeled(self, labels: Mapping[int, str] | Iterable[tuple[int, str]]) -> "Graph":
        """Same graph with the label table replaced."""
        return Graph(self.vertex_count, self.edges, _normalize_labels(self.vertex_count, labels))

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on `keep`, relabeled densely in ascending order."""
        kept = sorted(set(keep))
        for v in kept:
            if not 0 <= v < self.vertex_count:
                raise InvalidParameterError(f"vertex {v} out of range")
        index = {v: i for i, v in enumerate(kept)}
        edges = tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index)
        labels = tuple((index[v], name) for v, name in self.labels if v in index)
        return Graph(len(kept), edges, labels)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Copy with vertex v renamed perm[v]; perm must be a permutation."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise InvalidParameterError("perm is not a permutation of the vertex set")
        edges = tuple((perm[u], perm[v]) for u, v in self.edges)
        labels = tuple((perm[v], name) for v, name in self.labels)
        return Graph(self.vertex_count, edges, labels)


@dataclass(frozen=True, repr=False)
class Digraph:
    """Directed graph: no loops, at most one arc per ordered pair."""

    vertex_count: int
    arcs: tuple[Edge, ...] = ()
    labels: LabelTable = field(default=(), compare=False)

    def __post_init__(self) -> None:
        n = self.vertex_count
        if not isinstance(n, int) or n < 0:
            raise InvalidParameterError(f"vertex_count must be a nonnegative integer, got {n!r}")
        seen = set()
        for u, v in self.arcs:
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"arc ({u},{v}) out of range for {n} vertices")
            seen.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted(seen)))
        object.__setattr__(self, "labels", _normalize_labels(n, self.labels))

    def __repr__(self) -> str:
        return f"Digraph({self.vertex_count}v, {len(self.arcs)}a)"

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Total degree (in plus out) per vertex."""
        degs = [0] * self.vertex_count
        for u, v in self.arcs:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def label_of(self, v: int) -> str | None:
        for vertex, name in self.labels:
            if vertex == v:
                return name
        return None

    def find_label(self, name: str) -> int | None:
        for vertex, label in self.labels:
            if label == name:
                return vertex
        return None

    def labeled(self, labels: Mapping[int, str] | Iterable[tuple[int, str]]) -> "Digraph":
        return Digraph(self.vertex_count, self.arcs, _normalize_labels(self.vertex_count, labels))

    def relabeled(self, perm: Sequence[int]) -> "Digraph":
        if sorted(perm) != list(range(self.vertex_count)):
            raise InvalidParameterError("perm is not a permutation of the vertex set")
        arcs = tuple((perm[u], perm[v]) for u, v in self.arcs)
        labels = tuple((perm[v], name) for v, name in self.labels)
        return Digraph(self.vertex_count, arcs, labels)

    def underlying_graph(self) -> Graph:
        """Forget orientation; antiparallel arc pairs collapse to one edge."""
        return Graph(self.vertex_count, self.arcs, self.labels)


@dataclass(frozen=True)
class StructuralProfile:
    """Connectivity, bipartiteness, girth and odd girth of one graph.

    Girth values are ints, or math.inf when no (odd) cycle exists.
    """

    connected: bool
    bipartite: bool
    girth: int | float
    odd_girth: int | float

    def __post_init__(self) -> None:
        if self.bipartite != (self.odd_girth == math.inf):
            raise InvalidParameterError("bipartite must hold exactly when odd_girth is infinite")
        if self.girth > self.odd_girth:
            raise InvalidParameterError("girth cannot exceed odd girth")


def _bfs_dists(masks: Sequence[int], start: int, n: int) -> list[int]:
    """Distances from start over adjacency bitmasks; -1 for unreachable."""
    dist = [-1] * n
    dist[start] = 0
    frontier = 1 << start
    seen = frontier
    d = 0
    while frontier:
        reached = 0
        m = frontier
        while m:
            bit = m & -m
            m ^= bit
            reached |= masks[bit.bit_length() - 1]
        frontier = reached & ~seen
        seen |= frontier
        d += 1
        m = frontier
        while m:
            bit = m & -m
            m ^= bit
            dist[bit.bit_length() - 1] = d
    return dist


def analyze(g: Graph) -> StructuralProfile:
    """Connectivity, bipartiteness and exact (odd) girth by BFS scans.

    Girth: the shortest cycle through an edge {u,v} is 1 plus the u-v
    distance with that edge removed; minimizing over edges is exact.
    Odd girth: for a BFS from root r, an edge {x,y} whose endpoints have
    equal depth parity closes an odd walk of length d(x)+d(y)+1, which
    contains an odd cycle; minimizing over roots and edges is exact
    because both endpoints of some edge of a shortest odd cycle realize
    their cycle distances from any root on it.
    """
    n = g.vertex_count
    masks = g.adjacency_masks
    if n == 0:
        return StructuralProfile(True, True, math.inf, math.inf)

    from_zero = _bfs_dists(masks, 0, n)
    connected = all(d >= 0 for d in from_zero)

    color = [-1] * n
    bipartite = True
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack and bipartite:
            u = stack.pop()
            for v in g.neighbor_lists[u]:
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    bipartite = False
                    break
        if not bipartite:
            break

    girth: int | float = math.inf
    base = list(masks)
    for u, v in g.edges:
        base[u] &= ~(1 << v)
        base[v] &= ~(1 << u)
        d = _bfs_dists(base, u, n)[v]
        base[u] |= 1 << v
        base[v] |= 1 << u
        if d >= 0:
            girth = min(girth, d + 1)

    odd_girth: int | float = math.inf
    if not bipartite:
        for root in range(n):
            dist = _bfs_dists(masks, root, n)
            for x, y in g.edges:
                dx, dy = dist[x], dist[y]
                if dx >= 0 and dy >= 0 and (dx ^ dy) & 1 == 0:
                    odd_girth = min(odd_girth, dx + dy + 1)

    return StructuralProfile(connected, bipartite, girth, odd_girth)


def make_cycle(length: int, directed: bool = False) -> Graph | Digraph:
    """Cycle on `length` vertices; arcs (i, i+1 mod length) when directed."""
    if not isinstance(length, int) or length < 3:
        raise InvalidParameterError(f"cycle length must be an integer >= 3, got {length!r}")
    pairs = tuple((i, (i + 1) % length) for i in range(length))
    return Digraph(length, pairs) if directed else Graph(length, pairs)


def disjoint_union(parts: Sequence[Graph] | Sequence[Digraph]) -> Graph | Digraph:
    """Disjoint union with dense relabeling by component offsets.

    Labels of part i are carried over with an "i:" prefix; a part without
    any labels gets an "i:start" marker on its first vertex, so component
    boundaries stay recoverable from the side table.
    """
    parts = list(parts)
    if not parts:
        return Graph(0)
    kinds = {type(p) for p in parts}
    if len(kinds) != 1 or kinds.pop() not in (Graph, Digraph):
        raise InvalidParameterError("disjoint_union needs parts of one kind (all Graph or all Digraph)")
    directed = isinstance(parts[0], Digraph)

    total = 0
    pairs: list[Edge] = []
    labels: list[tuple[int, str]] = []
    for i, part in enumerate(parts):
        offset = total
        part_pairs = part.arcs if directed else part.edges  # type: ignore[union-attr]
        pairs.extend((u + offset, v + offset) for u, v in part_pairs)
        if part.labels:
            labels.extend((v + offset, f"{i}:{name}") for v, name in part.labels)
        elif part.vertex_count:
            labels.append((offset, f"{i}:start"))
        total += part.vertex_count
    kind = Digraph if directed else Graph
    return kind(total, tuple(pairs), tuple(labels))


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Direct product: (u,x)~(v,y) iff uv is an edge of g and xy one of h."""
    hn = h.vertex_count
    edges: list[Edge] = []
    for u, v in g.edges:
        for x, y in h.edges:
            edges.append((u * hn + x, v * hn + y))
            edges.append((u * hn + y, v * hn + x))
    return Graph(g.vertex_count * hn, tuple(edges))


def product_vertex(g: Graph, h: Graph, u: int, x: int) -> int:
    """Index of the pair (u, x) in tensor_product(g, h)."""
    return u * h.vertex_count + x


def complete_graph(n: int) -> Graph:
    if not isinstance(n, int) or n < 0:
        raise InvalidParameterError(f"complete graph size must be a nonnegative integer, got {n!r}")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(length: int) -> Graph:
    """Path with `length` edges (length + 1 vertices)."""
    if not isinstance(length, int) or length < 0:
        raise InvalidParameterError(f"path length must be a nonnegative integer, got {length!r}")
    return Graph(length + 1, tuple((i, i + 1) for i in range(length)))


def circulant_graph(n: int, steps: Sequence[int]) -> Graph:
    """Cycle-power graph: i adjacent to i+s mod n for every step s."""
    if not isinstance(n, int) or n < 3:
        raise InvalidParameterError(f"circulant order must be an integer >= 3, got {n!r}")
    for s in steps:
        if not 1 <= s <= n // 2:
            raise InvalidParameterError(f"circulant step {s!r} out of range 1..{n // 2}")
    edges = tuple((i, (i + s) % n) for s in set(steps) for i in range(n))
    return Graph(n, edges)


def generalized_mycielski(base: Graph, levels: int) -> Graph:
    """Mycielski-type cone over `base` with the given number of mirror levels.

    Level 0 is the base graph itself. A vertex (u, i) of level i >= 1 is
    adjacent to (v, i-1) exactly when uv is a base edge, and a single apex
    is adjacent to all of the top level. levels=1 is the classic Mycielskian.
    """
    if not isinstance(base, Graph):
        raise InvalidParameterError("generalized_mycielski needs an undirected base graph")
    if not isinstance(levels, int) or levels < 1:
        raise InvalidParameterError(f"levels must be an integer >= 1, got {levels!r}")
    n = base.vertex_count
    if n == 0:
        raise InvalidParameterError("generalized_mycielski needs a nonempty base graph")
    apex = (levels + 1) * n
    edges: list[Edge] = list(base.edges)
    for i in range(1, levels + 1):
        off, prev = i * n, (i - 1) * n
        for u, v in base.edges:
            edges.append((off + u, prev + v))
            edges.append((off + v, prev + u))
    top = levels * n
    edges.extend((top + u, apex) for u in range(n))
    return Graph(apex + 1, tuple(edges), labels=((apex, "apex"),))


def grotzsch_graph() -> Graph:
    """Standard 11-vertex triangle-free graph: 5-ring 0..4, mirrors 5..9, apex 10."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges.append((5 + i, (i + 1) % 5))
        edges.append((5 + i, (i - 1) % 5))
        edges.append((5 + i, 10))
    return Graph(11, tuple(edges))


def petersen_graph() -> Graph:
    """Outer 5-ring 0..4, inner pentagram 5..9, spokes between them."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, tuple(edges))


def chvatal_graph() -> Graph:
    """The 12-vertex 4-regular triangle-free graph with chromatic number 4."""
    edges = (
        (0, 1), (0, 4), (0, 6), (0, 9), (1, 2), (1, 5), (1, 7), (2, 3),
        (2, 6), (2, 8), (3, 4), (3, 7), (3, 9), (4, 5), (4, 8), (5, 10),
        (5, 11), (6, 10), (6, 11), (7, 8), (7, 11), (8, 10), (9, 10), (9, 11),
    )
    return Graph(12, edges)


def mcgee_graph() -> Graph:
    """The 24-vertex cubic graph of girth 7 (LCF notation [12,7,-7]^8)."""
    shifts = (12, 7, -7)
    edges = [(i, (i + 1) % 24) for i in range(24)]
    edges += [(i, (i + shifts[i % 3]) % 24) for i in range(24)]
    return Graph(24, tuple(edges))


def coxeter_graph() -> Graph:
    """28-vertex cubic girth-7 graph: three 7-rings of step 1, 2, 3 plus 7 hubs.

    Vertices: ring r in {0,1,2} occupies 7r..7r+6, hubs are 21..27; hub i is
    adjacent to the i-th vertex of each ring.
    """
    steps = (1, 2, 3)
    edges: list[Edge] = []
    for r, s in enumerate(steps):
        off = 7 * r
        edges += [(off + i, off + (i + s) % 7) for i in range(7)]
    for i in range(7):
        edges += [(21 + i, 7 * r + i) for r in range(3)]
    return Graph(28, tuple(edges))


def iterated_mycielski(base: Graph, levels: int, iterations: int) -> Graph:
    """Apply generalized_mycielski with fixed `levels` repeatedly."""
    if not isinstance(iterations, int) or iterations < 0:
        raise InvalidParameterError(f"iterations must be a nonnegative integer, got {iterations!r}")
    g = base
    for _ in range(iterations):
        g = generalized_mycielski(g, levels)
    return g


_GENERATORS = {
    "complete": complete_graph,
    "path": path_graph,
    "cycle": make_cycle,
    "circulant": circulant_graph,
    "petersen": petersen_graph,
    "grotzsch": grotzsch_graph,
    "chvatal": chvatal_graph,
    "mcgee": mcgee_graph,
    "coxeter": coxeter_graph,
    "generalized_mycielski": generalized_mycielski,
    "iterated_mycielski": iterated_mycielski,
}


def generate(name: str, **params) -> Graph:
    """Build a named family member; see _GENERATORS for the registry."""
    try:
        builder = _GENERATORS[name]
    except KeyError:
        known = ", ".join(sorted(_GENERATORS))
        raise InvalidParameterError(f"unknown generator {name!r} (known: {known})") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise InvalidParameterError(f"bad parameters for generator {name!r}: {exc}") from None
