"""Graph constructions built on arc substitution and verified by the solver.

The central operation replaces every arc of a digraph by a copy of a
pointed graph (I, a, b), identifying a with the tail and b with the
head. Around it sit the builders this package uses to populate
intervals of the homomorphism order: the subdivided-K4 indicator, the
sparse graph incomparable with a given one, the cycle blocks and their
families, the incomparable pair inside an interval, the two-path
interval gadget, and the density witness.

Every builder runs its checks before releasing a construction. A
construction object carries the check records, so a caller can replay
them; a failed mandatory check raises instead of returning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    ConstructionRejectedError,
    GapError,
    InvalidParameterError,
    PreconditionError,
    StreamExhaustedError,
)
from .graphs import (
    Digraph,
    Graph,
    analyze,
    chvatal_graph,
    circulant_graph,
    coxeter_graph,
    generalized_mycielski,
    grotzsch_graph,
    make_cycle,
    mcgee_graph,
    petersen_graph,
    tensor_product,
)
from .solver import (
    INCOMPARABLE,
    STRICTLY_BELOW,
    SolverBudget,
    compare,
    core_of,
    count_homs,
    hom_exists,
    path_threshold,
)


@dataclass(frozen=True)
class PointedGraph:
    """A graph with two distinguished vertices."""

    graph: Graph
    a: int
    b: int

    def __post_init__(self) -> None:
        n = self.graph.vertex_count
        if not (0 <= self.a < n and 0 <= self.b < n):
            raise InvalidParameterError(
                f"distinguished vertices ({self.a},{self.b}) out of range for {n} vertices")
        if self.a == self.b:
            raise InvalidParameterError("the two distinguished vertices must differ")


@dataclass(frozen=True)
class GadgetRecipe:
    """Shared parameters for a family of cycle blocks.

    `l` is the odd cycle-length multiplier, `attachment` the vertex of
    the sparse companion graph that connecting paths end at, and
    `path_length` the length of those paths.
    """

    l: int
    attachment: int
    path_length: int

    def __post_init__(self) -> None:
        if not isinstance(self.l, int) or self.l < 5 or self.l % 2 == 0:
            raise InvalidParameterError(f"l must be an odd integer >= 5, got {self.l!r}")
        if not isinstance(self.attachment, int) or self.attachment < 0:
            raise InvalidParameterError(f"attachment must be a vertex index, got {self.attachment!r}")
        if not isinstance(self.path_length, int) or self.path_length < 1:
            raise InvalidParameterError(f"path_length must be positive, got {self.path_length!r}")


@dataclass(frozen=True)
class CheckRecord:
    """One verified property: name, verdict, and the witness if the
    property is an existence claim (refutations carry None)."""

    name: str
    passed: bool
    witness: tuple[int, ...] | None = None
    note: str = ""


@dataclass(frozen=True)
class VerifiedConstruction:
    """A released construction together with the checks that gated it."""

    payload: object
    checks: tuple[CheckRecord, ...] = field(default=())

    def __post_init__(self) -> None:
        failed = [c.name for c in self.checks if not c.passed]
        if failed:
            raise InvalidParameterError(
                f"cannot release a construction with failed checks: {', '.join(failed)}")

    @property
    def graph(self) -> Graph:
        if isinstance(self.payload, PointedGraph):
            return self.payload.graph
        if isinstance(self.payload, Graph):
            return self.payload
        raise InvalidParameterError("payload is not a single graph")

    def check(self, name: str) -> CheckRecord:
        for record in self.checks:
            if record.name == name:
                return record
        raise InvalidParameterError(f"no check named {name!r}")


def indicate(g: Digraph, indicator: PointedGraph) -> Graph:
    """Substitute a copy of the indicator for every arc of g.

    Arc (u, v) gets a fresh copy of the indicator graph with vertex a
    identified with u and vertex b identified with v. Copies are
    disjoint away from the identified endpoints. Labels locate every
    copy: original vertices are labeled g{v}, the interior vertices of
    the copy for arc number k are labeled k:{w} for their vertex w in
    the indicator.
    """
    if not isinstance(g, Digraph):
        raise InvalidParameterError("indicate needs a digraph on the left")
    body = indicator.graph
    if not analyze(body).connected:
        raise PreconditionError("indicator graph must be connected")
    inner = [w for w in range(body.vertex_count) if w not in (indicator.a, indicator.b)]
    slot = {w: i for i, w in enumerate(inner)}
    n = g.vertex_count
    edges: list[tuple[int, int]] = []
    labels: list[tuple[int, str]] = [(v, f"g{v}") for v in range(n)]
    base = n
    for k, (u, v) in enumerate(g.arcs):
        placed = {indicator.a: u, indicator.b: v}
        for x, y in body.edges:
            px = placed[x] if x in placed else base + slot[x]
            py = placed[y] if y in placed else base + slot[y]
            edges.append((px, py))
        labels.extend((base + slot[w], f"{k}:{w}") for w in inner)
        base += len(inner)
    return Graph(base, tuple(edges), tuple(labels))


def _subdivided_k4(spokes: tuple[int, int, int], rims: tuple[int, int, int]) -> Graph:
    """K4 on branch vertices a,b,c,d = 0,1,2,3 with every edge replaced
    by a path: spoke paths x-d, rim paths between outer pairs."""
    sa, sb, sc = spokes
    rab, rac, rbc = rims
    edges: list[tuple[int, int]] = []
    nxt = 4

    def path(u: int, v: int, length: int) -> None:
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
    labels = ((0, "a"), (1, "b"), (2, "c"), (3, "d"))
    return Graph(nxt, tuple(edges), labels)


def _indicator_profiles(l: int) -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """Candidate (spokes, rims) pairs: the symmetric default first, then
    everything passing the cycle-length arithmetic, smallest first."""
    default = ((3, 3, 3), (l - 4, l - 4, l - 4))
    found = []
    for sa in range(1, l):
        for sb in range(1, l):
            for sc in range(1, l):
                rab, rac, rbc = l + 2 - sa - sb, l + 2 - sa - sc, l + 2 - sb - sc
                if min(rab, rac, rbc) < 1:
                    continue
                # every cycle of the subdivision must reach length l+2:
                # the rim triangle and the three Hamiltonian cycles (the
                # three amalgamated cycles have length l+2 by choice)
                hams = (rab + rbc + sc + sa, rab + sb + sc + rac, rac + rbc + sb + sa)
                if rab + rac + rbc < l + 2 or min(hams) < l + 2:
                    continue
                total = sa + sb + sc + rab + rac + rbc - 2
                found.append((total, (sa, sb, sc), (rab, rac, rbc)))
    found.sort(key=lambda item: (item[0], item[1]))
    ordered = [default]
    ordered.extend((s, r) for _, s, r in found if (s, r) != default)
    return ordered


def build_indicator(l: int, budget: SolverBudget | None = None) -> VerifiedConstruction:
    """Search subdivision profiles of K4 for one passing all four checks:
    rigidity, a homomorphism to C_l, one identifying the two distinguished
    vertices, and girth exactly l+2.

    The symmetric profile is tried first. It can never be rigid (swapping
    two equal branches is a nontrivial automorphism), so in practice an
    asymmetric profile is the one released; the symmetric attempt is kept
    because it documents why the search is necessary.
    """
    if not isinstance(l, int) or l % 2 == 0 or l < 5:
        raise InvalidParameterError(f"l must be an odd integer >= 5, got {l!r}")
    cl = make_cycle(l)
    first_failure: str | None = None
    for spokes, rims in _indicator_profiles(l):
        g = _subdivided_k4(spokes, rims)
        checks = []
        girth = analyze(g).girth
        checks.append(CheckRecord("girth", girth == l + 2, note=f"girth {girth}, want {l + 2}"))
        if checks[-1].passed:
            rigid = count_homs(g, g, budget, limit=2) == 1
            checks.append(CheckRecord("rigid", rigid))
        if all(c.passed for c in checks) and len(checks) == 2:
            to_cl = hom_exists(g, cl, budget)
            checks.append(CheckRecord("hom_to_cycle", to_cl is not None,
                                      witness=to_cl.assignment if to_cl else None))
        if all(c.passed for c in checks) and len(checks) == 3:
            glued = None
            for v in range(l):
                glued = hom_exists(g, cl, budget, pinned={0: v, 1: v})
                if glued is not None:
                    break
            checks.append(CheckRecord("hom_identifying_ab", glued is not None,
                                      witness=glued.assignment if glued else None))
        if all(c.passed for c in checks):
            ordered = (checks[1], checks[2], checks[3], checks[0])
            return VerifiedConstruction(PointedGraph(g, 0, 1), ordered)
        if first_failure is None:
            first_failure = next(c.name for c in checks if not c.passed)
    raise ConstructionRejectedError(
        f"no subdivision profile for l={l} passed the checks"
        f" (default profile failed: {first_failure})")


def default_sparse_stream(l: int) -> Iterable[Graph]:
    """Odd cycles of length >= l, then the two small high-girth cubic
    graphs, then generalized Mycielskians of longer odd cycles."""
    start = l if l % 2 == 1 else l + 1
    for m in range(max(3, start), max(3, start) + 31, 2):
        yield make_cycle(m)
    yield mcgee_graph()
    yield coxeter_graph()
    for m in range(max(5, start), max(5, start) + 11, 2):
        yield generalized_mycielski(make_cycle(m), 2)


def find_sparse_incomparable(g1: Graph, g2: Graph, l: int,
                             candidates: Iterable[Graph] | None = None,
                             budget: SolverBudget | None = None) -> VerifiedConstruction:
    """First stream graph F with F and g1 incomparable, F below g2, and
    girth at least l."""
    if not isinstance(l, int) or l < 3:
        raise InvalidParameterError(f"l must be an integer >= 3, got {l!r}")
    if analyze(g1).bipartite or analyze(g2).bipartite:
        raise PreconditionError("both bounds must be non-bipartite")
    if compare(g1, g2, budget).relation != STRICTLY_BELOW:
        raise PreconditionError("lower bound must lie strictly below upper bound")
    if core_of(g2, budget).vertex_count != g2.vertex_count:
        raise PreconditionError("upper bound must be a core")
    stream = candidates if candidates is not None else default_sparse_stream(l)
    for f in stream:
        profile = analyze(f)
        if profile.girth < l or not profile.connected:
            continue
        if hom_exists(f, g1, budget) is not None:
            continue
        if hom_exists(g1, f, budget) is not None:
            continue
        witness = hom_exists(f, g2, budget)
        if witness is None:
            continue
        checks = (
            CheckRecord("not_below_left", True, note="no hom F -> G1"),
            CheckRecord("not_above_left", True, note="no hom G1 -> F"),
            CheckRecord("below_right", True, witness=witness.assignment),
            CheckRecord("girth", True, note=f"girth {profile.girth} >= {l}"),
            CheckRecord("connected", True),
        )
        return VerifiedConstruction(f, checks)
    raise StreamExhaustedError(
        f"no stream candidate was incomparable with the lower bound at girth >= {l};"
        " widen the candidate stream")


def build_cycle_block(p: int, recipe: GadgetRecipe, sparse: Graph,
                      indicator: PointedGraph) -> Graph:
    """Directed cycle of length recipe.l * p run through the indicator,
    plus the sparse companion, joined by a path from cycle vertex 0 to
    the companion's attachment vertex.

    The attachment and path length come from the recipe so that every
    block of a family is assembled identically.
    """
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise InvalidParameterError(f"p must be an odd integer >= 3, got {p!r}")
    if recipe.attachment >= sparse.vertex_count:
        raise InvalidParameterError(
            f"attachment vertex {recipe.attachment} outside the companion graph")
    n = recipe.l * p
    cycle = Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    body = indicate(cycle, indicator)
    offset = body.vertex_count
    edges = list(body.edges)
    edges.extend((u + offset, v + offset) for u, v in sparse.edges)
    labels = list(body.labels)
    labels.extend((v + offset, "u" if v == recipe.attachment else f"F:{v}")
                  for v in range(sparse.vertex_count))
    prev = 0
    nxt = offset + sparse.vertex_count
    for step in range(recipe.path_length - 1):
        edges.append((prev, nxt))
        labels.append((nxt, f"link:{step}"))
        prev = nxt
        nxt += 1
    edges.append((prev, offset + recipe.attachment))
    return Graph(nxt, tuple(edges), tuple(labels))


def build_block_family(members: frozenset[int] | Iterable[int], recipe: GadgetRecipe,
                       sparse: Graph, indicator: PointedGraph, g1: Graph) -> Graph:
    """Disjoint union of one cycle block per member plus the lower bound
    graph, every block assembled with the same recipe and companion."""
    ordered = sorted(set(members))
    if not ordered:
        raise InvalidParameterError("the member set must be nonempty")
    for p in ordered:
        if not isinstance(p, int) or p < 3 or p % 2 == 0:
            raise InvalidParameterError(f"members must be odd integers >= 3, got {p!r}")
    edges: list[tuple[int, int]] = []
    labels: list[tuple[int, str]] = []
    offset = 0
    for p in ordered:
        block = build_cycle_block(p, recipe, sparse, indicator)
        edges.extend((u + offset, v + offset) for u, v in block.edges)
        labels.extend((v + offset, f"p{p}:{name}") for v, name in block.labels)
        offset += block.vertex_count
    edges.extend((u + offset, v + offset) for u, v in g1.edges)
    labels.extend((v + offset, f"base:{v}") for v in range(g1.vertex_count))
    return Graph(offset + g1.vertex_count, tuple(edges), tuple(labels))


def default_pair_stream() -> Iterable[Graph]:
    """Triangle-free candidates of chromatic number four or more, in the
    order the pair search should try them."""
    yield grotzsch_graph()
    yield chvatal_graph()
    yield circulant_graph(13, (1, 5))
    yield generalized_mycielski(make_cycle(5), 2)
    yield petersen_graph()
    for m in (7, 9, 11):
        yield generalized_mycielski(make_cycle(m), 2)


def _strict_between_checks(candidate: Graph, g1: Graph, g2: Graph, tag: str,
                           budget: SolverBudget | None) -> list[CheckRecord] | None:
    """Four solver verdicts for g1 < candidate < g2, or None on failure."""
    up = hom_exists(g1, candidate, budget)
    if up is None:
        return None
    if hom_exists(candidate, g1, budget) is not None:
        return None
    top = hom_exists(candidate, g2, budget)
    if top is None:
        return None
    if hom_exists(g2, candidate, budget) is not None:
        return None
    return [
        CheckRecord(f"lower_into_{tag}", True, witness=up.assignment),
        CheckRecord(f"{tag}_avoids_lower", True),
        CheckRecord(f"{tag}_into_upper", True, witness=top.assignment),
        CheckRecord(f"upper_avoids_{tag}", True),
    ]


def _joined_components(g: Graph, length: int) -> Graph:
    """Connect the components of g in a chain with paths of the given
    length between their lowest-numbered vertices."""
    profile = analyze(g)
    if profile.connected:
        return g
    masks = g.adjacency_masks
    seen = [False] * g.vertex_count
    roots = []
    for v in range(g.vertex_count):
        if seen[v]:
            continue
        roots.append(v)
        frontier = [v]
        seen[v] = True
        while frontier:
            x = frontier.pop()
            m = masks[x]
            while m:
                bit = m & -m
                m ^= bit
                w = bit.bit_length() - 1
                if not seen[w]:
                    seen[w] = True
                    frontier.append(w)
    edges = list(g.edges)
    labels = list(g.labels)
    nxt = g.vertex_count
    for left, right in zip(roots, roots[1:]):
        prev = left
        for step in range(length - 1):
            edges.append((prev, nxt))
            labels.append((nxt, f"join:{step}"))
            prev = nxt
            nxt += 1
        edges.append((prev, right))
    return Graph(nxt, tuple(edges), tuple(labels))


def incomparable_pair(g1: Graph, g2: Graph,
                      candidates: Iterable[Graph] | None = None,
                      budget: SolverBudget | None = None,
                      connected: bool = False) -> VerifiedConstruction:
    """Two graphs strictly between g1 and g2 with no homomorphism either
    way between them.

    Each candidate pair is assembled as (g2 x H) plus a disjoint copy of
    g1, for stream graphs H. All six order relations are solver-checked
    before release. With connected=True the components are joined by
    paths long enough to keep every verified relation, and the checks
    are re-run on the joined graphs.
    """
    profile2 = analyze(g2)
    if profile2.bipartite or not profile2.connected:
        raise PreconditionError("upper bound must be connected and non-bipartite")
    if compare(g1, g2, budget).relation != STRICTLY_BELOW:
        raise PreconditionError("lower bound must lie strictly below upper bound")

    def assemble(h: Graph) -> Graph:
        product = tensor_product(g2, h)
        edges = list(product.edges)
        off = product.vertex_count
        edges.extend((u + off, v + off) for u, v in g1.edges)
        labels = [(v, f"prod:{v}") for v in range(off)]
        labels.extend((v + off, f"base:{v}") for v in range(g1.vertex_count))
        built = Graph(off + g1.vertex_count, tuple(edges), tuple(labels))
        if connected:
            length = max(path_threshold(g2), 3)
            built = _joined_components(built, length)
        return built

    source = iter(candidates) if candidates is not None else default_pair_stream()
    vetted: list[Graph | None] = []
    for h in source:
        built = assemble(h)
        ok = _strict_between_checks(built, g1, g2, "x", budget) is not None
        vetted.append(built if ok else None)
        second = vetted[-1]
        if second is None:
            continue
        for first in vetted[:-1]:
            if first is None:
                continue
            if hom_exists(first, second, budget) is not None:
                continue
            if hom_exists(second, first, budget) is not None:
                continue
            checks = tuple(_strict_between_checks(first, g1, g2, "first", budget)
                           + _strict_between_checks(second, g1, g2, "second", budget)
                           + [CheckRecord("first_avoids_second", True),
                              CheckRecord("second_avoids_first", True)])
            return VerifiedConstruction((first, second), checks)
    raise StreamExhaustedError(
        "no candidate pair was incomparable between the bounds; widen the stream")


def build_interval_gadget(h1: Graph, h2: Graph, l: int, g2: Graph,
                          budget: SolverBudget | None = None,
                          require_rigid: bool = False) -> VerifiedConstruction:
    """The two blocks joined by paths of length 2l and 2l+1, with the
    distinguished vertices in the middle of each path.

    Both paths run from vertex 0 of the first block to vertex 0 of the
    second; a sits on the even path and b on the odd one, each at
    distance l from the first block. The mandatory release check is a
    homomorphism to g2 identifying a with b. With require_rigid=True
    each block must have no endomorphism fixing its path attachment
    besides the identity; every self-map of the gadget restricts to such
    endomorphisms, so this is what exact hom counting rests on, and it
    stays checkable at block size where exhausting the assembled gadget
    is not.
    """
    for name, h in (("first", h1), ("second", h2)):
        profile = analyze(h)
        if not profile.connected:
            raise PreconditionError(f"{name} block must be connected")
        if core_of(h, budget).vertex_count != h.vertex_count:
            raise PreconditionError(f"{name} block must be a core")
    if compare(h1, h2, budget).relation != INCOMPARABLE:
        raise PreconditionError("blocks must be incomparable")
    if not isinstance(l, int) or l <= max(h1.vertex_count, h2.vertex_count, g2.vertex_count):
        raise PreconditionError(
            "l must exceed the sizes of both blocks and of the target")
    if l < path_threshold(g2):
        raise PreconditionError("l must be at least the path threshold of the target")

    n1 = h1.vertex_count
    edges = list(h1.edges)
    labels = [(v, f"H1:{v}") for v in range(n1)]
    edges.extend((u + n1, v + n1) for u, v in h2.edges)
    labels.extend((v + n1, f"H2:{v}") for v in range(h2.vertex_count))
    nxt = n1 + h2.vertex_count

    def stitch(length: int, tag: str) -> int:
        nonlocal nxt
        first = nxt
        prev = 0
        for step in range(length - 1):
            edges.append((prev, nxt))
            labels.append((nxt, f"{tag}:{step}"))
            prev = nxt
            nxt += 1
        edges.append((prev, n1))
        return first

    a = stitch(2 * l, "P") + l - 1
    b = stitch(2 * l + 1, "Q") + l - 1
    labels = [(v, "a") if v == a else (v, "b") if v == b else (v, name)
              for v, name in labels]
    gadget = Graph(nxt, tuple(edges), tuple(labels))
    assert gadget.vertex_count == n1 + h2.vertex_count + (2 * l - 1) + 2 * l

    glued = None
    for c in range(g2.vertex_count):
        glued = hom_exists(gadget, g2, budget, pinned={a: c, b: c})
        if glued is not None:
            break
    if glued is None:
        raise ConstructionRejectedError(
            "no homomorphism to the target identifies the two distinguished vertices")
    checks = [CheckRecord("hom_identifying_ab", True, witness=glued.assignment)]
    if require_rigid:
        for name, h in (("first", h1), ("second", h2)):
            if count_homs(h, h, budget, limit=2, pinned={0: 0}) != 1:
                raise ConstructionRejectedError(
                    f"{name} block has a non-identity endomorphism fixing its attachment")
        checks.append(CheckRecord("rigid_blocks", True))
    return VerifiedConstruction(PointedGraph(gadget, a, b), tuple(checks))


def density_witness(g1: Graph, g2: Graph,
                    budget: SolverBudget | None = None) -> Graph:
    """A graph strictly between two comparable graphs.

    The one gap of the order is rejected; a bipartite lower bound is
    handled directly (an edge, or an odd cycle just above the odd girth
    of the upper bound); otherwise the incomparable-pair machinery
    supplies the witness.
    """
    profile1 = analyze(g1)
    profile2 = analyze(g2)
    if g1.vertex_count >= 1 and g1.edge_count == 0 and profile2.bipartite and g2.edge_count >= 1:
        raise GapError("an edgeless graph below a bipartite graph with an edge is the gap")
    if compare(g1, g2, budget).relation != STRICTLY_BELOW:
        raise PreconditionError("need the lower bound strictly below the upper bound")
    if profile1.bipartite:
        # g1 is equivalent to a vertex or an edge; a direct witness works
        if g1.edge_count == 0:
            witness = Graph(2, ((0, 1),))
        else:
            witness = make_cycle(profile2.odd_girth + 2)
        if _strict_between_checks(witness, g1, g2, "w", budget) is None:
            raise ConstructionRejectedError("direct bipartite-side witness failed verification")
        return witness
    pair = incomparable_pair(g1, g2, budget=budget)
    first, _ = pair.payload
    return first
