"""Embedding finite posets into intervals of the homomorphism order.

The pipeline runs poset -> odd sets -> directed-cycle families -> graphs
inside the interval. Two strategies realize the last step: "phi"
substitutes every arc with the two-block interval gadget, and "ha"
assembles indicator blocks over the odd sets with a sparse companion.
Embeddings are verified claim by claim; a report either certifies every
claim definitively or names what failed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    BudgetExceededError,
    ConstructionRejectedError,
    GapError,
    InvalidParameterError,
    PreconditionError,
)
from .gadgets import (
    GadgetRecipe,
    PointedGraph,
    build_block_family,
    build_indicator,
    build_interval_gadget,
    find_sparse_incomparable,
    indicate,
)
from .graphs import Digraph, Graph, analyze
from .posets import FinitePoset, embed_poset_to_odd_sets, odd_sets_to_cycle_family
from .solver import (
    STRICTLY_BELOW,
    SolverBudget,
    compare,
    core_of,
    count_homs,
    hom_exists,
)

HOLDS = "holds"
FAILS = "fails"
UNRESOLVED = "budget-exceeded"


@dataclass(frozen=True)
class ClaimRecord:
    """One verified claim: what was claimed about which instance, the
    verdict, a witness when the claim is an existence statement, and the
    time the solver spent."""

    claim: str
    instance: str
    verdict: str
    witness: tuple[int, ...] | None = None
    elapsed_secs: float = 0.0


@dataclass(frozen=True)
class VerificationReport:
    claims: tuple[ClaimRecord, ...]

    @property
    def overall_pass(self) -> bool:
        return all(c.verdict == HOLDS for c in self.claims)

    def failures(self) -> tuple[ClaimRecord, ...]:
        return tuple(c for c in self.claims if c.verdict != HOLDS)

    def __repr__(self) -> str:
        state = "pass" if self.overall_pass else "fail"
        return f"VerificationReport({len(self.claims)} claims, {state})"


@dataclass(frozen=True)
class IntervalEmbedding:
    """An assignment of interval graphs to poset elements.

    The gadget (or family recipe) that produced the graphs rides along,
    so the embedding is self-describing and re-verifiable.
    """

    poset: FinitePoset
    lower: Graph
    upper: Graph
    strategy: str
    assignment: Mapping[str, Graph]
    gadget: PointedGraph | None = None
    recipe: GadgetRecipe | None = None
    report: VerificationReport | None = field(default=None, compare=False)

    def graph(self, element: str) -> Graph:
        if element not in self.assignment:
            raise InvalidParameterError(f"no element {element!r} in the embedding")
        return self.assignment[element]


def phi(g: Digraph, gadget: PointedGraph) -> Graph:
    """Arc substitution with the interval gadget."""
    return indicate(g, gadget)


def _run_claim(claim: str, instance: str, source: Graph, target: Graph,
               want_exists: bool, budget: SolverBudget | None) -> ClaimRecord:
    started = time.monotonic()
    try:
        witness = hom_exists(source, target, budget)
    except BudgetExceededError:
        return ClaimRecord(claim, instance, UNRESOLVED,
                           elapsed_secs=time.monotonic() - started)
    elapsed = time.monotonic() - started
    holds = (witness is not None) == want_exists
    return ClaimRecord(claim, instance, HOLDS if holds else FAILS,
                       witness=witness.assignment if witness else None,
                       elapsed_secs=elapsed)


def verify_embedding(embedding: IntervalEmbedding,
                     budget: SolverBudget | None = None) -> VerificationReport:
    """Re-check every claim an embedding makes.

    Per element: strictly between the interval bounds (four solver
    verdicts). Per ordered pair of distinct elements: a homomorphism
    exists exactly when the poset says so. Budget overruns are recorded
    against their claim; the report is produced either way and passes
    only if every verdict is definitive and correct.
    """
    q = embedding.poset
    claims: list[ClaimRecord] = []
    for x in q.elements:
        g = embedding.graph(x)
        claims.append(_run_claim("lower_into_element", x, embedding.lower, g,
                                 True, budget))
        claims.append(_run_claim("element_avoids_lower", x, g, embedding.lower,
                                 False, budget))
        claims.append(_run_claim("element_into_upper", x, g, embedding.upper,
                                 True, budget))
        claims.append(_run_claim("upper_avoids_element", x, embedding.upper, g,
                                 False, budget))
    for x in q.elements:
        for y in q.elements:
            if x == y:
                continue
            claims.append(_run_claim("order_agreement", f"{x}->{y}",
                                     embedding.graph(x), embedding.graph(y),
                                     q.leq(x, y), budget))
    return VerificationReport(tuple(claims))


def _prepared_bounds(g1: Graph, g2: Graph,
                     budget: SolverBudget | None) -> tuple[Graph, Graph]:
    """Normalize the interval: reject the gap, core the upper bound,
    replace a bipartite lower bound by a non-bipartite witness above it."""
    from .gadgets import density_witness

    profile2 = analyze(g2)
    if g1.vertex_count >= 1 and g1.edge_count == 0 and profile2.bipartite \
            and g2.edge_count >= 1:
        raise GapError("the interval below an edge is empty; nothing embeds in a gap")
    if compare(g1, g2, budget).relation != STRICTLY_BELOW:
        raise PreconditionError("interval bounds must be strictly comparable")
    upper = core_of(g2, budget)
    profile_upper = analyze(upper)
    if profile_upper.bipartite or not profile_upper.connected:
        raise PreconditionError("upper bound must have a connected non-bipartite core")
    lower = g1
    while analyze(lower).bipartite:
        lower = density_witness(lower, upper, budget)
    return lower, upper


def _phi_assignment(q: FinitePoset, lower: Graph, upper: Graph,
                    budget: SolverBudget | None,
                    gadget: PointedGraph | None
                    ) -> tuple[dict[str, Graph], PointedGraph]:
    if gadget is None:
        gadget = gadget_for_interval(lower, upper, budget)
    sets = embed_poset_to_odd_sets(q)
    assignment = {x: phi(odd_sets_to_cycle_family(sets[x]), gadget)
                  for x in q.elements}
    return assignment, gadget


def rigid_block_stream(lower: Graph, upper: Graph,
                       budget: SolverBudget | None = None):
    """Connected rigid cores strictly inside the interval, used as the
    two blocks of the interval gadget.

    Product-with-upper candidates are useless here: swapping two colors
    of the product factor is a nonidentity endomorphism, so those never
    come out rigid. A single new vertex joined to an independent 3-set
    of the Petersen graph fails too: every such set with no common
    neighbor is a "star" whose setwise stabilizer still swaps the other
    two partners. Three apexes on three distinct such sets do break all
    symmetry often enough, stay triangle-free with odd girth five, and
    the interval checks filter the rest.
    """
    from itertools import combinations

    from .graphs import petersen_graph
    from .solver import is_isomorphic, is_rigid

    base = petersen_graph()
    masks = base.adjacency_masks
    independent = [
        s for s in combinations(range(10), 3)
        if not any(masks[x] >> y & 1 for x, y in combinations(s, 2))
        and not (masks[s[0]] & masks[s[1]] & masks[s[2]])]
    seen: list[Graph] = []
    for trio in combinations(independent, 3):
        edges = list(base.edges)
        labels = []
        for i, s in enumerate(trio):
            edges.extend((10 + i, v) for v in s)
            labels.append((10 + i, f"apex{i}"))
        candidate = Graph(13, tuple(edges), tuple(labels))
        if analyze(candidate).odd_girth != 5:
            continue
        if hom_exists(candidate, upper, budget) is None:
            continue
        if hom_exists(lower, candidate, budget) is None:
            continue
        if hom_exists(candidate, lower, budget) is not None:
            continue
        if hom_exists(upper, candidate, budget) is not None:
            continue
        if core_of(candidate, budget).vertex_count != candidate.vertex_count:
            continue
        if not is_rigid(candidate, budget):
            continue
        if any(is_isomorphic(candidate, h, budget) for h in seen):
            continue
        seen.append(candidate)
        yield candidate


def gadget_for_interval(lower: Graph, upper: Graph,
                        budget: SolverBudget | None = None) -> PointedGraph:
    """A verified interval gadget for the interval between two graphs.

    The first rigid incomparable block pair from the stream is
    preferred: a rigid gadget makes arc substitution preserve exact
    homomorphism counts, not just existence. When the stream runs dry
    the blocks fall back to the cores of an incomparable pair, which
    still carry every existence property.
    """
    from .gadgets import incomparable_pair

    blocks: list[Graph] = []
    for candidate in rigid_block_stream(lower, upper, budget):
        for earlier in blocks:
            if hom_exists(earlier, candidate, budget) is not None:
                continue
            if hom_exists(candidate, earlier, budget) is not None:
                continue
            l = 1 + max(earlier.vertex_count, candidate.vertex_count,
                        upper.vertex_count)
            try:
                built = build_interval_gadget(earlier, candidate, l, upper,
                                              budget, require_rigid=True)
            except ConstructionRejectedError:
                continue
            return built.payload
        blocks.append(candidate)
        if len(blocks) > 8:
            break
    pair = incomparable_pair(lower, upper, budget=budget, connected=True)
    h1 = core_of(pair.payload[0], budget)
    h2 = core_of(pair.payload[1], budget)
    l = 1 + max(h1.vertex_count, h2.vertex_count, upper.vertex_count)
    built = build_interval_gadget(h1, h2, l, upper, budget)
    return built.payload


def _ha_assignment(q: FinitePoset, lower: Graph, upper: Graph,
                   budget: SolverBudget | None
                   ) -> tuple[dict[str, Graph], GadgetRecipe]:
    l = max(5, upper.vertex_count)
    if l % 2 == 0:
        l += 1
    indicator = build_indicator(l, budget)
    sparse = find_sparse_incomparable(lower, upper, l + 2, budget=budget)
    recipe = GadgetRecipe(l, 0, upper.vertex_count)
    sets = embed_poset_to_odd_sets(q)
    assignment = {x: build_block_family(sets[x], recipe, sparse.graph,
                                        indicator.payload, lower)
                  for x in q.elements}
    return assignment, recipe


def embed_poset_into_interval(q: FinitePoset, g1: Graph, g2: Graph,
                              strategy: str = "phi",
                              budget: SolverBudget | None = None,
                              gadget: PointedGraph | None = None) -> IntervalEmbedding:
    """Embed a finite poset into the interval strictly between two graphs.

    strategy "phi": each element becomes the arc-substituted image of its
    directed-cycle family under the interval gadget. strategy "ha": each
    element becomes a family of indicator blocks plus the lower bound.
    The embedding is verified before it is returned; a failed claim
    raises instead of returning a bad embedding. A caller who already
    holds a verified gadget for this interval can pass it to skip the
    block search; bad gadgets do not slip through, since verification
    runs regardless.
    """
    if strategy not in ("phi", "ha"):
        raise InvalidParameterError(f"unknown strategy {strategy!r} (use 'phi' or 'ha')")
    lower, upper = _prepared_bounds(g1, g2, budget)
    recipe = None
    if strategy == "phi":
        assignment, gadget = _phi_assignment(q, lower, upper, budget, gadget)
    else:
        assignment, recipe = _ha_assignment(q, lower, upper, budget)
    embedding = IntervalEmbedding(q, lower, upper, strategy, assignment,
                                  gadget=gadget, recipe=recipe)
    report = verify_embedding(embedding, budget)
    if not report.overall_pass:
        bad = ", ".join(f"{c.claim}[{c.instance}]" for c in report.failures())
        raise ConstructionRejectedError(
            f"embedding verification failed: {bad}")
    return IntervalEmbedding(q, lower, upper, strategy, assignment,
                             gadget=gadget, recipe=recipe, report=report)


def hom_count_correspondence(g: Digraph, g_prime: Digraph, gadget: PointedGraph,
                             budget: SolverBudget | None = None) -> tuple[int, int]:
    """Exact homomorphism counts before and after arc substitution.

    The two counts agree whenever every vertex of the left digraph
    carries an arc; an isolated vertex can land anywhere in the larger
    substituted target, so only the existence claim survives there.
    """
    direct = count_homs(g, g_prime, budget)
    substituted = count_homs(phi(g, gadget), phi(g_prime, gadget), budget)
    return direct, substituted
