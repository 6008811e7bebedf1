"""Finite posets and their embedding into sets of odd integers.

The pipeline runs in three steps. A finite poset is split along a
processing order into a forward and a backward relation. The backward
part is encoded by divisibility: each element receives the product of
the primes assigned to its backward-up-set, turning comparability into
"divides". The forward part then becomes set containment up to
divisibility: an element maps to the set of encoded values of its
forward-down-set, and the order on such sets is "every member of A has a
divisor in B". Finally each set of odd numbers is realized as a disjoint
union of directed cycles, where the solver can re-derive the order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random
from typing import Iterable, Mapping, Sequence

from .errors import InvalidParameterError
from .graphs import Digraph, disjoint_union, make_cycle


@dataclass(frozen=True)
class FinitePoset:
    """Elements with a reflexive, antisymmetric, transitive relation.

    The constructor takes any generating set of pairs: the reflexive and
    transitive closure is computed, then antisymmetry is validated.
    Element order is the given enumeration order and is significant: it
    is the default processing order for the embeddings.
    """

    elements: tuple[str, ...]
    relation: frozenset[tuple[str, str]] = field(default=frozenset())

    def __init__(self, elements: Iterable[str],
                 leq: Iterable[tuple[str, str]] = ()) -> None:
        elems = tuple(elements)
        if len(set(elems)) != len(elems):
            raise InvalidParameterError("poset elements must be distinct")
        index = {x: i for i, x in enumerate(elems)}
        n = len(elems)
        closed = [[False] * n for _ in range(n)]
        for i in range(n):
            closed[i][i] = True
        for x, y in leq:
            if x not in index or y not in index:
                raise InvalidParameterError(f"relation pair ({x!r}, {y!r}) names unknown elements")
            closed[index[x]][index[y]] = True
        for k in range(n):
            row_k = closed[k]
            for i in range(n):
                if closed[i][k]:
                    row_i = closed[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if closed[i][j] and closed[j][i]:
                    raise InvalidParameterError(
                        f"antisymmetry fails: {elems[i]!r} and {elems[j]!r} "
                        "are below each other")
        pairs = frozenset((elems[i], elems[j])
                          for i in range(n) for j in range(n) if closed[i][j])
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "relation", pairs)

    def leq(self, x: str, y: str) -> bool:
        if x not in self.elements or y not in self.elements:
            raise InvalidParameterError(f"{x!r} or {y!r} is not an element")
        return (x, y) in self.relation

    def down_set(self, x: str) -> tuple[str, ...]:
        return tuple(y for y in self.elements if self.leq(y, x))

    def up_set(self, x: str) -> tuple[str, ...]:
        return tuple(y for y in self.elements if self.leq(x, y))

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        strict = sum(1 for x, y in self.relation if x != y)
        return f"FinitePoset({len(self.elements)} elements, {strict} strict pairs)"


def odd_set_leq(a: Iterable[int], b: Iterable[int]) -> bool:
    """Order on finite sets of odd integers: every member of a has a
    divisor in b. Reflexive and transitive; not antisymmetric on raw
    sets, which is what makes the induced order interesting.
    """
    a = _valid_odd_set(a, "a")
    b = _valid_odd_set(b, "b")
    return all(any(x % y == 0 for y in b) for x in a)


def _valid_odd_set(values: Iterable[int], name: str) -> frozenset[int]:
    s = frozenset(values)
    if not s:
        raise InvalidParameterError(f"odd set {name} must be nonempty")
    for v in s:
        if not isinstance(v, int) or v < 3 or v % 2 == 0:
            raise InvalidParameterError(
                f"odd set {name} must contain odd integers >= 3, got {v!r}")
    return s


def _odd_primes(count: int) -> list[int]:
    primes: list[int] = []
    candidate = 3
    while len(primes) < count:
        if all(candidate % p for p in primes) and all(
                candidate % d for d in range(3, int(candidate ** 0.5) + 1, 2)):
            primes.append(candidate)
        candidate += 2
    return primes


def _resolve_order(q: FinitePoset, order: Sequence[str] | None) -> tuple[str, ...]:
    if order is None:
        return q.elements
    order = tuple(order)
    if sorted(order) != sorted(q.elements):
        raise InvalidParameterError("processing order must enumerate exactly the elements")
    return order


def embed_divisibility(q: FinitePoset,
                       order: Sequence[str] | None = None) -> dict[str, int]:
    """Encode the backward part of q into the divisibility order.

    Elements receive odd primes ascending along the processing order.
    x maps to the product of the primes of {y : x <=_Q y and y is at or
    before x in the order}; then that backward relation holds from x to
    y exactly when the image of y divides the image of x.
    """
    order = _resolve_order(q, order)
    position = {x: i for i, x in enumerate(order)}
    prime = dict(zip(order, _odd_primes(len(order))))
    images: dict[str, int] = {}
    for x in q.elements:
        value = 1
        for y in q.elements:
            if q.leq(x, y) and position[y] <= position[x]:
                value *= prime[y]
        images[x] = value
    return images


def embed_poset_to_odd_sets(q: FinitePoset,
                            order: Sequence[str] | None = None
                            ) -> dict[str, frozenset[int]]:
    """Embed q into the order on sets of odd integers.

    U(x) collects the divisibility images of the forward-down-set
    {y : y <=_Q x, y at or before x in the processing order}. Then
    x <=_Q y holds exactly when U(x) <= U(y) in the odd-set order;
    x's own image always belongs to U(x).
    """
    order = _resolve_order(q, order)
    position = {x: i for i, x in enumerate(order)}
    phi = embed_divisibility(q, order)
    family: dict[str, frozenset[int]] = {}
    for x in q.elements:
        members = frozenset(
            phi[y] for y in q.elements
            if q.leq(y, x) and position[y] <= position[x])
        family[x] = members
    return family


def odd_sets_to_cycle_family(a: Iterable[int], *,
                             max_vertices: int = 10_000) -> Digraph:
    """Realize a set of odd integers as a disjoint union of directed
    cycles, one cycle of each length, ascending. Homomorphisms between
    two such families exist exactly when the odd-set order holds.
    """
    members = sorted(_valid_odd_set(a, "a"))
    total = sum(members)
    if total > max_vertices:
        raise InvalidParameterError(
            f"cycle family would have {total} vertices, over the "
            f"{max_vertices} bound; raise max_vertices to insist")
    parts = [make_cycle(p, directed=True).labeled({0: f"len{p}"}) for p in members]
    return disjoint_union(parts)


def random_poset(element_count: int, relation_probability: float = 0.3,
                 seed: int = 0) -> FinitePoset:
    """Deterministic random poset: forward pairs drawn independently,
    then closed transitively. Antisymmetry holds by construction since
    generators only point forward in element order.
    """
    if element_count < 0:
        raise InvalidParameterError("element_count must be nonnegative")
    if not 0.0 <= relation_probability <= 1.0:
        raise InvalidParameterError("relation_probability must be in [0, 1]")
    rng = Random(seed)
    elements = [f"e{i}" for i in range(element_count)]
    pairs = [(elements[i], elements[j])
             for i in range(element_count) for j in range(i + 1, element_count)
             if rng.random() < relation_probability]
    return FinitePoset(elements, pairs)
